#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rbfeno/harness.hpp"
#include "rbfeno/reconstruct1d.hpp"
#include "rbfeno/verify.hpp"

using namespace rbfeno;

namespace {

// Window over a small array whose center is element `c`.
Window view(const std::vector<double>& v, int c) { return {v.data() + c, 1}; }

CellField1D field_from(std::vector<double> values, int ghost, BoundaryPolicy bc) {
  const Grid1D g = build_uniform_grid(0.0, 1.0, static_cast<int>(values.size()));
  CellField1D f(g, 1, ghost, bc);
  for (int i = 0; i < g.n; ++i) f(0, i) = values[i];
  fill_ghosts(f);
  return f;
}

}  // namespace

TEST_CASE("method names round-trip") {
  for (Method m : {Method::eno, Method::rbf_eno, Method::weno_js, Method::rbf_weno,
                   Method::five_cell}) {
    CHECK(parse_method(method_name(m)) == m);
  }
  CHECK_THROWS_AS(parse_method("weno-z"), std::invalid_argument);
  CHECK(is_perturbed(Method::rbf_weno));
  CHECK_FALSE(is_perturbed(Method::weno_js));
}

TEST_CASE("polynomial coefficient rows") {
  auto row = [](int k, int r) {
    const ReconstructionCoefficients c = poly_coeffs(k, r);
    return std::vector<double>(c.c.begin(), c.c.begin() + k);
  };
  CHECK(row(2, 0) == std::vector<double>{0.5, 0.5});
  CHECK(row(2, -1) == std::vector<double>{1.5, -0.5});
  CHECK(row(2, 1) == std::vector<double>{-0.5, 1.5});
  const std::vector<double> k3r1 = row(3, 1);
  CHECK(k3r1[0] == doctest::Approx(-1.0 / 6));
  CHECK(k3r1[1] == doctest::Approx(5.0 / 6));
  CHECK(k3r1[2] == doctest::Approx(1.0 / 3));
  const std::vector<double> k3m1 = row(3, -1);
  CHECK(k3m1[0] == doctest::Approx(11.0 / 6));
  CHECK(k3m1[1] == doctest::Approx(-7.0 / 6));
  CHECK(k3m1[2] == doctest::Approx(1.0 / 3));
  CHECK_THROWS(poly_coeffs(2, 2));
  CHECK_THROWS(poly_coeffs(4, 0));
}

TEST_CASE("perturbed coefficient rows") {
  const double eta = 0.1;
  SUBCASE("k = 2 centered") {
    const ReconstructionCoefficients c = rbf_coeffs(2, 0, eta);
    CHECK(c.c[0] == doctest::Approx(0.5 + eta / 4));
    CHECK(c.c[1] == doctest::Approx(0.5 + eta / 4));
    CHECK(c.sum() == doctest::Approx(1.0 + eta / 2));
  }
  SUBCASE("k = 2 one-sided") {
    const ReconstructionCoefficients c = rbf_coeffs(2, 1, eta);
    CHECK(c.c[0] == doctest::Approx(-0.5 + eta / 2));
    CHECK(c.c[1] == doctest::Approx(1.5 - 1.5 * eta));
  }
  SUBCASE("k = 3 centered") {
    const ReconstructionCoefficients c = rbf_coeffs(3, 0, eta);
    CHECK(c.c[0] == doctest::Approx(1.0 / 3 + 5.0 / 6 * eta));
    CHECK(c.c[1] == doctest::Approx(5.0 / 6 - 2.0 / 3 * eta));
    CHECK(c.c[2] == doctest::Approx(-1.0 / 6 - eta / 6));
  }
  SUBCASE("k = 3 far left row uses 11/6") {
    const ReconstructionCoefficients c = rbf_coeffs(3, -1, eta);
    CHECK(c.c[0] == doctest::Approx(11.0 / 6 - 4.5 * eta));
    CHECK(c.c[1] == doctest::Approx(-7.0 / 6 + 6.0 * eta));
    CHECK(c.c[2] == doctest::Approx(1.0 / 3 - 1.5 * eta));
  }
  SUBCASE("polynomial limit is exact") {
    for (int k : {2, 3}) {
      for (int r = -1; r < k; ++r) {
        const ReconstructionCoefficients a = rbf_coeffs(k, r, 0.0);
        const ReconstructionCoefficients b = poly_coeffs(k, r);
        for (int j = 0; j < k; ++j) CHECK(a.c[j] == b.c[j]);
      }
    }
  }
  SUBCASE("base rows sum to one as exact rationals") {
    for (int k : {2, 3}) {
      for (int r = -1; r < k; ++r) {
        double s = 0.0;
        for (int j = 0; j < k; ++j) s += coefficient_entry(k, r, j).base.value();
        CHECK(s == doctest::Approx(1.0).epsilon(1e-15));
      }
    }
    CHECK(coefficient_entry(3, -1, 0).base.str() == "11/6");
  }
  SUBCASE("gaussian model collapses onto the MQ table") {
    const ReconstructionCoefficients mq = rbf_coeffs(2, 0, eta);
    const ReconstructionCoefficients g = rbf_coeffs(2, 0, eta, PerturbationModel::mq());
    CHECK(g.c[0] == mq.c[0]);
    CHECK(g.c[1] == mq.c[1]);
  }
}

TEST_CASE("shape parameter") {
  SUBCASE("k = 2") {
    CHECK(compute_eta_k2(2.5, 2.5, 2.5, 1e-6).eta == 0.0);
    CHECK(compute_eta_k2(0.0, 1.0, 2.0, 1e-6).eta == 0.0);
    CHECK(compute_eta_k2(0.0, 0.0, 1.0, 0.0).eta == -1.0);
  }
  SUBCASE("k = 3") {
    CHECK(compute_eta_k3(3.0, 3.0, 3.0, 3.0, 1e-6).eta == 0.0);
    // averages of x^2 on unit cells centered at -1, 0, 1, 2
    auto q = [](double c) { return c * c + 1.0 / 12; };
    CHECK(std::abs(compute_eta_k3(q(-1), q(0), q(1), q(2), 1e-6).eta) <= 1e-15);
    CHECK(compute_eta_k3(0.0, 0.0, 0.0, 1.0, 0.0).eta == 1.0);
  }
  SUBCASE("regularizer") {
    const std::vector<double> small{0.1, -0.2};
    const std::vector<double> big{3.0, -4.0};
    CHECK(eta_regularizer(small, 1e-6) == doctest::Approx(1e-6));
    CHECK(eta_regularizer(big, 1e-6) == doctest::Approx(7e-6));
    CHECK(regularized_denominator(-2.0, 0.5) == -2.5);
    CHECK(regularized_denominator(2.0, 0.5) == 2.5);
    CHECK(regularized_denominator(0.0, 0.5) == 0.5);
  }
}

TEST_CASE("monotone switch") {
  CHECK(monotone_switch_k2(1.0, 1.0, -1.0));
  CHECK(monotone_switch_k2(1.0, -1.0, -1.0));
  CHECK_FALSE(monotone_switch_k2(0.0, 1.0, 2.0));
  CHECK_FALSE(monotone_switch_k2(0.0, 1.0, 3.0));
  CHECK_FALSE(monotone_switch_k2(4.0, 4.0, 4.0));
}

TEST_CASE("ENO stencil selection") {
  const std::vector<double> jump_right{0.0, 0.0, 10.0};
  const std::vector<double> jump_left{10.0, 0.0, 0.0};
  const std::vector<double> tie{0.0, 1.0, 2.0};
  CHECK(select_stencil_eno(view(jump_right, 1), 2) == 1);
  CHECK(select_stencil_eno(view(jump_left, 1), 2) == 0);
  CHECK(select_stencil_eno(view(tie, 1), 2) == 1);
  const std::vector<double> far{0.0, 0.0, 0.0, 0.0, 50.0};
  CHECK(select_stencil_eno(view(far, 2), 3) == 2);
}

TEST_CASE("smoothness indicators and WENO weights") {
  const std::vector<double> step{0.0, 0.0, 1.0};
  const std::vector<double> line{0.0, 1.0, 2.0};
  const std::vector<double> flat{5.0, 5.0, 5.0, 5.0, 5.0};
  const OrderArray b1 = smoothness_indicators(2, view(step, 1));
  CHECK(b1[0] == 1.0);
  CHECK(b1[1] == 0.0);
  const OrderArray b2 = smoothness_indicators(2, view(line, 1));
  CHECK(b2[0] == 1.0);
  CHECK(b2[1] == 1.0);
  const OrderArray b3 = smoothness_indicators(3, view(flat, 2));
  for (int r = 0; r < 3; ++r) CHECK(b3[r] == 0.0);

  const OrderArray d2 = WenoParameters::optimal_weights(2);
  CHECK(d2[0] == doctest::Approx(2.0 / 3));
  const OrderArray d3 = WenoParameters::optimal_weights(3);
  CHECK(d3[0] == doctest::Approx(0.3));
  CHECK(d3[1] == doctest::Approx(0.6));
  CHECK(d3[2] == doctest::Approx(0.1));

  const OrderArray same = weno_weights(3, {2.0, 2.0, 2.0}, d3, 1e-6);
  for (int r = 0; r < 3; ++r) CHECK(same[r] == doctest::Approx(d3[r]).epsilon(1e-14));

  const OrderArray w = weno_weights(2, {1.0, 0.0}, d2, 1e-6);
  const long double a0 = (2.0L / 3) / ((1.0L + 1e-6L) * (1.0L + 1e-6L));
  const long double a1 = (1.0L / 3) / (1e-12L);
  CHECK(std::abs(w[0] - static_cast<double>(a0 / (a0 + a1))) <= 1e-12);
  CHECK(std::abs(w[1] - static_cast<double>(a1 / (a0 + a1))) <= 1e-12);

  const OrderArray huge = weno_weights(2, {1e30, 1.0}, d2, 1e-6);
  CHECK(huge[0] < 1e-50);
}

TEST_CASE("interface states") {
  const BoundaryPolicy per = BoundaryPolicy::periodic();

  SUBCASE("constant field for every scheme") {
    const CellField1D f = field_from(std::vector<double>(12, 0.75), 4, per);
    for (Method m : {Method::eno, Method::rbf_eno, Method::weno_js, Method::rbf_weno}) {
      for (int k : {2, 3}) {
        ReconstructionScheme s;
        s.method = m;
        s.k = k;
        const FaceValues fv = reconstruct_interface_states(f, 0, s);
        REQUIRE(fv.minus.size() == 13);
        for (std::size_t i = 0; i < fv.minus.size(); ++i) {
          CHECK(fv.minus[i] == doctest::Approx(0.75).epsilon(1e-15));
          CHECK(fv.plus[i] == doctest::Approx(0.75).epsilon(1e-15));
        }
      }
    }
  }

  SUBCASE("linear data is reproduced away from the wrap") {
    std::vector<double> v(16);
    for (int i = 0; i < 16; ++i) v[i] = 0.5 + 2.0 * i;
    const CellField1D f = field_from(v, 4, BoundaryPolicy::extrapolate());
    for (Method m : {Method::eno, Method::rbf_eno}) {
      for (int k : {2, 3}) {
        ReconstructionScheme s;
        s.method = m;
        s.k = k;
        s.monotone_switch = false;
        const FaceValues fv = reconstruct_interface_states(f, 0, s);
        for (int face = 4; face <= 12; ++face) {
          CHECK(fv.minus[face] == doctest::Approx(2.0 * face - 0.5).epsilon(1e-13));
          CHECK(fv.plus[face] == doctest::Approx(2.0 * face - 0.5).epsilon(1e-13));
        }
      }
    }
  }

  SUBCASE("ENO k = 3 reproduces quadratics") {
    std::vector<double> v(16);
    for (int i = 0; i < 16; ++i) v[i] = i * i + i + 1.0 / 3;  // averages of x^2 on [i, i+1]
    const CellField1D f = field_from(v, 4, BoundaryPolicy::extrapolate());
    ReconstructionScheme s;
    s.k = 3;
    const FaceValues fv = reconstruct_interface_states(f, 0, s);
    for (int face = 4; face <= 12; ++face) {
      CHECK(fv.minus[face] == doctest::Approx(double(face) * face).epsilon(1e-13));
      CHECK(fv.plus[face] == doctest::Approx(double(face) * face).epsilon(1e-13));
    }
  }

  SUBCASE("mirror symmetry of the right state") {
    std::vector<double> v(12);
    for (int i = 0; i < 12; ++i) v[i] = std::sin(0.7 * i) + 0.1 * i * i;
    std::vector<double> rev(v.rbegin(), v.rend());
    const CellField1D f = field_from(v, 4, BoundaryPolicy::extrapolate());
    const CellField1D g = field_from(rev, 4, BoundaryPolicy::extrapolate());
    for (Method m : {Method::eno, Method::rbf_eno, Method::weno_js, Method::rbf_weno}) {
      ReconstructionScheme s;
      s.method = m;
      s.k = 3;
      const FaceValues a = reconstruct_interface_states(f, 0, s);
      const FaceValues b = reconstruct_interface_states(g, 0, s);
      for (int face = 0; face <= 12; ++face) {
        CHECK(a.plus[face] == doctest::Approx(b.minus[12 - face]).epsilon(1e-13));
      }
    }
  }

  SUBCASE("switch keeps step data inside the local window") {
    std::vector<double> v(20);
    for (int i = 0; i < 20; ++i) v[i] = i < 10 ? 1.0 : -1.0;
    const CellField1D f = field_from(v, 4, BoundaryPolicy::extrapolate());
    ReconstructionScheme s;
    s.method = Method::rbf_eno;
    for (int k : {2, 3}) {
      s.k = k;
      const FaceValues fv = reconstruct_interface_states(f, 0, s);
      for (int i = 0; i < 20; ++i) {
        const double lo = std::min({f(0, i - 1), f(0, i), f(0, i + 1)}) - 1e-15;
        const double hi = std::max({f(0, i - 1), f(0, i), f(0, i + 1)}) + 1e-15;
        CHECK(fv.minus[i + 1] >= lo);
        CHECK(fv.minus[i + 1] <= hi);
        CHECK(fv.plus[i] >= lo);
        CHECK(fv.plus[i] <= hi);
      }
      // cells 9 and 10 have windows straddling the jump
      CHECK(fv.switched[9 + 1] != 0);
      CHECK(fv.switched[10 + 1] != 0);
    }
  }

  SUBCASE("non-finite data is reported") {
    std::vector<double> v(8, 1.0);
    v[3] = std::nan("");
    const CellField1D f = field_from(v, 4, per);
    ReconstructionScheme s;
    s.method = Method::rbf_eno;
    CHECK_THROWS_AS(reconstruct_interface_states(f, 0, s), ReconstructionError);
  }
}

TEST_CASE("reconstruction-only order lift on sin(pi x)") {
  for (int k : {2, 3}) {
    ReconstructionScheme eno;
    eno.k = k;
    ReconstructionScheme rbf = eno;
    rbf.method = Method::rbf_eno;
    rbf.monotone_switch = false;
    const double oe = std::log2(reconstruction_error_1d(eno, 80) /
                                reconstruction_error_1d(eno, 160));
    const double orr = std::log2(reconstruction_error_1d(rbf, 80) /
                                 reconstruction_error_1d(rbf, 160));
    CHECK(orr - oe >= 0.8);
  }
}

TEST_CASE("MQ closed form agrees with the table to second order") {
  for (double eta : {1e-4, 1e-3, 1e-2, -1e-3}) {
    const long double exact = mq_exact_coefficient(eta);
    const double table = rbf_coeffs(2, 0, eta).c[0];
    CHECK(std::abs(static_cast<double>(exact) - table) <= 0.6 * eta * eta);
  }
  CHECK(gaussian_exact_coefficient(0.0L) == 0.5L);
}
