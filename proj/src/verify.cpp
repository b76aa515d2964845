#include "rbfeno/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "rbfeno/flux_time.hpp"
#include "rbfeno/reconstruct1d.hpp"
#include "rbfeno/reconstruct2d.hpp"

namespace rbfeno {

namespace {

std::string format(const char* spec, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, spec, a, b);
  return buf;
}

// Neumaier sum, kept local so the suites stay independent of the harness.
double stable_sum(std::span<const double> v) {
  double s = 0.0;
  double c = 0.0;
  for (double x : v) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  return s + c;
}

}  // namespace

long double mq_exact_coefficient(long double eta) {
  return (std::sqrt(4.0L * eta + 1.0L) + 1.0L) / (4.0L * std::sqrt(eta + 1.0L));
}

long double gaussian_exact_coefficient(long double eta) {
  if (eta == 0.0L) return 0.5L;
  return 2.0L * eta * std::exp(3.0L * eta) / std::expm1(4.0L * eta);
}

PropertyResult check_polynomial_limit() {
  PropertyResult res{"polynomial-limit identity", true, ""};
  for (int k : {2, 3}) {
    for (int r = -1; r < k; ++r) {
      const ReconstructionCoefficients a = rbf_coeffs(k, r, 0.0);
      const ReconstructionCoefficients b = poly_coeffs(k, r);
      for (int j = 0; j < k; ++j) {
        if (a.c[j] != b.c[j]) {
          res.passed = false;
          res.detail = "k=" + std::to_string(k) + " r=" + std::to_string(r);
        }
      }
    }
  }
  if (res.passed) res.detail = "rbf_coeffs(k, r, 0) == poly_coeffs(k, r) for all 7 rows";
  return res;
}

PropertyResult check_consistency_sums() {
  PropertyResult res{"consistency sums", true, ""};
  // Exact rational sums of the base entries and of the slopes.
  for (int k : {2, 3}) {
    for (int r = -1; r < k; ++r) {
      long long num = 0;
      long long den = 1;
      for (int j = 0; j < k; ++j) {
        const CoefficientEntry& e = coefficient_entry(k, r, j);
        num = num * e.base.den + e.base.num * den;
        den *= e.base.den;
      }
      if (num != den) {
        res.passed = false;
        res.detail = "base row does not sum to 1 at k=" + std::to_string(k) +
                     " r=" + std::to_string(r);
        return res;
      }
    }
  }
  // Centered k = 2 row sums to 1 + eta / 2 (a + b = 1/2 for MQ).
  for (double eta : {1e-3, -0.2, 0.37}) {
    const double s = rbf_coeffs(2, 0, eta).sum();
    if (std::abs(s - (1.0 + 0.5 * eta)) > 1e-15) {
      res.passed = false;
      res.detail = "centered k=2 row sum differs from 1 + eta/2";
      return res;
    }
  }
  res.detail = "all base rows sum to 1 exactly; k=2 centered row sums to 1 + eta/2";
  return res;
}

PropertyResult check_eta_vanishing() {
  PropertyResult res{"eta vanishes on constant and linear data", true, ""};
  double worst = 0.0;
  // Dyadic data keep every difference exact, so eta must be exactly zero.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-192, 192);
  for (int trial = 0; trial < 400; ++trial) {
    const double c = dist(rng) / 64.0;
    const double s = trial < 100 ? 0.0 : dist(rng) / 64.0;
    const double q = dist(rng) / 64.0;
    const double v[5] = {c - 2 * s, c - s, c, c + s, c + 2 * s};
    const double eps = eta_regularizer(std::span<const double>(v, 5), 1e-6);
    worst = std::max(worst, std::abs(compute_eta_k2(v[1], v[2], v[3], eps).eta));
    worst = std::max(worst, std::abs(compute_eta_k3(v[1], v[2], v[3], v[4], eps).eta));
    // 2D cross of c + s x + q y on unit cells.
    const CrossStencil cross{c - s, c, c + s, c - q, c + q};
    worst = std::max(worst, std::abs(compute_eta_2d(cross, {}, eps).eta));
  }
  res.passed = worst == 0.0;
  res.detail = format("max |eta| = %.3g over 400 dyadic windows (must be 0)", worst);
  return res;
}

PropertyResult check_mq_closed_form() {
  PropertyResult res{"MQ closed-form agreement O(eta^2)", true, ""};
  double worst = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const long double eta = std::pow(10.0L, -4.0L + 2.0L * i / 40.0L);
    for (long double e : {eta, -eta}) {
      const long double table = rbf_coeffs(2, 0, static_cast<double>(e)).c[0];
      const long double ratio = std::abs(mq_exact_coefficient(e) - table) / (e * e);
      worst = std::max(worst, static_cast<double>(ratio));
    }
  }
  // Leading term is 9/16 eta^2.
  res.passed = worst <= 0.6;
  res.detail = format("max |exact - table| / eta^2 = %.4f over |eta| in [1e-4, 1e-2] (bound 0.6)", worst);
  return res;
}

PropertyResult check_gaussian_equivalence() {
  PropertyResult res{"Gaussian/MQ equivalence order", true, ""};
  std::vector<double> diffs;
  std::string detail;
  for (int n = 40; n <= 320; n *= 2) {
    const double dx = 2.0 / n;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      auto avg = [&](int m) {
        const double a = -1.0 + (i + m) * dx;
        const double b = a + dx;
        return 2.0 + (std::cos(std::numbers::pi * a) - std::cos(std::numbers::pi * b)) /
                         (std::numbers::pi * dx);
      };
      const double vm = avg(-1), v0 = avg(0), vp = avg(1);
      const std::array<double, 3> w{vm, v0, vp};
      const double eps = eta_regularizer(w, 1e-6);
      const double eta_mq = compute_eta_k2(vm, v0, vp, eps).eta;
      const ReconstructionCoefficients c = rbf_coeffs(2, 0, eta_mq);
      const double mq = c.c[0] * v0 + c.c[1] * vp;
      // The Gaussian basis has eta_G = eta_MQ / 2 and equal weights.
      const long double g = gaussian_exact_coefficient(0.5L * eta_mq);
      const double gauss = static_cast<double>(g * (v0 + vp));
      worst = std::max(worst, std::abs(mq - gauss));
    }
    diffs.push_back(worst);
  }
  double min_order = 1e9;
  for (std::size_t i = 1; i < diffs.size(); ++i) {
    min_order = std::min(min_order, std::log2(diffs[i - 1] / diffs[i]));
  }
  res.passed = min_order >= 3.7;
  res.detail = format("min observed order %.3f over N = 40..320 (bound 3.7)", min_order);
  return res;
}

PropertyResult check_weno_partition() {
  PropertyResult res{"WENO weights partition of unity", true, ""};
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> expo(-20.0, 4.0);
  double worst = 0.0;
  bool nonneg = true;
  for (int k : {2, 3}) {
    const OrderArray d = WenoParameters::optimal_weights(k);
    for (int trial = 0; trial < 10000; ++trial) {
      OrderArray beta{};
      for (int r = 0; r < k; ++r) beta[r] = trial % 7 == 0 ? 0.0 : std::pow(10.0, expo(rng));
      const OrderArray w = weno_weights(k, beta, d, 1e-6);
      double s = 0.0;
      for (int r = 0; r < k; ++r) {
        s += w[r];
        nonneg = nonneg && w[r] >= 0.0;
      }
      worst = std::max(worst, std::abs(s - 1.0));
    }
  }
  res.passed = nonneg && worst <= 4e-16;
  res.detail = format("max |sum - 1| = %.3g, all nonnegative: ", worst) +
               (nonneg ? "yes" : "no");
  return res;
}

PropertyResult check_conservation() {
  PropertyResult res{"discrete conservation drift", true, ""};
  double worst = 0.0;
  for (Equation eq : {Equation::advection, Equation::burgers}) {
    for (Method m : {Method::rbf_eno, Method::rbf_weno}) {
      const Grid1D g = build_uniform_grid(-1.0, 1.0, 100);
      CellField1D f = project_cell_averages(
          [](double x) { return 2.0 + std::sin(std::numbers::pi * x); }, g, 4,
          BoundaryPolicy::periodic());
      ReconstructionScheme s;
      s.method = m;
      s.k = 3;
      const FluxFunction flux{eq};
      auto mass = [&] {
        const std::vector<double> v = f.interior();
        return g.dx * stable_sum(v);
      };
      const double m0 = mass();
      const double alpha = eq == Equation::advection ? 1.0 : 3.0;
      const double dt = 0.1 * g.dx / alpha;
      for (int step = 0; step < 1000; ++step) {
        tvd_rk3_step(
            f,
            [&](CellField1D& u, std::span<double> out) { rhs_1d(u, s, flux, alpha, out); },
            dt);
      }
      worst = std::max(worst, std::abs(mass() - m0) / std::abs(m0));
    }
  }
  res.passed = worst <= 1e-12;
  res.detail = format("max relative drift %.3g over 1000 steps (bound 1e-12)", worst);
  return res;
}

PropertyResult check_rk3_order() {
  PropertyResult res{"RK3 ODE order", true, ""};
  struct Scalar {
    std::vector<double> v{1.0};
    std::span<double> storage() { return v; }
  };
  auto defect = [](double dt) {
    Scalar u;
    tvd_rk3_step(
        u,
        [](Scalar& s, std::span<double> out) { out[0] = -s.v[0]; }, dt);
    return std::abs(u.v[0] - std::exp(-dt));
  };
  const double d1 = defect(1e-2);
  const double d2 = defect(5e-3);
  const double order = std::log2(d1 / d2);
  // Local error of a third-order method scales as dt^4.
  res.passed = d1 <= 5e-9 && order >= 3.8;
  res.detail = format("defect %.3g at dt = 1e-2 (bound 5e-9), local order %.3f", d1, order);
  return res;
}

std::vector<PropertyResult> run_property_suites() {
  return {check_polynomial_limit(), check_consistency_sums(), check_eta_vanishing(),
          check_mq_closed_form(),   check_gaussian_equivalence(), check_weno_partition(),
          check_conservation(),     check_rk3_order()};
}

}  // namespace rbfeno
