#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rbfeno/mesh.hpp"

using namespace rbfeno;

TEST_CASE("uniform grid geometry") {
  const Grid1D g = build_uniform_grid(-1.0, 1.0, 10);
  CHECK(g.dx == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(g.face(0) == -1.0);
  CHECK(g.face(10) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.center(0) == doctest::Approx(-0.9).epsilon(1e-15));

  CHECK(build_uniform_grid(0.0, 1.0, 320).dx == doctest::Approx(1.0 / 320).epsilon(1e-15));
  CHECK_THROWS_AS(build_uniform_grid(1.0, -1.0, 10), MeshError);
  CHECK_THROWS_AS(build_uniform_grid(0.0, 1.0, 4), MeshError);
}

TEST_CASE("gauss-legendre rules integrate polynomials of degree 2p-1") {
  for (int p = 1; p <= 5; ++p) {
    const QuadratureRule q = gauss_legendre(p);
    REQUIRE(q.nodes.size() == static_cast<std::size_t>(p));
    for (int deg = 0; deg <= 2 * p - 1; ++deg) {
      double s = 0.0;
      for (int m = 0; m < p; ++m) s += q.weights[m] * std::pow(q.nodes[m], deg);
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-14));
    }
  }
  CHECK_THROWS(gauss_legendre(6));
}

TEST_CASE("cell-average projection") {
  const Grid1D g = build_uniform_grid(-1.0, 1.0, 10);

  SUBCASE("constants are reproduced to round-off") {
    CellField1D f = project_cell_averages([](double) { return 3.25; }, g, 2,
                                          BoundaryPolicy::periodic());
    for (double v : f.interior()) CHECK(v == doctest::Approx(3.25).epsilon(1e-15));
  }

  SUBCASE("linear on one cell gives its midpoint value") {
    const QuadratureRule q = gauss_legendre(3);
    CHECK(interval_average([](double x) { return x; }, 0.0, 0.2, q) ==
          doctest::Approx(0.1).epsilon(1e-15));
  }

  SUBCASE("sin(pi x) matches the closed-form antiderivative") {
    const double pi = std::numbers::pi;
    CellField1D f = project_cell_averages([&](double x) { return std::sin(pi * x); }, g,
                                          2, BoundaryPolicy::periodic(), 5);
    const std::vector<double> v = f.interior();
    for (int i = 0; i < g.n; ++i) {
      const double exact =
          (std::cos(pi * g.face(i)) - std::cos(pi * g.face(i + 1))) / (pi * g.dx);
      CHECK(std::abs(v[i] - exact) <= 1e-12);
    }
  }

  SUBCASE("breakpoints split the cell containing a jump") {
    const Grid1D h = build_uniform_grid(-1.0, 1.0, 5);  // x = 0 is mid-cell
    const std::vector<double> brk{0.0};
    CellField1D f = project_cell_averages([](double x) { return x < 0.0 ? 1.0 : -1.0; },
                                          h, 2, BoundaryPolicy::extrapolate(), 5, brk);
    CHECK(f(0, 2) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(f(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f(0, 3) == doctest::Approx(-1.0).epsilon(1e-15));
  }
}

TEST_CASE("ghost filling") {
  const Grid1D g = build_uniform_grid(0.0, 5.0, 5);

  SUBCASE("periodic wrap") {
    CellField1D f(g, 1, 2, BoundaryPolicy::periodic());
    for (int i = 0; i < 5; ++i) f(0, i) = i + 1.0;
    fill_ghosts(f);
    CHECK(f(0, -2) == 4.0);
    CHECK(f(0, -1) == 5.0);
    CHECK(f(0, 5) == 1.0);
    CHECK(f(0, 6) == 2.0);
  }

  SUBCASE("dirichlet") {
    CellField1D f(g, 1, 3, BoundaryPolicy::dirichlet({1.0}, {-2.0}));
    fill_ghosts(f);
    for (int m = 1; m <= 3; ++m) {
      CHECK(f(0, -m) == 1.0);
      CHECK(f(0, 4 + m) == -2.0);
    }
  }

  SUBCASE("zero-gradient extrapolation") {
    CellField1D f(g, 1, 3, BoundaryPolicy::extrapolate());
    for (int i = 0; i < 5; ++i) f(0, i) = 7.0 + i;
    fill_ghosts(f);
    for (int m = 1; m <= 3; ++m) {
      CHECK(f(0, -m) == 7.0);
      CHECK(f(0, 4 + m) == 11.0);
    }
  }

  SUBCASE("2D periodic frame including corners") {
    const Grid2D g2 = build_uniform_grid_2d(0.0, 1.0, 5, 0.0, 1.0, 5);
    CellField2D f(g2, 2, BoundaryPolicy::periodic(), BoundaryPolicy::periodic());
    for (int j = 0; j < 5; ++j) {
      for (int i = 0; i < 5; ++i) f(i, j) = 10.0 * j + i;
    }
    fill_ghosts(f);
    CHECK(f(-1, 0) == 4.0);
    CHECK(f(5, 2) == 20.0);
    CHECK(f(1, -1) == 41.0);
    CHECK(f(-1, -1) == 44.0);
    CHECK(f(-2, 6) == 13.0);
  }

  SUBCASE("dirichlet state size is validated") {
    CHECK_THROWS(BoundaryPolicy::dirichlet({1.0}, {1.0, 2.0}).validate(1));
  }
}

TEST_CASE("ghost filling is idempotent") {
  const Grid1D g = build_uniform_grid(-1.0, 1.0, 7);
  CellField1D f = project_cell_averages([](double x) { return x * x; }, g, 3,
                                        BoundaryPolicy::inflow_outflow({2.0}));
  const std::vector<double> once(f.storage().begin(), f.storage().end());
  fill_ghosts(f);
  CHECK(std::equal(once.begin(), once.end(), f.storage().begin()));
  CHECK(f(0, -3) == 2.0);
  CHECK(f(0, 9) == f(0, 6));
}

TEST_CASE("windows and reflection") {
  const Grid1D g = build_uniform_grid(0.0, 1.0, 5);
  CellField1D f(g, 2, 2, BoundaryPolicy::periodic());
  for (int i = 0; i < 5; ++i) {
    f(0, i) = i;
    f(1, i) = 100.0 + i;
  }
  fill_ghosts(f);
  const Window w = f.window(1, 1);
  CHECK(w[0] == 101.0);
  CHECK(w[1] == 102.0);
  CHECK(w[-1] == 100.0);
  CHECK(w.reflected()[1] == 100.0);
  CHECK(f.interior(1) == std::vector<double>{100.0, 101.0, 102.0, 103.0, 104.0});
  CHECK(ghost_width_for_order(2) >= 3);
  CHECK(ghost_width_for_order(3) >= 4);
}
