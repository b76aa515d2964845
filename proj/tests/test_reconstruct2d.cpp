#include <doctest.h>

#include <cmath>

#include "rbfeno/harness.hpp"
#include "rbfeno/reconstruct2d.hpp"

using namespace rbfeno;

namespace {

// Unit cells centered at the origin: the average of a linear function is its
// center value.
CrossStencil linear_cross(double c, double sx, double sy) {
  return {c - sx, c, c + sx, c - sy, c + sy};
}

constexpr Face kFaces[] = {Face::east, Face::west, Face::north, Face::south};

double linear_at_face(double c, double sx, double sy, Face f) {
  switch (f) {
    case Face::east: return c + 0.5 * sx;
    case Face::west: return c - 0.5 * sx;
    case Face::north: return c + 0.5 * sy;
    case Face::south: return c - 0.5 * sy;
  }
  return 0.0;
}

}  // namespace

TEST_CASE("2D stencil selection") {
  const CrossStencil jump_east{0.0, 0.0, 9.0, 1.0, 2.0};
  CHECK(select_stencil_2d(jump_east).use_west);
  const CrossStencil jump_west{9.0, 0.0, 0.0, 0.0, 0.0};
  CHECK_FALSE(select_stencil_2d(jump_west).use_west);
  const CrossStencil sym = linear_cross(1.0, 0.5, 0.5);
  CHECK(select_stencil_2d(sym).use_west);
  CHECK(select_stencil_2d(sym).use_south);
}

TEST_CASE("2D polynomial face values") {
  const CrossStencil flat{3.0, 3.0, 3.0, 3.0, 3.0};
  for (Face f : kFaces) CHECK(poly_face_value_2d(flat, {}, f) == 3.0);

  // {(i,j), (i+1,j), (i,j-1)} at the east face weighs center and east by 1/2.
  const CrossStencil c{10.0, 1.0, 3.0, 100.0, 1000.0};
  CHECK(poly_face_value_2d(c, {false, true}, Face::east) == 2.0);

  const CrossStencil lin = linear_cross(0.25, 1.5, -0.75);
  for (bool w : {true, false}) {
    for (bool s : {true, false}) {
      for (Face f : kFaces) {
        CHECK(poly_face_value_2d(lin, {w, s}, f) ==
              doctest::Approx(linear_at_face(0.25, 1.5, -0.75, f)).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("2D shape parameter") {
  CHECK(compute_eta_2d({2.0, 2.0, 2.0, 2.0, 2.0}, {}, 1e-6).eta == 0.0);
  CHECK(compute_eta_2d(linear_cross(1.0, 0.5, -2.0), {}, 1e-6).eta == 0.0);
  const Perturbation2D three_quarters{0.25, 0.25, 0.25};
  const CrossStencil c{0.0, 0.0, 1.0, 0.0, 0.0};
  CHECK(compute_eta_2d(c, three_quarters, 0.0).eta == doctest::Approx(-4.0 / 15));
  CHECK_THROWS(Perturbation2D{0.5, -0.5, 0.0}.validate());
}

TEST_CASE("2D perturbed face values") {
  FaceOptions opts;
  opts.monotone_switch = false;

  SUBCASE("constants and linears are exact") {
    const CrossStencil flat{-1.5, -1.5, -1.5, -1.5, -1.5};
    const CrossStencil lin = linear_cross(2.0, -0.5, 0.25);
    for (bool w : {true, false}) {
      for (Face f : kFaces) {
        CHECK(rbf_face_value_2d(flat, {w, !w}, f, opts) == -1.5);
        CHECK(rbf_face_value_2d(lin, {w, !w}, f, opts) ==
              doctest::Approx(linear_at_face(2.0, -0.5, 0.25, f)).epsilon(1e-14));
      }
    }
  }

  SUBCASE("curved data perturbs, linear data does not") {
    const CrossStencil c{0.3, 1.1, 0.9, 1.0, 1.2};
    ShapeParameterEta eta;
    const double v = rbf_face_value_2d(c, {true, true}, Face::east, opts, &eta);
    CHECK(eta.eta != 0.0);
    CHECK(v != poly_face_value_2d(c, {true, true}, Face::east));
    const CrossStencil lin = linear_cross(1.0, 0.25, 0.5);
    CHECK(rbf_face_value_2d(lin, {true, true}, Face::east, opts, &eta) ==
          poly_face_value_2d(lin, {true, true}, Face::east));
    CHECK(eta.eta == 0.0);
  }

  SUBCASE("switch forces the polynomial value") {
    const CrossStencil c{1.0, 1.0, -1.0, 0.0, 0.0};
    CHECK(monotone_switch_2d(c));
    FaceOptions on = opts;
    on.monotone_switch = true;
    ShapeParameterEta eta;
    const StencilSubset2D s = select_stencil_2d(c);
    CHECK(rbf_face_value_2d(c, s, Face::east, on, &eta) ==
          poly_face_value_2d(c, s, Face::east));
    CHECK(eta.switched);
    CHECK_FALSE(monotone_switch_2d(linear_cross(0.0, 1.0, 1.0)));
  }
}

TEST_CASE("five-cell interpolant") {
  const CrossStencil flat{4.0, 4.0, 4.0, 4.0, 4.0};
  for (Face f : kFaces) CHECK(five_cell_fv_value(flat, f, 0.1, 0.1) == 4.0);

  // Point values of x^2 + 2 y^2 at the five centers (unit spacing).
  auto q = [](double x, double y) { return x * x + 2 * y * y; };
  const CrossStencil c{q(-1, 0), q(0, 0), q(1, 0), q(0, -1), q(0, 1)};
  CHECK(five_cell_fv_value(c, Face::east, 1.0, 1.0) == doctest::Approx(q(0.5, 0)));
  CHECK(five_cell_fv_value(c, Face::west, 1.0, 1.0) == doctest::Approx(q(-0.5, 0)));
  CHECK(five_cell_fv_value(c, Face::north, 1.0, 1.0) == doctest::Approx(q(0, 0.5)));
  CHECK(five_cell_fv_value(c, Face::south, 1.0, 1.0) == doctest::Approx(q(0, -0.5)));
  CHECK_THROWS(five_cell_fv_value(c, Face::east, 1.0, 2.0));
}

TEST_CASE("cell reconstruction dispatch") {
  const CrossStencil lin = linear_cross(1.0, 0.2, 0.1);
  for (Method m : {Method::eno, Method::rbf_eno, Method::five_cell}) {
    const CellFaces2D f = reconstruct_cell_2d(lin, m, {}, 1.0, 1.0);
    CHECK(f.east == doctest::Approx(1.1));
    CHECK(f.west == doctest::Approx(0.9));
    CHECK(f.north == doctest::Approx(1.05));
    CHECK(f.south == doctest::Approx(0.95));
  }
  CHECK_THROWS(reconstruct_cell_2d(lin, Method::weno_js, {}, 1.0, 1.0));
}

TEST_CASE("cross extraction from a field") {
  const Grid2D g = build_uniform_grid_2d(0.0, 1.0, 5, 0.0, 1.0, 5);
  CellField2D f(g, 2, BoundaryPolicy::periodic(), BoundaryPolicy::periodic());
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 5; ++i) f(i, j) = 10.0 * j + i;
  }
  fill_ghosts(f);
  const CrossStencil c = cross_at(f, 0, 0);
  CHECK(c.west == 4.0);
  CHECK(c.east == 1.0);
  CHECK(c.south == 40.0);
  CHECK(c.north == 10.0);
}

TEST_CASE("2D reconstruction-only order") {
  FaceOptions opts;
  opts.monotone_switch = false;
  auto order = [&](Method m) {
    return std::log2(reconstruction_error_2d(m, opts, 40) /
                     reconstruction_error_2d(m, opts, 80));
  };
  CHECK(order(Method::rbf_eno) >= 2.7);
  CHECK(order(Method::eno) <= 2.2);
  CHECK(order(Method::five_cell) <= 2.2);
}
