#include "rbfeno/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rbfeno {

Grid1D build_uniform_grid(double a, double b, int n) {
  if (!(b > a)) {
    throw MeshError("grid: right end must exceed left end");
  }
  if (n < 5) {
    throw MeshError("grid: need at least 5 cells, got " + std::to_string(n));
  }
  return Grid1D{a, b, n, (b - a) / n};
}

Grid2D build_uniform_grid_2d(double ax, double bx, int nx, double ay, double by,
                             int ny) {
  return Grid2D{build_uniform_grid(ax, bx, nx), build_uniform_grid(ay, by, ny)};
}

BoundaryPolicy BoundaryPolicy::periodic() { return {}; }

BoundaryPolicy BoundaryPolicy::extrapolate() {
  return {{BoundaryKind::extrapolate, {}}, {BoundaryKind::extrapolate, {}}};
}

BoundaryPolicy BoundaryPolicy::dirichlet(std::vector<double> left_state,
                                         std::vector<double> right_state) {
  return {{BoundaryKind::dirichlet, std::move(left_state)},
          {BoundaryKind::dirichlet, std::move(right_state)}};
}

BoundaryPolicy BoundaryPolicy::inflow_outflow(std::vector<double> left_state) {
  return {{BoundaryKind::dirichlet, std::move(left_state)},
          {BoundaryKind::extrapolate, {}}};
}

void BoundaryPolicy::validate(int ncomp) const {
  if ((left.kind == BoundaryKind::periodic) !=
      (right.kind == BoundaryKind::periodic)) {
    throw MeshError("boundary: periodic must be applied to both sides");
  }
  for (const BoundarySide* side : {&left, &right}) {
    if (side->kind == BoundaryKind::dirichlet &&
        static_cast<int>(side->state.size()) != ncomp) {
      throw MeshError("boundary: dirichlet state needs one value per component");
    }
  }
}

CellField1D::CellField1D(Grid1D grid, int ncomp, int ghost,
                         BoundaryPolicy boundary)
    : grid_(grid), ncomp_(ncomp), ghost_(ghost), boundary_(std::move(boundary)) {
  if (ncomp < 1) throw MeshError("field: ncomp must be positive");
  if (ghost < 1 || ghost > grid.n) throw MeshError("field: bad ghost width");
  boundary_.validate(ncomp);
  data_.assign(static_cast<std::size_t>(ncomp) * stride(), 0.0);
}

std::vector<double> CellField1D::interior(int comp) const {
  std::vector<double> out(grid_.n);
  for (int i = 0; i < grid_.n; ++i) out[i] = (*this)(comp, i);
  return out;
}

CellField2D::CellField2D(Grid2D grid, int ghost, BoundaryPolicy boundary_x,
                         BoundaryPolicy boundary_y)
    : grid_(grid), ghost_(ghost), bx_(std::move(boundary_x)),
      by_(std::move(boundary_y)) {
  if (ghost < 1 || ghost > std::min(grid.x.n, grid.y.n)) {
    throw MeshError("field: bad ghost width");
  }
  bx_.validate(1);
  by_.validate(1);
  data_.assign(static_cast<std::size_t>(row_stride()) * (grid.y.n + 2 * ghost),
               0.0);
}

std::vector<double> CellField2D::interior() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(nx()) * ny());
  for (int j = 0; j < ny(); ++j)
    for (int i = 0; i < nx(); ++i) out.push_back((*this)(i, j));
  return out;
}

QuadratureRule gauss_legendre(int points) {
  switch (points) {
    case 1:
      return {{0.0}, {2.0}};
    case 2: {
      const double x = 1.0 / std::sqrt(3.0);
      return {{-x, x}, {1.0, 1.0}};
    }
    case 3: {
      const double x = std::sqrt(0.6);
      return {{-x, 0.0, x}, {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0}};
    }
    case 4: {
      const double a = std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(1.2));
      const double b = std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(1.2));
      const double wa = (18.0 + std::sqrt(30.0)) / 36.0;
      const double wb = (18.0 - std::sqrt(30.0)) / 36.0;
      return {{-b, -a, a, b}, {wb, wa, wa, wb}};
    }
    case 5: {
      const double a = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
      const double b = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
      const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
      const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
      return {{-b, -a, 0.0, a, b}, {wb, wa, 128.0 / 225.0, wa, wb}};
    }
    default:
      throw MeshError("quadrature: supported orders are 1..5");
  }
}

namespace {

void check_quad_order(int q) {
  if (q != 3 && q != 5) {
    throw MeshError("projection: quad_order must be 3 or 5");
  }
}

// Sub-intervals of [lo, hi] cut at the interior breakpoints.
std::vector<double> cut_points(double lo, double hi,
                               std::span<const double> breakpoints) {
  std::vector<double> cuts{lo};
  for (double p : breakpoints) {
    if (p > lo && p < hi) cuts.push_back(p);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

void require_finite(double v, double x) {
  if (!std::isfinite(v)) {
    throw MeshError("projection: non-finite function value at x = " +
                    std::to_string(x));
  }
}

}  // namespace

double interval_average(const std::function<double(double)>& f, double lo,
                        double hi, const QuadratureRule& rule,
                        std::span<const double> breakpoints) {
  const std::vector<double> cuts = cut_points(lo, hi, breakpoints);
  double integral = 0.0;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double mid = 0.5 * (cuts[s] + cuts[s + 1]);
    const double half = 0.5 * (cuts[s + 1] - cuts[s]);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double x = mid + half * rule.nodes[q];
      const double v = f(x);
      require_finite(v, x);
      integral += half * rule.weights[q] * v;
    }
  }
  return integral / (hi - lo);
}

CellField1D project_cell_averages(const PointFunction1D& f, const Grid1D& grid,
                                  int ncomp, int ghost, BoundaryPolicy boundary,
                                  int quad_order,
                                  std::span<const double> breakpoints) {
  check_quad_order(quad_order);
  const QuadratureRule rule = gauss_legendre(quad_order);
  CellField1D field(grid, ncomp, ghost, std::move(boundary));
  std::vector<double> sample(ncomp);
  for (int i = 0; i < grid.n; ++i) {
    const std::vector<double> cuts =
        cut_points(grid.face(i), grid.face(i + 1), breakpoints);
    std::vector<double> acc(ncomp, 0.0);
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
      const double mid = 0.5 * (cuts[s] + cuts[s + 1]);
      const double half = 0.5 * (cuts[s + 1] - cuts[s]);
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double x = mid + half * rule.nodes[q];
        f(x, sample);
        for (int c = 0; c < ncomp; ++c) {
          require_finite(sample[c], x);
          acc[c] += half * rule.weights[q] * sample[c];
        }
      }
    }
    for (int c = 0; c < ncomp; ++c) field(c, i) = acc[c] / grid.dx;
  }
  fill_ghosts(field);
  return field;
}

CellField1D project_cell_averages(const std::function<double(double)>& f,
                                  const Grid1D& grid, int ghost,
                                  BoundaryPolicy boundary, int quad_order,
                                  std::span<const double> breakpoints) {
  return project_cell_averages(
      [&f](double x, std::span<double> out) { out[0] = f(x); }, grid, 1, ghost,
      std::move(boundary), quad_order, breakpoints);
}

CellField2D project_cell_averages_2d(
    const std::function<double(double, double)>& f, const Grid2D& grid,
    int ghost, BoundaryPolicy boundary_x, BoundaryPolicy boundary_y,
    int quad_order, std::span<const double> breakpoints_x,
    std::span<const double> breakpoints_y) {
  check_quad_order(quad_order);
  const QuadratureRule rule = gauss_legendre(quad_order);
  CellField2D field(grid, ghost, std::move(boundary_x), std::move(boundary_y));
  for (int j = 0; j < grid.y.n; ++j) {
    const double ylo = grid.y.face(j);
    const double yhi = grid.y.face(j + 1);
    for (int i = 0; i < grid.x.n; ++i) {
      const double xlo = grid.x.face(i);
      const double xhi = grid.x.face(i + 1);
      field(i, j) = interval_average(
          [&](double y) {
            return interval_average([&](double x) { return f(x, y); }, xlo,
                                    xhi, rule, breakpoints_x);
          },
          ylo, yhi, rule, breakpoints_y);
    }
  }
  fill_ghosts(field);
  return field;
}

namespace {

// Fills `ghost` values on each side of a line of n interior values reached
// through `at(i)` for i in [-ghost, n + ghost).
template <class At>
void fill_line(At&& at, int n, int ghost, const BoundaryPolicy& policy,
               int comp) {
  for (int g = 1; g <= ghost; ++g) {
    switch (policy.left.kind) {
      case BoundaryKind::periodic:
        at(-g) = at(n - g);
        break;
      case BoundaryKind::dirichlet:
        at(-g) = policy.left.state[comp];
        break;
      case BoundaryKind::extrapolate:
        at(-g) = at(0);
        break;
    }
    switch (policy.right.kind) {
      case BoundaryKind::periodic:
        at(n - 1 + g) = at(g - 1);
        break;
      case BoundaryKind::dirichlet:
        at(n - 1 + g) = policy.right.state[comp];
        break;
      case BoundaryKind::extrapolate:
        at(n - 1 + g) = at(n - 1);
        break;
    }
  }
}

}  // namespace

void fill_ghosts(CellField1D& field) {
  for (int c = 0; c < field.ncomp(); ++c) {
    fill_line([&](int i) -> double& { return field(c, i); }, field.n(),
              field.ghost(), field.boundary(), c);
  }
}

void fill_ghosts(CellField2D& field) {
  const int g = field.ghost();
  for (int j = 0; j < field.ny(); ++j) {
    fill_line([&](int i) -> double& { return field(i, j); }, field.nx(), g,
              field.boundary_x(), 0);
  }
  // Columns include the x ghosts so corners are filled too.
  for (int i = -g; i < field.nx() + g; ++i) {
    fill_line([&](int j) -> double& { return field(i, j); }, field.ny(), g,
              field.boundary_y(), 0);
  }
}

int ghost_width_for_order(int k) { return k + 1; }

}  // namespace rbfeno
