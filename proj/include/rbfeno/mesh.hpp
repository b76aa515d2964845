#ifndef RBFENO_MESH_HPP_
#define RBFENO_MESH_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rbfeno {

class MeshError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Uniform 1D grid on [a, b] with n cells. Cells are 0-based: cell i spans
/// [face(i), face(i + 1)] and has center a + (i + 1/2) dx.
struct Grid1D {
  double a = 0.0;
  double b = 1.0;
  int n = 0;
  double dx = 0.0;

  double center(int i) const { return a + (i + 0.5) * dx; }
  double face(int i) const { return a + i * dx; }
};

Grid1D build_uniform_grid(double a, double b, int n);

struct Grid2D {
  Grid1D x;
  Grid1D y;
};

Grid2D build_uniform_grid_2d(double ax, double bx, int nx, double ay, double by,
                             int ny);

enum class BoundaryKind { periodic, dirichlet, extrapolate };

struct BoundarySide {
  BoundaryKind kind = BoundaryKind::periodic;
  std::vector<double> state;  // one value per component, dirichlet only
};

struct BoundaryPolicy {
  BoundarySide left;
  BoundarySide right;

  static BoundaryPolicy periodic();
  static BoundaryPolicy extrapolate();
  static BoundaryPolicy dirichlet(std::vector<double> left_state,
                                  std::vector<double> right_state);
  // Dirichlet inflow on the left, zero-gradient outflow on the right.
  static BoundaryPolicy inflow_outflow(std::vector<double> left_state);

  void validate(int ncomp) const;
};

/// Read-only view of cell averages along one line, centered on a cell.
/// `stride` of -1 gives the mirror image about the center cell.
struct Window {
  const double* center = nullptr;
  std::ptrdiff_t stride = 1;

  double operator[](int m) const { return center[m * stride]; }
  Window reflected() const { return {center, -stride}; }
};

/// Cell averages over a 1D grid, component-major, with ghost layers.
class CellField1D {
 public:
  CellField1D() = default;
  CellField1D(Grid1D grid, int ncomp, int ghost, BoundaryPolicy boundary);

  const Grid1D& grid() const { return grid_; }
  int ncomp() const { return ncomp_; }
  int ghost() const { return ghost_; }
  int n() const { return grid_.n; }
  const BoundaryPolicy& boundary() const { return boundary_; }
  int stride() const { return grid_.n + 2 * ghost_; }

  // i ranges over [-ghost, n + ghost).
  double& operator()(int comp, int i) { return data_[index(comp, i)]; }
  double operator()(int comp, int i) const { return data_[index(comp, i)]; }

  Window window(int comp, int i) const { return {&data_[index(comp, i)], 1}; }

  std::span<double> storage() { return data_; }
  std::span<const double> storage() const { return data_; }

  // Interior values of one component, in cell order.
  std::vector<double> interior(int comp = 0) const;

 private:
  std::size_t index(int comp, int i) const {
    return static_cast<std::size_t>(comp) * stride() + (i + ghost_);
  }

  Grid1D grid_;
  int ncomp_ = 1;
  int ghost_ = 0;
  BoundaryPolicy boundary_;
  std::vector<double> data_;
};

/// Scalar cell averages over a 2D grid with a ghost frame.
class CellField2D {
 public:
  CellField2D() = default;
  CellField2D(Grid2D grid, int ghost, BoundaryPolicy boundary_x,
              BoundaryPolicy boundary_y);

  const Grid2D& grid() const { return grid_; }
  int ghost() const { return ghost_; }
  int nx() const { return grid_.x.n; }
  int ny() const { return grid_.y.n; }
  const BoundaryPolicy& boundary_x() const { return bx_; }
  const BoundaryPolicy& boundary_y() const { return by_; }
  std::ptrdiff_t row_stride() const { return grid_.x.n + 2 * ghost_; }

  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  Window row(int i, int j) const { return {&data_[index(i, j)], 1}; }
  Window column(int i, int j) const { return {&data_[index(i, j)], row_stride()}; }

  std::span<double> storage() { return data_; }
  std::span<const double> storage() const { return data_; }

  std::vector<double> interior() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + ghost_) * row_stride() + (i + ghost_);
  }

  Grid2D grid_;
  int ghost_ = 0;
  BoundaryPolicy bx_;
  BoundaryPolicy by_;
  std::vector<double> data_;
};

/// Gauss-Legendre nodes and weights on [-1, 1], 1 to 5 points.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre(int points);

/// Average of f over [lo, hi], split at any breakpoints inside the interval.
double interval_average(const std::function<double(double)>& f, double lo,
                        double hi, const QuadratureRule& rule,
                        std::span<const double> breakpoints = {});

using PointFunction1D = std::function<void(double x, std::span<double> out)>;

/// Projects f onto cell averages with `quad_order` Gauss points per cell
/// (3 or 5). Cells straddling a breakpoint are integrated piecewise.
CellField1D project_cell_averages(const PointFunction1D& f, const Grid1D& grid,
                                  int ncomp, int ghost, BoundaryPolicy boundary,
                                  int quad_order = 5,
                                  std::span<const double> breakpoints = {});

CellField1D project_cell_averages(const std::function<double(double)>& f,
                                  const Grid1D& grid, int ghost,
                                  BoundaryPolicy boundary, int quad_order = 5,
                                  std::span<const double> breakpoints = {});

CellField2D project_cell_averages_2d(
    const std::function<double(double, double)>& f, const Grid2D& grid,
    int ghost, BoundaryPolicy boundary_x, BoundaryPolicy boundary_y,
    int quad_order = 5, std::span<const double> breakpoints_x = {},
    std::span<const double> breakpoints_y = {});

void fill_ghosts(CellField1D& field);
void fill_ghosts(CellField2D& field);

// Ghost layers needed by order-k reconstruction plus its eta window.
int ghost_width_for_order(int k);

}  // namespace rbfeno

#endif  // RBFENO_MESH_HPP_
