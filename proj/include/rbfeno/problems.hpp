#ifndef RBFENO_PROBLEMS_HPP_
#define RBFENO_PROBLEMS_HPP_

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rbfeno/flux_time.hpp"
#include "rbfeno/mesh.hpp"

namespace rbfeno {

/// u0(x - t) with x - t wrapped into [a, b).
double exact_advection(const std::function<double(double)>& u0, double x,
                       double t, double a, double b);

/// Smooth Burgers solution u = -sin(pi (x - u t)), t <= 1/pi.
double exact_burgers_presock(double x, double t);

/// Solution w of w = sin(2 pi (s - 2 w t)) for 2D Burgers along s = x + y,
/// t <= 1/(4 pi).
double exact_burgers2d_presock(double x, double y, double t);

/// 1 on y in [0, 0.5], -1 above.
double initial_condition_2d_step(double x, double y);

struct PrimitiveState {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

EulerState to_conservative(const PrimitiveState& w, double gamma = kGamma);

/// Exact solution of the 1D Euler Riemann problem for an ideal gas.
class RiemannSolution {
 public:
  RiemannSolution(PrimitiveState left, PrimitiveState right, double gamma = kGamma);

  double p_star() const { return p_star_; }
  double u_star() const { return u_star_; }
  double rho_star_left() const { return rho_star_left_; }
  double rho_star_right() const { return rho_star_right_; }
  const PrimitiveState& left() const { return left_; }
  const PrimitiveState& right() const { return right_; }
  double gamma() const { return gamma_; }

  /// Wave speeds in x/t, sorted; rarefactions contribute head and tail.
  std::vector<double> wave_speeds() const;

  /// State at similarity coordinate xi = x / t.
  PrimitiveState sample(double xi) const;

 private:
  PrimitiveState left_;
  PrimitiveState right_;
  double gamma_;
  double p_star_ = 0.0;
  double u_star_ = 0.0;
  double rho_star_left_ = 0.0;
  double rho_star_right_ = 0.0;
};

const RiemannSolution& sod_solution();

struct ProblemSpec {
  std::string id;
  int dim = 1;
  Equation equation = Equation::advection;
  double xa = -1.0;
  double xb = 1.0;
  double ya = 0.0;
  double yb = 1.0;
  double t_final = 0.5;
  int default_n = 200;
  bool smooth = true;  // convergence study without the monotone switch
  BoundaryPolicy boundary_x;
  BoundaryPolicy boundary_y;
  std::vector<double> breaks_x;  // initial-data discontinuities
  std::vector<double> breaks_y;
  PointFunction1D initial_1d;
  std::function<double(double, double)> initial_2d;
  /// Exact cell averages of component `comp` at time t (1D), interior order.
  std::function<std::vector<double>(const Grid1D&, double t, int comp)> exact_1d;
  /// Exact cell averages at time t (2D), row-major with x fastest.
  std::function<std::vector<double>(const Grid2D&, double t)> exact_2d;
  /// Point values of the exact solution for profile output (1D).
  std::function<void(double x, double t, std::span<double> out)> exact_point_1d;

  int ncomp() const { return equation == Equation::euler ? 3 : 1; }
  bool has_exact() const { return dim == 1 ? bool(exact_1d) : bool(exact_2d); }
};

std::span<const ProblemSpec> problem_registry();

/// Throws std::invalid_argument for unknown ids.
const ProblemSpec& find_problem(std::string_view id);

/// Exact or projected initial field of a 1D problem on n cells.
CellField1D make_initial_field_1d(const ProblemSpec& p, int n, int ghost);
CellField2D make_initial_field_2d(const ProblemSpec& p, int n, int ghost);

}  // namespace rbfeno

#endif  // RBFENO_PROBLEMS_HPP_
