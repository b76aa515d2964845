#include "rbfeno/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rbfeno {

using std::numbers::pi;

double exact_advection(const std::function<double(double)>& u0, double x,
                       double t, double a, double b) {
  const double len = b - a;
  double s = std::fmod(x - t - a, len);
  if (s < 0.0) s += len;
  return u0(a + s);
}

namespace {

// Root of u = g(xi - c u t) for |g| <= 1. The residual is monotone in u while
// the characteristics have not crossed, so bisection on [-1, 1] brackets it.
double solve_characteristic(const std::function<double(double)>& g,
                            const std::function<double(double)>& dg, double xi,
                            double c, double t) {
  auto residual = [&](double u) { return u - g(xi - c * u * t); };
  double lo = -1.0;
  double hi = 1.0;
  double u = g(xi);
  for (int it = 0; it < 200; ++it) {
    const double f = residual(u);
    if (std::abs(f) <= 1e-15) return u;
    if (f < 0.0) lo = u; else hi = u;
    const double df = 1.0 + c * t * dg(xi - c * u * t);
    double next = df > 0.0 ? u - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo < 1e-16 || next == u) return next;
    u = next;
  }
  if (std::abs(residual(u)) > 1e-13) {
    throw std::runtime_error("characteristic solve did not converge");
  }
  return u;
}

}  // namespace

double exact_burgers_presock(double x, double t) {
  return solve_characteristic([](double s) { return -std::sin(pi * s); },
                              [](double s) { return -pi * std::cos(pi * s); }, x,
                              1.0, t);
}

double exact_burgers2d_presock(double x, double y, double t) {
  return solve_characteristic(
      [](double s) { return std::sin(2.0 * pi * s); },
      [](double s) { return 2.0 * pi * std::cos(2.0 * pi * s); }, x + y, 2.0, t);
}

double initial_condition_2d_step(double, double y) { return y <= 0.5 ? 1.0 : -1.0; }

EulerState to_conservative(const PrimitiveState& w, double gamma) {
  return {w.rho, w.rho * w.u, w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}

namespace {

double sound_speed(const PrimitiveState& w, double gamma) {
  return std::sqrt(gamma * w.p / w.rho);
}

// Toro's pressure function for one side and its derivative.
void pressure_function(double p, const PrimitiveState& w, double gamma,
                       double& f, double& df) {
  const double c = sound_speed(w, gamma);
  if (p > w.p) {
    const double a = 2.0 / ((gamma + 1.0) * w.rho);
    const double b = (gamma - 1.0) / (gamma + 1.0) * w.p;
    const double q = std::sqrt(a / (p + b));
    f = (p - w.p) * q;
    df = q * (1.0 - 0.5 * (p - w.p) / (b + p));
  } else {
    const double r = p / w.p;
    f = 2.0 * c / (gamma - 1.0) * (std::pow(r, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
    df = std::pow(r, -(gamma + 1.0) / (2.0 * gamma)) / (w.rho * c);
  }
}

}  // namespace

RiemannSolution::RiemannSolution(PrimitiveState left, PrimitiveState right,
                                 double gamma)
    : left_(left), right_(right), gamma_(gamma) {
  if (!(left.rho > 0 && right.rho > 0 && left.p > 0 && right.p > 0)) {
    throw std::invalid_argument("riemann: states must have positive rho and p");
  }
  const double cl = sound_speed(left, gamma);
  const double cr = sound_speed(right, gamma);
  if (2.0 * (cl + cr) / (gamma - 1.0) <= right.u - left.u) {
    throw std::invalid_argument("riemann: data generate vacuum");
  }
  double p = std::max(1e-8, 0.5 * (left.p + right.p));
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    double fl, dfl, fr, dfr;
    pressure_function(p, left, gamma, fl, dfl);
    pressure_function(p, right, gamma, fr, dfr);
    double next = p - (fl + fr + right.u - left.u) / (dfl + dfr);
    if (next <= 0.0) next = 0.5 * p;
    const double change = std::abs(next - p) / (0.5 * (next + p));
    p = next;
    if (change < 1e-15) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("riemann: pressure iteration failed");
  double fl, dfl, fr, dfr;
  pressure_function(p, left, gamma, fl, dfl);
  pressure_function(p, right, gamma, fr, dfr);
  p_star_ = p;
  u_star_ = 0.5 * (left.u + right.u) + 0.5 * (fr - fl);
  const double g6 = (gamma - 1.0) / (gamma + 1.0);
  auto star_rho = [&](const PrimitiveState& w) {
    const double r = p / w.p;
    return r > 1.0 ? w.rho * (r + g6) / (g6 * r + 1.0) : w.rho * std::pow(r, 1.0 / gamma);
  };
  rho_star_left_ = star_rho(left);
  rho_star_right_ = star_rho(right);
}

std::vector<double> RiemannSolution::wave_speeds() const {
  const double g = gamma_;
  std::vector<double> s;
  const double cl = sound_speed(left_, g);
  const double cr = sound_speed(right_, g);
  if (p_star_ > left_.p) {
    s.push_back(left_.u - cl * std::sqrt((g + 1) / (2 * g) * p_star_ / left_.p + (g - 1) / (2 * g)));
  } else {
    s.push_back(left_.u - cl);
    s.push_back(u_star_ - cl * std::pow(p_star_ / left_.p, (g - 1) / (2 * g)));
  }
  s.push_back(u_star_);
  if (p_star_ > right_.p) {
    s.push_back(right_.u + cr * std::sqrt((g + 1) / (2 * g) * p_star_ / right_.p + (g - 1) / (2 * g)));
  } else {
    s.push_back(u_star_ + cr * std::pow(p_star_ / right_.p, (g - 1) / (2 * g)));
    s.push_back(right_.u + cr);
  }
  std::sort(s.begin(), s.end());
  return s;
}

PrimitiveState RiemannSolution::sample(double xi) const {
  const double g = gamma_;
  const double g1 = (g - 1.0) / (2.0 * g);
  if (xi <= u_star_) {
    const PrimitiveState& w = left_;
    const double c = sound_speed(w, g);
    if (p_star_ > w.p) {
      const double s = w.u - c * std::sqrt((g + 1) / (2 * g) * p_star_ / w.p + g1);
      return xi < s ? w : PrimitiveState{rho_star_left_, u_star_, p_star_};
    }
    if (xi < w.u - c) return w;
    const double tail = u_star_ - c * std::pow(p_star_ / w.p, g1);
    if (xi > tail) return {rho_star_left_, u_star_, p_star_};
    const double base = 2.0 / (g + 1) + (g - 1) / ((g + 1) * c) * (w.u - xi);
    return {w.rho * std::pow(base, 2.0 / (g - 1)),
            2.0 / (g + 1) * (c + 0.5 * (g - 1) * w.u + xi),
            w.p * std::pow(base, 2.0 * g / (g - 1))};
  }
  const PrimitiveState& w = right_;
  const double c = sound_speed(w, g);
  if (p_star_ > w.p) {
    const double s = w.u + c * std::sqrt((g + 1) / (2 * g) * p_star_ / w.p + g1);
    return xi > s ? w : PrimitiveState{rho_star_right_, u_star_, p_star_};
  }
  if (xi > w.u + c) return w;
  const double tail = u_star_ + c * std::pow(p_star_ / w.p, g1);
  if (xi < tail) return {rho_star_right_, u_star_, p_star_};
  const double base = 2.0 / (g + 1) - (g - 1) / ((g + 1) * c) * (w.u - xi);
  return {w.rho * std::pow(base, 2.0 / (g - 1)),
          2.0 / (g + 1) * (-c + 0.5 * (g - 1) * w.u + xi),
          w.p * std::pow(base, 2.0 * g / (g - 1))};
}

const RiemannSolution& sod_solution() {
  static const RiemannSolution sol({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1});
  return sol;
}

namespace {

std::vector<double> averages_1d(const Grid1D& grid,
                                const std::function<double(double)>& f,
                                std::span<const double> breaks) {
  const QuadratureRule rule = gauss_legendre(5);
  std::vector<double> out(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    out[i] = interval_average(f, grid.face(i), grid.face(i + 1), rule, breaks);
  }
  return out;
}

std::vector<double> averages_2d(const Grid2D& grid,
                                const std::function<double(double, double)>& f,
                                std::span<const double> breaks_y = {}) {
  const QuadratureRule rule = gauss_legendre(5);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(grid.x.n) * grid.y.n);
  for (int j = 0; j < grid.y.n; ++j) {
    for (int i = 0; i < grid.x.n; ++i) {
      out.push_back(interval_average(
          [&](double y) {
            return interval_average([&](double x) { return f(x, y); },
                                    grid.x.face(i), grid.x.face(i + 1), rule);
          },
          grid.y.face(j), grid.y.face(j + 1), rule, breaks_y));
    }
  }
  return out;
}

// Average of a +1 / -1 step that drops at x = s over [a, b].
double step_average(double a, double b, double s) {
  const double c = std::clamp(s, a, b);
  return ((c - a) - (b - c)) / (b - a);
}

std::vector<ProblemSpec> build_registry() {
  std::vector<ProblemSpec> reg;

  {
    ProblemSpec p;
    p.id = "advect1d-smooth";
    p.t_final = 0.5;
    p.default_n = 320;
    p.initial_1d = [](double x, std::span<double> out) { out[0] = std::sin(pi * x); };
    p.exact_1d = [](const Grid1D& g, double t, int) {
      std::vector<double> out(g.n);
      for (int i = 0; i < g.n; ++i) {
        out[i] = (std::cos(pi * (g.face(i) - t)) - std::cos(pi * (g.face(i + 1) - t))) /
                 (pi * g.dx);
      }
      return out;
    };
    p.exact_point_1d = [](double x, double t, std::span<double> out) {
      out[0] = std::sin(pi * (x - t));
    };
    reg.push_back(std::move(p));
  }
  {
    ProblemSpec p;
    p.id = "advect1d-step";
    p.t_final = 0.5;
    p.smooth = false;
    p.boundary_x = BoundaryPolicy::inflow_outflow({1.0});
    p.breaks_x = {0.0};
    p.initial_1d = [](double x, std::span<double> out) { out[0] = x < 0.0 ? 1.0 : -1.0; };
    p.exact_1d = [](const Grid1D& g, double t, int) {
      std::vector<double> out(g.n);
      for (int i = 0; i < g.n; ++i) out[i] = step_average(g.face(i), g.face(i + 1), t);
      return out;
    };
    p.exact_point_1d = [](double x, double t, std::span<double> out) {
      out[0] = x < t ? 1.0 : -1.0;
    };
    reg.push_back(std::move(p));
  }
  {
    ProblemSpec p;
    p.id = "burgers1d";
    p.equation = Equation::burgers;
    p.t_final = 0.2;
    p.default_n = 320;
    p.initial_1d = [](double x, std::span<double> out) { out[0] = -std::sin(pi * x); };
    p.exact_1d = [](const Grid1D& g, double t, int) {
      return averages_1d(g, [t](double x) { return exact_burgers_presock(x, t); }, {});
    };
    p.exact_point_1d = [](double x, double t, std::span<double> out) {
      out[0] = exact_burgers_presock(x, t);
    };
    reg.push_back(std::move(p));
  }
  {
    ProblemSpec p;
    p.id = "sod";
    p.equation = Equation::euler;
    p.xa = -0.5;
    p.xb = 0.5;
    p.t_final = 0.2;
    p.default_n = 600;
    p.smooth = false;
    p.boundary_x = BoundaryPolicy::extrapolate();
    p.breaks_x = {0.0};
    p.initial_1d = [](double x, std::span<double> out) {
      const RiemannSolution& s = sod_solution();
      const EulerState u = to_conservative(x < 0.0 ? s.left() : s.right());
      std::copy(u.begin(), u.end(), out.begin());
    };
    p.exact_1d = [](const Grid1D& g, double t, int comp) {
      const RiemannSolution& s = sod_solution();
      std::vector<double> breaks{0.0};
      if (t > 0.0) {
        breaks.clear();
        for (double v : s.wave_speeds()) breaks.push_back(v * t);
      }
      return averages_1d(
          g,
          [&](double x) {
            const PrimitiveState w =
                t > 0.0 ? s.sample(x / t) : (x < 0.0 ? s.left() : s.right());
            return to_conservative(w)[comp];
          },
          breaks);
    };
    p.exact_point_1d = [](double x, double t, std::span<double> out) {
      const RiemannSolution& s = sod_solution();
      const PrimitiveState w =
          t > 0.0 ? s.sample(x / t) : (x < 0.0 ? s.left() : s.right());
      const EulerState u = to_conservative(w);
      std::copy(u.begin(), u.end(), out.begin());
    };
    reg.push_back(std::move(p));
  }
  {
    ProblemSpec p;
    p.id = "advect2d-smooth";
    p.dim = 2;
    p.xa = 0.0;
    p.xb = 1.0;
    p.t_final = 0.5;
    p.default_n = 80;
    p.initial_2d = [](double x, double y) { return std::sin(2.0 * pi * (x + y)); };
    p.exact_2d = [](const Grid2D& g, double t) {
      const double hx = g.x.dx;
      const double hy = g.y.dx;
      const double fx = std::sin(pi * hx) / (pi * hx);
      const double fy = std::sin(pi * hy) / (pi * hy);
      std::vector<double> out;
      out.reserve(static_cast<std::size_t>(g.x.n) * g.y.n);
      for (int j = 0; j < g.y.n; ++j)
        for (int i = 0; i < g.x.n; ++i)
          out.push_back(std::sin(2.0 * pi * (g.x.center(i) + g.y.center(j) - 2.0 * t)) *
                        fx * fy);
      return out;
    };
    reg.push_back(std::move(p));
  }
  {
    ProblemSpec p;
    p.id = "advect2d-step";
    p.dim = 2;
    p.xa = 0.0;
    p.xb = 1.0;
    p.t_final = 0.25;
    p.default_n = 100;
    p.smooth = false;
    p.boundary_y = BoundaryPolicy::dirichlet({1.0}, {1.0});
    p.breaks_y = {0.5};
    p.initial_2d = initial_condition_2d_step;
    p.exact_2d = [](const Grid2D& g, double t) {
      std::vector<double> out;
      out.reserve(static_cast<std::size_t>(g.x.n) * g.y.n);
      for (int j = 0; j < g.y.n; ++j)
        for (int i = 0; i < g.x.n; ++i)
          out.push_back(step_average(g.y.face(j), g.y.face(j + 1), 0.5 + t));
      return out;
    };
    reg.push_back(std::move(p));
  }
  {
    ProblemSpec p;
    p.id = "burgers2d";
    p.dim = 2;
    p.equation = Equation::burgers;
    p.xa = 0.0;
    p.xb = 1.0;
    p.t_final = 0.25 / pi;
    p.default_n = 100;
    p.smooth = false;
    p.initial_2d = [](double x, double y) { return std::sin(2.0 * pi * (x + y)); };
    p.exact_2d = [](const Grid2D& g, double t) {
      return averages_2d(g, [t](double x, double y) {
        return exact_burgers2d_presock(x, y, t);
      });
    };
    reg.push_back(std::move(p));
  }
  return reg;
}

}  // namespace

std::span<const ProblemSpec> problem_registry() {
  static const std::vector<ProblemSpec> reg = build_registry();
  return reg;
}

const ProblemSpec& find_problem(std::string_view id) {
  for (const ProblemSpec& p : problem_registry()) {
    if (p.id == id) return p;
  }
  throw std::invalid_argument("unknown problem '" + std::string(id) + "'");
}

CellField1D make_initial_field_1d(const ProblemSpec& p, int n, int ghost) {
  if (p.dim != 1) throw std::invalid_argument(p.id + " is not a 1D problem");
  const Grid1D grid = build_uniform_grid(p.xa, p.xb, n);
  return project_cell_averages(p.initial_1d, grid, p.ncomp(), ghost, p.boundary_x,
                               5, p.breaks_x);
}

CellField2D make_initial_field_2d(const ProblemSpec& p, int n, int ghost) {
  if (p.dim != 2) throw std::invalid_argument(p.id + " is not a 2D problem");
  const Grid2D grid = build_uniform_grid_2d(p.xa, p.xb, n, p.ya, p.yb, n);
  return project_cell_averages_2d(p.initial_2d, grid, ghost, p.boundary_x,
                                  p.boundary_y, 5, p.breaks_x, p.breaks_y);
}

}  // namespace rbfeno
