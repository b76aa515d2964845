#include "rbfeno/flux_time.hpp"

#include <algorithm>
#include <cmath>

namespace rbfeno {

std::string_view equation_name(Equation eq) {
  switch (eq) {
    case Equation::advection: return "advection";
    case Equation::burgers: return "burgers";
    case Equation::euler: return "euler";
  }
  return "?";
}

double euler_pressure(const EulerState& u, double gamma) {
  return (gamma - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
}

namespace {

void check_positive(const EulerState& u, int cell, double gamma) {
  if (!(u[0] > 0.0)) {
    throw PositivityError("nonpositive density " + std::to_string(u[0]) +
                              " in cell " + std::to_string(cell),
                          cell);
  }
  const double p = euler_pressure(u, gamma);
  if (!(p > 0.0)) {
    throw PositivityError("nonpositive pressure " + std::to_string(p) +
                              " in cell " + std::to_string(cell),
                          cell);
  }
}

}  // namespace

EulerState euler_flux(const EulerState& u, int cell, double gamma) {
  check_positive(u, cell, gamma);
  const double vel = u[1] / u[0];
  const double p = euler_pressure(u, gamma);
  return {u[1], u[1] * vel + p, (u[2] + p) * vel};
}

double euler_wave_speed(const EulerState& u, int cell, double gamma) {
  check_positive(u, cell, gamma);
  return std::abs(u[1] / u[0]) + std::sqrt(gamma * euler_pressure(u, gamma) / u[0]);
}

double FluxFunction::scalar(double u) const {
  switch (equation) {
    case Equation::advection: return u;
    case Equation::burgers: return 0.5 * u * u;
    case Equation::euler: break;
  }
  throw std::logic_error("scalar flux requested for a system");
}

void FluxFunction::flux(std::span<const double> u, std::span<double> out,
                        int cell) const {
  if (equation != Equation::euler) {
    out[0] = scalar(u[0]);
    return;
  }
  const EulerState f = euler_flux({u[0], u[1], u[2]}, cell, gamma);
  std::copy(f.begin(), f.end(), out.begin());
}

double FluxFunction::alpha_bound(const CellField1D& field) const {
  double a = 0.0;
  for (int i = 0; i < field.n(); ++i) {
    switch (equation) {
      case Equation::advection: return 1.0;
      case Equation::burgers: a = std::max(a, std::abs(field(0, i))); break;
      case Equation::euler:
        a = std::max(a, euler_wave_speed({field(0, i), field(1, i), field(2, i)},
                                         i, gamma));
        break;
    }
  }
  return a;
}

double FluxFunction::alpha_bound(const CellField2D& field) const {
  if (equation == Equation::euler) {
    throw std::invalid_argument("2D supports scalar equations only");
  }
  if (equation == Equation::advection) return 1.0;
  double a = 0.0;
  for (int j = 0; j < field.ny(); ++j)
    for (int i = 0; i < field.nx(); ++i) a = std::max(a, std::abs(field(i, j)));
  return a;
}

double lax_friedrichs(double a, double b, const FluxFunction& flux, double alpha) {
  return 0.5 * (flux.scalar(a) + flux.scalar(b) - alpha * (b - a));
}

void lax_friedrichs(std::span<const double> a, std::span<const double> b,
                    const FluxFunction& flux, double alpha, std::span<double> out,
                    int cell) {
  std::array<double, 3> fa{};
  std::array<double, 3> fb{};
  const int m = flux.ncomp();
  flux.flux(a, std::span<double>(fa.data(), m), cell);
  flux.flux(b, std::span<double>(fb.data(), m), cell);
  for (int c = 0; c < m; ++c) out[c] = 0.5 * (fa[c] + fb[c] - alpha * (b[c] - a[c]));
}

void rhs_1d(CellField1D& field, const ReconstructionScheme& scheme,
            const FluxFunction& flux, double alpha, std::span<double> out,
            std::vector<FaceValues>* faces) {
  const int m = field.ncomp();
  if (m != flux.ncomp()) throw std::invalid_argument("rhs: component mismatch");
  fill_ghosts(field);
  std::vector<FaceValues> fv;
  fv.reserve(m);
  for (int c = 0; c < m; ++c) fv.push_back(reconstruct_interface_states(field, c, scheme));

  const int n = field.n();
  const double dx = field.grid().dx;
  std::vector<double> h(static_cast<std::size_t>(m) * (n + 1));
  std::array<double, 3> a{};
  std::array<double, 3> b{};
  std::array<double, 3> hf{};
  for (int f = 0; f <= n; ++f) {
    for (int c = 0; c < m; ++c) {
      a[c] = fv[c].minus[f];
      b[c] = fv[c].plus[f];
    }
    // Interface f sits at the left edge of cell f.
    lax_friedrichs(std::span<const double>(a.data(), m),
                   std::span<const double>(b.data(), m), flux, alpha,
                   std::span<double>(hf.data(), m), f);
    for (int c = 0; c < m; ++c) h[static_cast<std::size_t>(c) * (n + 1) + f] = hf[c];
  }
  std::fill(out.begin(), out.end(), 0.0);
  const int stride = field.stride();
  const int g = field.ghost();
  for (int c = 0; c < m; ++c) {
    const double* hc = &h[static_cast<std::size_t>(c) * (n + 1)];
    for (int i = 0; i < n; ++i) {
      const double r = -(hc[i + 1] - hc[i]) / dx;
      if (!std::isfinite(r)) {
        throw BlowUpError("non-finite right-hand side in cell " + std::to_string(i),
                          i, 0.0);
      }
      out[static_cast<std::size_t>(c) * stride + g + i] = r;
    }
  }
  if (faces) *faces = std::move(fv);
}

void rhs_2d(CellField2D& field, const Scheme2D& scheme, const FluxFunction& flux,
            double alpha, std::span<double> out,
            std::vector<std::uint8_t>* switched) {
  fill_ghosts(field);
  const int nx = field.nx();
  const int ny = field.ny();
  const double dx = field.grid().x.dx;
  const double dy = field.grid().y.dx;
  const int w = nx + 2;
  // Face values for cells -1..n along each axis; corners are never used.
  std::vector<CellFaces2D> cf(static_cast<std::size_t>(w) * (ny + 2));
  auto at = [&](int i, int j) -> CellFaces2D& {
    return cf[static_cast<std::size_t>(j + 1) * w + (i + 1)];
  };
  for (int j = -1; j <= ny; ++j) {
    for (int i = -1; i <= nx; ++i) {
      const bool inside_x = i >= 0 && i < nx;
      const bool inside_y = j >= 0 && j < ny;
      if (!inside_x && !inside_y) continue;
      at(i, j) = reconstruct_cell_2d(cross_at(field, i, j), scheme.method,
                                     scheme.face, dx, dy);
    }
  }
  std::fill(out.begin(), out.end(), 0.0);
  if (switched) switched->assign(static_cast<std::size_t>(nx) * ny, 0);
  const int g = field.ghost();
  const std::ptrdiff_t rs = field.row_stride();
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const CellFaces2D& c = at(i, j);
      const double hx_r = lax_friedrichs(c.east, at(i + 1, j).west, flux, alpha);
      const double hx_l = lax_friedrichs(at(i - 1, j).east, c.west, flux, alpha);
      const double hy_t = lax_friedrichs(c.north, at(i, j + 1).south, flux, alpha);
      const double hy_b = lax_friedrichs(at(i, j - 1).north, c.south, flux, alpha);
      const double r = -(hx_r - hx_l) / dx - (hy_t - hy_b) / dy;
      if (!std::isfinite(r)) {
        throw BlowUpError("non-finite right-hand side in cell (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")",
                          j * nx + i, 0.0);
      }
      out[static_cast<std::size_t>(j + g) * rs + (i + g)] = r;
      if (switched) (*switched)[static_cast<std::size_t>(j) * nx + i] = c.switched;
    }
  }
}

void TimeStepControl::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must be in (0, 1]");
  if (!(t_final >= 0.0)) throw std::invalid_argument("t_final must be >= 0");
  if (dt_cap && !(*dt_cap > 0.0)) throw std::invalid_argument("dt_cap must be > 0");
}

double cfl_dt(double h, double alpha, const TimeStepControl& control, double t) {
  double dt;
  if (alpha > 0.0) {
    dt = control.cfl * h / alpha;
    if (control.dt_cap) dt = std::min(dt, *control.dt_cap);
  } else if (control.dt_cap) {
    dt = *control.dt_cap;
  } else {
    // Nothing moves; a single step to the end is exact.
    dt = control.t_final - t;
  }
  const double remaining = control.t_final - t;
  if (dt >= remaining - 1e-12 * std::max(1.0, std::abs(control.t_final))) {
    dt = remaining;
  }
  return dt;
}

double cfl_dt(const CellField1D& field, const FluxFunction& flux,
              const TimeStepControl& control, double t) {
  return cfl_dt(field.grid().dx, flux.alpha_bound(field), control, t);
}

double cfl_dt(const CellField2D& field, const FluxFunction& flux,
              const TimeStepControl& control, double t) {
  return cfl_dt(std::min(field.grid().x.dx, field.grid().y.dx),
                flux.alpha_bound(field), control, t);
}

namespace {

void check_finite_1d(const CellField1D& field, double t) {
  for (int c = 0; c < field.ncomp(); ++c)
    for (int i = 0; i < field.n(); ++i)
      if (!std::isfinite(field(c, i))) {
        throw BlowUpError("non-finite value in cell " + std::to_string(i) +
                              " at t = " + std::to_string(t),
                          i, t);
      }
}

}  // namespace

EvolveResult evolve_1d(CellField1D& field, const ReconstructionScheme& scheme,
                       const FluxFunction& flux, const TimeStepControl& control,
                       const StepObserver& observer) {
  scheme.validate();
  control.validate();
  EvolveResult res;
  std::vector<FaceValues> faces;
  while (res.t < control.t_final) {
    const double alpha = flux.alpha_bound(field);
    const double dt = cfl_dt(field.grid().dx, alpha, control, res.t);
    bool first = true;
    try {
      tvd_rk3_step(
          field,
          [&](CellField1D& u, std::span<double> out) {
            rhs_1d(u, scheme, flux, alpha, out, first ? &faces : nullptr);
            first = false;
          },
          dt);
    } catch (const BlowUpError& e) {
      throw BlowUpError(std::string(e.what()) + " at t = " + std::to_string(res.t),
                        e.cell(), res.t);
    }
    check_finite_1d(field, res.t + dt);
    if (flux.equation == Equation::euler) {
      for (int i = 0; i < field.n(); ++i) {
        euler_wave_speed({field(0, i), field(1, i), field(2, i)}, i, flux.gamma);
      }
    }
    if (observer) observer({res.steps, res.t, dt, &faces, nullptr});
    res.t += dt;
    ++res.steps;
  }
  fill_ghosts(field);
  return res;
}

EvolveResult evolve_2d(CellField2D& field, const Scheme2D& scheme,
                       const FluxFunction& flux, const TimeStepControl& control,
                       const StepObserver& observer) {
  control.validate();
  scheme.face.perturbation.validate();
  EvolveResult res;
  std::vector<std::uint8_t> switched;
  const double h = std::min(field.grid().x.dx, field.grid().y.dx);
  while (res.t < control.t_final) {
    const double alpha = flux.alpha_bound(field);
    const double dt = cfl_dt(h, alpha, control, res.t);
    bool first = true;
    tvd_rk3_step(
        field,
        [&](CellField2D& u, std::span<double> out) {
          rhs_2d(u, scheme, flux, alpha, out, first ? &switched : nullptr);
          first = false;
        },
        dt);
    for (int j = 0; j < field.ny(); ++j)
      for (int i = 0; i < field.nx(); ++i)
        if (!std::isfinite(field(i, j))) {
          throw BlowUpError("non-finite value at t = " + std::to_string(res.t + dt),
                            j * field.nx() + i, res.t + dt);
        }
    if (observer) observer({res.steps, res.t, dt, nullptr, &switched});
    res.t += dt;
    ++res.steps;
  }
  fill_ghosts(field);
  return res;
}

}  // namespace rbfeno
