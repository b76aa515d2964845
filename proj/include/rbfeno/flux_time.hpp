#ifndef RBFENO_FLUX_TIME_HPP_
#define RBFENO_FLUX_TIME_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rbfeno/mesh.hpp"
#include "rbfeno/reconstruct1d.hpp"
#include "rbfeno/reconstruct2d.hpp"

namespace rbfeno {

inline constexpr double kGamma = 1.4;

enum class Equation { advection, burgers, euler };

std::string_view equation_name(Equation eq);

class PositivityError : public std::runtime_error {
 public:
  PositivityError(const std::string& what, int cell)
      : std::runtime_error(what), cell_(cell) {}
  int cell() const { return cell_; }

 private:
  int cell_;
};

class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, int cell, double time)
      : std::runtime_error(what), cell_(cell), time_(time) {}
  int cell() const { return cell_; }
  double time() const { return time_; }

 private:
  int cell_;
  double time_;
};

using EulerState = std::array<double, 3>;  // (rho, rho u, E)

double euler_pressure(const EulerState& u, double gamma = kGamma);

/// Throws PositivityError tagged with `cell` when rho or P is not positive.
EulerState euler_flux(const EulerState& u, int cell = -1, double gamma = kGamma);

/// |u| + c for one conservative state.
double euler_wave_speed(const EulerState& u, int cell = -1, double gamma = kGamma);

/// Physical flux of one of the supported equations. In 2D the same scalar
/// flux acts along x and y.
struct FluxFunction {
  Equation equation = Equation::advection;
  double gamma = kGamma;

  int ncomp() const { return equation == Equation::euler ? 3 : 1; }
  double scalar(double u) const;
  void flux(std::span<const double> u, std::span<double> out, int cell = -1) const;

  /// Largest characteristic speed over the interior cells.
  double alpha_bound(const CellField1D& field) const;
  double alpha_bound(const CellField2D& field) const;
};

/// 1/2 [f(a) + f(b) - alpha (b - a)].
double lax_friedrichs(double a, double b, const FluxFunction& flux, double alpha);
void lax_friedrichs(std::span<const double> a, std::span<const double> b,
                    const FluxFunction& flux, double alpha, std::span<double> out,
                    int cell = -1);

/// d/dt of every stored value (ghost entries set to zero). Ghosts of `field`
/// are refreshed first. `faces`, when given, receives one FaceValues per
/// component.
void rhs_1d(CellField1D& field, const ReconstructionScheme& scheme,
            const FluxFunction& flux, double alpha, std::span<double> out,
            std::vector<FaceValues>* faces = nullptr);

struct Scheme2D {
  Method method = Method::rbf_eno;
  FaceOptions face;
};

/// `switched`, when given, receives one flag per interior cell (row-major).
void rhs_2d(CellField2D& field, const Scheme2D& scheme, const FluxFunction& flux,
            double alpha, std::span<double> out,
            std::vector<std::uint8_t>* switched = nullptr);

/// Shu-Osher three-stage SSP Runge-Kutta over the whole storage of `u`.
/// `rhs(u, out)` must fill `out` (same length as u.storage()).
template <class Field, class Rhs>
void tvd_rk3_step(Field& u, Rhs&& rhs, double dt) {
  auto s = u.storage();
  const std::vector<double> u0(s.begin(), s.end());
  std::vector<double> l(s.size());
  rhs(u, std::span<double>(l));
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = u0[i] + dt * l[i];
  rhs(u, std::span<double>(l));
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = 0.75 * u0[i] + 0.25 * (s[i] + dt * l[i]);
  }
  rhs(u, std::span<double>(l));
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = u0[i] / 3.0 + 2.0 / 3.0 * (s[i] + dt * l[i]);
  }
}

struct TimeStepControl {
  double cfl = 0.1;
  double t_final = 0.0;
  std::optional<double> dt_cap;

  void validate() const;
};

/// C h / alpha, capped, and shortened so that t + dt lands on t_final.
double cfl_dt(double h, double alpha, const TimeStepControl& control, double t);
double cfl_dt(const CellField1D& field, const FluxFunction& flux,
              const TimeStepControl& control, double t);
double cfl_dt(const CellField2D& field, const FluxFunction& flux,
              const TimeStepControl& control, double t);

/// Snapshot handed to observers after each step. The face data are those of
/// the first stage, i.e. reconstructed from the solution at `t_start`.
struct StepInfo {
  int step = 0;
  double t_start = 0.0;
  double dt = 0.0;
  const std::vector<FaceValues>* faces = nullptr;          // 1D
  const std::vector<std::uint8_t>* switched_2d = nullptr;  // 2D
};

using StepObserver = std::function<void(const StepInfo&)>;

struct EvolveResult {
  int steps = 0;
  double t = 0.0;
};

EvolveResult evolve_1d(CellField1D& field, const ReconstructionScheme& scheme,
                       const FluxFunction& flux, const TimeStepControl& control,
                       const StepObserver& observer = {});

EvolveResult evolve_2d(CellField2D& field, const Scheme2D& scheme,
                       const FluxFunction& flux, const TimeStepControl& control,
                       const StepObserver& observer = {});

}  // namespace rbfeno

#endif  // RBFENO_FLUX_TIME_HPP_
