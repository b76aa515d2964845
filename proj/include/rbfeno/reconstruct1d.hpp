#ifndef RBFENO_RECONSTRUCT1D_HPP_
#define RBFENO_RECONSTRUCT1D_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rbfeno/mesh.hpp"

namespace rbfeno {

inline constexpr int kMaxOrder = 3;

enum class Method { eno, rbf_eno, weno_js, rbf_weno, five_cell };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);  // throws std::invalid_argument
bool is_perturbed(Method m);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

/// One table entry c_rj = base + eta_slope * eta.
struct CoefficientEntry {
  Rational base;
  Rational eta_slope;
};

/// Exact table entry for order k, shift r in [-1, k-1], column j in [0, k).
const CoefficientEntry& coefficient_entry(int k, int r, int j);

/// Weights on v_{i-r}, ..., v_{i-r+k-1} producing v^-_{i+1/2}.
struct ReconstructionCoefficients {
  int k = 2;
  int r = 0;
  std::array<double, kMaxOrder> c{};

  std::span<const double> values() const { return {c.data(), static_cast<std::size_t>(k)}; }
  double sum() const;
};

ReconstructionCoefficients poly_coeffs(int k, int r);
ReconstructionCoefficients rbf_coeffs(int k, int r, double eta);

/// Generic perturbation (1/2 + a*eta_hat, 1/2 + b*eta_hat) of the centered
/// k = 2 row. Both presets have a == b and collapse onto the MQ table.
struct PerturbationModel {
  double a = 0.25;
  double b = 0.25;

  static PerturbationModel mq() { return {0.25, 0.25}; }
  static PerturbationModel gaussian() { return {0.5, 0.5}; }
  void validate() const;
};

/// k = 2 coefficients under a perturbation model. `eta` is always the
/// MQ-normalized value returned by compute_eta_k2.
ReconstructionCoefficients rbf_coeffs(int k, int r, double eta,
                                      const PerturbationModel& model);

struct ShapeParameterEta {
  double eta = 0.0;
  bool switched = false;
  double eps_m = 0.0;
};

/// eps_M = scale * max(1, sum |v| over the eta window).
double eta_regularizer(std::span<const double> window, double scale);

/// den pushed away from zero by eps_m on its own side.
inline double regularized_denominator(double den, double eps_m) {
  return den < 0.0 ? den - eps_m : den + eps_m;
}

ShapeParameterEta compute_eta_k2(double vm1, double v0, double vp1, double eps_m);
ShapeParameterEta compute_eta_k3(double vm1, double v0, double vp1, double vp2,
                                 double eps_m);

/// True when the quadratic through the three cell averages has an interior
/// extremum on [x_{i-3/2}, x_{i+3/2}].
bool monotone_switch_k2(double vm1, double v0, double vp1);

/// ENO stencil shift r (cells to the left of i) from undivided differences
/// of the cell averages. Ties go to the left.
int select_stencil_eno(Window w, int k);

using OrderArray = std::array<double, kMaxOrder>;

/// Jiang-Shu indicators beta_r for the sub-stencils feeding v^-_{i+1/2}.
OrderArray smoothness_indicators(int k, Window w);

struct WenoParameters {
  double eps = 1e-6;

  /// Linear weights d_r for v^-_{i+1/2}.
  static OrderArray optimal_weights(int k);
};

OrderArray weno_weights(int k, const OrderArray& beta, const OrderArray& d,
                        double eps);

struct ReconstructionScheme {
  Method method = Method::eno;
  int k = 2;
  bool monotone_switch = true;
  double eps_m_scale = 1e-6;
  PerturbationModel perturbation;
  WenoParameters weno;

  void validate() const;
};

struct CellStates {
  double minus = 0.0;  // v^-_{i+1/2}
  double plus = 0.0;   // v^+_{i-1/2}
  bool switched = false;
};

/// Both boundary states of the cell at the center of `w`.
CellStates reconstruct_cell(Window w, const ReconstructionScheme& scheme);

/// Left/right states at every interface of one component. Interface m sits at
/// grid.face(m), m = 0..n, between cells m-1 and m.
struct FaceValues {
  std::vector<double> minus;            // from cell m-1
  std::vector<double> plus;             // from cell m
  std::vector<std::uint8_t> switched;   // per cell -1..n, offset by one
};

FaceValues reconstruct_interface_states(const CellField1D& field, int comp,
                                        const ReconstructionScheme& scheme);

class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(const std::string& what, int cell)
      : std::runtime_error(what), cell_(cell) {}
  int cell() const { return cell_; }

 private:
  int cell_;
};

}  // namespace rbfeno

#endif  // RBFENO_RECONSTRUCT1D_HPP_
