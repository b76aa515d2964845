#include "rbfeno/reconstruct1d.hpp"

#include <cmath>
#include <cstdlib>

namespace rbfeno {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::eno: return "eno";
    case Method::rbf_eno: return "rbf-eno";
    case Method::weno_js: return "weno-js";
    case Method::rbf_weno: return "rbf-weno";
    case Method::five_cell: return "fv5";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::eno, Method::rbf_eno, Method::weno_js,
                   Method::rbf_weno, Method::five_cell}) {
    if (name == method_name(m)) return m;
  }
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

bool is_perturbed(Method m) {
  return m == Method::rbf_eno || m == Method::rbf_weno;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// Rows r = -1 .. k-1; columns j = 0 .. k-1.
constexpr CoefficientEntry kTableK2[3][2] = {
    {{{3, 2}, {-3, 2}}, {{-1, 2}, {1, 2}}},
    {{{1, 2}, {1, 4}}, {{1, 2}, {1, 4}}},
    {{{-1, 2}, {1, 2}}, {{3, 2}, {-3, 2}}},
};

constexpr CoefficientEntry kTableK3[4][3] = {
    {{{11, 6}, {-9, 2}}, {{-7, 6}, {6, 1}}, {{1, 3}, {-3, 2}}},
    {{{1, 3}, {5, 6}}, {{5, 6}, {-2, 3}}, {{-1, 6}, {-1, 6}}},
    {{{-1, 6}, {-1, 6}}, {{5, 6}, {-2, 3}}, {{1, 3}, {5, 6}}},
    {{{1, 3}, {-3, 2}}, {{-7, 6}, {6, 1}}, {{11, 6}, {-9, 2}}},
};

void check_order(int k) {
  if (k != 2 && k != 3) {
    throw std::invalid_argument("order k must be 2 or 3, got " + std::to_string(k));
  }
}

void check_shift(int k, int r) {
  check_order(k);
  if (r < -1 || r > k - 1) {
    throw std::invalid_argument("stencil shift r out of range for k = " +
                                std::to_string(k));
  }
}

double apply(const ReconstructionCoefficients& c, Window w) {
  double s = 0.0;
  for (int j = 0; j < c.k; ++j) s += c.c[j] * w[j - c.r];
  return s;
}

}  // namespace

const CoefficientEntry& coefficient_entry(int k, int r, int j) {
  check_shift(k, r);
  if (j < 0 || j >= k) throw std::invalid_argument("column j out of range");
  return k == 2 ? kTableK2[r + 1][j] : kTableK3[r + 1][j];
}

double ReconstructionCoefficients::sum() const {
  double s = 0.0;
  for (double v : values()) s += v;
  return s;
}

ReconstructionCoefficients poly_coeffs(int k, int r) {
  check_shift(k, r);
  ReconstructionCoefficients out{k, r, {}};
  for (int j = 0; j < k; ++j) out.c[j] = coefficient_entry(k, r, j).base.value();
  return out;
}

ReconstructionCoefficients rbf_coeffs(int k, int r, double eta) {
  check_shift(k, r);
  ReconstructionCoefficients out{k, r, {}};
  for (int j = 0; j < k; ++j) {
    const CoefficientEntry& e = coefficient_entry(k, r, j);
    out.c[j] = e.base.value() + e.eta_slope.value() * eta;
  }
  return out;
}

void PerturbationModel::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || a + b == 0.0) {
    throw std::invalid_argument("perturbation: a + b must be nonzero");
  }
}

ReconstructionCoefficients rbf_coeffs(int k, int r, double eta,
                                      const PerturbationModel& model) {
  if (k != 2 || r != 0) return rbf_coeffs(k, r, eta);
  // eta_MQ = 2 * ratio, the model's own eta_hat = ratio / (a + b).
  const double eta_hat = eta / (2.0 * (model.a + model.b));
  return {2, 0, {0.5 + model.a * eta_hat, 0.5 + model.b * eta_hat, 0.0}};
}

double eta_regularizer(std::span<const double> window, double scale) {
  double local = 0.0;
  for (double v : window) local += std::abs(v);
  return scale * std::max(1.0, local);
}

ShapeParameterEta compute_eta_k2(double vm1, double v0, double vp1, double eps_m) {
  const double num = 2.0 * (-vm1 + 2.0 * v0 - vp1);
  const double den = regularized_denominator(-vm1 + 5.0 * v0 + 2.0 * vp1, eps_m);
  return {num == 0.0 ? 0.0 : num / den, false, eps_m};
}

ShapeParameterEta compute_eta_k3(double vm1, double v0, double vp1, double vp2,
                                 double eps_m) {
  const double num = vm1 - 3.0 * v0 + 3.0 * vp1 - vp2;
  const double den = regularized_denominator(vm1 - 15.0 * v0 + 15.0 * vp1 - vp2, eps_m);
  return {num == 0.0 ? 0.0 : num / den, false, eps_m};
}

bool monotone_switch_k2(double vm1, double v0, double vp1) {
  const double den = -vm1 + 2.0 * v0 - vp1;
  if (den == 0.0) return false;
  const double ratio = (-2.0 * vm1 + 3.0 * v0 - vp1) / den;
  return ratio > 0.0 && ratio < 3.0;
}

int select_stencil_eno(Window w, int k) {
  check_order(k);
  // Undivided differences over [lo, lo + len] of the cell averages.
  auto diff = [&w](int lo, int len) {
    double d = 0.0;
    double binom = 1.0;
    for (int m = 0; m <= len; ++m) {
      const double sign = ((len - m) % 2 == 0) ? 1.0 : -1.0;
      d += sign * binom * w[lo + m];
      binom = binom * (len - m) / (m + 1);
    }
    return d;
  };
  int left = 0;
  for (int len = 1; len < k; ++len) {
    const double dl = std::abs(diff(left - 1, len));
    const double dr = std::abs(diff(left, len));
    if (dl <= dr) --left;
  }
  return -left;
}

OrderArray smoothness_indicators(int k, Window w) {
  check_order(k);
  OrderArray beta{};
  if (k == 2) {
    beta[0] = (w[1] - w[0]) * (w[1] - w[0]);
    beta[1] = (w[0] - w[-1]) * (w[0] - w[-1]);
    return beta;
  }
  auto sq = [](double x) { return x * x; };
  beta[0] = 13.0 / 12.0 * sq(w[0] - 2.0 * w[1] + w[2]) +
            0.25 * sq(3.0 * w[0] - 4.0 * w[1] + w[2]);
  beta[1] = 13.0 / 12.0 * sq(w[-1] - 2.0 * w[0] + w[1]) + 0.25 * sq(w[-1] - w[1]);
  beta[2] = 13.0 / 12.0 * sq(w[-2] - 2.0 * w[-1] + w[0]) +
            0.25 * sq(w[-2] - 4.0 * w[-1] + 3.0 * w[0]);
  return beta;
}

OrderArray WenoParameters::optimal_weights(int k) {
  check_order(k);
  if (k == 2) return {2.0 / 3.0, 1.0 / 3.0, 0.0};
  return {0.3, 0.6, 0.1};
}

OrderArray weno_weights(int k, const OrderArray& beta, const OrderArray& d,
                        double eps) {
  OrderArray alpha{};
  double total = 0.0;
  for (int r = 0; r < k; ++r) {
    alpha[r] = d[r] / ((eps + beta[r]) * (eps + beta[r]));
    total += alpha[r];
  }
  for (int r = 0; r < k; ++r) alpha[r] /= total;
  return alpha;
}

void ReconstructionScheme::validate() const {
  check_order(k);
  if (method == Method::five_cell) {
    throw std::invalid_argument("scheme fv5 is only defined in 2D");
  }
  if (!(eps_m_scale >= 0.0)) throw std::invalid_argument("eps_m must be >= 0");
  if (!(weno.eps > 0.0)) throw std::invalid_argument("eps_weno must be > 0");
  perturbation.validate();
}

namespace {

double window_eta(Window w, int k, double scale) {
  if (k == 2) {
    const std::array<double, 3> v{w[-1], w[0], w[1]};
    return compute_eta_k2(v[0], v[1], v[2], eta_regularizer(v, scale)).eta;
  }
  const std::array<double, 4> v{w[-1], w[0], w[1], w[2]};
  return compute_eta_k3(v[0], v[1], v[2], v[3], eta_regularizer(v, scale)).eta;
}

double eno_side(Window w, int k, int r, bool perturbed, double eta,
                const PerturbationModel& model) {
  return apply(perturbed ? rbf_coeffs(k, r, eta, model) : poly_coeffs(k, r), w);
}

double weno_side(Window w, const ReconstructionScheme& s, bool perturbed,
                 double eta) {
  const OrderArray beta = smoothness_indicators(s.k, w);
  const OrderArray weights =
      weno_weights(s.k, beta, WenoParameters::optimal_weights(s.k), s.weno.eps);
  double v = 0.0;
  for (int r = 0; r < s.k; ++r) {
    v += weights[r] * eno_side(w, s.k, r, perturbed, eta, s.perturbation);
  }
  return v;
}

}  // namespace

CellStates reconstruct_cell(Window w, const ReconstructionScheme& s) {
  const Window wr = w.reflected();
  const bool perturbed = is_perturbed(s.method);
  CellStates out;
  double eta_minus = 0.0;
  double eta_plus = 0.0;
  if (perturbed) {
    out.switched = s.monotone_switch && monotone_switch_k2(w[-1], w[0], w[1]);
    if (!out.switched) {
      eta_minus = window_eta(w, s.k, s.eps_m_scale);
      eta_plus = window_eta(wr, s.k, s.eps_m_scale);
    }
  }
  switch (s.method) {
    case Method::eno:
    case Method::rbf_eno: {
      const int r = select_stencil_eno(w, s.k);
      // The mirrored stencil has r cells on the right.
      out.minus = eno_side(w, s.k, r, perturbed, eta_minus, s.perturbation);
      out.plus = eno_side(wr, s.k, s.k - 1 - r, perturbed, eta_plus, s.perturbation);
      break;
    }
    case Method::weno_js:
    case Method::rbf_weno:
      out.minus = weno_side(w, s, perturbed, eta_minus);
      out.plus = weno_side(wr, s, perturbed, eta_plus);
      break;
    case Method::five_cell:
      throw std::invalid_argument("scheme fv5 is only defined in 2D");
  }
  return out;
}

FaceValues reconstruct_interface_states(const CellField1D& field, int comp,
                                        const ReconstructionScheme& scheme) {
  const int n = field.n();
  if (field.ghost() < ghost_width_for_order(scheme.k)) {
    throw std::invalid_argument("field ghost width too small for scheme");
  }
  FaceValues faces;
  faces.minus.assign(n + 1, 0.0);
  faces.plus.assign(n + 1, 0.0);
  faces.switched.assign(n + 2, 0);
  for (int i = -1; i <= n; ++i) {
    const CellStates s = reconstruct_cell(field.window(comp, i), scheme);
    if (!std::isfinite(s.minus) || !std::isfinite(s.plus)) {
      throw ReconstructionError(
          "non-finite reconstruction in cell " + std::to_string(i), i);
    }
    if (i < n) faces.minus[i + 1] = s.minus;
    if (i >= 0) faces.plus[i] = s.plus;
    faces.switched[i + 1] = s.switched ? 1 : 0;
  }
  return faces;
}

}  // namespace rbfeno
