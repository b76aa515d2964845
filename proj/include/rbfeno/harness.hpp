#ifndef RBFENO_HARNESS_HPP_
#define RBFENO_HARNESS_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rbfeno/flux_time.hpp"
#include "rbfeno/problems.hpp"
#include "rbfeno/reconstruct1d.hpp"
#include "rbfeno/reconstruct2d.hpp"

namespace rbfeno {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// `automatic` leaves the switch off for smooth problems at k = 2 and on
// everywhere else. At k = 3 the unswitched eta spikes near smooth extrema.
enum class SwitchMode { automatic, on, off };

struct RunConfig {
  std::string problem = "advect1d-smooth";
  std::vector<Method> schemes{Method::rbf_eno};
  int k = 2;
  std::vector<int> n_list{10, 20, 40, 80, 160, 320};
  int n = 0;  // profile runs; 0 picks the problem default
  double cfl = 0.1;
  std::optional<double> t_final;
  double eps_m = 1e-6;
  double eps_weno = 1e-6;
  double gamma = kGamma;
  SwitchMode switch_mode = SwitchMode::automatic;
  PerturbationModel perturbation;
  Perturbation2D perturbation_2d;
  std::string out;  // empty: stdout
  int threads = 0;  // 0: hardware concurrency

  /// Throws ConfigError.
  void validate() const;
  bool switch_enabled(const ProblemSpec& p) const;
  double final_time(const ProblemSpec& p) const;
};

/// Flat key = value text with optional [section] headers one level deep.
/// Recognized keys are applied over `base`; anything else is rejected.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

SwitchMode parse_switch(std::string_view s);
PerturbationModel parse_preset(std::string_view s);

ReconstructionScheme make_scheme(const RunConfig& cfg, Method m,
                                 const ProblemSpec& p);
Scheme2D make_scheme_2d(const RunConfig& cfg, Method m, const ProblemSpec& p);

struct GridErrors {
  int n = 0;
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  double l1_order = 0.0;  // NaN unless the previous row has n / 2 cells
  double l2_order = 0.0;
  double linf_order = 0.0;
  int steps = 0;
  double seconds = 0.0;
  std::string failure;  // non-empty when the run aborted

  bool failed() const { return !failure.empty(); }
};

struct ErrorReport {
  std::string problem;
  Method method = Method::eno;
  int k = 2;
  std::vector<GridErrors> rows;

  bool any_failed() const;
};

/// Norms of `approx - exact` with cell volume `vol`, using compensated sums.
GridErrors error_norms(std::span<const double> approx, std::span<const double> exact,
                       double vol);

/// Fills the order columns of consecutive doublings.
void compute_orders(ErrorReport& report);

/// One report per scheme; the N runs of a scheme execute concurrently.
std::vector<ErrorReport> run_convergence_study(const RunConfig& cfg);

/// Final-time solution of one run.
struct Solution1D {
  CellField1D field;
  EvolveResult result;
};
struct Solution2D {
  CellField2D field;
  EvolveResult result;
};

Solution1D run_1d(const ProblemSpec& p, const RunConfig& cfg, Method m, int n,
                  const StepObserver& observer = {});
Solution2D run_2d(const ProblemSpec& p, const RunConfig& cfg, Method m, int n,
                  const StepObserver& observer = {});

/// Writes the final-time cell-center profile as CSV to `os`. For Sod the exact
/// profile on 2000 points goes to `exact_os` when given.
void run_profile(const RunConfig& cfg, std::ostream& os,
                 std::ostream* exact_os = nullptr);

/// Interface reconstruction error (max over both sides) of sin(pi x) averages
/// on [-1, 1] with n periodic cells.
double reconstruction_error_1d(const ReconstructionScheme& scheme, int n);

/// Root-mean-square face-midpoint error of sin(2 pi (x + y)) averages on the
/// periodic unit square with n x n cells.
double reconstruction_error_2d(Method m, const FaceOptions& opts, int n);

enum class ReportFormat { csv, summary };

ReportFormat parse_format(std::string_view s);

void emit_report(const std::vector<ErrorReport>& reports, ReportFormat format,
                 std::ostream& os);

/// Timings and step counts; kept apart so the CSV stays byte-stable.
void emit_meta(const std::vector<ErrorReport>& reports, std::ostream& os);

/// RFC 4180 quoting of one CSV field.
std::string csv_field(std::string_view s);

}  // namespace rbfeno

#endif  // RBFENO_HARNESS_HPP_
