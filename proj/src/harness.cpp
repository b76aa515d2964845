#include "rbfeno/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <thread>

namespace rbfeno {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Neumaier compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) carry += (sum - t) + v;
    else carry += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

double order_of(double coarse, double fine) {
  if (!(coarse > 0.0) || !(fine > 0.0)) return kNaN;
  return std::log2(coarse / fine);
}

std::string fmt(const char* spec, double v) {
  if (std::isnan(v)) return "--";
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

bool ErrorReport::any_failed() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const GridErrors& r) { return r.failed(); });
}

GridErrors error_norms(std::span<const double> approx, std::span<const double> exact,
                       double vol) {
  if (approx.size() != exact.size()) throw std::invalid_argument("norms: size mismatch");
  CompensatedSum s1, s2;
  double linf = 0.0;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    const double e = std::abs(approx[i] - exact[i]);
    s1.add(e);
    s2.add(e * e);
    linf = std::max(linf, e);
  }
  GridErrors g;
  g.l1 = vol * s1.value();
  g.l2 = std::sqrt(vol * s2.value());
  g.linf = linf;
  return g;
}

void compute_orders(ErrorReport& report) {
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    GridErrors& r = report.rows[i];
    r.l1_order = r.l2_order = r.linf_order = kNaN;
    if (i == 0) continue;
    const GridErrors& p = report.rows[i - 1];
    if (r.n != 2 * p.n || r.failed() || p.failed()) continue;
    r.l1_order = order_of(p.l1, r.l1);
    r.l2_order = order_of(p.l2, r.l2);
    r.linf_order = order_of(p.linf, r.linf);
  }
}

ReconstructionScheme make_scheme(const RunConfig& cfg, Method m, const ProblemSpec& p) {
  ReconstructionScheme s;
  s.method = m;
  s.k = cfg.k;
  s.monotone_switch = cfg.switch_enabled(p);
  s.eps_m_scale = cfg.eps_m;
  s.perturbation = cfg.perturbation;
  s.weno.eps = cfg.eps_weno;
  return s;
}

Scheme2D make_scheme_2d(const RunConfig& cfg, Method m, const ProblemSpec& p) {
  Scheme2D s;
  s.method = m;
  s.face.perturbation = cfg.perturbation_2d;
  s.face.eps_m_scale = cfg.eps_m;
  s.face.monotone_switch = cfg.switch_enabled(p);
  return s;
}

Solution1D run_1d(const ProblemSpec& p, const RunConfig& cfg, Method m, int n,
                  const StepObserver& observer) {
  const ReconstructionScheme scheme = make_scheme(cfg, m, p);
  Solution1D sol{make_initial_field_1d(p, n, ghost_width_for_order(cfg.k)), {}};
  TimeStepControl control;
  control.cfl = cfg.cfl;
  control.t_final = cfg.final_time(p);
  sol.result = evolve_1d(sol.field, scheme, FluxFunction{p.equation, cfg.gamma},
                         control, observer);
  return sol;
}

Solution2D run_2d(const ProblemSpec& p, const RunConfig& cfg, Method m, int n,
                  const StepObserver& observer) {
  const Scheme2D scheme = make_scheme_2d(cfg, m, p);
  Solution2D sol{make_initial_field_2d(p, n, ghost_width_for_order(2)), {}};
  TimeStepControl control;
  control.cfl = cfg.cfl;
  control.t_final = cfg.final_time(p);
  sol.result = evolve_2d(sol.field, scheme, FluxFunction{p.equation, cfg.gamma},
                         control, observer);
  return sol;
}

namespace {

GridErrors run_one(const ProblemSpec& p, const RunConfig& cfg, Method m, int n) {
  const auto start = std::chrono::steady_clock::now();
  GridErrors g;
  try {
    const double t = cfg.final_time(p);
    if (p.dim == 1) {
      Solution1D s = run_1d(p, cfg, m, n);
      const std::vector<double> approx = s.field.interior(0);
      g = error_norms(approx, p.exact_1d(s.field.grid(), t, 0), s.field.grid().dx);
      g.steps = s.result.steps;
    } else {
      Solution2D s = run_2d(p, cfg, m, n);
      const std::vector<double> approx = s.field.interior();
      const Grid2D& grid = s.field.grid();
      g = error_norms(approx, p.exact_2d(grid, t), grid.x.dx * grid.y.dx);
      g.steps = s.result.steps;
    }
  } catch (const std::runtime_error& e) {
    g = GridErrors{};
    g.l1 = g.l2 = g.linf = kNaN;
    g.failure = e.what();
  }
  g.n = n;
  g.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return g;
}

}  // namespace

std::vector<ErrorReport> run_convergence_study(const RunConfig& cfg) {
  cfg.validate();
  const ProblemSpec& p = find_problem(cfg.problem);
  if (!p.has_exact()) throw ConfigError(p.id + " has no exact solution");

  std::vector<ErrorReport> reports;
  struct Task {
    std::size_t report;
    std::size_t row;
  };
  std::vector<Task> tasks;
  for (Method m : cfg.schemes) {
    ErrorReport r;
    r.problem = p.id;
    r.method = m;
    r.k = cfg.k;
    r.rows.resize(cfg.n_list.size());
    for (std::size_t i = 0; i < cfg.n_list.size(); ++i) tasks.push_back({reports.size(), i});
    reports.push_back(std::move(r));
  }
  // Largest grids first so the slowest runs start early.
  std::stable_sort(tasks.begin(), tasks.end(), [&](const Task& a, const Task& b) {
    return cfg.n_list[a.row] > cfg.n_list[b.row];
  });
  unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      const Task& task = tasks[t];
      reports[task.report].rows[task.row] =
          run_one(p, cfg, reports[task.report].method, cfg.n_list[task.row]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();
  for (ErrorReport& r : reports) compute_orders(r);
  return reports;
}

void run_profile(const RunConfig& cfg, std::ostream& os, std::ostream* exact_os) {
  cfg.validate();
  const ProblemSpec& p = find_problem(cfg.problem);
  const int n = cfg.n > 0 ? cfg.n : p.default_n;
  const double t = cfg.final_time(p);
  os << std::setprecision(17);
  if (p.dim == 2) {
    os << "method,x,y,u\n";
    for (Method m : cfg.schemes) {
      const Solution2D s = run_2d(p, cfg, m, n);
      const Grid2D& g = s.field.grid();
      for (int j = 0; j < g.y.n; ++j)
        for (int i = 0; i < g.x.n; ++i)
          os << method_name(m) << ',' << g.x.center(i) << ',' << g.y.center(j) << ','
             << s.field(i, j) << '\n';
    }
    return;
  }
  const bool euler = p.equation == Equation::euler;
  os << (euler ? "method,x,rho,u,p\n" : "method,x,u\n");
  for (Method m : cfg.schemes) {
    const Solution1D s = run_1d(p, cfg, m, n);
    const Grid1D& g = s.field.grid();
    for (int i = 0; i < g.n; ++i) {
      os << method_name(m) << ',' << g.center(i) << ',';
      if (euler) {
        const EulerState u{s.field(0, i), s.field(1, i), s.field(2, i)};
        os << u[0] << ',' << u[1] / u[0] << ',' << euler_pressure(u, cfg.gamma) << '\n';
      } else {
        os << s.field(0, i) << '\n';
      }
    }
  }
  if (exact_os && p.exact_point_1d) {
    *exact_os << std::setprecision(17);
    *exact_os << (euler ? "x,rho,u,p\n" : "x,u\n");
    const int pts = 2000;
    std::vector<double> v(p.ncomp());
    for (int i = 0; i < pts; ++i) {
      const double x = p.xa + (i + 0.5) * (p.xb - p.xa) / pts;
      p.exact_point_1d(x, t, v);
      *exact_os << x << ',';
      if (euler) {
        const EulerState u{v[0], v[1], v[2]};
        *exact_os << u[0] << ',' << u[1] / u[0] << ',' << euler_pressure(u) << '\n';
      } else {
        *exact_os << v[0] << '\n';
      }
    }
  }
}

double reconstruction_error_1d(const ReconstructionScheme& scheme, int n) {
  const Grid1D g = build_uniform_grid(-1.0, 1.0, n);
  CellField1D f = project_cell_averages([](double x) { return std::sin(std::numbers::pi * x); }, g,
                                        ghost_width_for_order(scheme.k),
                                        BoundaryPolicy::periodic());
  const FaceValues fv = reconstruct_interface_states(f, 0, scheme);
  double err = 0.0;
  for (int m = 0; m <= n; ++m) {
    const double exact = std::sin(std::numbers::pi * g.face(m));
    err = std::max({err, std::abs(fv.minus[m] - exact), std::abs(fv.plus[m] - exact)});
  }
  return err;
}

double reconstruction_error_2d(Method m, const FaceOptions& opts, int n) {
  const Grid2D g = build_uniform_grid_2d(0.0, 1.0, n, 0.0, 1.0, n);
  const CellField2D f = project_cell_averages_2d(
      [](double x, double y) { return std::sin(2.0 * std::numbers::pi * (x + y)); }, g, 3,
      BoundaryPolicy::periodic(), BoundaryPolicy::periodic());
  auto v = [](double x, double y) { return std::sin(2.0 * std::numbers::pi * (x + y)); };
  CompensatedSum s;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const CellFaces2D c = reconstruct_cell_2d(cross_at(f, i, j), m, opts, g.x.dx, g.y.dx);
      const double xc = g.x.center(i);
      const double yc = g.y.center(j);
      const double h = 0.5 * g.x.dx;
      for (double e : {c.east - v(xc + h, yc), c.west - v(xc - h, yc),
                       c.north - v(xc, yc + h), c.south - v(xc, yc - h)}) {
        s.add(e * e);
      }
    }
  }
  return std::sqrt(s.value() / (4.0 * n * n));
}

ReportFormat parse_format(std::string_view s) {
  if (s == "csv") return ReportFormat::csv;
  if (s == "summary") return ReportFormat::summary;
  throw ConfigError("format must be csv or summary");
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_report(const std::vector<ErrorReport>& reports, ReportFormat format,
                 std::ostream& os) {
  if (format == ReportFormat::csv) {
    os << "method,k,N,L1,L1_order,L2,L2_order,Linf,Linf_order\n";
    for (const ErrorReport& r : reports) {
      for (const GridErrors& g : r.rows) {
        os << csv_field(method_name(r.method)) << ',' << r.k << ',' << g.n << ','
           << fmt("%.6E", g.l1) << ',' << fmt("%.4f", g.l1_order) << ','
           << fmt("%.6E", g.l2) << ',' << fmt("%.4f", g.l2_order) << ','
           << fmt("%.6E", g.linf) << ',' << fmt("%.4f", g.linf_order) << '\n';
      }
    }
    return;
  }
  for (const ErrorReport& r : reports) {
    os << r.problem << "  " << method_name(r.method) << "  k = " << r.k << '\n';
    os << std::setw(6) << "N" << std::setw(13) << "L1 error" << std::setw(9) << "order"
       << std::setw(13) << "L2 error" << std::setw(9) << "order" << std::setw(13)
       << "Linf error" << std::setw(9) << "order" << '\n';
    for (const GridErrors& g : r.rows) {
      os << std::setw(6) << g.n;
      if (g.failed()) {
        os << "  failed: " << g.failure << '\n';
        continue;
      }
      os << std::setw(13) << fmt("%.2E", g.l1) << std::setw(9) << fmt("%.2f", g.l1_order)
         << std::setw(13) << fmt("%.2E", g.l2) << std::setw(9) << fmt("%.2f", g.l2_order)
         << std::setw(13) << fmt("%.2E", g.linf) << std::setw(9)
         << fmt("%.2f", g.linf_order) << '\n';
    }
    os << '\n';
  }
}

void emit_meta(const std::vector<ErrorReport>& reports, std::ostream& os) {
  os << "method,k,N,steps,seconds,status\n";
  for (const ErrorReport& r : reports) {
    for (const GridErrors& g : r.rows) {
      os << csv_field(method_name(r.method)) << ',' << r.k << ',' << g.n << ','
         << g.steps << ',' << fmt("%.3f", g.seconds) << ','
         << csv_field(g.failed() ? g.failure : "ok") << '\n';
    }
  }
}

}  // namespace rbfeno
