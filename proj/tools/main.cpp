#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "rbfeno/harness.hpp"
#include "rbfeno/verify.hpp"

using namespace rbfeno;

namespace {

struct CliOptions {
  std::string config;
  std::string problem;
  std::string scheme;
  std::optional<int> k;
  std::optional<int> n;
  std::string n_list;
  std::optional<double> cfl;
  std::optional<double> t_final;
  std::string switch_mode;
  std::string preset;
  std::string out;
  std::string format = "csv";
  std::string meta;
  std::string exact_out;
  std::optional<int> threads;
};

void add_run_options(CLI::App* app, CliOptions& o) {
  app->add_option("--config", o.config, "key = value config file");
  app->add_option("--problem", o.problem, "problem id");
  app->add_option("--scheme", o.scheme, "eno, rbf-eno, weno-js, rbf-weno, fv5; comma list or 'all'");
  app->add_option("--k", o.k, "order k (2 or 3)");
  app->add_option("--n", o.n, "cells per axis for profile runs");
  app->add_option("--n-list", o.n_list, "comma separated grid sizes");
  app->add_option("--cfl", o.cfl, "CFL number");
  app->add_option("--t-final", o.t_final, "final time");
  app->add_option("--switch", o.switch_mode, "monotone switch")->check(CLI::IsMember({"on", "off", "auto"}));
  app->add_option("--preset", o.preset, "perturbation preset")->check(CLI::IsMember({"mq", "gaussian"}));
  app->add_option("--out", o.out, "output file (default stdout)");
  app->add_option("--threads", o.threads, "worker threads (0 = all cores)");
}

// Command-line values override the config file.
RunConfig build_config(const CliOptions& o) {
  RunConfig cfg;
  if (!o.config.empty()) cfg = load_config(o.config, cfg);
  std::ostringstream kv;
  if (!o.problem.empty()) kv << "problem = " << o.problem << '\n';
  if (!o.scheme.empty()) kv << "scheme = " << o.scheme << '\n';
  if (o.k) kv << "k = " << *o.k << '\n';
  if (o.n) kv << "n = " << *o.n << '\n';
  if (!o.n_list.empty()) kv << "n_list = " << o.n_list << '\n';
  if (!o.switch_mode.empty()) kv << "switch = " << o.switch_mode << '\n';
  if (!o.preset.empty()) kv << "preset = " << o.preset << '\n';
  if (o.threads) kv << "threads = " << *o.threads << '\n';
  cfg = parse_config(kv.str(), cfg);
  if (o.cfl) cfg.cfl = *o.cfl;
  if (o.t_final) cfg.t_final = *o.t_final;
  if (!o.out.empty()) cfg.out = o.out;
  cfg.validate();
  return cfg;
}

template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  fn(f);
  if (!f) throw std::runtime_error("write failed for " + path);
}

int cmd_coeffs() {
  std::cout << "k,r,j,base,eta_slope\n";
  for (int k : {2, 3}) {
    for (int r = -1; r < k; ++r) {
      for (int j = 0; j < k; ++j) {
        const CoefficientEntry& e = coefficient_entry(k, r, j);
        std::cout << k << ',' << r << ',' << j << ',' << e.base.str() << ','
                  << e.eta_slope.str() << '\n';
      }
    }
  }
  return 0;
}

int cmd_selftest() {
  int failed = 0;
  for (const PropertyResult& r : run_property_suites()) {
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << ": " << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-volume ENO/WENO solver with perturbed-polynomial reconstructions"};
  app.require_subcommand(1);
  CliOptions opts;

  CLI::App* converge = app.add_subcommand("converge", "grid refinement study");
  add_run_options(converge, opts);
  converge->add_option("--format", opts.format, "report format")->check(CLI::IsMember({"csv", "summary"}));
  converge->add_option("--meta", opts.meta, "timings file");

  CLI::App* profile = app.add_subcommand("profile", "final-time solution profile");
  add_run_options(profile, opts);
  profile->add_option("--exact-out", opts.exact_out, "exact profile on 2000 points (1D)");

  CLI::App* coeffs = app.add_subcommand("coeffs", "reconstruction tables as exact rationals");
  CLI::App* selftest = app.add_subcommand("selftest", "run the property suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*coeffs) return cmd_coeffs();
    if (*selftest) return cmd_selftest();
    const RunConfig cfg = build_config(opts);
    if (*converge) {
      const std::vector<ErrorReport> reports = run_convergence_study(cfg);
      with_output(cfg.out, [&](std::ostream& os) {
        emit_report(reports, parse_format(opts.format), os);
      });
      if (!opts.meta.empty()) {
        with_output(opts.meta, [&](std::ostream& os) { emit_meta(reports, os); });
      }
      for (const ErrorReport& r : reports) {
        for (const GridErrors& g : r.rows) {
          if (g.failed()) {
            std::cerr << method_name(r.method) << " N=" << g.n << ": " << g.failure << '\n';
          }
        }
        if (r.any_failed()) return 2;
      }
      return 0;
    }
    if (*profile) {
      std::ofstream exact;
      if (!opts.exact_out.empty()) {
        exact.open(opts.exact_out);
        if (!exact) throw std::runtime_error("cannot open " + opts.exact_out);
      }
      with_output(cfg.out, [&](std::ostream& os) {
        run_profile(cfg, os, opts.exact_out.empty() ? nullptr : &exact);
      });
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const BlowUpError& e) {
    std::cerr << "blow-up: " << e.what() << '\n';
    return 2;
  } catch (const PositivityError& e) {
    std::cerr << "positivity failure: " << e.what() << '\n';
    return 2;
  } catch (const ReconstructionError& e) {
    std::cerr << "blow-up: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
