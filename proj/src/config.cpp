#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rbfeno/harness.hpp"

namespace rbfeno {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw ConfigError("config: '" + std::string(key) + "' expects a number, got '" +
                      std::string(v) + "'");
  }
  return out;
}

int to_int(std::string_view key, std::string_view v) {
  int out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw ConfigError("config: '" + std::string(key) + "' expects an integer, got '" +
                      std::string(v) + "'");
  }
  return out;
}

std::vector<std::string_view> split_list(std::string_view v) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = v.find(',');
    out.push_back(trim(v.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    v.remove_prefix(pos + 1);
  }
  return out;
}

void apply(RunConfig& c, std::string_view section, std::string_view key,
           std::string_view v, int line) {
  const std::string full = section.empty()
                               ? std::string(key)
                               : std::string(section) + "." + std::string(key);
  if (full == "problem") {
    c.problem = v;
  } else if (full == "scheme") {
    c.schemes.clear();
    if (v == "all") {
      c.schemes = {Method::eno, Method::rbf_eno, Method::weno_js, Method::rbf_weno};
    } else {
      for (std::string_view s : split_list(v)) c.schemes.push_back(parse_method(s));
    }
  } else if (full == "k") {
    c.k = to_int(full, v);
  } else if (full == "n") {
    c.n = to_int(full, v);
  } else if (full == "n_list") {
    c.n_list.clear();
    for (std::string_view s : split_list(v)) c.n_list.push_back(to_int(full, s));
  } else if (full == "cfl") {
    c.cfl = to_double(full, v);
  } else if (full == "t_final") {
    c.t_final = to_double(full, v);
  } else if (full == "eps_m") {
    c.eps_m = to_double(full, v);
  } else if (full == "eps_weno") {
    c.eps_weno = to_double(full, v);
  } else if (full == "gamma") {
    c.gamma = to_double(full, v);
  } else if (full == "switch") {
    c.switch_mode = parse_switch(v);
  } else if (full == "preset") {
    c.perturbation = parse_preset(v);
  } else if (full == "out") {
    c.out = v;
  } else if (full == "threads") {
    c.threads = to_int(full, v);
  } else if (full == "perturbation.a") {
    c.perturbation.a = to_double(full, v);
  } else if (full == "perturbation.b") {
    c.perturbation.b = to_double(full, v);
  } else if (full == "perturbation.c1") {
    c.perturbation_2d.c1 = to_double(full, v);
  } else if (full == "perturbation.c2") {
    c.perturbation_2d.c2 = to_double(full, v);
  } else if (full == "perturbation.c3") {
    c.perturbation_2d.c3 = to_double(full, v);
  } else {
    throw ConfigError("config line " + std::to_string(line) + ": unknown key '" +
                      full + "'");
  }
}

}  // namespace

SwitchMode parse_switch(std::string_view s) {
  if (s == "on") return SwitchMode::on;
  if (s == "off") return SwitchMode::off;
  if (s == "auto") return SwitchMode::automatic;
  throw ConfigError("switch must be on, off or auto");
}

PerturbationModel parse_preset(std::string_view s) {
  if (s == "mq") return PerturbationModel::mq();
  if (s == "gaussian") return PerturbationModel::gaussian();
  throw ConfigError("preset must be mq or gaussian");
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::string section;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config line " + std::to_string(line_no) + ": bad section");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "perturbation") {
        throw ConfigError("config line " + std::to_string(line_no) +
                          ": unknown section '" + section + "'");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      apply(base, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

void RunConfig::validate() const {
  const ProblemSpec* p = nullptr;
  try {
    p = &find_problem(problem);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (schemes.empty()) throw ConfigError("no scheme selected");
  if (k != 2 && k != 3) throw ConfigError("k must be 2 or 3");
  for (Method m : schemes) {
    if (p->dim == 2) {
      if (m != Method::eno && m != Method::rbf_eno && m != Method::five_cell) {
        throw ConfigError("2D problems support eno, rbf-eno and fv5");
      }
      if (k != 2) throw ConfigError("2D problems support k = 2 only");
    } else if (m == Method::five_cell) {
      throw ConfigError("fv5 is a 2D scheme");
    }
  }
  for (int v : n_list) {
    if (v < 5) throw ConfigError("every N must be at least 5");
  }
  if (n != 0 && n < 5) throw ConfigError("n must be at least 5");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must be in (0, 1]");
  if (t_final && !(*t_final >= 0.0)) throw ConfigError("t_final must be >= 0");
  if (!(eps_m >= 0.0)) throw ConfigError("eps_m must be >= 0");
  if (!(eps_weno > 0.0)) throw ConfigError("eps_weno must be > 0");
  if (!(gamma > 1.0)) throw ConfigError("gamma must exceed 1");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  try {
    perturbation.validate();
    perturbation_2d.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

bool RunConfig::switch_enabled(const ProblemSpec& p) const {
  switch (switch_mode) {
    case SwitchMode::on: return true;
    case SwitchMode::off: return false;
    case SwitchMode::automatic: return !p.smooth || k == 3;
  }
  return true;
}

double RunConfig::final_time(const ProblemSpec& p) const {
  return t_final ? *t_final : p.t_final;
}

}  // namespace rbfeno
