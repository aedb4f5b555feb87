#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "rankone/errors.hpp"
#include "rankone/spherical.hpp"
#include "rankone/tree_radial.hpp"
#include "verify_suite.hpp"

namespace rankone::cli {

namespace {

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;
using groups::SpectralParameter;
using groups::StripPosition;

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string fmt(const tree::Rational& v) {
  if (v.denominator() == 1) return std::to_string(v.numerator());
  return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid number for " + what + ": '" + text + "'");
  }
}

// Evaluates fn(i) for i in [0, count) on a bounded pool; results keep index order.
template <class R>
std::vector<R> parallel_map(std::size_t count, int jobs, const std::function<R(std::size_t)>& fn) {
  std::vector<R> results(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
  };
  const int n = std::min<int>(worker_count(jobs), static_cast<int>(std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

Format effective_format(const RunConfig& c) {
  if (c.format) return *c.format;
  return c.command == Command::Verify ? Format::Json : Format::Csv;
}

struct NormRow {
  double sigma = 0.0;
  double t = 0.0;
  std::optional<double> norm;
  std::string status;
  std::string error;
};

struct EvalRow {
  double sigma = 0.0;
  double t = 0.0;
  std::optional<double> r;
  std::string method;
  cplx value;
  std::string error;
  int exit_code = kExitOk;
};

std::vector<std::string> default_methods(const groups::RankOneGroup& g) {
  std::vector<std::string> m{"auto", "hypergeometric_stable", "hypergeometric_direct"};
  if (g.family == groups::Family::SO0) m.push_back("integral_quadrature");
  m.push_back("asymptotic");
  if (g.family == groups::Family::SO0) m.push_back("cb_norm");
  return m;
}

std::optional<spherical::Method> method_from_name(const std::string& name) {
  for (auto m : {spherical::Method::HypergeometricStable, spherical::Method::HypergeometricDirect,
                 spherical::Method::IntegralQuadrature, spherical::Method::Asymptotic}) {
    if (spherical::to_string(m) == name) return m;
  }
  return std::nullopt;
}

}  // namespace

GridRange GridRange::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("range must be lo:hi:steps (got '" + text + "')");
  GridRange g;
  g.lo = parse_double(parts[0], "range");
  g.hi = parse_double(parts[1], "range");
  const double steps = parse_double(parts[2], "range steps");
  if (steps != std::floor(steps) || steps < 1 || steps > 1e6) {
    throw ConfigError("range steps must be an integer >= 1 (got '" + parts[2] + "')");
  }
  g.steps = static_cast<int>(steps);
  return g;
}

std::vector<double> GridRange::values() const {
  if (steps == 1) return {lo};
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) {
    out.push_back(i == steps - 1 ? hi : lo + (hi - lo) * i / (steps - 1));
  }
  return out;
}

std::string GridRange::to_string() const {
  return fmt(lo) + ":" + fmt(hi) + ":" + std::to_string(steps);
}

void RunConfig::validate() const {
  for (const GridRange* g : {&sigma, &t}) {
    if (g->steps < 1) throw ConfigError("range steps must be at least 1");
    if (!std::isfinite(g->lo) || !std::isfinite(g->hi)) throw ConfigError("ranges must be finite");
  }
  for (double v : r) {
    if (!std::isfinite(v)) throw ConfigError("r values must be finite");
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ConfigError("--tol must be positive");
  if (radius < 0) throw ConfigError("--radius must be nonnegative");
  if (jobs < 0) throw ConfigError("--jobs must be nonnegative");
  if (!std::isfinite(perturb_gamma)) throw ConfigError("perturbation must be finite");
  try {
    groups::params_for(family, family == groups::Family::F4 ? 1 : n);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

Command parse_command(const std::string& name) {
  if (name == "norm-table") return Command::NormTable;
  if (name == "eval") return Command::Eval;
  if (name == "verify") return Command::Verify;
  if (name == "tree") return Command::Tree;
  throw ConfigError("unknown command '" + name + "'");
}

std::string to_string(Command command) {
  switch (command) {
    case Command::NormTable: return "norm-table";
    case Command::Eval: return "eval";
    case Command::Verify: return "verify";
    case Command::Tree: return "tree";
  }
  return "?";
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw ConfigError("format must be csv or json (got '" + name + "')");
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_double(item, "list"));
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

bool apply_config_file(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  bool command_set = false;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "command") {
        c.command = parse_command(v.get<std::string>());
        command_set = true;
      } else if (key == "family") {
        c.family = groups::parse_family(v.get<std::string>());
      } else if (key == "n") {
        c.n = v.get<int>();
      } else if (key == "sigma_range") {
        c.sigma = GridRange::parse(v.get<std::string>());
      } else if (key == "t_range") {
        c.t = GridRange::parse(v.get<std::string>());
      } else if (key == "r") {
        c.r = v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{v.get<double>()};
      } else if (key == "tol") {
        c.tol = v.get<double>();
      } else if (key == "out") {
        c.out = v.get<std::string>();
      } else if (key == "format") {
        c.format = parse_format(v.get<std::string>());
      } else if (key == "free_product") {
        c.free_product = v.get<std::string>();
      } else if (key == "radius") {
        c.radius = v.get<int>();
      } else if (key == "checks") {
        c.checks = v.get<std::vector<std::string>>();
      } else if (key == "methods") {
        c.methods = v.get<std::vector<std::string>>();
      } else if (key == "jobs") {
        c.jobs = v.get<int>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config file has a value of the wrong type: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return command_set;
}

std::optional<RunConfig> parse_arguments(int argc, const char* const* argv) {
  CLI::App app{"Spherical functions, multiplier norms and tree combinatorics for rank-one groups"};
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string config_path, family, sigma_range, t_range, r_list, out, format, free_product,
      checks, methods;
  int n = 0, radius = 0, jobs = 0;
  double tol = 0.0, perturb = 0.0;

  app.add_option("--config", config_path, "JSON file with default settings");
  app.add_option("--family", family, "SO0, SU, Sp or F4");
  app.add_option("--n", n, "Group index n in G(1,n)");
  app.add_option("--sigma-range", sigma_range, "Real parts lo:hi:steps");
  app.add_option("--t-range", t_range, "Imaginary parts lo:hi:steps");
  app.add_option("--r", r_list, "Comma-separated radii");
  app.add_option("--tol", tol, "Quadrature tolerance");
  app.add_option("--out", out, "Output file (default: standard output)");
  app.add_option("--format", format, "csv or json");
  app.add_option("--free-product", free_product, "M,N for the tree command");
  app.add_option("--radius", radius, "Ball radius for the tree command");
  app.add_option("--checks", checks, "Comma-separated check ids for verify");
  app.add_option("--methods", methods, "Comma-separated evaluation methods for eval");
  app.add_option("--jobs", jobs, "Worker threads (0: automatic)");
  app.add_option("--perturb-gamma", perturb)->group("");

  auto* norm_table = app.add_subcommand("norm-table", "Tabulate cb-norms on an s-grid (SO0 only)");
  auto* eval = app.add_subcommand("eval", "Evaluate phi_s(a_r) by every method");
  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  auto* tree_cmd = app.add_subcommand("tree", "Sphere sizes, convolutions and |B_z| on a tree");
  for (auto* sub : {norm_table, eval, verify, tree_cmd}) sub->fallthrough();
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  RunConfig c;
  bool have_command = false;
  if (!config_path.empty()) have_command = apply_config_file(config_path, c);
  if (norm_table->parsed()) c.command = Command::NormTable;
  if (eval->parsed()) c.command = Command::Eval;
  if (verify->parsed()) c.command = Command::Verify;
  if (tree_cmd->parsed()) c.command = Command::Tree;
  have_command = have_command || !app.get_subcommands().empty();
  if (!have_command) throw ConfigError("a subcommand is required");

  const auto given = [&](const char* name) { return app.count(name) > 0; };
  try {
    if (given("--family")) c.family = groups::parse_family(family);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (given("--n")) c.n = n;
  if (given("--sigma-range")) c.sigma = GridRange::parse(sigma_range);
  if (given("--t-range")) c.t = GridRange::parse(t_range);
  if (given("--r")) c.r = parse_list(r_list);
  if (given("--tol")) c.tol = tol;
  if (given("--out")) c.out = out;
  if (given("--format")) c.format = parse_format(format);
  if (given("--free-product")) c.free_product = free_product;
  if (given("--radius")) c.radius = radius;
  if (given("--checks")) c.checks = split(checks, ',');
  if (given("--methods")) c.methods = split(methods, ',');
  if (given("--jobs")) c.jobs = jobs;
  if (given("--perturb-gamma")) c.perturb_gamma = perturb;
  c.validate();
  return c;
}

int cmd_norm_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.family != groups::Family::SO0) {
    throw ConfigError("norm-table is only available for the SO0 family");
  }
  const int m = groups::params_for(c.family, c.n).m;
  const auto sigmas = c.sigma.values();
  const auto ts = c.t.values();
  const std::size_t count = sigmas.size() * ts.size();
  const auto rows = parallel_map<NormRow>(count, c.jobs, [&](std::size_t i) {
    NormRow row;
    row.sigma = sigmas[i / ts.size()];
    row.t = ts[i % ts.size()];
    const SpectralParameter s{row.sigma, row.t};
    switch (groups::classify(s, m)) {
      case StripPosition::Interior:
        row.status = "INTERIOR";
        try {
          row.norm = spherical::cb_norm_lorentz(m, s);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        break;
      case StripPosition::BoundaryConstant:
        row.status = "BOUNDARY_CONSTANT";
        row.norm = 1.0;
        break;
      default:
        row.status = "NOT_MULTIPLIER";
    }
    return row;
  });

  int code = kExitOk;
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      err << "sigma=" << fmt(row.sigma) << " t=" << fmt(row.t) << ": " << row.error << "\n";
      code = kExitFailure;
    }
  }
  if (effective_format(c) == Format::Csv) {
    out << "sigma,t,norm,status\n";
    for (const auto& row : rows) {
      out << fmt(row.sigma) << "," << fmt(row.t) << "," << (row.norm ? fmt(*row.norm) : "")
          << "," << row.status << "\n";
    }
  } else {
    json arr = json::array();
    for (const auto& row : rows) {
      json j{{"sigma", row.sigma}, {"t", row.t}};
      j["norm"] = row.norm ? json(*row.norm) : json(nullptr);
      j["status"] = row.status;
      arr.push_back(j);
    }
    out << std::setprecision(17) << arr.dump(2) << "\n";
  }
  return code;
}

int cmd_eval(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto group = groups::params_for(c.family, c.family == groups::Family::F4 ? 1 : c.n);
  const auto methods = c.methods.empty() ? default_methods(group) : c.methods;
  for (const auto& name : methods) {
    if (name != "auto" && name != "cb_norm" && !method_from_name(name)) {
      throw ConfigError("unknown method '" + name + "'");
    }
    if (name == "cb_norm" && group.family != groups::Family::SO0) {
      throw ConfigError("cb_norm is only available for the SO0 family");
    }
  }
  const bool explicit_methods = !c.methods.empty();
  specfun::QuadratureSpec spec = spherical::default_spec();
  spec.relative_tolerance = c.tol;

  struct Task {
    double sigma, t;
    std::optional<double> r;
    std::string method;
  };
  std::vector<Task> tasks;
  for (double sigma : c.sigma.values()) {
    for (double t : c.t.values()) {
      for (const auto& name : methods) {
        if (name == "cb_norm") {
          tasks.push_back({sigma, t, std::nullopt, name});
          continue;
        }
        for (double r : c.r) tasks.push_back({sigma, t, r, name});
      }
    }
  }

  const auto rows = parallel_map<EvalRow>(tasks.size(), c.jobs, [&](std::size_t i) {
    const Task& task = tasks[i];
    EvalRow row{task.sigma, task.t, task.r, task.method, {}, {}, kExitOk};
    const SpectralParameter s{task.sigma, task.t};
    try {
      if (task.method == "cb_norm") {
        const auto pos = groups::classify(s, group.m);
        if (pos == StripPosition::Interior) {
          row.value = spherical::cb_norm_lorentz(group.m, s);
        } else if (pos == StripPosition::BoundaryConstant) {
          row.value = 1.0;
        } else {
          row.error = "NOT_MULTIPLIER";
        }
      } else if (task.method == "auto") {
        const auto v = spherical::phi(group, s, *task.r);
        row.value = v.value;
        row.method = "auto(" + spherical::to_string(v.method) + ")";
      } else {
        const auto m = *method_from_name(task.method);
        const bool applicable =
            (m != spherical::Method::Asymptotic || s.sigma != 0.0) &&
            (m != spherical::Method::IntegralQuadrature ||
             std::abs(s.sigma) <= 0.5 * group.m);
        if (!applicable && !explicit_methods) {
          row.error = "not applicable";
        } else {
          row.value = spherical::phi_with(group, s, *task.r, m, spec);
        }
      }
    } catch (const DomainError& e) {
      row.error = e.what();
      row.exit_code = kExitUsage;
    } catch (const PoleError& e) {
      row.error = e.what();
      row.exit_code = kExitUsage;
    } catch (const std::exception& e) {
      row.error = e.what();
      row.exit_code = kExitFailure;
    }
    return row;
  });

  err << groups::describe(group) << " m=" << group.m << " m0=" << group.m0
      << " tol=" << fmt(c.tol) << "\n";
  int code = kExitOk;
  for (const auto& row : rows) {
    if (row.exit_code != kExitOk) {
      err << "sigma=" << fmt(row.sigma) << " t=" << fmt(row.t)
          << (row.r ? " r=" + fmt(*row.r) : "") << " " << row.method << ": " << row.error << "\n";
      code = std::max(code, row.exit_code);
    }
  }
  if (effective_format(c) == Format::Csv) {
    out << "sigma,t,r,method,re,im,note\n";
    for (const auto& row : rows) {
      const bool ok = row.error.empty();
      out << fmt(row.sigma) << "," << fmt(row.t) << "," << (row.r ? fmt(*row.r) : "") << ","
          << row.method << "," << (ok ? fmt(row.value.real()) : "") << ","
          << (ok ? fmt(row.value.imag()) : "") << "," << (ok ? "" : row.error) << "\n";
    }
  } else {
    json arr = json::array();
    for (const auto& row : rows) {
      json j{{"group", groups::describe(group)}, {"sigma", row.sigma}, {"t", row.t}};
      j["r"] = row.r ? json(*row.r) : json(nullptr);
      j["method"] = row.method;
      if (row.error.empty()) {
        j["re"] = row.value.real();
        j["im"] = row.value.imag();
      } else {
        j["error"] = row.error;
      }
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
  }
  return code;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<const Check*> selected;
  const auto& checks = all_checks();
  if (c.checks) {
    if (c.checks->empty()) throw ConfigError("empty check selection");
    for (const auto& id : *c.checks) {
      const auto it = std::find_if(checks.begin(), checks.end(),
                                   [&](const Check& k) { return k.id == id; });
      if (it == checks.end()) throw ConfigError("unknown check '" + id + "'");
      selected.push_back(&*it);
    }
  } else {
    for (const auto& k : checks) selected.push_back(&k);
  }
  SuiteOptions options;
  options.perturb_gamma = c.perturb_gamma;
  const auto results = parallel_map<CheckResult>(
      selected.size(), c.jobs, [&](std::size_t i) { return run_check(*selected[i], options); });

  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) {
      ++failed;
      err << "FAIL " << r.check_id << ": achieved " << fmt(r.achieved_error) << " > tolerance "
          << fmt(r.tolerance) << "\n";
    }
  }
  err << results.size() - failed << "/" << results.size() << " checks passed\n";
  if (effective_format(c) == Format::Json) {
    json arr = json::array();
    for (const auto& r : results) {
      json j{{"check_id", r.check_id}, {"paper_anchor", r.paper_anchor}};
      j["achieved_error"] = std::isfinite(r.achieved_error) ? json(r.achieved_error) : json(nullptr);
      j["tolerance"] = r.tolerance;
      j["pass"] = r.pass;
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
  } else {
    out << "check_id,achieved_error,tolerance,pass\n";
    for (const auto& r : results) {
      out << r.check_id << "," << fmt(r.achieved_error) << "," << fmt(r.tolerance) << ","
          << (r.pass ? "true" : "false") << "\n";
    }
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_tree(const RunConfig& c, std::ostream& out, std::ostream&) {
  tree::FreeProductSpec spec = [&] {
    try {
      return tree::parse_free_product(c.free_product);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }();
  std::vector<std::int64_t> sizes;
  for (int n = 0; n <= c.radius; ++n) {
    sizes.push_back(static_cast<std::int64_t>(tree::enumerate_sphere(spec, n).size()));
  }

  struct ConvRow {
    int i, j;
    tree::RadialFn<tree::Rational> shells;
  };
  std::vector<ConvRow> table;
  for (int i = 0; i <= c.radius; ++i) {
    for (int j = i; i + j <= c.radius; ++j) {
      table.push_back({i, j,
                       tree::radial_convolve(spec, tree::shell_indicator<tree::Rational>(i),
                                             tree::shell_indicator<tree::Rational>(j),
                                             c.radius)});
    }
  }

  // |B_z| constancy over pairs in the ball of radius min(radius, 3).
  const int ball_radius = std::min(c.radius, 3);
  std::vector<tree::Word> ball;
  for (int n = 0; n <= ball_radius; ++n) {
    const auto sphere = tree::enumerate_sphere(spec, n);
    ball.insert(ball.end(), sphere.begin(), sphere.end());
  }
  std::int64_t pairs = 0;
  bool constant = true;
  for (const auto& x : ball) {
    for (const auto& y : ball) {
      const auto yx = tree::multiply(spec, tree::inverse(spec, y), x);
      if (yx.length() > ball_radius) continue;
      const auto counts = tree::bz_counts(spec, x, y, ball_radius);
      ++pairs;
      for (const auto& [z, n] : counts) constant = constant && n == counts.begin()->second;
    }
  }

  if (effective_format(c) == Format::Json) {
    json j{{"M", spec.M}, {"N", spec.N}, {"q", spec.q()}, {"sphere_sizes", sizes}};
    json conv = json::array();
    for (const auto& row : table) {
      json shells = json::object();
      for (const auto& [n, v] : row.shells.shells) shells[std::to_string(n)] = fmt(v);
      conv.push_back({{"i", row.i}, {"j", row.j}, {"shells", shells}});
    }
    j["convolutions"] = conv;
    j["bz_ball_radius"] = ball_radius;
    j["bz_pairs_checked"] = pairs;
    j["bz_constant"] = constant;
    out << j.dump(2) << "\n";
  } else {
    out << "free product M=" << spec.M << " N=" << spec.N << " q=" << spec.q() << "\n";
    out << "sphere sizes:";
    for (std::size_t n = 0; n < sizes.size(); ++n) out << (n ? "," : " ") << sizes[n];
    out << "\nconvolutions 1_{E_i} * 1_{E_j} (shell:value):\n";
    for (const auto& row : table) {
      out << "  " << row.i << " * " << row.j << " ->";
      for (const auto& [n, v] : row.shells.shells) out << " " << n << ":" << fmt(v);
      out << "\n";
    }
    out << "B_z constancy (ball radius " << ball_radius << ", " << pairs
        << " pairs): " << (constant ? "CONSTANT" : "NOT CONSTANT") << "\n";
  }
  return constant ? kExitOk : kExitFailure;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!c.out.empty()) {
      file.open(c.out);
      if (!file) throw ConfigError("cannot open output file '" + c.out + "'");
      sink = &file;
    }
    switch (c.command) {
      case Command::NormTable: return cmd_norm_table(c, *sink, err);
      case Command::Eval: return cmd_eval(c, *sink, err);
      case Command::Verify: return cmd_verify(c, *sink, err);
      case Command::Tree: return cmd_tree(c, *sink, err);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rankone::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_arguments(argc, argv);
    if (!config) return kExitOk;
    return run(*config, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace rankone::cli
