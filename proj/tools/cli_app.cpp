#include "cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "sdc/analysis.hpp"
#include "sdc/problems.hpp"
#include "sdc/quadrature.hpp"
#include "sdc/stability.hpp"
#include "sdc/sweeper.hpp"

namespace sdc::cli {

namespace {

using nlohmann::json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// accepts plain decimals and simple fractions like 1/3
double parse_real(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos)
      return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
    return std::stod(text);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse real number '" + text + "'");
  }
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_real(item));
  if (out.empty()) throw ConfigError("empty number list '" + text + "'");
  return out;
}

std::vector<long> parse_meshes(const std::string& text) {
  std::vector<long> meshes;
  try {
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
      const long lo = std::stol(text.substr(0, colon));
      const long hi = std::stol(text.substr(colon + 1));
      if (lo < 1 || hi < lo) throw ConfigError("bad mesh range '" + text + "'");
      for (long n = lo; n <= hi; n *= 2) meshes.push_back(n);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) meshes.push_back(std::stol(item));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse mesh list '" + text + "'");
  }
  if (meshes.empty()) throw ConfigError("empty mesh list '" + text + "'");
  return meshes;
}

std::pair<int, int> parse_int_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ConfigError("cannot parse range '" + text + "'");
  }
}

QuadratureRule build_rule(const RunConfig& cfg) {
  if (cfg.custom_nodes) return make_rule(*cfg.custom_nodes);
  const int m = cfg.num_nodes.value_or(cfg.order.value_or(4));
  return make_rule(family_from_name(cfg.family), m);
}

SweepScheme build_scheme(const RunConfig& cfg) {
  const SweepKind kind = sweep_kind_from_name(cfg.scheme);
  if (cfg.order) order_preset(kind, *cfg.order);  // validates the preset range
  const int corrections = cfg.corrections.value_or(cfg.order ? *cfg.order - 1 : 3);
  if (corrections < 0) throw ConfigError("corrections must be non-negative");
  SweepScheme scheme = SweepScheme::make(kind, corrections);
  scheme.theta = cfg.theta;
  if (cfg.provisional) scheme.provisional = provisional_from_name(*cfg.provisional);
  return scheme;
}

OdeSystem build_problem(const RunConfig& cfg) {
  ProblemParams params;
  params.lambda = cfg.lambda;
  params.eps = cfg.eps;
  params.value = cfg.value;
  params.final_time = cfg.final_time;
  params.y0 = cfg.y0;
  return make_problem(cfg.problem, params);
}

SolveOptions build_options(const RunConfig& cfg) {
  SolveOptions opts;
  opts.fixed_point_tol = cfg.fixed_point_tol;
  return opts;
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["subcommand"] = cfg.subcommand;
  j["problem"] = cfg.problem;
  if (cfg.lambda) j["lambda"] = *cfg.lambda;
  if (cfg.eps) j["eps"] = *cfg.eps;
  if (cfg.value) j["value"] = *cfg.value;
  if (cfg.final_time) j["final_time"] = *cfg.final_time;
  if (cfg.y0) j["y0"] = *cfg.y0;
  j["scheme"] = cfg.scheme;
  if (cfg.order) j["order"] = *cfg.order;
  if (cfg.corrections) j["corrections"] = *cfg.corrections;
  j["theta"] = cfg.theta;
  if (cfg.provisional) j["provisional"] = *cfg.provisional;
  if (cfg.fixed_point_tol) j["fixed_point_tol"] = *cfg.fixed_point_tol;
  j["family"] = cfg.family;
  if (cfg.num_nodes) j["num_nodes"] = *cfg.num_nodes;
  if (cfg.custom_nodes) j["custom_nodes"] = *cfg.custom_nodes;
  if (cfg.steps) j["steps"] = *cfg.steps;
  if (cfg.meshes) j["meshes"] = *cfg.meshes;
  j["metric"] = cfg.metric;
  j["table1"] = cfg.table1;
  j["wn"] = cfg.wn;
  j["lebesgue"] = cfg.lebesgue;
  j["m_range"] = cfg.m_range;
  j["table1_samples"] = cfg.table1_samples;
  j["base"] = cfg.base;
  if (cfg.re_min) j["re_min"] = *cfg.re_min;
  if (cfg.re_max) j["re_max"] = *cfg.re_max;
  if (cfg.im_min) j["im_min"] = *cfg.im_min;
  if (cfg.im_max) j["im_max"] = *cfg.im_max;
  if (cfg.nx) j["nx"] = *cfg.nx;
  if (cfg.ny) j["ny"] = *cfg.ny;
  j["implicit_fraction"] = cfg.implicit_fraction;
  j["format"] = cfg.format;
  return j;
}

template <class T>
void read_opt(const json& j, const char* key, std::optional<T>& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

RunConfig config_from_json(const json& j) {
  RunConfig cfg;
  cfg.subcommand = j.at("subcommand").get<std::string>();
  cfg.problem = j.value("problem", cfg.problem);
  read_opt(j, "lambda", cfg.lambda);
  read_opt(j, "eps", cfg.eps);
  read_opt(j, "value", cfg.value);
  read_opt(j, "final_time", cfg.final_time);
  read_opt(j, "y0", cfg.y0);
  cfg.scheme = j.value("scheme", cfg.scheme);
  read_opt(j, "order", cfg.order);
  read_opt(j, "corrections", cfg.corrections);
  cfg.theta = j.value("theta", cfg.theta);
  read_opt(j, "provisional", cfg.provisional);
  read_opt(j, "fixed_point_tol", cfg.fixed_point_tol);
  cfg.family = j.value("family", cfg.family);
  read_opt(j, "num_nodes", cfg.num_nodes);
  read_opt(j, "custom_nodes", cfg.custom_nodes);
  read_opt(j, "steps", cfg.steps);
  read_opt(j, "meshes", cfg.meshes);
  cfg.metric = j.value("metric", cfg.metric);
  cfg.table1 = j.value("table1", cfg.table1);
  cfg.wn = j.value("wn", cfg.wn);
  cfg.lebesgue = j.value("lebesgue", cfg.lebesgue);
  cfg.m_range = j.value("m_range", cfg.m_range);
  cfg.table1_samples = j.value("table1_samples", cfg.table1_samples);
  cfg.base = j.value("base", cfg.base);
  read_opt(j, "re_min", cfg.re_min);
  read_opt(j, "re_max", cfg.re_max);
  read_opt(j, "im_min", cfg.im_min);
  read_opt(j, "im_max", cfg.im_max);
  read_opt(j, "nx", cfg.nx);
  read_opt(j, "ny", cfg.ny);
  cfg.implicit_fraction = j.value("implicit_fraction", cfg.implicit_fraction);
  cfg.format = j.value("format", cfg.format);
  return cfg;
}

struct Payload {
  std::string csv;
  json data;
};

Payload run_quadrature(const RunConfig& cfg) {
  Payload payload;
  if (cfg.table1) {
    const auto [lo, hi] = parse_int_range(cfg.m_range);
    if (lo < 2 || hi < lo) throw ConfigError("table1 needs an M range within 2:20 or wider");
    std::vector<int> ms;
    for (int m = lo; m <= hi; ++m) ms.push_back(m);
    const Table1Report report = table1_report(ms, standard_families(), cfg.table1_samples);
    payload.csv = report.to_csv();
    payload.data["point_counts"] = report.point_counts;
    for (std::size_t i = 0; i < report.families.size(); ++i) {
      json column = json::array();
      for (const auto& row : report.values) column.push_back(row[i]);
      payload.data["values"][family_name(report.families[i])] = std::move(column);
    }
    return payload;
  }

  const QuadratureRule rule = build_rule(cfg);
  std::ostringstream csv;
  csv << "nodes\n";
  for (int m = 0; m < rule.num_nodes; ++m) csv << (m ? "," : "") << g17(rule.nodes[m]);
  csv << "\nboundaries\n";
  for (int n = 0; n <= rule.num_subintervals; ++n) csv << (n ? "," : "") << g17(rule.boundaries[n]);
  csv << "\nweights\n";
  for (int n = 0; n < rule.num_subintervals; ++n) {
    for (int m = 0; m < rule.num_nodes; ++m) csv << (m ? "," : "") << g17(rule.weights[n][m]);
    csv << "\n";
  }
  payload.data["rule"] = rule.label();
  payload.data["nodes"] = rule.nodes;
  payload.data["boundaries"] = rule.boundaries;
  payload.data["weights"] = rule.weights;
  if (cfg.wn) {
    const std::vector<double> wn = wn_constants(rule);
    csv << "wn\n";
    for (std::size_t n = 0; n < wn.size(); ++n) csv << (n ? "," : "") << g17(wn[n]);
    csv << "\n";
    payload.data["wn"] = wn;
  }
  if (cfg.lebesgue) {
    const double value = lebesgue_max(rule);
    csv << "lebesgue_max\n" << g17(value) << "\n";
    payload.data["lebesgue_max"] = value;
  }
  payload.csv = csv.str();
  return payload;
}

Payload run_coeffs(const RunConfig& cfg) {
  const QuadratureRule rule = build_rule(cfg);
  const CorrectionCoefficients coeffs =
      correction_coefficients(rule, base_rule_from_name(cfg.base));
  const std::vector<int> exponents = coefficient_order(coeffs, rule);
  const auto rows = coeffs.normalized();

  Payload payload;
  std::ostringstream csv;
  csv << "subinterval";
  for (int m = 0; m < rule.num_nodes; ++m) csv << ",c" << m + 1;
  csv << ",local_order\n";
  for (int n = 0; n < rule.num_subintervals; ++n) {
    csv << n + 1;
    for (double c : rows[n]) csv << "," << g17(c);
    csv << "," << exponents[n] << "\n";
  }
  payload.csv = csv.str();
  payload.data["rule"] = rule.label();
  payload.data["base"] = base_rule_name(coeffs.base);
  payload.data["coefficients"] = rows;
  payload.data["coefficients_signed"] = coeffs.coeff;
  payload.data["local_order"] = exponents;
  return payload;
}

Payload run_solve(const RunConfig& cfg) {
  const OdeSystem sys = build_problem(cfg);
  const QuadratureRule rule = build_rule(cfg);
  const SweepScheme scheme = build_scheme(cfg);
  const double final_time = cfg.final_time.value_or(sys.default_final_time);
  const long steps = cfg.steps.value_or(100);
  const std::vector<Vec> trajectory =
      integrate(rule, sys, scheme, final_time, steps, build_options(cfg));

  Payload payload;
  std::ostringstream csv;
  csv << "t";
  for (int i = 0; i < sys.dimension; ++i) csv << ",y" << i + 1;
  csv << "\n";
  const double h = final_time / static_cast<double>(steps);
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    csv << g17(static_cast<double>(k) * h);
    for (double v : trajectory[k]) csv << "," << g17(v);
    csv << "\n";
  }
  payload.csv = csv.str();
  payload.data["problem"] = sys.name;
  payload.data["rule"] = rule.label();
  payload.data["scheme"] = scheme.label();
  payload.data["final_time"] = final_time;
  payload.data["steps"] = steps;
  payload.data["final_state"] = trajectory.back();
  if (sys.exact) payload.data["error_abs"] = max_dist(trajectory.back(), sys.exact(final_time));
  return payload;
}

Payload run_converge(const RunConfig& cfg) {
  const OdeSystem sys = build_problem(cfg);
  const QuadratureRule rule = build_rule(cfg);
  const SweepScheme scheme = build_scheme(cfg);
  const double final_time = cfg.final_time.value_or(sys.default_final_time);
  if (!cfg.meshes) throw ConfigError("converge requires --meshes (e.g. 4:512)");

  StudyOptions options;
  options.solve = build_options(cfg);
  if (cfg.metric == "abs")
    options.metric = ErrorMetric::AbsMax;
  else if (cfg.metric == "rel")
    options.metric = ErrorMetric::RelMax;
  else
    throw ConfigError("unknown metric '" + cfg.metric + "' (valid: abs, rel)");

  const ConvergenceReport report =
      convergence_study(sys, scheme, rule, final_time, parse_meshes(*cfg.meshes), options);
  Payload payload;
  payload.csv = report.to_csv();
  payload.data = json::parse(report.to_json_string());
  return payload;
}

Payload run_stability(const RunConfig& cfg) {
  const QuadratureRule rule = build_rule(cfg);
  const SweepScheme scheme = build_scheme(cfg);
  GridSpec grid = GridSpec::for_order(scheme.corrections + 1);
  if (cfg.re_min) grid.re_min = *cfg.re_min;
  if (cfg.re_max) grid.re_max = *cfg.re_max;
  if (cfg.im_min) grid.im_min = *cfg.im_min;
  if (cfg.im_max) grid.im_max = *cfg.im_max;
  if (cfg.nx) grid.nx = *cfg.nx;
  if (cfg.ny) grid.ny = *cfg.ny;

  const StabilityGrid result =
      scan_region(scheme, rule, grid, build_options(cfg), cfg.implicit_fraction);
  Payload payload;
  payload.csv = result.to_csv();
  payload.data["rule"] = rule.label();
  payload.data["scheme"] = scheme.label();
  payload.data["re_min"] = grid.re_min;
  payload.data["re_max"] = grid.re_max;
  payload.data["im_min"] = grid.im_min;
  payload.data["im_max"] = grid.im_max;
  payload.data["nx"] = grid.nx;
  payload.data["ny"] = grid.ny;
  payload.data["abs_rho"] = result.values;  // +inf serializes as null
  return payload;
}

Payload build_payload(const RunConfig& cfg) {
  if (cfg.subcommand == "quadrature") return run_quadrature(cfg);
  if (cfg.subcommand == "coeffs") return run_coeffs(cfg);
  if (cfg.subcommand == "solve") return run_solve(cfg);
  if (cfg.subcommand == "converge") return run_converge(cfg);
  if (cfg.subcommand == "stability") return run_stability(cfg);
  throw ConfigError("unknown subcommand '" + cfg.subcommand +
                    "' (valid: quadrature, coeffs, solve, converge, stability, rerun)");
}

constexpr const char* kEpilogue = R"(Schemes: picard, explicit-sdc, implicit-sdc (with --theta), sisdc,
         modified-sisdc, trapezoid-sdc
Provisional methods: copy, forward-euler, backward-euler, imex-euler, trapezoid
Node families: uniform, chebyshev, legendre, gauss-radau, gauss-lobatto
               (or --nodes for a custom set, fractions like 1/3 allowed)
Problems: linear (--lambda), pendulum, vdp (--eps), constant (--value)
Order presets (--order q): uniform nodes, M = q, corrections = q-1, so a
  first-order provisional sweep reaches order q; e.g. --order 3 gives M=3
  with 2 corrections, --order 6 gives M=6 with 5 corrections.
)";

}  // namespace

void execute(const RunConfig& cfg, std::ostream& out) {
  const Payload payload = build_payload(cfg);
  std::string text;
  if (cfg.format == "json") {
    json wrapped;
    wrapped["schema_version"] = 1;
    wrapped["config"] = config_to_json(cfg);
    wrapped["data"] = payload.data;
    text = wrapped.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    text = payload.csv;
  } else {
    throw ConfigError("unknown format '" + cfg.format + "' (valid: csv, json)");
  }
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file '" + cfg.out_path + "'");
    file << text;
  }
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral deferred correction solvers: quadrature construction, sweep-based\n"
               "time stepping, stability scans and convergence studies."};
  app.footer(kEpilogue);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string y0_text, nodes_text, rerun_path;

  auto add_rule_options = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "node family")
        ->check(CLI::IsMember(
            {"uniform", "chebyshev", "legendre", "gauss-legendre", "radau", "gauss-radau",
             "lobatto", "gauss-lobatto"}));
    sub->add_option("-M,--nodes-count", cfg.num_nodes, "number of quadrature nodes");
    sub->add_option("--nodes", nodes_text, "custom node list, e.g. 0,1/3,1/2,1");
  };
  auto add_scheme_options = [&](CLI::App* sub) {
    sub->add_option("--scheme", cfg.scheme, "sweep scheme")
        ->check(CLI::IsMember({"picard", "explicit-sdc", "implicit-sdc", "sisdc",
                               "modified-sisdc", "trapezoid-sdc"}));
    sub->add_option("--corrections", cfg.corrections, "number of correction sweeps");
    sub->add_option("--theta", cfg.theta, "implicit-sdc difference-term scaling");
    sub->add_option("--provisional", cfg.provisional, "provisional method override")
        ->check(CLI::IsMember(
            {"copy", "forward-euler", "backward-euler", "imex-euler", "trapezoid"}));
    sub->add_option("--order", cfg.order, "order preset: M = order, corrections = order-1");
    sub->add_option("--fixed-point-tol", cfg.fixed_point_tol,
                    "sweep to this iterate tolerance instead of a fixed count");
  };
  auto add_problem_options = [&](CLI::App* sub) {
    sub->add_option("--problem", cfg.problem, "problem name")
        ->check(CLI::IsMember({"linear", "pendulum", "vdp", "constant"}));
    sub->add_option("--lambda", cfg.lambda, "linear problem coefficient");
    sub->add_option("--eps", cfg.eps, "van der Pol stiffness parameter");
    sub->add_option("--value", cfg.value, "constant problem right-hand side");
    sub->add_option("-T,--final-time", cfg.final_time, "final integration time");
    sub->add_option("--y0", y0_text, "initial state override, e.g. 2,-0.5");
  };
  auto add_output_options = [&](CLI::App* sub) {
    sub->add_option("-o,--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* quad = app.add_subcommand("quadrature", "nodes, weights and basis diagnostics");
  add_rule_options(quad);
  quad->add_flag("--wn", cfg.wn, "include the interpolation-stability constants W_n");
  quad->add_flag("--lebesgue", cfg.lebesgue, "include the Lagrange-basis maximum");
  quad->add_flag("--table1", cfg.table1, "emit the M x family table of basis maxima");
  quad->add_option("--m-range", cfg.m_range, "M range for --table1, e.g. 2:20");
  quad->add_option("--samples", cfg.table1_samples,
                   "sample count for --table1 (0 = refined true maximum)");
  add_output_options(quad);

  CLI::App* coeffs = app.add_subcommand("coeffs", "correction coefficient tables");
  add_rule_options(coeffs);
  coeffs->add_option("--base", cfg.base, "base rule")
      ->check(CLI::IsMember({"trapezoid", "forward-euler", "backward-euler"}));
  add_output_options(coeffs);

  CLI::App* solve = app.add_subcommand("solve", "integrate a problem over [0,T]");
  add_problem_options(solve);
  add_rule_options(solve);
  add_scheme_options(solve);
  solve->add_option("--steps", cfg.steps, "number of uniform steps");
  add_output_options(solve);

  CLI::App* converge = app.add_subcommand("converge", "mesh-doubling convergence study");
  add_problem_options(converge);
  add_rule_options(converge);
  add_scheme_options(converge);
  converge->add_option("--meshes", cfg.meshes, "mesh list, e.g. 4:512 or 4,8,16");
  converge->add_option("--metric", cfg.metric, "error metric")
      ->check(CLI::IsMember({"abs", "rel"}));
  add_output_options(converge);

  CLI::App* stability = app.add_subcommand("stability", "amplification factor scan");
  add_rule_options(stability);
  add_scheme_options(stability);
  stability->add_option("--re-min", cfg.re_min, "grid window");
  stability->add_option("--re-max", cfg.re_max, "grid window");
  stability->add_option("--im-min", cfg.im_min, "grid window");
  stability->add_option("--im-max", cfg.im_max, "grid window");
  stability->add_option("--nx", cfg.nx, "grid resolution (re)");
  stability->add_option("--ny", cfg.ny, "grid resolution (im)");
  stability->add_option("--implicit-fraction", cfg.implicit_fraction,
                        "fraction of z treated implicitly by the split schemes");
  add_output_options(stability);

  CLI::App* rerun = app.add_subcommand("rerun", "re-run an emitted JSON payload's config");
  rerun->add_option("config", rerun_path, "JSON payload or config file")->required();
  add_output_options(rerun);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (rerun->parsed()) {
      std::ifstream file(rerun_path);
      if (!file) throw ConfigError("cannot open '" + rerun_path + "'");
      json j = json::parse(file, nullptr, true, true);
      RunConfig loaded = config_from_json(j.contains("config") ? j.at("config") : j);
      loaded.out_path = cfg.out_path;
      // the original payload format is kept unless --format is given here
      if (rerun->count("--format") > 0) loaded.format = cfg.format;
      execute(loaded, out);
      return 0;
    }
    for (CLI::App* sub : {quad, coeffs, solve, converge, stability}) {
      if (sub->parsed()) {
        cfg.subcommand = sub->get_name();
        break;
      }
    }
    if (!y0_text.empty()) cfg.y0 = parse_real_list(y0_text);
    if (!nodes_text.empty()) cfg.custom_nodes = parse_real_list(nodes_text);
    execute(cfg, out);
    return 0;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sdc::cli
