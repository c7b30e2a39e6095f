#include "sdc/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace sdc {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double base_rule_apply(BaseRuleKind base, double len, double value_left, double value_right) {
  switch (base) {
    case BaseRuleKind::Trapezoid: return 0.5 * len * (value_left + value_right);
    case BaseRuleKind::ForwardEuler: return len * value_left;
    case BaseRuleKind::BackwardEuler: return len * value_right;
  }
  return 0.0;
}

}  // namespace

std::string base_rule_name(BaseRuleKind base) {
  switch (base) {
    case BaseRuleKind::Trapezoid: return "trapezoid";
    case BaseRuleKind::ForwardEuler: return "forward-euler";
    case BaseRuleKind::BackwardEuler: return "backward-euler";
  }
  return "unknown";
}

BaseRuleKind base_rule_from_name(const std::string& name) {
  if (name == "trapezoid") return BaseRuleKind::Trapezoid;
  if (name == "forward-euler") return BaseRuleKind::ForwardEuler;
  if (name == "backward-euler") return BaseRuleKind::BackwardEuler;
  throw ConfigError("unknown base rule '" + name +
                    "' (valid: trapezoid, forward-euler, backward-euler)");
}

CorrectionCoefficients correction_coefficients(const QuadratureRule& rule, BaseRuleKind base) {
  CorrectionCoefficients out;
  out.rule_label = rule.label();
  out.base = base;
  out.coeff.assign(rule.num_subintervals, std::vector<double>(rule.num_nodes, 0.0));
  for (int n = 0; n < rule.num_subintervals; ++n) {
    const double a = rule.boundaries[n];
    const double b = rule.boundaries[n + 1];
    for (int m = 0; m < rule.num_nodes; ++m) {
      const double local =
          base_rule_apply(base, b - a, eval_lagrange(rule, m, a), eval_lagrange(rule, m, b));
      out.coeff[n][m] = local - rule.weights[n][m];
    }
  }
  return out;
}

std::vector<std::vector<double>> CorrectionCoefficients::normalized() const {
  std::vector<std::vector<double>> rows = coeff;
  for (auto& row : rows) {
    for (double v : row) {
      if (std::abs(v) > 1e-14) {
        if (v < 0.0)
          for (double& r : row) r = -r;
        break;
      }
    }
  }
  return rows;
}

std::string CorrectionCoefficients::to_csv() const {
  const auto rows = normalized();
  std::ostringstream out;
  out << "subinterval";
  for (std::size_t m = 0; m < (rows.empty() ? 0 : rows[0].size()); ++m) out << ",c" << m + 1;
  out << "\n";
  for (std::size_t n = 0; n < rows.size(); ++n) {
    out << n + 1;
    for (double c : rows[n]) out << "," << g17(c);
    out << "\n";
  }
  return out.str();
}

std::vector<int> first_nonzero_moment(const CorrectionCoefficients& coeffs,
                                      const QuadratureRule& rule) {
  std::vector<int> result(coeffs.coeff.size(), -1);
  for (std::size_t n = 0; n < coeffs.coeff.size(); ++n) {
    for (int k = 0; k <= 2 * rule.num_nodes; ++k) {
      double moment = 0.0;
      for (int m = 0; m < rule.num_nodes; ++m)
        moment += coeffs.coeff[n][m] * std::pow(rule.nodes[m], k);
      if (std::abs(moment) > 1e-12) {
        result[n] = k;
        break;
      }
    }
  }
  return result;
}

std::vector<int> coefficient_order(const CorrectionCoefficients& coeffs,
                                   const QuadratureRule& rule) {
  const OdeSystem sys = linear_problem(1.0);
  SweepScheme scheme;
  scheme.provisional = ProvisionalKind::ForwardEuler;

  // II_n(h) = h * sum_m c_{n,m} (f(eta_m) - f(y_m)) for the provisional
  // iterate; its h-halving slope is the local-error exponent.
  auto term = [&](double h) {
    const NodeSolution sol = provisional(rule, sys, scheme, sys.y0, h);
    std::vector<double> v(rule.num_subintervals, 0.0);
    for (int n = 0; n < rule.num_subintervals; ++n) {
      double s = 0.0;
      for (int m = 0; m < rule.num_nodes; ++m) {
        const double df = sol.fvals[m][0] - std::exp(rule.nodes[m] * h);
        s += coeffs.coeff[n][m] * df;
      }
      v[n] = h * s;
    }
    return v;
  };

  const double h_coarse = std::pow(2.0, -5);
  const double h_fine = std::pow(2.0, -9);
  const std::vector<double> coarse = term(h_coarse);
  const std::vector<double> fine = term(h_fine);

  std::vector<int> result(rule.num_subintervals, 0);
  for (int n = 0; n < rule.num_subintervals; ++n) {
    if (std::abs(fine[n]) < 1e-300) {
      result[n] = 2 * rule.num_nodes;  // annihilates the whole expansion we can see
      continue;
    }
    const double slope = std::log2(std::abs(coarse[n]) / std::abs(fine[n])) / 4.0;
    result[n] = static_cast<int>(std::lround(slope));
  }
  return result;
}

Vec reference_solution(const OdeSystem& system, double final_time, long steps) {
  if (steps < 1) throw ConfigError("reference solution needs at least one step");
  const QuadratureRule rule = make_rule(NodeFamily::GaussLegendre, 8);
  // each solve is pushed to the round-off floor so the per-step solver error
  // does not accumulate above the reference's own validation tolerance
  SolveOptions opts;
  opts.newton_tol = 1e-14;
  opts.newton_abs_floor = 5e-16;
  const double h = final_time / static_cast<double>(steps);
  Vec y = system.y0;
  for (long k = 0; k < steps; ++k) y = final_value(rule, collocation_solve(rule, system, y, h, opts));
  return y;
}

ConvergenceReport convergence_study(const OdeSystem& system, const SweepScheme& scheme,
                                    const QuadratureRule& rule, double final_time,
                                    const std::vector<long>& meshes, const StudyOptions& options) {
  if (meshes.size() < 3) throw ConfigError("convergence study needs at least 3 meshes");
  for (std::size_t i = 1; i < meshes.size(); ++i)
    if (meshes[i] != 2 * meshes[i - 1])
      throw ConfigError("meshes must increase by successive doubling");

  ConvergenceReport report;
  report.problem = system.name;
  report.scheme_label = scheme.label();
  report.rule_label = rule.label();
  report.kind = scheme.kind;
  report.provisional_kind = scheme.provisional;
  report.corrections = scheme.corrections;
  report.theta = scheme.theta;
  report.final_time = final_time;
  report.metric = options.metric;

  Vec y_ref;
  if (system.exact) {
    y_ref = system.exact(final_time);
  } else {
    const long ref_steps = options.reference_steps.value_or(std::max<long>(4096, 8 * meshes.back()));
    y_ref = reference_solution(system, final_time, ref_steps);
    if (options.validate_reference) {
      const Vec check = reference_solution(system, final_time, 2 * ref_steps);
      if (max_dist(y_ref, check) > 1e-11)
        throw SolverError("reference solution failed its mesh-doubling validation");
    }
  }
  const double scale = std::max(max_norm(y_ref), 1e-300);

  for (long mesh : meshes) {
    ConvergenceRow row;
    row.steps = mesh;
    row.h = final_time / static_cast<double>(mesh);
    try {
      const std::vector<Vec> traj = integrate(rule, system, scheme, final_time, mesh, options.solve);
      const double err_abs = max_dist(traj.back(), y_ref);
      if (!std::isfinite(err_abs)) throw SolverError("non-finite result (unstable step size)");
      row.rel_error = err_abs / scale;
      row.error = std::max(options.metric == ErrorMetric::RelMax ? row.rel_error : err_abs, 1e-16);
    } catch (const SolverError& e) {
      row.failed = true;
      row.message = e.what();
    }
    report.rows.push_back(std::move(row));
  }

  // pairwise orders between successive doublings, skipping failed rows and
  // the round-off plateau
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    ConvergenceRow& cur = report.rows[i];
    const ConvergenceRow& prev = report.rows[i - 1];
    if (cur.failed || prev.failed) continue;
    if (cur.rel_error < 1e-13 || prev.rel_error < 1e-13) continue;
    cur.order = std::log2(prev.error / cur.error);
  }
  return report;
}

double fitted_order(const ConvergenceReport& report, double rel_floor, double rel_ceiling) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const ConvergenceRow& row : report.rows) {
    if (row.failed || row.rel_error < rel_floor || row.rel_error > rel_ceiling) continue;
    const double x = std::log(row.h);
    const double y = std::log(row.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string ConvergenceReport::to_csv() const {
  std::string out = "steps,h,error,order\n";
  for (const ConvergenceRow& row : rows) {
    out += std::to_string(row.steps) + "," + g17(row.h) + ",";
    out += row.failed ? "failed" : g17(row.error);
    out += ",";
    if (row.order) out += g17(*row.order);
    out += "\n";
  }
  return out;
}

std::string ConvergenceReport::to_json_string(int indent) const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["kind"] = "convergence_report";
  j["problem"] = problem;
  j["scheme"] = sweep_kind_name(kind);
  j["provisional"] = provisional_name(provisional_kind);
  j["corrections"] = corrections;
  j["theta"] = theta;
  j["rule"] = rule_label;
  j["final_time"] = final_time;
  j["error_metric"] = metric == ErrorMetric::RelMax ? "rel-max" : "abs-max";
  j["rows"] = nlohmann::json::array();
  for (const ConvergenceRow& row : rows) {
    nlohmann::json r;
    r["steps"] = row.steps;
    r["h"] = row.h;
    if (row.failed) {
      r["failed"] = true;
      r["message"] = row.message;
    } else {
      r["error"] = row.error;
      r["rel_error"] = row.rel_error;
      if (row.order) r["order"] = *row.order;
    }
    j["rows"].push_back(std::move(r));
  }
  return j.dump(indent);
}

Table1Report table1_report(const std::vector<int>& point_counts,
                           const std::vector<NodeFamily>& families, int samples) {
  Table1Report report;
  report.point_counts = point_counts;
  report.families = families;
  for (int m : point_counts) {
    std::vector<double> row;
    row.reserve(families.size());
    for (NodeFamily family : families) {
      const QuadratureRule rule = make_rule(family, m);
      row.push_back(samples > 0 ? lebesgue_max_sampled(rule, samples) : lebesgue_max(rule));
    }
    report.values.push_back(std::move(row));
  }
  return report;
}

std::string Table1Report::to_csv(int precision) const {
  std::ostringstream out;
  out << "M";
  for (NodeFamily family : families) out << "," << family_name(family);
  out << "\n";
  char buf[40];
  for (std::size_t i = 0; i < point_counts.size(); ++i) {
    out << point_counts[i];
    for (double v : values[i]) {
      std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
      out << "," << buf;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sdc
