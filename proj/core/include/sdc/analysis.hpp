#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdc/problems.hpp"
#include "sdc/quadrature.hpp"
#include "sdc/sweeper.hpp"

namespace sdc {

// Low-order base rule whose difference against the exact Lagrange integral
// drives the per-sweep error pickup.
enum class BaseRuleKind { Trapezoid, ForwardEuler, BackwardEuler };

std::string base_rule_name(BaseRuleKind base);
BaseRuleKind base_rule_from_name(const std::string& name);

// Per-subinterval coefficient vectors c[n][m] = BaseRule_n(l_m) - w[n][m],
// in units of h.  Row sums vanish (both rules integrate constants exactly).
struct CorrectionCoefficients {
  std::string rule_label;
  BaseRuleKind base = BaseRuleKind::Trapezoid;
  std::vector<std::vector<double>> coeff;  // N x M, signed as above

  // Rows rescaled so the leading nonzero entry is positive -- the customary
  // presentation of these tables (the overall row sign is immaterial, the
  // coefficients multiply arbitrary error values).
  std::vector<std::vector<double>> normalized() const;

  std::string to_csv() const;  // normalized rows
};

CorrectionCoefficients correction_coefficients(const QuadratureRule& rule, BaseRuleKind base);

// Smallest k with sum_m c[n][m]*xi_m^k != 0 (tolerance 1e-12), per
// subinterval.  Structural values: 2 for the trapezoid base, 1 for the Euler
// bases, independent of node placement (both rules are exact on linears).
std::vector<int> first_nonzero_moment(const CorrectionCoefficients& coeffs,
                                      const QuadratureRule& rule);

// Local-error exponent per subinterval of the coefficient term applied to a
// forward-Euler provisional iterate on y' = y: the measured log2 slope of
// h * sum_m c[n][m] (f(eta_m) - f(y_m)) under h-halving, rounded to the
// nearest integer.  Captures the mesh-dependent provisional error profile
// that pure monomial moments miss on non-equispaced nodes.
std::vector<int> coefficient_order(const CorrectionCoefficients& coeffs,
                                   const QuadratureRule& rule);

enum class ErrorMetric { AbsMax, RelMax };

struct ConvergenceRow {
  long steps = 0;
  double h = 0.0;
  double error = 0.0;      // in the chosen metric, floored at 1e-16
  double rel_error = 0.0;  // error scaled by the reference solution size
  std::optional<double> order;
  bool failed = false;
  std::string message;
};

struct ConvergenceReport {
  std::string problem;
  std::string scheme_label;
  std::string rule_label;
  SweepKind kind = SweepKind::Picard;
  ProvisionalKind provisional_kind = ProvisionalKind::ForwardEuler;
  int corrections = 0;
  double theta = 1.0;
  double final_time = 0.0;
  ErrorMetric metric = ErrorMetric::AbsMax;
  std::vector<ConvergenceRow> rows;

  std::string to_csv() const;                      // steps,h,error,order
  std::string to_json_string(int indent = 2) const;
};

struct StudyOptions {
  ErrorMetric metric = ErrorMetric::AbsMax;
  SolveOptions solve;
  std::optional<long> reference_steps;  // default max(4096, 8 * finest mesh)
  bool validate_reference = false;      // cross-check against a 2x finer mesh
};

// High-accuracy final state by marching the 8-point Gauss-Legendre
// collocation system (Newton to 1e-13) over a fine fixed mesh.  Independent
// of the sweep path it is used to judge.
Vec reference_solution(const OdeSystem& system, double final_time, long steps);

// Integrates on each mesh, measures the final-time error against the closed
// form (when available) or reference_solution, and fits pairwise orders
// between successive mesh doublings.  Rows below the round-off floor
// (relative error < 1e-13) are excluded from order fits; solver failures
// abort the row and are recorded.
ConvergenceReport convergence_study(const OdeSystem& system, const SweepScheme& scheme,
                                    const QuadratureRule& rule, double final_time,
                                    const std::vector<long>& meshes,
                                    const StudyOptions& options = {});

// Least-squares slope of log(error) vs log(h) over rows whose relative error
// lies inside [floor, ceiling]; NaN when fewer than two rows qualify.
double fitted_order(const ConvergenceReport& report, double rel_floor = 1e-13,
                    double rel_ceiling = 0.1);

struct Table1Report {
  std::vector<int> point_counts;
  std::vector<NodeFamily> families;
  std::vector<std::vector<double>> values;  // point_counts x families

  std::string to_csv(int precision = 3) const;
};

// Grid of Lagrange-basis maxima per (M, family).  samples > 0 evaluates on
// that many equispaced points (1000 reproduces the customary published
// values digit for digit); samples = 0 uses the refined true maximum.
Table1Report table1_report(const std::vector<int>& point_counts,
                           const std::vector<NodeFamily>& families, int samples = 1000);

}  // namespace sdc
