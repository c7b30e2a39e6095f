#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdc/errors.hpp"
#include "sdc/types.hpp"

namespace sdc {

using RhsFn = std::function<Vec(const Vec&)>;
using JacFn = std::function<Mat(const Vec&)>;

// An autonomous ODE y' = f(y), optionally with an additive split
// f = f_implicit + f_explicit for the semi-implicit schemes, and optional
// analytic Jacobians (finite differences are used when absent).
// Instances are immutable after construction and safe to share; the callable
// members must be pure.
struct OdeSystem {
  std::string name;
  int dimension = 1;
  Vec y0;
  double default_final_time = 1.0;
  RhsFn rhs;
  RhsFn rhs_implicit;
  RhsFn rhs_explicit;
  JacFn jacobian;
  JacFn jacobian_implicit;
  std::optional<double> lipschitz_hint;  // diagnostic only
  std::function<Vec(double)> exact;      // closed-form solution when available

  bool has_split() const { return static_cast<bool>(rhs_implicit); }
};

// y' = lambda*y, y(0) = 1, exact solution e^(lambda*t).
OdeSystem linear_problem(double lambda);

// y' = c componentwise; integrates exactly under any interpolatory rule.
OdeSystem constant_problem(double c, int dimension = 1);

// Nonlinear pendulum (y1,y2)' = (y2, -sin y1), y0 = (0,1), T = 10.
OdeSystem pendulum_problem();

// Van der Pol in rescaled-time form:
//   y1' = y2,  y2' = (-y1 + (1 - y1^2) y2)/eps
// with the usual split f_E = (y2, 0), f_I = (0, y2') and
// y0 = (2, -0.666666654321), T = 4.
OdeSystem vdp_problem(double eps = 1.0);

struct ProblemParams {
  std::optional<double> lambda;      // linear
  std::optional<double> eps;         // vdp
  std::optional<double> value;       // constant
  std::optional<double> final_time;  // override default T
  std::optional<Vec> y0;             // override initial state
};

std::vector<std::string> problem_names();

// Registry lookup by name; throws ConfigError listing the valid names.
OdeSystem make_problem(const std::string& name, const ProblemParams& params = {});

}  // namespace sdc
