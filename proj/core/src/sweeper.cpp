#include "sdc/sweeper.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "sdc/detail/linalg.hpp"
#include "sdc/detail/sweep_engine.hpp"

namespace sdc {

namespace {

using detail::RhsPart;

Mat fd_jacobian(const RhsFn& g, const Vec& y) {
  const int d = static_cast<int>(y.size());
  const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  Mat jac(d, Vec(d, 0.0));
  Vec yp = y, ym = y;
  for (int j = 0; j < d; ++j) {
    const double delta = sqrt_eps * (1.0 + std::abs(y[j]));
    yp[j] = y[j] + delta;
    ym[j] = y[j] - delta;
    const Vec fp = g(yp);
    const Vec fm = g(ym);
    for (int i = 0; i < d; ++i) jac[i][j] = (fp[i] - fm[i]) / (2.0 * delta);
    yp[j] = y[j];
    ym[j] = y[j];
  }
  return jac;
}

// Newton for eta = a + alpha*g(eta); full steps, no damping.
Vec newton_substep(const OdeSystem& sys, const Vec& a, double alpha, bool implicit_part,
                   const SolveOptions& opts) {
  if (alpha == 0.0) return a;
  const bool split = implicit_part && sys.has_split();
  const RhsFn& g = split ? sys.rhs_implicit : sys.rhs;
  const JacFn& jac = split ? sys.jacobian_implicit : sys.jacobian;
  const int d = static_cast<int>(a.size());

  Vec x = a;
  detail::add_scaled(x, alpha, g(a));  // one fixed-point step as initial guess

  std::vector<double> history;
  for (int it = 0; it < opts.newton_max_iter; ++it) {
    Vec residual = x;
    detail::add_scaled(residual, -1.0, a);
    detail::add_scaled(residual, -alpha, g(x));
    history.push_back(max_norm(residual));

    const Mat gj = jac ? jac(x) : fd_jacobian(g, x);
    Mat m(d, Vec(d, 0.0));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) m[i][j] = -alpha * gj[i][j];
      m[i][i] += 1.0;
    }
    const Vec dx = detail::lu_solve(std::move(m), residual);
    detail::add_scaled(x, -1.0, dx);
    if (max_norm(dx) <= std::max(opts.newton_abs_floor, opts.newton_tol * max_norm(x))) return x;
  }
  throw NewtonDivergenceError("implicit substep Newton did not converge", std::move(history));
}

struct VectorField {
  using State = Vec;
  const OdeSystem* sys;
  SolveOptions opts;

  State zero() const { return Vec(sys->dimension, 0.0); }
  State rhs(const Vec& y) const { return sys->rhs(y); }
  State rhs_implicit(const Vec& y) const {
    return sys->has_split() ? sys->rhs_implicit(y) : sys->rhs(y);
  }
  State rhs_explicit(const Vec& y) const {
    return sys->has_split() ? sys->rhs_explicit(y) : Vec(sys->dimension, 0.0);
  }
  State solve_implicit(const Vec& a, double alpha, RhsPart part) const {
    return newton_substep(*sys, a, alpha, part == RhsPart::Implicit, opts);
  }
};

}  // namespace

std::string sweep_kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::Picard: return "picard";
    case SweepKind::ExplicitSdc: return "explicit-sdc";
    case SweepKind::ImplicitSdc: return "implicit-sdc";
    case SweepKind::Sisdc: return "sisdc";
    case SweepKind::ModifiedSisdc: return "modified-sisdc";
    case SweepKind::TrapezoidSdc: return "trapezoid-sdc";
  }
  return "unknown";
}

SweepKind sweep_kind_from_name(const std::string& name) {
  if (name == "picard") return SweepKind::Picard;
  if (name == "explicit-sdc") return SweepKind::ExplicitSdc;
  if (name == "implicit-sdc") return SweepKind::ImplicitSdc;
  if (name == "sisdc") return SweepKind::Sisdc;
  if (name == "modified-sisdc") return SweepKind::ModifiedSisdc;
  if (name == "trapezoid-sdc") return SweepKind::TrapezoidSdc;
  throw ConfigError("unknown scheme '" + name +
                    "' (valid: picard, explicit-sdc, implicit-sdc, sisdc, modified-sisdc, "
                    "trapezoid-sdc)");
}

std::string provisional_name(ProvisionalKind kind) {
  switch (kind) {
    case ProvisionalKind::CopyConstant: return "copy";
    case ProvisionalKind::ForwardEuler: return "forward-euler";
    case ProvisionalKind::BackwardEuler: return "backward-euler";
    case ProvisionalKind::ImexEuler: return "imex-euler";
    case ProvisionalKind::TrapezoidRule: return "trapezoid";
  }
  return "unknown";
}

ProvisionalKind provisional_from_name(const std::string& name) {
  if (name == "copy") return ProvisionalKind::CopyConstant;
  if (name == "forward-euler") return ProvisionalKind::ForwardEuler;
  if (name == "backward-euler") return ProvisionalKind::BackwardEuler;
  if (name == "imex-euler") return ProvisionalKind::ImexEuler;
  if (name == "trapezoid") return ProvisionalKind::TrapezoidRule;
  throw ConfigError("unknown provisional method '" + name +
                    "' (valid: copy, forward-euler, backward-euler, imex-euler, trapezoid)");
}

ProvisionalKind default_provisional(SweepKind kind) {
  switch (kind) {
    case SweepKind::Picard:
    case SweepKind::ExplicitSdc: return ProvisionalKind::ForwardEuler;
    case SweepKind::ImplicitSdc: return ProvisionalKind::BackwardEuler;
    case SweepKind::Sisdc:
    case SweepKind::ModifiedSisdc: return ProvisionalKind::ImexEuler;
    case SweepKind::TrapezoidSdc: return ProvisionalKind::TrapezoidRule;
  }
  return ProvisionalKind::ForwardEuler;
}

std::string SweepScheme::label() const {
  std::ostringstream out;
  out << sweep_kind_name(kind);
  if (kind == SweepKind::ImplicitSdc) out << "(theta=" << theta << ")";
  out << " corrections=" << corrections << " provisional=" << provisional_name(provisional);
  return out.str();
}

SweepScheme SweepScheme::make(SweepKind kind, int corrections) {
  SweepScheme s;
  s.kind = kind;
  s.provisional = default_provisional(kind);
  s.corrections = corrections;
  return s;
}

SweepScheme SweepScheme::implicit_theta(double theta, int corrections) {
  SweepScheme s = make(SweepKind::ImplicitSdc, corrections);
  s.theta = theta;
  return s;
}

OrderPreset order_preset(SweepKind kind, int order) {
  if (order < 2 || order > 20) throw ConfigError("order presets cover orders 2..20");
  return OrderPreset{SweepScheme::make(kind, order - 1), order};
}

NodeSolution provisional(const QuadratureRule& rule, const OdeSystem& system,
                         const SweepScheme& scheme, const Vec& y_start, double h,
                         const SolveOptions& opts) {
  return detail::make_provisional(rule, VectorField{&system, opts}, scheme, y_start, h);
}

NodeSolution sweep(const QuadratureRule& rule, const OdeSystem& system, const SweepScheme& scheme,
                   const NodeSolution& prev, const SolveOptions& opts) {
  return detail::sweep_once(rule, VectorField{&system, opts}, scheme, prev);
}

Vec implicit_substep(const OdeSystem& system, const Vec& a, double alpha, bool use_split,
                     const SolveOptions& opts) {
  return newton_substep(system, a, alpha, use_split, opts);
}

Vec step(const QuadratureRule& rule, const OdeSystem& system, const SweepScheme& scheme,
         const Vec& y_start, double h, const SolveOptions& opts) {
  if (!(h > 0.0)) throw ConfigError("step size must be positive");
  return detail::run_step(rule, VectorField{&system, opts}, scheme, y_start, h, opts);
}

std::vector<Vec> integrate(const QuadratureRule& rule, const OdeSystem& system,
                           const SweepScheme& scheme, double final_time, long steps,
                           const SolveOptions& opts) {
  if (steps < 1) throw ConfigError("integrate requires at least one step");
  const double h = final_time / static_cast<double>(steps);
  std::vector<Vec> trajectory;
  trajectory.reserve(steps + 1);
  trajectory.push_back(system.y0);
  Vec y = system.y0;
  for (long k = 0; k < steps; ++k) {
    y = step(rule, system, scheme, y, h, opts);
    trajectory.push_back(y);
  }
  return trajectory;
}

NodeSolution collocation_solve(const QuadratureRule& rule, const OdeSystem& system,
                               const Vec& y_start, double h, const SolveOptions& opts) {
  const int num_nodes = rule.num_nodes;
  const int d = system.dimension;
  const int dim = num_nodes * d;
  const VectorField field{&system, opts};

  // Forward-Euler provisional makes a good Newton basin for desk problems.
  SweepScheme seed;
  seed.provisional = ProvisionalKind::ForwardEuler;
  NodeSolution sol = detail::make_provisional(rule, field, seed, y_start, h);

  std::vector<double> history;
  NodeSolution best = sol;
  double best_norm = std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (int it = 0; it <= opts.newton_max_iter; ++it) {
    for (int m = 0; m < num_nodes; ++m) sol.fvals[m] = system.rhs(sol.eta[m]);

    // Stacked residual: one block per node.  A node sitting at boundary 0 is
    // pinned to y_start; every other node is the right boundary of exactly
    // one subinterval.
    Vec residual(dim, 0.0);
    double state_norm = 0.0;
    if (rule.node_at_boundary[0] == 0)
      for (int i = 0; i < d; ++i) residual[i] = sol.eta[0][i] - y_start[i];
    for (int n = 0; n < rule.num_subintervals; ++n) {
      const int rn = rule.node_at_boundary[n + 1];
      if (rn < 0) break;
      const int ln = rule.node_at_boundary[n];
      const Vec& left = (ln >= 0) ? sol.eta[ln] : y_start;
      for (int i = 0; i < d; ++i) {
        double r = sol.eta[rn][i] - left[i];
        for (int m = 0; m < num_nodes; ++m) r -= h * rule.weights[n][m] * sol.fvals[m][i];
        residual[rn * d + i] = r;
      }
    }
    for (int m = 0; m < num_nodes; ++m) state_norm = std::max(state_norm, max_norm(sol.eta[m]));

    const double rnorm = max_norm(residual);
    history.push_back(rnorm);
    if (rnorm <= std::max(opts.newton_abs_floor, 0.1 * opts.newton_tol * (1.0 + state_norm)))
      return sol;
    // ambitious tolerances bottom out at the round-off floor; accept the best
    // iterate once the residual is tiny and no longer improving
    if (rnorm < best_norm) {
      best_norm = rnorm;
      best = sol;
      stalled = 0;
    } else if (++stalled >= 2 && best_norm <= 1e-10 * (1.0 + state_norm)) {
      return best;
    }
    if (it == opts.newton_max_iter) break;

    Mat jac(dim, Vec(dim, 0.0));
    std::vector<Mat> rhs_jac(num_nodes);
    for (int m = 0; m < num_nodes; ++m)
      rhs_jac[m] = system.jacobian ? system.jacobian(sol.eta[m]) : fd_jacobian(system.rhs, sol.eta[m]);

    if (rule.node_at_boundary[0] == 0)
      for (int i = 0; i < d; ++i) jac[i][i] = 1.0;
    for (int n = 0; n < rule.num_subintervals; ++n) {
      const int rn = rule.node_at_boundary[n + 1];
      if (rn < 0) break;
      const int ln = rule.node_at_boundary[n];
      for (int i = 0; i < d; ++i) {
        jac[rn * d + i][rn * d + i] += 1.0;
        if (ln >= 0) jac[rn * d + i][ln * d + i] -= 1.0;
        for (int m = 0; m < num_nodes; ++m) {
          const double c = h * rule.weights[n][m];
          for (int j = 0; j < d; ++j) jac[rn * d + i][m * d + j] -= c * rhs_jac[m][i][j];
        }
      }
    }

    const Vec dx = detail::lu_solve(std::move(jac), residual);
    for (int m = 0; m < num_nodes; ++m)
      for (int i = 0; i < d; ++i) sol.eta[m][i] -= dx[m * d + i];
  }
  throw NewtonDivergenceError("collocation Newton did not converge", std::move(history));
}

Vec final_value(const QuadratureRule& rule, const NodeSolution& sol) {
  return detail::close_step<VectorField>(rule, sol);
}

Vec interpolate(const QuadratureRule& rule, const NodeSolution& sol, double x) {
  Vec out(sol.eta0.size(), 0.0);
  for (int m = 0; m < rule.num_nodes; ++m)
    detail::add_scaled(out, eval_lagrange(rule, m, x), sol.eta[m]);
  return out;
}

}  // namespace sdc
