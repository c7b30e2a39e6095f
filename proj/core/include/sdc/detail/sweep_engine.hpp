#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "sdc/errors.hpp"
#include "sdc/quadrature.hpp"
#include "sdc/sweeper.hpp"

// Sweep formulas written once, generic over the arithmetic field.  The real
// path instantiates this with a Newton-backed vector field; the stability
// module instantiates it with a complex scalar linear field whose implicit
// substeps are closed-form divisions.
//
// A Field provides:
//   using State;
//   State zero() const;
//   State rhs(const State&) const;            f
//   State rhs_implicit(const State&) const;   f_I (f when the system is unsplit)
//   State rhs_explicit(const State&) const;   f_E (zero when unsplit)
//   State solve_implicit(const State& a, double alpha, RhsPart) const;
//     -> eta satisfying eta = a + alpha*g(eta)

namespace sdc::detail {

enum class RhsPart { Full, Implicit };

inline void add_scaled(Vec& y, double c, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}
inline void add_scaled(Cplx& y, double c, const Cplx& x) { y += c * x; }

inline double dist_inf(const Vec& a, const Vec& b) { return max_dist(a, b); }
inline double dist_inf(const Cplx& a, const Cplx& b) { return std::abs(a - b); }

template <class Field>
using StateOf = typename Field::State;

// Initial iterate.  Marching kinds walk the subintervals whose right
// boundary is a node; a trailing node-free subinterval holds no unknown.
template <class Field>
NodeSolutionT<StateOf<Field>> make_provisional(const QuadratureRule& rule, const Field& field,
                                               const SweepScheme& scheme,
                                               const StateOf<Field>& y_start, double h) {
  using State = StateOf<Field>;
  NodeSolutionT<State> sol;
  sol.h = h;
  sol.eta0 = y_start;
  sol.eta.assign(rule.num_nodes, y_start);

  if (scheme.provisional != ProvisionalKind::CopyConstant) {
    State cur = y_start;
    for (int n = 0; n < rule.num_subintervals; ++n) {
      const int rn = rule.node_at_boundary[n + 1];
      if (rn < 0) break;
      const double hn = h * rule.subinterval_length(n);
      switch (scheme.provisional) {
        case ProvisionalKind::ForwardEuler: {
          State next = cur;
          add_scaled(next, hn, field.rhs(cur));
          cur = std::move(next);
          break;
        }
        case ProvisionalKind::BackwardEuler: {
          const RhsPart part = (scheme.kind == SweepKind::ModifiedSisdc) ? RhsPart::Implicit
                                                                         : RhsPart::Full;
          cur = field.solve_implicit(cur, hn, part);
          break;
        }
        case ProvisionalKind::ImexEuler: {
          State a = cur;
          add_scaled(a, hn, field.rhs_explicit(cur));
          cur = field.solve_implicit(a, hn, RhsPart::Implicit);
          break;
        }
        case ProvisionalKind::TrapezoidRule: {
          State a = cur;
          add_scaled(a, 0.5 * hn, field.rhs(cur));
          cur = field.solve_implicit(a, 0.5 * hn, RhsPart::Full);
          break;
        }
        case ProvisionalKind::CopyConstant:
          break;
      }
      sol.eta[rn] = cur;
    }
  }

  sol.fvals.resize(rule.num_nodes);
  for (int m = 0; m < rule.num_nodes; ++m) sol.fvals[m] = field.rhs(sol.eta[m]);
  return sol;
}

// One correction pass.  eta0 is pinned, so the explicit difference terms at
// the left interval boundary vanish identically and are skipped.
template <class Field>
NodeSolutionT<StateOf<Field>> sweep_once(const QuadratureRule& rule, const Field& field,
                                         const SweepScheme& scheme,
                                         const NodeSolutionT<StateOf<Field>>& prev) {
  using State = StateOf<Field>;
  const int num_nodes = rule.num_nodes;
  const double h = prev.h;

  NodeSolutionT<State> sol;
  sol.h = h;
  sol.eta0 = prev.eta0;
  sol.eta.resize(num_nodes);
  sol.fvals.resize(num_nodes);
  if (rule.node_at_boundary[0] == 0) {
    sol.eta[0] = prev.eta0;
    sol.fvals[0] = field.rhs(sol.eta[0]);
  }

  State cur_left = prev.eta0;
  for (int n = 0; n < rule.num_subintervals; ++n) {
    const int rn = rule.node_at_boundary[n + 1];
    if (rn < 0) break;
    const int ln = rule.node_at_boundary[n];
    const double hn = h * rule.subinterval_length(n);

    State quad = field.zero();
    for (int m = 0; m < num_nodes; ++m) add_scaled(quad, h * rule.weights[n][m], prev.fvals[m]);

    State val;
    switch (scheme.kind) {
      case SweepKind::Picard: {
        val = cur_left;
        add_scaled(val, 1.0, quad);
        break;
      }
      case SweepKind::ExplicitSdc: {
        val = cur_left;
        add_scaled(val, 1.0, quad);
        if (ln >= 0) {
          State diff = sol.fvals[ln];
          add_scaled(diff, -1.0, prev.fvals[ln]);
          add_scaled(val, hn, diff);
        }
        break;
      }
      case SweepKind::ImplicitSdc: {
        const double alpha = scheme.theta * hn;
        State a = cur_left;
        add_scaled(a, 1.0, quad);
        add_scaled(a, -alpha, prev.fvals[rn]);
        val = field.solve_implicit(a, alpha, RhsPart::Full);
        break;
      }
      case SweepKind::Sisdc: {
        State a = cur_left;
        add_scaled(a, 1.0, quad);
        add_scaled(a, -hn, field.rhs_implicit(prev.eta[rn]));
        if (ln >= 0) {
          State diff = field.rhs_explicit(sol.eta[ln]);
          add_scaled(diff, -1.0, field.rhs_explicit(prev.eta[ln]));
          add_scaled(a, hn, diff);
        }
        val = field.solve_implicit(a, hn, RhsPart::Implicit);
        break;
      }
      case SweepKind::ModifiedSisdc: {
        State a = cur_left;
        add_scaled(a, 1.0, quad);
        add_scaled(a, -hn, field.rhs_implicit(prev.eta[rn]));
        val = field.solve_implicit(a, hn, RhsPart::Implicit);
        break;
      }
      case SweepKind::TrapezoidSdc: {
        const double half = 0.5 * hn;
        State a = cur_left;
        add_scaled(a, 1.0, quad);
        add_scaled(a, -half, prev.fvals[rn]);
        if (ln >= 0) {
          State diff = sol.fvals[ln];
          add_scaled(diff, -1.0, prev.fvals[ln]);
          add_scaled(a, half, diff);
        }
        val = field.solve_implicit(a, half, RhsPart::Full);
        break;
      }
    }

    sol.eta[rn] = std::move(val);
    sol.fvals[rn] = field.rhs(sol.eta[rn]);
    cur_left = sol.eta[rn];
  }
  return sol;
}

template <class Field>
NodeSolutionT<StateOf<Field>> run_corrections(const QuadratureRule& rule, const Field& field,
                                              const SweepScheme& scheme,
                                              NodeSolutionT<StateOf<Field>> sol,
                                              const SolveOptions& opts) {
  if (opts.fixed_point_tol) {
    for (int it = 0; it < opts.max_sweeps; ++it) {
      auto next = sweep_once(rule, field, scheme, sol);
      double delta = 0.0;
      for (int m = 0; m < rule.num_nodes; ++m) {
        const double d = dist_inf(next.eta[m], sol.eta[m]);
        // NaN must not be swallowed by max(); a NaN iterate is divergence
        if (std::isnan(d)) delta = std::numeric_limits<double>::infinity();
        delta = std::max(delta, d);
      }
      sol = std::move(next);
      if (delta < *opts.fixed_point_tol) return sol;
    }
    throw SolverError("sweeps did not reach the fixed-point tolerance within max_sweeps");
  }
  for (int p = 0; p < scheme.corrections; ++p) sol = sweep_once(rule, field, scheme, sol);
  return sol;
}

template <class Field>
StateOf<Field> close_step(const QuadratureRule& rule, const NodeSolutionT<StateOf<Field>>& sol) {
  if (rule.right_endpoint_is_node) return sol.eta.back();
  // Right endpoint is not a node: finish with the quadrature update over the
  // trailing subinterval, evaluated with the final iterate.  At the fixed
  // point this is the collocation output and keeps its superconvergence.
  const int n = rule.num_subintervals - 1;
  StateOf<Field> out = sol.eta[rule.node_at_boundary[n]];
  for (int m = 0; m < rule.num_nodes; ++m)
    add_scaled(out, sol.h * rule.weights[n][m], sol.fvals[m]);
  return out;
}

template <class Field>
StateOf<Field> run_step(const QuadratureRule& rule, const Field& field, const SweepScheme& scheme,
                        const StateOf<Field>& y_start, double h, const SolveOptions& opts) {
  auto sol = make_provisional(rule, field, scheme, y_start, h);
  sol = run_corrections(rule, field, scheme, std::move(sol), opts);
  return close_step<Field>(rule, sol);
}

}  // namespace sdc::detail
