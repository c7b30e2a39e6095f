#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdc/problems.hpp"
#include "sdc/quadrature.hpp"
#include "sdc/types.hpp"

namespace sdc {

// Which correction formula a sweep applies.  ImplicitSdc carries the theta
// scaling of its backward-Euler difference term; theta = 1 is the classical
// implicit sweep, theta = 0 degenerates to Picard.
enum class SweepKind { Picard, ExplicitSdc, ImplicitSdc, Sisdc, ModifiedSisdc, TrapezoidSdc };

// Marching method used for the initial (p = 0) iterate.  For ModifiedSisdc,
// BackwardEuler applies backward Euler to the implicit part only.
enum class ProvisionalKind { CopyConstant, ForwardEuler, BackwardEuler, ImexEuler, TrapezoidRule };

std::string sweep_kind_name(SweepKind kind);
SweepKind sweep_kind_from_name(const std::string& name);
std::string provisional_name(ProvisionalKind kind);
ProvisionalKind provisional_from_name(const std::string& name);
ProvisionalKind default_provisional(SweepKind kind);

struct SweepScheme {
  SweepKind kind = SweepKind::Picard;
  ProvisionalKind provisional = ProvisionalKind::ForwardEuler;
  int corrections = 0;  // P
  double theta = 1.0;   // ImplicitSdc only

  std::string label() const;

  static SweepScheme make(SweepKind kind, int corrections);
  static SweepScheme implicit_theta(double theta, int corrections);
};

// Minimal (points, corrections) pair reaching a given order on uniform nodes:
// M = order quadrature points and order-1 corrections on a first-order
// provisional solution.
struct OrderPreset {
  SweepScheme scheme;
  int num_nodes = 0;
};
OrderPreset order_preset(SweepKind kind, int order);

struct SolveOptions {
  double newton_tol = 1e-12;       // relative
  double newton_abs_floor = 1e-14;
  int newton_max_iter = 50;
  std::optional<double> fixed_point_tol;  // iterate-to-convergence mode
  int max_sweeps = 1000;
  ScalarField field = ScalarField::RealVector;
};

// One iterate: the left value eta0 plus the solution values at the
// quadrature nodes, with the right-hand side cached at every node.  fvals is
// kept coherent with eta by every operation that produces a NodeSolution.
template <class State>
struct NodeSolutionT {
  State eta0{};
  std::vector<State> eta;
  std::vector<State> fvals;
  double h = 0.0;
};
using NodeSolution = NodeSolutionT<Vec>;

// Initial iterate marched over the subintervals with the scheme's
// provisional method.
NodeSolution provisional(const QuadratureRule& rule, const OdeSystem& system,
                         const SweepScheme& scheme, const Vec& y_start, double h,
                         const SolveOptions& opts = {});

// One correction pass p -> p+1.  The quadrature term always integrates the
// previous iterate's cached right-hand side values.
NodeSolution sweep(const QuadratureRule& rule, const OdeSystem& system, const SweepScheme& scheme,
                   const NodeSolution& prev, const SolveOptions& opts = {});

// Solves eta = a + alpha*g(eta) with g = f (or g = f_implicit when use_split
// is set and the system has a split), by Newton with analytic or central
// finite-difference Jacobians.  alpha = 0 returns a.
Vec implicit_substep(const OdeSystem& system, const Vec& a, double alpha, bool use_split,
                     const SolveOptions& opts = {});

// Provisional plus corrections (or sweeps to fixed_point_tol when set),
// returning the solution value at t = h.
Vec step(const QuadratureRule& rule, const OdeSystem& system, const SweepScheme& scheme,
         const Vec& y_start, double h, const SolveOptions& opts = {});

// Uniform step loop over [0, final_time]; returns states at the step
// boundaries (steps+1 entries, starting with y0).
std::vector<Vec> integrate(const QuadratureRule& rule, const OdeSystem& system,
                           const SweepScheme& scheme, double final_time, long steps,
                           const SolveOptions& opts = {});

// Newton solve of the coupled collocation system over all nodes at once; the
// common fixed point of every sweep kind.
NodeSolution collocation_solve(const QuadratureRule& rule, const OdeSystem& system,
                               const Vec& y_start, double h, const SolveOptions& opts = {});

// Value at t = h of a completed iterate: the right-endpoint node value, or
// the quadrature update over the trailing subinterval when the right
// endpoint is not a node.
Vec final_value(const QuadratureRule& rule, const NodeSolution& sol);

// Lagrange interpolant of the node values evaluated at x in [0,1]
// (i.e. at time x*h).
Vec interpolate(const QuadratureRule& rule, const NodeSolution& sol, double x);

}  // namespace sdc
