#pragma once

#include <string>
#include <vector>

#include "sdc/errors.hpp"

namespace sdc {

enum class NodeFamily { Uniform, Chebyshev, GaussLegendre, GaussRadauIIA, GaussLobatto, Custom };

std::string family_name(NodeFamily family);
// Accepts "uniform", "chebyshev", "legendre"/"gauss-legendre", "radau"/"gauss-radau",
// "lobatto"/"gauss-lobatto".  Throws ConfigError listing the valid names otherwise.
NodeFamily family_from_name(const std::string& name);
std::vector<NodeFamily> standard_families();

// Quadrature points xi_1 < ... < xi_M on [0,1].  Gauss-type nodes are found by
// bracketed Newton iteration on the defining orthogonal-polynomial condition.
// Uniform and GaussLegendre admit M = 1; families that include both endpoints
// require M >= 2.
std::vector<double> make_nodes(NodeFamily family, int num_nodes);

// A node set together with the subinterval structure it induces and the
// weight matrix w[n][m] = integral of the m-th Lagrange basis polynomial over
// subinterval n.  Node and subinterval indices are zero-based throughout.
//
// Subinterval count follows the endpoint convention: N = M-1 if both interval
// endpoints are nodes, N = M if exactly one is, N = M+1 if neither is.
struct QuadratureRule {
  NodeFamily family = NodeFamily::Custom;
  int num_nodes = 0;         // M
  int num_subintervals = 0;  // N
  std::vector<double> nodes;                  // size M, strictly increasing in [0,1]
  std::vector<double> boundaries;             // size N+1; boundaries[0]=0, boundaries[N]=1
  std::vector<std::vector<double>> weights;   // N x M
  std::vector<double> denominators;           // Lagrange denominators c_m
  bool left_endpoint_is_node = false;
  bool right_endpoint_is_node = false;
  // node index sitting at boundary j, or -1 when the boundary is not a node
  // (only possible at j = 0 and j = N).
  std::vector<int> node_at_boundary;

  double subinterval_length(int n) const { return boundaries[n + 1] - boundaries[n]; }
  std::string label() const;  // e.g. "uniform-3", "custom-4"
};

QuadratureRule make_rule(NodeFamily family, int num_nodes);

// Escape hatch for user-supplied node sets; validated (strictly increasing,
// inside [0,1]) and classified by endpoint membership.
QuadratureRule make_rule(const std::vector<double>& custom_nodes);

// l_m(x) for the rule's m-th node (m zero-based).
double eval_lagrange(const QuadratureRule& rule, int m, double x);

// max over m and x in [0,1] of |l_m(x)|, located by dense sampling per basis
// polynomial plus golden-section refinement.
double lebesgue_max(const QuadratureRule& rule);

// Same quantity evaluated only on an equispaced grid of `samples` points
// (endpoints included), with no refinement.  Slightly undershoots the true
// maximum when a peak falls between grid points; kept because published
// tables of these constants are customarily produced exactly this way.
double lebesgue_max_sampled(const QuadratureRule& rule, int samples = 1000);

// W_n = sum_m integral over subinterval n of |l_m|, one value per subinterval.
// Each l_m is split at its (known) roots inside the subinterval and every
// signed piece is integrated exactly.
std::vector<double> wn_constants(const QuadratureRule& rule);

}  // namespace sdc
