#include "sdc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

namespace sdc {

namespace {

constexpr double kPi = std::numbers::pi;

// P_n(u) and P_n'(u) on [-1,1] by the three-term recurrence.  The derivative
// form n*(u*P_n - P_{n-1})/(u^2 - 1) requires |u| != 1.
std::pair<double, double> legendre_pd(int n, double u) {
  if (n == 0) return {1.0, 0.0};
  double pm1 = 1.0;
  double p = u;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * u * p - (k - 1.0) * pm1) / k;
    pm1 = p;
    p = pk;
  }
  const double dp = n * (u * p - pm1) / (u * u - 1.0);
  return {p, dp};
}

// Safeguarded Newton inside a sign-change bracket.  Steps leaving the bracket
// fall back to bisection, so convergence is unconditional.
template <class FD>
double solve_in_bracket(FD&& fd, double a, double b, double fa) {
  double x = 0.5 * (a + b);
  for (int it = 0; it < 120; ++it) {
    const auto [f, df] = fd(x);
    if (f == 0.0) return x;
    if ((f > 0.0) == (fa > 0.0)) {
      a = x;
      fa = f;
    } else {
      b = x;
    }
    double xn = (df != 0.0) ? x - f / df : 0.5 * (a + b);
    if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
    const double dx = std::abs(xn - x);
    x = xn;
    if (dx <= 1e-16 * (1.0 + std::abs(x))) break;
    if (b - a <= 4e-16 * (1.0 + std::abs(x))) break;
  }
  return x;
}

// All roots of fd in (-1,1), located by a sign scan on a Chebyshev-spaced
// grid (dense near the endpoints, where Gauss-type roots cluster).
template <class FD>
std::vector<double> roots_in_open_interval(FD&& fd, int expected) {
  const int grid = std::max(256, 64 * (expected + 2));
  std::vector<double> roots;
  double u_prev = -std::cos(kPi * 0.5 / grid);
  double f_prev = fd(u_prev).first;
  for (int j = 1; j < grid; ++j) {
    const double u = -std::cos(kPi * (j + 0.5) / grid);
    const double f = fd(u).first;
    if (f == 0.0) {
      roots.push_back(u);
    } else if ((f > 0.0) != (f_prev > 0.0)) {
      roots.push_back(solve_in_bracket(fd, u_prev, u, f_prev));
    }
    u_prev = u;
    f_prev = f;
  }
  if (static_cast<int>(roots.size()) != expected) {
    std::ostringstream msg;
    msg << "node computation found " << roots.size() << " roots, expected " << expected;
    throw SolverError(msg.str());
  }
  return roots;
}

std::vector<double> map_to_unit(const std::vector<double>& u) {
  std::vector<double> x(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) x[i] = 0.5 * (1.0 + u[i]);
  return x;
}

// Gauss-Legendre nodes and weights on [0,1]; used to integrate the Lagrange
// basis exactly instead of solving an ill-conditioned Vandermonde system.
struct UnitGauss {
  std::vector<double> x, w;
};

UnitGauss unit_gauss(int k) {
  UnitGauss g;
  g.x = make_nodes(NodeFamily::GaussLegendre, k);
  g.w.resize(k);
  for (int i = 0; i < k; ++i) {
    const double u = 2.0 * g.x[i] - 1.0;
    const auto [p, dp] = legendre_pd(k, u);
    (void)p;
    g.w[i] = 1.0 / ((1.0 - u * u) * dp * dp);
  }
  return g;
}

double integrate_lagrange(const QuadratureRule& rule, const UnitGauss& aux, int m, double a,
                          double b) {
  double s = 0.0;
  const double len = b - a;
  for (std::size_t i = 0; i < aux.x.size(); ++i)
    s += aux.w[i] * eval_lagrange(rule, m, a + len * aux.x[i]);
  return s * len;
}

// Golden-section search for the maximum of |l_m| inside [a,b].
double refine_abs_max(const QuadratureRule& rule, int m, double a, double b) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = std::abs(eval_lagrange(rule, m, x1));
  double f2 = std::abs(eval_lagrange(rule, m, x2));
  while (b - a > 1e-12) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = std::abs(eval_lagrange(rule, m, x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = std::abs(eval_lagrange(rule, m, x1));
    }
  }
  return std::max(f1, f2);
}

void classify_endpoints(NodeFamily family, int m, bool& left, bool& right) {
  switch (family) {
    case NodeFamily::Uniform:
      left = right = (m >= 2);
      break;
    case NodeFamily::Chebyshev:
    case NodeFamily::GaussLegendre:
      left = right = false;
      break;
    case NodeFamily::GaussRadauIIA:
      left = false;
      right = true;
      break;
    case NodeFamily::GaussLobatto:
      left = right = true;
      break;
    case NodeFamily::Custom:
      break;
  }
}

QuadratureRule assemble_rule(NodeFamily family, std::vector<double> nodes, bool left_node,
                             bool right_node) {
  QuadratureRule rule;
  rule.family = family;
  rule.nodes = std::move(nodes);
  rule.num_nodes = static_cast<int>(rule.nodes.size());
  rule.left_endpoint_is_node = left_node;
  rule.right_endpoint_is_node = right_node;

  const int m = rule.num_nodes;
  rule.num_subintervals = m - 1 + (left_node ? 0 : 1) + (right_node ? 0 : 1);
  const int n = rule.num_subintervals;

  rule.boundaries.reserve(n + 1);
  rule.boundaries.push_back(0.0);
  for (int j = 1; j < n; ++j) rule.boundaries.push_back(rule.nodes[left_node ? j : j - 1]);
  rule.boundaries.push_back(1.0);

  rule.node_at_boundary.resize(n + 1);
  rule.node_at_boundary[0] = left_node ? 0 : -1;
  for (int j = 1; j < n; ++j) rule.node_at_boundary[j] = left_node ? j : j - 1;
  rule.node_at_boundary[n] = right_node ? m - 1 : -1;

  rule.denominators.resize(m);
  for (int i = 0; i < m; ++i) {
    double c = 1.0;
    for (int k = 0; k < m; ++k)
      if (k != i) c *= rule.nodes[i] - rule.nodes[k];
    rule.denominators[i] = c;
  }

  const UnitGauss aux = unit_gauss((m + 1) / 2 + 2);
  rule.weights.assign(n, std::vector<double>(m));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      rule.weights[j][i] = integrate_lagrange(rule, aux, i, rule.boundaries[j], rule.boundaries[j + 1]);
  return rule;
}

}  // namespace

std::string family_name(NodeFamily family) {
  switch (family) {
    case NodeFamily::Uniform: return "uniform";
    case NodeFamily::Chebyshev: return "chebyshev";
    case NodeFamily::GaussLegendre: return "legendre";
    case NodeFamily::GaussRadauIIA: return "gauss-radau";
    case NodeFamily::GaussLobatto: return "gauss-lobatto";
    case NodeFamily::Custom: return "custom";
  }
  return "unknown";
}

NodeFamily family_from_name(const std::string& name) {
  if (name == "uniform") return NodeFamily::Uniform;
  if (name == "chebyshev") return NodeFamily::Chebyshev;
  if (name == "legendre" || name == "gauss-legendre") return NodeFamily::GaussLegendre;
  if (name == "radau" || name == "gauss-radau" || name == "radau-iia")
    return NodeFamily::GaussRadauIIA;
  if (name == "lobatto" || name == "gauss-lobatto") return NodeFamily::GaussLobatto;
  throw ConfigError("unknown node family '" + name +
                    "' (valid: uniform, chebyshev, legendre, gauss-radau, gauss-lobatto)");
}

std::vector<NodeFamily> standard_families() {
  return {NodeFamily::Uniform, NodeFamily::Chebyshev, NodeFamily::GaussLegendre,
          NodeFamily::GaussRadauIIA, NodeFamily::GaussLobatto};
}

std::vector<double> make_nodes(NodeFamily family, int num_nodes) {
  const int m = num_nodes;
  if (m < 1) throw ConfigError("node count must be at least 1");
  switch (family) {
    case NodeFamily::Uniform: {
      if (m == 1) return {0.5};  // midpoint; neither endpoint is used
      std::vector<double> x(m);
      for (int i = 0; i < m; ++i) x[i] = static_cast<double>(i) / (m - 1);
      return x;
    }
    case NodeFamily::Chebyshev: {
      std::vector<double> x(m);
      for (int i = 0; i < m; ++i) x[i] = 0.5 * (1.0 - std::cos((2.0 * i + 1.0) * kPi / (2.0 * m)));
      return x;
    }
    case NodeFamily::GaussLegendre: {
      auto fd = [m](double u) { return legendre_pd(m, u); };
      return map_to_unit(roots_in_open_interval(fd, m));
    }
    case NodeFamily::GaussRadauIIA: {
      if (m == 1) return {1.0};
      // Interior nodes solve P_{m-1}(u) = P_m(u); deflate the known root u=1.
      auto fd = [m](double u) {
        const auto [pa, da] = legendre_pd(m - 1, u);
        const auto [pb, db] = legendre_pd(m, u);
        const double r = (pa - pb) / (1.0 - u);
        const double dr = ((da - db) + r) / (1.0 - u);
        return std::pair<double, double>{r, dr};
      };
      std::vector<double> x = map_to_unit(roots_in_open_interval(fd, m - 1));
      x.push_back(1.0);
      return x;
    }
    case NodeFamily::GaussLobatto: {
      if (m < 2) throw ConfigError("gauss-lobatto requires at least 2 nodes");
      std::vector<double> x{0.0};
      if (m > 2) {
        // Interior nodes are the roots of P'_{m-1}; its derivative follows
        // from the Legendre differential equation.
        auto fd = [m](double u) {
          const auto [p, dp] = legendre_pd(m - 1, u);
          const double ddp = (2.0 * u * dp - (m - 1.0) * m * p) / (1.0 - u * u);
          return std::pair<double, double>{dp, ddp};
        };
        for (double xi : map_to_unit(roots_in_open_interval(fd, m - 2))) x.push_back(xi);
      }
      x.push_back(1.0);
      return x;
    }
    case NodeFamily::Custom:
      throw ConfigError("custom rules are built from explicit nodes, not a family");
  }
  throw ConfigError("unsupported node family");
}

std::string QuadratureRule::label() const {
  return family_name(family) + "-" + std::to_string(num_nodes);
}

QuadratureRule make_rule(NodeFamily family, int num_nodes) {
  std::vector<double> nodes = make_nodes(family, num_nodes);
  bool left = false, right = false;
  classify_endpoints(family, num_nodes, left, right);
  return assemble_rule(family, std::move(nodes), left, right);
}

QuadratureRule make_rule(const std::vector<double>& custom_nodes) {
  if (custom_nodes.empty()) throw ConfigError("custom node set is empty");
  std::vector<double> nodes = custom_nodes;
  constexpr double snap = 1e-12;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (std::abs(nodes[i]) < snap) nodes[i] = 0.0;
    if (std::abs(nodes[i] - 1.0) < snap) nodes[i] = 1.0;
    if (nodes[i] < 0.0 || nodes[i] > 1.0)
      throw ConfigError("custom nodes must lie in [0,1]");
    if (i > 0 && nodes[i] <= nodes[i - 1])
      throw ConfigError("custom nodes must be strictly increasing");
  }
  const bool left = nodes.front() == 0.0;
  const bool right = nodes.back() == 1.0;
  if (nodes.size() == 1 && left && right) throw ConfigError("degenerate custom node set");
  return assemble_rule(NodeFamily::Custom, std::move(nodes), left, right);
}

double eval_lagrange(const QuadratureRule& rule, int m, double x) {
  double p = 1.0;
  for (int k = 0; k < rule.num_nodes; ++k)
    if (k != m) p *= x - rule.nodes[k];
  return p / rule.denominators[m];
}

double lebesgue_max(const QuadratureRule& rule) {
  constexpr int samples = 2048;
  double best = 1.0;  // l_m(xi_m) = 1, so the max is never below 1
  for (int m = 0; m < rule.num_nodes; ++m) {
    int arg = 0;
    double fmax = -1.0;
    for (int i = 0; i <= samples; ++i) {
      const double v = std::abs(eval_lagrange(rule, m, static_cast<double>(i) / samples));
      if (v > fmax) {
        fmax = v;
        arg = i;
      }
    }
    const double lo = static_cast<double>(std::max(0, arg - 1)) / samples;
    const double hi = static_cast<double>(std::min(samples, arg + 1)) / samples;
    best = std::max(best, refine_abs_max(rule, m, lo, hi));
  }
  return best;
}

double lebesgue_max_sampled(const QuadratureRule& rule, int samples) {
  if (samples < 2) throw ConfigError("lebesgue_max_sampled needs at least 2 samples");
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = static_cast<double>(i) / (samples - 1);
    for (int m = 0; m < rule.num_nodes; ++m)
      best = std::max(best, std::abs(eval_lagrange(rule, m, x)));
  }
  return best;
}

std::vector<double> wn_constants(const QuadratureRule& rule) {
  const UnitGauss aux = unit_gauss((rule.num_nodes + 1) / 2 + 2);
  std::vector<double> wn(rule.num_subintervals, 0.0);
  for (int n = 0; n < rule.num_subintervals; ++n) {
    const double a = rule.boundaries[n];
    const double b = rule.boundaries[n + 1];
    for (int m = 0; m < rule.num_nodes; ++m) {
      // l_m changes sign only at the other nodes; split there and integrate
      // each signed piece exactly.
      std::vector<double> cuts{a};
      for (int k = 0; k < rule.num_nodes; ++k)
        if (k != m && rule.nodes[k] > a + 1e-15 && rule.nodes[k] < b - 1e-15)
          cuts.push_back(rule.nodes[k]);
      cuts.push_back(b);
      std::sort(cuts.begin(), cuts.end());
      for (std::size_t p = 0; p + 1 < cuts.size(); ++p)
        wn[n] += std::abs(integrate_lagrange(rule, aux, m, cuts[p], cuts[p + 1]));
    }
  }
  return wn;
}

}  // namespace sdc
