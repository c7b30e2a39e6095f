#pragma once

#include <string>
#include <vector>

#include "sdc/quadrature.hpp"
#include "sdc/sweeper.hpp"
#include "sdc/types.hpp"

namespace sdc {

struct GridSpec {
  double re_min = -6.0, re_max = 2.0;
  double im_min = -5.0, im_max = 5.0;
  int nx = 401, ny = 401;

  // Wider window for high-order schemes, which have larger regions.
  static GridSpec for_order(int order);
};

// Dense |rho(z)| samples.  Implicit singularities are stored as +infinity;
// NaN never appears.
struct StabilityGrid {
  GridSpec spec;
  std::vector<double> values;  // (ix, iy) -> values[ix*ny + iy]

  double re_at(int ix) const;
  double im_at(int iy) const;
  double at(int ix, int iy) const { return values[static_cast<std::size_t>(ix) * spec.ny + iy]; }

  // Header "re,im,abs_rho"; rows loop re in the outer loop, im inner.
  std::string to_csv() const;
};

// Amplification factor: one step of the scheme on y' = z*y with y0 = 1 and
// h = 1 (rho depends only on z = lambda*h).  Implicit substeps use the
// closed-form complex solve.  implicit_fraction sigma splits the right-hand
// side as lambda_I = sigma*z, lambda_E = (1-sigma)*z for the semi-implicit
// kinds; the default treats the problem as unsplit.
Cplx amplification(const SweepScheme& scheme, const QuadratureRule& rule, Cplx z,
                   const SolveOptions& opts = {}, double implicit_fraction = 1.0);

StabilityGrid scan_region(const SweepScheme& scheme, const QuadratureRule& rule,
                          const GridSpec& grid, const SolveOptions& opts = {},
                          double implicit_fraction = 1.0);

}  // namespace sdc
