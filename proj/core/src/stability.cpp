#include "sdc/stability.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "sdc/detail/sweep_engine.hpp"

namespace sdc {

namespace {

struct ComplexLinearField {
  using State = Cplx;
  Cplx lambda_implicit;
  Cplx lambda_explicit;

  Cplx lambda() const { return lambda_implicit + lambda_explicit; }
  State zero() const { return {0.0, 0.0}; }
  State rhs(const State& y) const { return lambda() * y; }
  State rhs_implicit(const State& y) const { return lambda_implicit * y; }
  State rhs_explicit(const State& y) const { return lambda_explicit * y; }
  State solve_implicit(const State& a, double alpha, detail::RhsPart part) const {
    const Cplx lam = (part == detail::RhsPart::Implicit) ? lambda_implicit : lambda();
    const Cplx divisor = 1.0 - alpha * lam;
    if (std::abs(divisor) < 1e-14) throw SingularSubstepError("1 - alpha*lambda vanished");
    return a / divisor;
  }
};

}  // namespace

GridSpec GridSpec::for_order(int order) {
  GridSpec g;
  if (order >= 6) {
    g.re_min = -15.0;
    g.re_max = 5.0;
    g.im_min = -12.0;
    g.im_max = 12.0;
  }
  return g;
}

double StabilityGrid::re_at(int ix) const {
  if (spec.nx == 1) return spec.re_min;
  return spec.re_min + (spec.re_max - spec.re_min) * ix / (spec.nx - 1);
}

double StabilityGrid::im_at(int iy) const {
  if (spec.ny == 1) return spec.im_min;
  return spec.im_min + (spec.im_max - spec.im_min) * iy / (spec.ny - 1);
}

std::string StabilityGrid::to_csv() const {
  std::string out = "re,im,abs_rho\n";
  char line[128];
  for (int ix = 0; ix < spec.nx; ++ix) {
    for (int iy = 0; iy < spec.ny; ++iy) {
      std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", re_at(ix), im_at(iy), at(ix, iy));
      out += line;
    }
  }
  return out;
}

Cplx amplification(const SweepScheme& scheme, const QuadratureRule& rule, Cplx z,
                   const SolveOptions& opts, double implicit_fraction) {
  ComplexLinearField field{implicit_fraction * z, (1.0 - implicit_fraction) * z};
  SolveOptions complex_opts = opts;
  complex_opts.field = ScalarField::ComplexScalar;
  return detail::run_step(rule, field, scheme, Cplx{1.0, 0.0}, 1.0, complex_opts);
}

StabilityGrid scan_region(const SweepScheme& scheme, const QuadratureRule& rule,
                          const GridSpec& grid, const SolveOptions& opts,
                          double implicit_fraction) {
  if (grid.nx < 2 || grid.ny < 2) throw ConfigError("stability grid needs nx, ny >= 2");
  StabilityGrid out;
  out.spec = grid;
  out.values.resize(static_cast<std::size_t>(grid.nx) * grid.ny);
  // Grid points are independent; the loop is deterministic and trivially
  // parallelizable.
  for (int ix = 0; ix < grid.nx; ++ix) {
    for (int iy = 0; iy < grid.ny; ++iy) {
      double value;
      try {
        value = std::abs(amplification(scheme, rule, {out.re_at(ix), out.im_at(iy)}, opts,
                                       implicit_fraction));
      } catch (const SolverError&) {
        value = std::numeric_limits<double>::infinity();
      }
      if (std::isnan(value)) value = std::numeric_limits<double>::infinity();
      out.values[static_cast<std::size_t>(ix) * grid.ny + iy] = value;
    }
  }
  return out;
}

}  // namespace sdc
