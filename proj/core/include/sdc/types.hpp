#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace sdc {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;  // dense row-major, rows of equal length
using Cplx = std::complex<double>;

// Arithmetic domain a solve runs over.  Complex mode is reserved for the
// scalar linear problem used by stability scans.
enum class ScalarField { RealVector, ComplexScalar };

// Both norms propagate NaN instead of letting std::max swallow it.
inline double max_norm(const Vec& v) {
  double m = 0.0;
  for (double x : v) {
    const double a = std::abs(x);
    if (std::isnan(a)) return a;
    m = std::max(m, a);
  }
  return m;
}

inline double max_dist(const Vec& a, const Vec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (std::isnan(d)) return d;
    m = std::max(m, d);
  }
  return m;
}

}  // namespace sdc
