#pragma once

// Test-only reference numerics, deliberately independent of the library's
// quadrature/root-finding paths: plain bisection and composite Simpson.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace oracle {

using complex = std::complex<double>;

/// Plain bisection; assumes f(lo) and f(hi) straddle zero.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) throw std::runtime_error("oracle::bisect: no sign change");
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

/// Composite Simpson's rule with n (even) panels.
inline complex simpson(const std::function<complex(double)>& f, double lo, double hi, int n) {
  if (n % 2 != 0) ++n;
  const double h = (hi - lo) / n;
  complex acc = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) acc += f(lo + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
  return acc * (h / 3.0);
}

inline double simpson_real(const std::function<double(double)>& f, double lo, double hi, int n) {
  return simpson([&](double x) { return complex(f(x), 0.0); }, lo, hi, n).real();
}

}  // namespace oracle
