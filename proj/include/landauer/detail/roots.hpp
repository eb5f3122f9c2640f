#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "landauer/errors.hpp"

namespace landauer::detail {

/// Brent's method on a bracket [a, b] with f(a), f(b) of opposite sign (or
/// zero). Iterates to machine precision in x.
template <class F>
double brent_root(F&& f, double a, double b, double fa, double fb, int max_iterations = 300) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw NoConvergence("brent_root: interval does not bracket a root");
  }
  double c = b;
  double fc = fb;
  double d = b - a;
  double e = d;
  for (int it = 0; it < max_iterations; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * eps * std::abs(b) + std::numeric_limits<double>::min();
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol || fb == 0.0) return b;
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : std::copysign(tol, xm);
    fb = f(b);
  }
  throw NoConvergence("brent_root: iteration budget exhausted");
}

}  // namespace landauer::detail
