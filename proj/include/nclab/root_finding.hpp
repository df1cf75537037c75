#pragma once

#include "nclab/errors.hpp"

namespace nclab {

// Bisection for a zero of f on [lo, hi]; the endpoint values must have
// opposite signs (NoBracket otherwise). Returns the bracket midpoint once the
// bracket width drops below x_tol or floating-point resolution.
template <class F>
double bisect(F&& f, double lo, double hi, double x_tol) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw NoBracket("bisection endpoints do not bracket a sign change");
  while (hi - lo > x_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace nclab
