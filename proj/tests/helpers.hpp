#ifndef PEGSCOPE_TESTS_HELPERS_HPP
#define PEGSCOPE_TESTS_HELPERS_HPP

#include <cmath>
#include <functional>

#include "pegscope/geometry.hpp"

namespace testutil {

// Closed-form primitive of the unit circle: (s - sin(2s)/2)/2.
inline double fstd(double s) { return 0.5 * s - 0.25 * std::sin(2.0 * s); }

// Adaptive Simpson quadrature (independent oracle for action integrals).
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace testutil

#endif
