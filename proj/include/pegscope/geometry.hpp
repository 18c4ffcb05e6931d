#ifndef PEGSCOPE_GEOMETRY_HPP
#define PEGSCOPE_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace pegscope {

// Plane points are complex numbers z = x + i*xi.
using Point = std::complex<double>;

inline constexpr double kPi = std::numbers::pi_v<double>;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

inline double dot(Point a, Point b) { return a.real() * b.real() + a.imag() * b.imag(); }
inline double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double norm2(Point a) { return dot(a, a); }

// Wrap x into [0, period).
inline double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  if (r >= period) r = 0;
  return r;
}

// Distance between two parameters on a circle of the given period.
inline double circular_dist(double a, double b, double period) {
  double d = std::fabs(wrap(a, period) - wrap(b, period));
  return std::min(d, period - d);
}

// Orientation of the triangle (a,b,c): >0 ccw, <0 cw, 0 collinear.
// Filtered evaluation: plain double with an error bound, __float128 fallback
// when the filter is inconclusive.
inline int orient2d(Point a, Point b, Point c) {
  const double detl = (b.real() - a.real()) * (c.imag() - a.imag());
  const double detr = (b.imag() - a.imag()) * (c.real() - a.real());
  const double det = detl - detr;
  const double detsum = std::fabs(detl) + std::fabs(detr);
  const double errbound = 4.0 * std::numeric_limits<double>::epsilon() * detsum;
  if (det > errbound) return 1;
  if (det < -errbound) return -1;
#if defined(__GNUC__) && defined(__x86_64__)
  __float128 d = ((__float128)b.real() - a.real()) * ((__float128)c.imag() - a.imag()) -
                 ((__float128)b.imag() - a.imag()) * ((__float128)c.real() - a.real());
  if (d > 0) return 1;
  if (d < 0) return -1;
  return 0;
#else
  long double d = ((long double)b.real() - a.real()) * ((long double)c.imag() - a.imag()) -
                  ((long double)b.imag() - a.imag()) * ((long double)c.real() - a.real());
  if (d > 0) return 1;
  if (d < 0) return -1;
  return 0;
#endif
}

// Closest point on segment [a,b]; returns parameter t in [0,1].
inline double closest_param_on_segment(Point a, Point b, Point p) {
  Point u = b - a;
  double uu = norm2(u);
  if (uu == 0.0) return 0.0;
  double t = dot(p - a, u) / uu;
  return std::clamp(t, 0.0, 1.0);
}

inline double dist_point_segment(Point a, Point b, Point p) {
  double t = closest_param_on_segment(a, b, p);
  return std::abs(p - (a + t * (b - a)));
}

inline bool segments_properly_intersect(Point a, Point b, Point c, Point d) {
  int o1 = orient2d(a, b, c);
  int o2 = orient2d(a, b, d);
  int o3 = orient2d(c, d, a);
  int o4 = orient2d(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  // Collinear overlap or endpoint touch.
  auto on = [](Point p, Point q, Point r) {
    return std::min(p.real(), r.real()) <= q.real() && q.real() <= std::max(p.real(), r.real()) &&
           std::min(p.imag(), r.imag()) <= q.imag() && q.imag() <= std::max(p.imag(), r.imag());
  };
  if (o1 == 0 && on(a, c, b)) return true;
  if (o2 == 0 && on(a, d, b)) return true;
  if (o3 == 0 && on(c, a, d)) return true;
  if (o4 == 0 && on(c, b, d)) return true;
  return false;
}

inline double dist_segment_segment(Point a, Point b, Point c, Point d) {
  if (segments_properly_intersect(a, b, c, d)) return 0.0;
  return std::min(std::min(dist_point_segment(a, b, c), dist_point_segment(a, b, d)),
                  std::min(dist_point_segment(c, d, a), dist_point_segment(c, d, b)));
}

}  // namespace pegscope

#endif
