#ifndef PEGSCOPE_GENERATORS_HPP
#define PEGSCOPE_GENERATORS_HPP

#include <random>

#include "pegscope/curve.hpp"
#include "pegscope/mollify.hpp"

namespace pegscope {

inline JordanCurve gen_circle(double radius = 1.0, std::size_t n = 8192, Point center = {0, 0}) {
  if (!(radius > 0)) throw CurveError(CurveErrorKind::InvalidCurve, "radius must be positive");
  std::vector<double> s(n);
  std::vector<Point> pts(n);
  for (std::size_t j = 0; j < n; ++j) {
    s[j] = kTwoPi * (double)j / (double)n;
    pts[j] = center + std::polar(radius, s[j]);
  }
  return make_samples(s, std::move(pts));
}

// Ellipse sampled uniformly in (chordal) arc length so the stored
// parametrization is close to uniform; points lie exactly on the ellipse.
inline JordanCurve gen_ellipse(double a, double b, std::size_t n = 8192) {
  if (!(a > 0) || !(b > 0))
    throw CurveError(CurveErrorKind::InvalidCurve, "semi-axes must be positive");
  const std::size_t dense = 16 * n;
  std::vector<double> cum(dense + 1, 0.0);
  Point prev{a, 0};
  for (std::size_t k = 1; k <= dense; ++k) {
    const double t = kTwoPi * (double)k / (double)dense;
    const Point p{a * std::cos(t), b * std::sin(t)};
    cum[k] = cum[k - 1] + std::abs(p - prev);
    prev = p;
  }
  const double total = cum[dense];
  std::vector<double> s(n);
  std::vector<Point> pts(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double target = total * (double)j / (double)n;
    const std::size_t k =
        (std::size_t)(std::upper_bound(cum.begin(), cum.end(), target) - cum.begin()) - 1;
    const double t0 = kTwoPi * (double)k / (double)dense;
    const double seg = cum[std::min(k + 1, dense)] - cum[k];
    const double frac = seg > 0 ? (target - cum[k]) / seg : 0.0;
    const double t = t0 + frac * kTwoPi / (double)dense;
    s[j] = kTwoPi * (double)j / (double)n;
    pts[j] = Point{a * std::cos(t), b * std::sin(t)};
  }
  return make_samples(s, std::move(pts));
}

inline JordanCurve gen_square(double side = 2.0) {
  const double h = side / 2;
  return make_polygon({Point{h, h}, Point{-h, h}, Point{-h, -h}, Point{h, -h}});
}

// The area-pi square: the unit square rescaled exactly by a similarity,
// densified to the requested node count.
inline JordanCurve gen_square_area_pi(std::size_t nodes = 4096) {
  const double h = std::sqrt(kPi) / 2;
  JordanCurve sq =
      make_polygon({Point{h, h}, Point{-h, h}, Point{-h, -h}, Point{h, -h}});
  return densify(sq, nodes);
}

inline JordanCurve gen_mollified_square(int n, std::size_t nodes = 4096) {
  JordanCurve sq = gen_square_area_pi(nodes);
  return mollify(sq, n);
}

// Smooth radial perturbation of the unit circle (seeded, deterministic).
inline JordanCurve gen_perturbed_circle(double eps, int modes, unsigned seed,
                                        std::size_t n = 8192) {
  if (!(eps >= 0) || modes < 1)
    throw CurveError(CurveErrorKind::InvalidCurve, "perturbation parameters out of range");
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> ac(modes), bc(modes);
  for (int k = 0; k < modes; ++k) {
    ac[k] = uni(rng);
    bc[k] = uni(rng);
  }
  std::vector<double> s(n);
  std::vector<Point> pts(n);
  for (std::size_t j = 0; j < n; ++j) {
    s[j] = kTwoPi * (double)j / (double)n;
    double r = 1.0;
    for (int k = 0; k < modes; ++k) {
      const double freq = k + 2.0;
      r += eps * (ac[k] * std::cos(freq * s[j]) + bc[k] * std::sin(freq * s[j])) / freq;
    }
    pts[j] = std::polar(r, s[j]);
  }
  return make_samples(s, std::move(pts));
}

// Star-shaped polygon around the origin with jittered angles and radii.
inline JordanCurve gen_random_star_polygon(std::mt19937& rng, int k = 12) {
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  std::uniform_real_distribution<double> radius(0.8, 1.2);
  std::vector<Point> pts(k);
  for (int j = 0; j < k; ++j) {
    const double ang = kTwoPi * (j + jitter(rng)) / k;
    pts[j] = std::polar(radius(rng), ang);
  }
  return make_polygon(std::move(pts));
}

}  // namespace pegscope

#endif
