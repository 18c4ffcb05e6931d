#ifndef PEGSCOPE_MOLLIFY_HPP
#define PEGSCOPE_MOLLIFY_HPP

#include "pegscope/curve.hpp"
#include "pegscope/parallel.hpp"

namespace pegscope {

namespace detail {

// Unnormalized bump exp(-1/(1-q^2)) on (-1,1).
inline double bump_raw(double q) {
  const double w = 1.0 - q * q;
  if (w <= 0.0) return 0.0;
  return std::exp(-1.0 / w);
}

inline const std::array<double, 4>& gauss4_nodes() {
  static const std::array<double, 4> n = {
      0.5 - 0.5 * 0.8611363115940526, 0.5 - 0.5 * 0.33998104358485626,
      0.5 + 0.5 * 0.33998104358485626, 0.5 + 0.5 * 0.8611363115940526};
  return n;
}
inline const std::array<double, 4>& gauss4_weights() {
  static const std::array<double, 4> w = {
      0.5 * 0.34785484513745385, 0.5 * 0.6521451548625461,
      0.5 * 0.6521451548625461, 0.5 * 0.34785484513745385};
  return w;
}

inline double bump_normalizer() {
  static const double z = [] {
    double acc = 0.0;
    const int panels = 512;
    for (int p = 0; p < panels; ++p) {
      const double a = -1.0 + 2.0 * p / panels;
      const double h = 2.0 / panels;
      for (int q = 0; q < 4; ++q) acc += gauss4_weights()[q] * h * bump_raw(a + gauss4_nodes()[q] * h);
    }
    return acc;
  }();
  return z;
}

}  // namespace detail

// Smooth nonnegative bump supported on [-1,1] with unit integral.
inline double bump_chi(double q) { return detail::bump_raw(q) / detail::bump_normalizer(); }

struct MollifierSpec {
  double delta = 0.0;
  int n = 0;
};

namespace detail {

// Worst plane distance between discretization points within `delta` of each
// other in parameter.
inline double discrete_modulus(const JordanCurve& c, double delta) {
  const std::size_t n = c.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double si = c.s[i];
    const Point pi = c.pts[i];
    for (std::size_t k = 1; k < n; ++k) {
      const std::size_t j = (i + k) % n;
      const double sj = (j > i) ? c.s[j] : c.s[j] + kTwoPi;
      if (sj - si >= delta) break;
      worst = std::max(worst, std::abs(c.pts[j] - pi));
    }
    worst = std::max(worst, std::abs(point_at(c, si + delta) - pi));
  }
  return worst;
}

}  // namespace detail

// Mollifier scale for index n: the largest discretization-verified window
// with oscillation below 1/n, halved as a safety factor.
inline MollifierSpec choose_mollifier(const JordanCurve& c, int n) {
  if (n <= 0) throw CurveError(CurveErrorKind::InvalidCurve, "mollifier index must be positive");
  const double bound = (1.0 / n) * (1.0 - 1e-9);
  double lo = 0.0, hi = kPi / 2;
  if (detail::discrete_modulus(c, hi) <= bound) {
    lo = hi;
  } else {
    for (int it = 0; it < 48; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (detail::discrete_modulus(c, mid) <= bound)
        lo = mid;
      else
        hi = mid;
    }
  }
  if (lo <= 0.0)
    throw CurveError(CurveErrorKind::InvalidCurve, "curve too rough for requested mollification");
  return MollifierSpec{0.5 * lo, n};
}

// Convolution of the curve with the scaled bump, sampled on the input grid.
inline JordanCurve mollify(const JordanCurve& c, int n, const MollifierSpec& spec) {
  if (spec.delta <= 0.0)
    throw CurveError(CurveErrorKind::InvalidCurve, "mollifier scale must be positive");
  if (detail::discrete_modulus(c, spec.delta) >= 1.0 / n)
    throw CurveError(CurveErrorKind::InvalidCurve,
                     "mollifier scale violates the 1/n modulus condition");
  const std::size_t nn = c.size();
  const double delta = spec.delta;
  std::vector<Point> out(nn);
  parallel_for(nn, [&](std::size_t j) {
    const double sj = c.s[j];
    // Breakpoints: node crossings of p - u plus a width cap of delta/8.
    std::vector<double> cuts;
    cuts.push_back(-delta);
    cuts.push_back(delta);
    for (const double sk : c.s) {
      for (double shift = -kTwoPi; shift <= kTwoPi; shift += kTwoPi) {
        const double u = sj - (sk + shift);
        if (u > -delta && u < delta) cuts.push_back(u);
      }
    }
    const int cap = 16;
    for (int k = 1; k < cap; ++k) cuts.push_back(-delta + 2.0 * delta * k / cap);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [&](double a, double b) { return std::fabs(a - b) < 1e-18; }),
               cuts.end());
    Point acc{0, 0};
    double wsum = 0.0;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
      const double a = cuts[p], h = cuts[p + 1] - cuts[p];
      if (h <= 0) continue;
      for (int q = 0; q < 4; ++q) {
        const double u = a + detail::gauss4_nodes()[q] * h;
        const double w = detail::gauss4_weights()[q] * h * bump_chi(u / delta) / delta;
        acc += w * point_at(c, sj - u);
        wsum += w;
      }
    }
    out[j] = acc / wsum;
  });
  double sup = 0.0;
  for (std::size_t j = 0; j < nn; ++j) sup = std::max(sup, std::abs(out[j] - c.pts[j]));
  if (sup >= 1.0 / n)
    throw CurveError(CurveErrorKind::InvalidCurve,
                     "mollified curve drifted beyond 1/n", c.pts[0], sup);
  JordanCurve result = make_samples(c.s, std::move(out));
  try {
    validate(result);
  } catch (const CurveError& e) {
    if (e.kind == CurveErrorKind::SelfIntersection)
      throw CurveError(CurveErrorKind::NotSimpleAfterSmoothing,
                       "mollified curve self-intersects", e.location);
    throw;
  }
  return result;
}

inline JordanCurve mollify(const JordanCurve& c, int n) {
  return mollify(c, n, choose_mollifier(c, n));
}

}  // namespace pegscope

#endif
