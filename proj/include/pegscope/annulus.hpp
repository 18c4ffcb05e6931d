#ifndef PEGSCOPE_ANNULUS_HPP
#define PEGSCOPE_ANNULUS_HPP

#include "pegscope/curve.hpp"

namespace pegscope {

// Oscillation of the argument of c(s) - base over one period, in units of
// full turns: (max - min of the continuous lift) / 2*pi. At least 1 for any
// Jordan curve about an interior point.
inline double argument_oscillation(const JordanCurve& c, Point base) {
  {
    SegmentIndex index(c);
    if (index.unsigned_distance(base) < 1e-12 * c.diam)
      throw CurveError(CurveErrorKind::BaseOnCurve, "base lies on the curve", base);
  }
  const std::size_t n = c.size();
  double lift = 0.0, lo = 0.0, hi = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Point a = c.pts[j] - base, b = c.pts[(j + 1) % n] - base;
    lift += std::arg(b * std::conj(a));
    lo = std::min(lo, lift);
    hi = std::max(hi, lift);
  }
  const long winding = std::lround(lift / kTwoPi);
  if (winding == 0)
    throw CurveError(CurveErrorKind::BaseOutside, "base point is not interior", base);
  return (hi - lo) / kTwoPi;
}

// Oscillation constant L for an annulus bounded by two nested curves:
// max of the boundary oscillations plus one. Bounds the oscillation of every
// intermediate level of a conformal interpolation.
inline double annulus_L(const JordanCurve& inner, const JordanCurve& outer, Point base) {
  SegmentIndex outer_index(outer);
  const double tol = 1e-12 * outer.diam;
  for (const Point& p : inner.pts)
    if (outer_index.signed_distance(p) > tol)
      throw CurveError(CurveErrorKind::NotNested, "inner curve leaves the outer curve", p);
  const double osc_in = argument_oscillation(inner, base);
  const double osc_out = argument_oscillation(outer, base);
  return std::max(osc_in, osc_out) + 1.0;
}

// Nested family of level curves indexed by u.
struct AnnulusFamily {
  std::vector<double> u;
  std::vector<JordanCurve> curves;  // nested, innermost first
  Point base{0, 0};

  void check() const {
    if (u.size() != curves.size() || u.empty())
      throw CurveError(CurveErrorKind::InvalidCurve, "family index/curve mismatch");
    for (std::size_t i = 1; i < u.size(); ++i)
      if (!(u[i] > u[i - 1]))
        throw CurveError(CurveErrorKind::InvalidCurve, "family indices must increase");
    if (winding_number(curves.front(), base) == 0)
      throw CurveError(CurveErrorKind::BaseOutside, "base not interior to innermost curve", base);
    for (std::size_t i = 1; i < curves.size(); ++i) {
      SegmentIndex outer(curves[i]);
      const double tol = 1e-12 * curves[i].diam;
      for (const Point& p : curves[i - 1].pts)
        if (outer.signed_distance(p) > tol)
          throw CurveError(CurveErrorKind::NotNested,
                           "family curves not nested at index " + std::to_string(i), p);
    }
  }

  std::size_t locate(double uv) const {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (std::fabs(u[i] - uv) < 1e-9 * std::max(1.0, std::fabs(uv))) return i;
    throw CurveError(CurveErrorKind::InvalidCurve,
                     "u = " + std::to_string(uv) + " is not a family index");
  }
};

struct EnergyBound {
  double u0 = 0, u1 = 0;
  double L = 0;
  double area_gap = 0;
  double bound = 0;
};

// Hofer-energy style bound 2(L+1)(A(C_u1) - A(C_u0)) between the rescaled
// level curves; valid for conformal level families.
inline EnergyBound energy_bound(const AnnulusFamily& fam, double u0, double u1) {
  const std::size_t i0 = fam.locate(u0), i1 = fam.locate(u1);
  if (i0 > i1)
    throw CurveError(CurveErrorKind::InvalidCurve, "u0 must not exceed u1");
  double prev = area(fam.curves[i0]);
  for (std::size_t i = i0 + 1; i <= i1; ++i) {
    const double a = area(fam.curves[i]);
    if (a < prev - 1e-12)
      throw CurveError(CurveErrorKind::InvalidCurve, "areas must be nondecreasing in u");
    prev = a;
  }
  EnergyBound out;
  out.u0 = fam.u[i0];
  out.u1 = fam.u[i1];
  out.L = annulus_L(fam.curves[i0], fam.curves[i1], fam.base);
  out.area_gap = area(fam.curves[i1]) - area(fam.curves[i0]);
  out.bound = 2.0 * (out.L + 1.0) * out.area_gap;
  return out;
}

}  // namespace pegscope

#endif
