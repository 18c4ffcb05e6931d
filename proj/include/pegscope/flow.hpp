#ifndef PEGSCOPE_FLOW_HPP
#define PEGSCOPE_FLOW_HPP

#include "pegscope/curve.hpp"

namespace pegscope {

struct RadialFlowOptions {
  double area_tol = 5e-10;  // target error of the output polyline's area
  int max_depth = 28;
  int min_depth = 2;
};

namespace detail {

inline Point radial_map(Point p, Point base, double s) {
  const Point rel = p - base;
  const double r2 = norm2(rel);
  const double q2 = r2 + 2.0 * s;
  if (q2 <= 0.0)
    throw CurveError(CurveErrorKind::FlowCollapse,
                     "radial flow reaches radius zero", p, q2);
  return base + rel * std::sqrt(q2 / r2);
}

inline void refine_edge(const JordanCurve& c, Point base, double s, double u0, double u1,
                        Point q0, Point q1, int depth, const RadialFlowOptions& opt,
                        double budget_per_param, std::vector<Point>& out) {
  const double um = 0.5 * (u0 + u1);
  const Point qm = radial_map(point_at_smooth(c, um), base, s);
  const double sag = 0.5 * std::fabs(cross(qm - q0, q1 - q0));
  if (depth >= opt.min_depth &&
      (depth >= opt.max_depth || (4.0 / 3.0) * sag <= budget_per_param * (u1 - u0))) {
    out.push_back(q0);
    return;
  }
  refine_edge(c, base, s, u0, um, q0, qm, depth + 1, opt, budget_per_param, out);
  refine_edge(c, base, s, um, u1, qm, q1, depth + 1, opt, budget_per_param, out);
}

}  // namespace detail

// Area-rescaling radial flow about an interior base point:
// (r, angle) -> (sqrt(2s + r^2), angle). Adds 2*pi*s to the enclosed area.
// The image of each edge is curved, so the output polyline is refined
// adaptively until its area captures the flowed area within opts.area_tol.
inline JordanCurve radial_flow(const JordanCurve& c, double s, Point base,
                               const RadialFlowOptions& opt = {}) {
  if (winding_number(c, base) == 0)
    throw CurveError(CurveErrorKind::BaseOutside, "base point is not interior", base);
  {
    SegmentIndex index(c);
    const double rmin = index.unsigned_distance(base);
    if (rmin * rmin + 2.0 * s <= 0.0)
      throw CurveError(CurveErrorKind::FlowCollapse,
                       "radial flow reaches radius zero", base, rmin * rmin + 2.0 * s);
  }
  const std::size_t n = c.size();
  const double budget = 0.5 * opt.area_tol / kTwoPi;
  std::vector<Point> out;
  out.reserve(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const double u0 = c.s[j];
    const double u1 = (j + 1 < n) ? c.s[j + 1] : kTwoPi;
    const Point q0 = detail::radial_map(c.pts[j], base, s);
    const Point q1 = detail::radial_map(c.pts[(j + 1) % n], base, s);
    detail::refine_edge(c, base, s, u0, u1, q0, q1, 0, opt, budget, out);
  }
  return make_polygon(std::move(out));
}

// Amount of radial flow that renormalizes the enclosed area to pi.
inline double area_normalizing_time(const JordanCurve& c) {
  return (kPi - area(c)) / kTwoPi;
}

inline JordanCurve normalize_area(const JordanCurve& c, Point base,
                                  const RadialFlowOptions& opt = {}) {
  return radial_flow(c, area_normalizing_time(c), base, opt);
}

}  // namespace pegscope

#endif
