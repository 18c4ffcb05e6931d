#ifndef PEGSCOPE_CURVE_HPP
#define PEGSCOPE_CURVE_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>

#include "pegscope/fft.hpp"
#include "pegscope/geometry.hpp"
#include "pegscope/spline.hpp"

namespace pegscope {

enum class CurveErrorKind {
  SelfIntersection,
  DegenerateSegment,
  InvalidCurve,
  FlowCollapse,
  BaseOutside,
  BaseOnCurve,
  NotNested,
  NotMonotone,
  CoverageGap,
  NotSimpleAfterSmoothing,
  LiftNotClosed,
  ProjectionAmbiguous,
  OnBoundary,
};

struct CurveError : std::runtime_error {
  CurveError(CurveErrorKind k, const std::string& msg, Point where = {0, 0}, double val = 0)
      : std::runtime_error(msg), kind(k), location(where), value(val) {}
  CurveErrorKind kind;
  Point location;
  double value;
};

enum class CurveKind { polygon, samples };

namespace detail {
struct FormData;
}

// Oriented closed plane curve: either a polygon (vertices joined by straight
// edges) or periodic samples of a smooth curve. Either way the node ring is
// parametrized by normalized cumulative chord length over [0, 2*pi); the
// polyline through the nodes is the geometric model used for distances,
// lengths and simplicity, while sampled curves additionally carry a smooth
// quadrature model for area and primitives.
struct JordanCurve {
  CurveKind kind = CurveKind::polygon;
  std::vector<double> s;   // node parameters, s[0] == 0, strictly increasing
  std::vector<Point> pts;  // node positions, ring (pts[n] identified with pts[0])
  double length = 0.0;     // chordal length
  double diam = 0.0;       // diameter of the node set
  std::shared_ptr<const detail::FormData> form;  // samples only

  std::size_t size() const { return pts.size(); }
};

namespace detail {

inline std::vector<double> chord_params(const std::vector<Point>& pts, double& length_out) {
  const std::size_t n = pts.size();
  std::vector<double> cum(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) cum[j] = cum[j - 1] + std::abs(pts[j] - pts[j - 1]);
  const double total = cum[n - 1] + std::abs(pts[0] - pts[n - 1]);
  length_out = total;
  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = kTwoPi * cum[j] / total;
  return s;
}

// Diameter of a point set: convex hull + rotating calipers.
inline double point_set_diameter(const std::vector<Point>& pts) {
  std::vector<Point> p = pts;
  std::sort(p.begin(), p.end(), [](Point a, Point b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  const std::size_t n = p.size();
  if (n == 1) return 0.0;
  if (n == 2) return std::abs(p[1] - p[0]);
  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0) k--;
    hull[k++] = p[i];
  }
  for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0) k--;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  const std::size_t m = hull.size();
  if (m == 1) return 0.0;
  if (m == 2) return std::abs(hull[1] - hull[0]);
  double best = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < m; ++i) {
    Point e = hull[(i + 1) % m] - hull[i];
    while (std::fabs(cross(e, hull[(j + 1) % m] - hull[i])) >
           std::fabs(cross(e, hull[j] - hull[i])))
      j = (j + 1) % m;
    best = std::max(best, std::abs(hull[j] - hull[i]));
    best = std::max(best, std::abs(hull[(j + 1) % m] - hull[i]));
  }
  return best;
}

// Smooth quadrature model of a sampled curve: cumulative primitive of
// -xi dx at the nodes, node derivatives, enclosed area and coordinate
// splines. Uniform power-of-two grids go through the FFT; everything else
// uses periodic cubic splines with degree-exact Gauss panels.
struct FormData {
  double area = 0.0;
  std::vector<double> F;  // n+1 values, F[0] = 0, F[n] = area
  std::vector<double> g;  // n node derivatives of the primitive
  PeriodicSpline sx, sxi;
  bool uniform_pow2 = false;
};

inline const std::array<double, 3>& gauss3_nodes() {
  static const std::array<double, 3> n = {0.5 - std::sqrt(0.15), 0.5, 0.5 + std::sqrt(0.15)};
  return n;
}
inline const std::array<double, 3>& gauss3_weights() {
  static const std::array<double, 3> w = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  return w;
}

inline std::shared_ptr<const FormData> build_form_data(const std::vector<double>& s,
                                                       const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  auto fd = std::make_shared<FormData>();
  std::vector<double> xs(n), xis(n);
  for (std::size_t j = 0; j < n; ++j) {
    xs[j] = pts[j].real();
    xis[j] = pts[j].imag();
  }
  fd->sx = PeriodicSpline(s, xs, kTwoPi);
  fd->sxi = PeriodicSpline(s, xis, kTwoPi);

  bool uniform = is_pow2(n);
  if (uniform) {
    const double h = kTwoPi / (double)n;
    for (std::size_t j = 0; j < n && uniform; ++j) {
      double next = (j + 1 < n) ? s[j + 1] : kTwoPi;
      if (std::fabs(next - s[j] - h) > 1e-9 * h) uniform = false;
    }
  }
  fd->uniform_pow2 = uniform;

  fd->F.assign(n + 1, 0.0);
  fd->g.assign(n, 0.0);
  if (uniform) {
    std::vector<double> dx = spectral_derivative(xs);
    std::vector<double> gg(n);
    for (std::size_t j = 0; j < n; ++j) gg[j] = -xis[j] * dx[j];
    double mean = 0.0;
    std::vector<double> F = spectral_antiderivative(gg, mean);
    for (std::size_t j = 0; j < n; ++j) fd->F[j] = F[j];
    fd->area = kTwoPi * mean;
    fd->F[n] = fd->area;
    fd->g = gg;
  } else {
    const auto& gn = gauss3_nodes();
    const auto& gw = gauss3_weights();
    for (std::size_t j = 0; j < n; ++j) {
      const double h = fd->sx.interval_length(j);
      double acc = 0.0;
      for (int q = 0; q < 3; ++q) {
        const double t = gn[q] * h;
        acc += gw[q] * (-fd->sxi.eval_local(j, t) * fd->sx.deriv_local(j, t));
      }
      fd->F[j + 1] = fd->F[j] + acc * h;
      fd->g[j] = -xis[j] * fd->sx.deriv_local(j, 0.0);
    }
    fd->area = fd->F[n];
  }
  return fd;
}

inline void check_nodes(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  if (n < 3)
    throw CurveError(CurveErrorKind::InvalidCurve, "curve needs at least 3 nodes");
  for (std::size_t j = 0; j < n; ++j) {
    const Point a = pts[j], b = pts[(j + 1) % n];
    if (a == b)
      throw CurveError(CurveErrorKind::DegenerateSegment,
                       "zero-length edge at node " + std::to_string(j), a);
  }
}

}  // namespace detail

inline JordanCurve make_polygon(std::vector<Point> vertices) {
  detail::check_nodes(vertices);
  JordanCurve c;
  c.kind = CurveKind::polygon;
  c.pts = std::move(vertices);
  c.s = detail::chord_params(c.pts, c.length);
  c.diam = detail::point_set_diameter(c.pts);
  return c;
}

// Sampled curve. Input parameters only fix the node order; the stored
// parametrization is normalized cumulative chord length over [0, 2*pi).
inline JordanCurve make_samples(const std::vector<double>& params, std::vector<Point> pts) {
  if (params.size() != pts.size())
    throw CurveError(CurveErrorKind::InvalidCurve, "parameter/point count mismatch");
  for (std::size_t j = 1; j < params.size(); ++j)
    if (!(params[j] > params[j - 1]))
      throw CurveError(CurveErrorKind::InvalidCurve, "sample parameters must increase");
  detail::check_nodes(pts);
  JordanCurve c;
  c.kind = CurveKind::samples;
  c.pts = std::move(pts);
  c.s = detail::chord_params(c.pts, c.length);
  c.diam = detail::point_set_diameter(c.pts);
  c.form = detail::build_form_data(c.s, c.pts);
  return c;
}

// Signed area of the node polygon (classic shoelace; exact orientation test).
inline double shoelace_area(const JordanCurve& c) {
  const std::size_t n = c.size();
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Point a = c.pts[j], b = c.pts[(j + 1) % n];
    acc += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * acc;
}

// Enclosed area, positive for counterclockwise curves. Exact shoelace for
// polygons; quadrature of -xi dx against the smooth model for samples.
inline double area(const JordanCurve& c) {
  if (c.kind == CurveKind::polygon) return shoelace_area(c);
  return c.form->area;
}

inline double arc_length(const JordanCurve& c) { return c.length; }

// Chord-interpolated point at parameter s (the polyline model).
inline Point point_at(const JordanCurve& c, double sv) {
  const std::size_t n = c.size();
  const double u = wrap(sv, kTwoPi);
  std::size_t lo = 0, hi = n;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (c.s[mid] <= u)
      lo = mid;
    else
      hi = mid;
  }
  const double s0 = c.s[lo];
  const double s1 = (lo + 1 < n) ? c.s[lo + 1] : kTwoPi;
  const double t = (u - s0) / (s1 - s0);
  return c.pts[lo] + t * (c.pts[(lo + 1) % n] - c.pts[lo]);
}

// Smooth-model point of a sampled curve (coordinate splines); falls back to
// the polyline for polygons.
inline Point point_at_smooth(const JordanCurve& c, double sv) {
  if (c.kind == CurveKind::samples)
    return Point(c.form->sx.eval(sv), c.form->sxi.eval(sv));
  return point_at(c, sv);
}

inline JordanCurve make_samples_from_ring(std::vector<Point> pts) {
  std::vector<double> order(pts.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = (double)j;
  return make_samples(order, std::move(pts));
}

inline JordanCurve reversed(const JordanCurve& c) {
  std::vector<Point> rp(c.size());
  rp[0] = c.pts[0];
  for (std::size_t j = 1; j < c.size(); ++j) rp[j] = c.pts[c.size() - j];
  return c.kind == CurveKind::polygon ? make_polygon(std::move(rp))
                                      : make_samples_from_ring(std::move(rp));
}

struct ValidityReport {
  bool simple = true;
  bool closed = true;
  bool ccw = true;
  bool reversed = false;
};

namespace detail {

// Candidate close pairs of non-adjacent segments via a uniform grid over the
// segment boxes.
template <typename Visit>
void for_candidate_segment_pairs(const JordanCurve& c, Visit&& visit) {
  const std::size_t n = c.size();
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const Point& p : c.pts) {
    x0 = std::min(x0, p.real());
    x1 = std::max(x1, p.real());
    y0 = std::min(y0, p.imag());
    y1 = std::max(y1, p.imag());
  }
  const double pad = std::max({x1 - x0, y1 - y0, 1e-12}) * 1e-6;
  x0 -= pad;
  y0 -= pad;
  x1 += pad;
  y1 += pad;
  const int cells = std::clamp((int)std::ceil(std::sqrt((double)n)), 8, 2048);
  const double hx = (x1 - x0) / cells, hy = (y1 - y0) / cells;
  std::vector<std::vector<int32_t>> bins(static_cast<std::size_t>(cells) * cells);
  auto cell_of = [&](double x, double y) {
    int ix = std::clamp((int)((x - x0) / hx), 0, cells - 1);
    int iy = std::clamp((int)((y - y0) / hy), 0, cells - 1);
    return std::pair<int, int>(ix, iy);
  };
  for (std::size_t j = 0; j < n; ++j) {
    const Point a = c.pts[j], b = c.pts[(j + 1) % n];
    auto [ax, ay] = cell_of(std::min(a.real(), b.real()), std::min(a.imag(), b.imag()));
    auto [bx, by] = cell_of(std::max(a.real(), b.real()), std::max(a.imag(), b.imag()));
    for (int ix = ax; ix <= bx; ++ix)
      for (int iy = ay; iy <= by; ++iy) bins[(std::size_t)iy * cells + ix].push_back((int32_t)j);
  }
  std::vector<uint64_t> pairs;
  for (const auto& bin : bins)
    for (std::size_t u = 0; u < bin.size(); ++u)
      for (std::size_t v = u + 1; v < bin.size(); ++v) {
        uint32_t i = bin[u], j = bin[v];
        if (i > j) std::swap(i, j);
        std::size_t gap = std::min<std::size_t>(j - i, n - (j - i));
        if (gap <= 1) continue;  // adjacent segments share an endpoint
        pairs.push_back(((uint64_t)i << 32) | j);
      }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (uint64_t key : pairs) visit((std::size_t)(key >> 32), (std::size_t)(key & 0xffffffffu));
}

}  // namespace detail

// Validity check. Counterclockwise orientation is repaired in place;
// self-intersection (including approach within 1e-12 of the diameter) is
// fatal.
inline ValidityReport validate(JordanCurve& c) {
  ValidityReport rep;
  detail::check_nodes(c.pts);
  const double tol = 1e-12 * c.diam;
  std::optional<CurveError> bad;
  detail::for_candidate_segment_pairs(c, [&](std::size_t i, std::size_t j) {
    if (bad) return;
    const std::size_t n = c.size();
    const Point a = c.pts[i], b = c.pts[(i + 1) % n];
    const Point p = c.pts[j], q = c.pts[(j + 1) % n];
    if (dist_segment_segment(a, b, p, q) < tol) {
      bad = CurveError(CurveErrorKind::SelfIntersection,
                       "segments " + std::to_string(i) + " and " + std::to_string(j) +
                           " intersect",
                       0.5 * (a + b));
    }
  });
  if (bad) throw *bad;
  if (shoelace_area(c) < 0) {
    c = reversed(c);
    rep.reversed = true;
  }
  return rep;
}

// Winding number of the node polyline around p (+1 inside a ccw curve).
inline int winding_number(const JordanCurve& c, Point p) {
  const std::size_t n = c.size();
  int w = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Point a = c.pts[j], b = c.pts[(j + 1) % n];
    if ((a.imag() <= p.imag()) != (b.imag() <= p.imag())) {
      const double t = (p.imag() - a.imag()) / (b.imag() - a.imag());
      const double xint = a.real() + t * (b.real() - a.real());
      if (xint > p.real()) w += (b.imag() > a.imag()) ? 1 : -1;
    }
  }
  return w;
}

struct NearestHit {
  double dist = std::numeric_limits<double>::infinity();
  std::size_t seg = 0;
  double t = 0.0;      // position within the segment
  double param = 0.0;  // curve parameter of the closest point
  Point closest{0, 0};
};

// Spatially binned nearest-segment index over the node polyline. Queries are
// const and safe to run concurrently.
class SegmentIndex {
 public:
  explicit SegmentIndex(const JordanCurve& c) : c_(&c) {
    const std::size_t n = c.size();
    x0_ = y0_ = 1e300;
    x1_ = y1_ = -1e300;
    for (const Point& p : c.pts) {
      x0_ = std::min(x0_, p.real());
      x1_ = std::max(x1_, p.real());
      y0_ = std::min(y0_, p.imag());
      y1_ = std::max(y1_, p.imag());
    }
    const double pad = std::max({x1_ - x0_, y1_ - y0_, 1e-12}) * 1e-3;
    x0_ -= pad;
    y0_ -= pad;
    x1_ += pad;
    y1_ += pad;
    cells_ = std::clamp((int)std::ceil(std::sqrt((double)n)), 8, 2048);
    hx_ = (x1_ - x0_) / cells_;
    hy_ = (y1_ - y0_) / cells_;
    bins_.assign((std::size_t)cells_ * cells_, {});
    for (std::size_t j = 0; j < n; ++j) {
      const Point a = c.pts[j], b = c.pts[(j + 1) % n];
      int ax = clampx(std::min(a.real(), b.real())), bx = clampx(std::max(a.real(), b.real()));
      int ay = clampy(std::min(a.imag(), b.imag())), by = clampy(std::max(a.imag(), b.imag()));
      for (int ix = ax; ix <= bx; ++ix)
        for (int iy = ay; iy <= by; ++iy)
          bins_[(std::size_t)iy * cells_ + ix].push_back((int32_t)j);
    }
    snap_ = 8.0 * std::numeric_limits<double>::epsilon() * std::max(c.diam, 1e-300);
  }

  const JordanCurve& curve() const { return *c_; }

  NearestHit nearest(Point p) const {
    NearestHit best;
    const int cx = clampx(p.real()), cy = clampy(p.imag());
    for (int ring = 0; ring <= cells_; ++ring) {
      scan_ring(p, cx, cy, ring, best);
      if (best.dist < std::numeric_limits<double>::infinity() &&
          best.dist <= ring_lower_bound(p, cx, cy, ring))
        break;
    }
    return best;
  }

  // Signed distance: negative inside, positive outside (ccw curve), zero on
  // the polyline within snapping precision.
  double signed_distance(Point p) const {
    NearestHit h = nearest(p);
    if (h.dist <= snap_) return 0.0;
    return inside_sign(p, h) ? -h.dist : h.dist;
  }

  double unsigned_distance(Point p) const { return nearest(p).dist; }

  // Best hit on a branch parameter-distant from exclude_param, for
  // projection-ambiguity detection. Stops scanning past `limit`.
  NearestHit nearest_other_branch(Point p, double exclude_param, double min_param_sep,
                                  double limit) const {
    NearestHit other;
    const int cx = clampx(p.real()), cy = clampy(p.imag());
    for (int ring = 0; ring <= cells_; ++ring) {
      scan_ring_filtered(p, cx, cy, ring, exclude_param, min_param_sep, other);
      if (std::min(other.dist, limit) <= ring_lower_bound(p, cx, cy, ring)) break;
    }
    return other;
  }

 private:
  int clampx(double x) const { return std::clamp((int)((x - x0_) / hx_), 0, cells_ - 1); }
  int clampy(double y) const { return std::clamp((int)((y - y0_) / hy_), 0, cells_ - 1); }

  double ring_lower_bound(Point p, int cx, int cy, int ring) const {
    // Distance from p to the complement of the scanned cell block.
    const double bx0 = x0_ + (cx - ring) * hx_, bx1 = x0_ + (cx + ring + 1) * hx_;
    const double by0 = y0_ + (cy - ring) * hy_, by1 = y0_ + (cy + ring + 1) * hy_;
    const double d = std::min(std::min(p.real() - bx0, bx1 - p.real()),
                              std::min(p.imag() - by0, by1 - p.imag()));
    return std::max(d, 0.0);
  }

  void consider(Point p, int32_t j, NearestHit& best) const {
    const std::size_t n = c_->size();
    const Point a = c_->pts[j], b = c_->pts[(j + 1) % n];
    const double t = closest_param_on_segment(a, b, p);
    const Point q = a + t * (b - a);
    const double d = std::abs(p - q);
    if (d < best.dist || (d == best.dist && (std::size_t)j < best.seg)) {
      best.dist = d;
      best.seg = (std::size_t)j;
      best.t = t;
      best.closest = q;
      const double s0 = c_->s[j];
      const double s1 = ((std::size_t)j + 1 < n) ? c_->s[j + 1] : kTwoPi;
      best.param = s0 + t * (s1 - s0);
    }
  }

  void scan_ring(Point p, int cx, int cy, int ring, NearestHit& best) const {
    for (int ix = cx - ring; ix <= cx + ring; ++ix) {
      if (ix < 0 || ix >= cells_) continue;
      for (int iy = cy - ring; iy <= cy + ring; ++iy) {
        if (iy < 0 || iy >= cells_) continue;
        if (std::max(std::abs(ix - cx), std::abs(iy - cy)) != ring) continue;
        for (int32_t j : bins_[(std::size_t)iy * cells_ + ix]) consider(p, j, best);
      }
    }
  }

  void scan_ring_filtered(Point p, int cx, int cy, int ring, double exclude_param,
                          double min_param_sep, NearestHit& other) const {
    const std::size_t n = c_->size();
    for (int ix = cx - ring; ix <= cx + ring; ++ix) {
      if (ix < 0 || ix >= cells_) continue;
      for (int iy = cy - ring; iy <= cy + ring; ++iy) {
        if (iy < 0 || iy >= cells_) continue;
        if (std::max(std::abs(ix - cx), std::abs(iy - cy)) != ring) continue;
        for (int32_t j : bins_[(std::size_t)iy * cells_ + ix]) {
          const double s0 = c_->s[j];
          const double s1 = ((std::size_t)j + 1 < n) ? c_->s[j + 1] : kTwoPi;
          if (circular_dist(0.5 * (s0 + s1), exclude_param, kTwoPi) < min_param_sep) continue;
          consider(p, j, other);
        }
      }
    }
  }

  bool inside_sign(Point p, const NearestHit& h) const {
    const std::size_t n = c_->size();
    const Point a = c_->pts[h.seg], b = c_->pts[(h.seg + 1) % n];
    Point normal;
    if (h.t <= 0.0) {
      normal = outward(c_->pts[(h.seg + n - 1) % n], a) + outward(a, b);
    } else if (h.t >= 1.0) {
      normal = outward(a, b) + outward(b, c_->pts[(h.seg + 2) % n]);
    } else {
      normal = outward(a, b);
    }
    return dot(p - h.closest, normal) < 0.0;
  }

  static Point outward(Point a, Point b) {
    const Point d = b - a;
    return Point(d.imag(), -d.real());  // right of the direction: outside a ccw curve
  }

  const JordanCurve* c_;
  double x0_, x1_, y0_, y1_, hx_, hy_;
  int cells_;
  double snap_;
  std::vector<std::vector<int32_t>> bins_;
};

// Distance to the discretized curve, negative inside / positive outside.
// Convenience wrapper; hot paths should hold a SegmentIndex.
inline double signed_distance(const JordanCurve& c, Point z) {
  return SegmentIndex(c).signed_distance(z);
}

// Most interior point of the curve, approximated by grid search refinement.
inline Point pole_of_inaccessibility(const JordanCurve& c) {
  SegmentIndex index(c);
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const Point& p : c.pts) {
    x0 = std::min(x0, p.real());
    x1 = std::max(x1, p.real());
    y0 = std::min(y0, p.imag());
    y1 = std::max(y1, p.imag());
  }
  Point best{0.5 * (x0 + x1), 0.5 * (y0 + y1)};
  double bestv = index.signed_distance(best);
  const int g = 48;
  double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
  double wx = 0.5 * (x1 - x0), wy = 0.5 * (y1 - y0);
  for (int round = 0; round < 5; ++round) {
    for (int i = 0; i <= g; ++i)
      for (int j = 0; j <= g; ++j) {
        Point p{cx - wx + 2.0 * wx * i / g, cy - wy + 2.0 * wy * j / g};
        double v = index.signed_distance(p);
        if (v < bestv) {
          bestv = v;
          best = p;
        }
      }
    cx = best.real();
    cy = best.imag();
    wx = 2.2 * wx / g;
    wy = 2.2 * wy / g;
  }
  return best;
}

// Resample the polyline at M uniform parameters merged with the original
// nodes, preserving the geometric polyline exactly.
inline JordanCurve densify(const JordanCurve& c, std::size_t m) {
  std::vector<double> params;
  params.reserve(m + c.size());
  for (std::size_t j = 0; j < m; ++j) params.push_back(kTwoPi * (double)j / (double)m);
  params.insert(params.end(), c.s.begin(), c.s.end());
  std::sort(params.begin(), params.end());
  std::vector<double> keep;
  for (double p : params)
    if (keep.empty() || p - keep.back() > 1e-13) keep.push_back(p);
  std::vector<Point> pts;
  pts.reserve(keep.size());
  for (double p : keep) pts.push_back(point_at(c, p));
  return c.kind == CurveKind::polygon ? make_polygon(std::move(pts))
                                      : make_samples(keep, std::move(pts));
}

}  // namespace pegscope

#endif
