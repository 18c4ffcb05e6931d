#ifndef PEGSCOPE_MONOTONE_HPP
#define PEGSCOPE_MONOTONE_HPP

#include "pegscope/curve.hpp"
#include "pegscope/primitive.hpp"

namespace pegscope {

// Parameter window on which the projection q -> c(q).dir is strictly
// monotone; (dir, normal) is an oriented orthonormal frame.
struct MonotoneWindow {
  double center = 0.0;
  double lo = 0.0, hi = 0.0;
  Point dir{1, 0};
  Point normal{0, 1};
};

namespace detail {

// Projection values along a window: interpolated endpoints plus all interior
// nodes, in parameter order.
inline std::vector<double> window_projections(const JordanCurve& c, double lo, double hi,
                                              Point dir) {
  std::vector<double> g;
  g.push_back(dot(point_at(c, lo), dir));
  const std::size_t n = c.size();
  // First node with parameter > lo (circularly), then walk until hi.
  const double lo_w = wrap(lo, kTwoPi);
  std::size_t k = (std::size_t)(std::upper_bound(c.s.begin(), c.s.end(), lo_w) - c.s.begin()) % n;
  double off = c.s[k] - lo_w;
  if (off <= 0) off += kTwoPi;
  double abs_param = lo + off;
  while (abs_param < hi - 1e-18 && g.size() < 4 * n + 8) {
    g.push_back(dot(c.pts[k], dir));
    const std::size_t k2 = (k + 1) % n;
    double step = c.s[k2] - c.s[k];
    if (step <= 0) step += kTwoPi;
    abs_param += step;
    k = k2;
  }
  g.push_back(dot(point_at(c, hi), dir));
  return g;
}

// Positive when strictly monotone (in either sense); the worst consecutive
// step otherwise.
inline double monotonicity_margin(const JordanCurve& c, double lo, double hi, Point dir) {
  const std::vector<double> g = window_projections(c, lo, hi, dir);
  double inc = std::numeric_limits<double>::infinity();
  double dec = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    inc = std::min(inc, g[k + 1] - g[k]);
    dec = std::min(dec, g[k] - g[k + 1]);
  }
  return std::max(inc, dec);
}

}  // namespace detail

struct MonotonicityResult {
  bool ok = false;
  std::vector<MonotoneWindow> windows;
  double witness = 0.0;  // failing parameter when !ok
};

// Searches 64 candidate directions per node window, then refines the best
// one by angular bisection. Failure reports the first node without a
// strictly monotone direction.
inline MonotonicityResult is_locally_monotone(const JordanCurve& c, double window_width) {
  if (!(window_width > 0))
    throw CurveError(CurveErrorKind::InvalidCurve, "window width must be positive");
  MonotonicityResult res;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = c.s[i] - window_width / 2;
    const double hi = c.s[i] + window_width / 2;
    double best_angle = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (int m = 0; m < 64; ++m) {
      const double ang = kPi * m / 64.0;
      const double margin = detail::monotonicity_margin(c, lo, hi, std::polar(1.0, ang));
      if (margin > best) {
        best = margin;
        best_angle = ang;
      }
    }
    double a = best_angle - kPi / 64.0, b = best_angle + kPi / 64.0;
    for (int it = 0; it < 40; ++it) {
      const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
      const double f1 = detail::monotonicity_margin(c, lo, hi, std::polar(1.0, m1));
      const double f2 = detail::monotonicity_margin(c, lo, hi, std::polar(1.0, m2));
      if (f1 < f2)
        a = m1;
      else
        b = m2;
    }
    const double ang = 0.5 * (a + b);
    const double margin = detail::monotonicity_margin(c, lo, hi, std::polar(1.0, ang));
    double use_angle = ang;
    double use_margin = margin;
    if (best > margin) {
      use_angle = best_angle;
      use_margin = best;
    }
    if (!(use_margin > 0)) {
      res.ok = false;
      res.witness = c.s[i];
      return res;
    }
    const Point v = std::polar(1.0, use_angle);
    res.windows.push_back(MonotoneWindow{c.s[i], lo, hi, v, Point(-v.imag(), v.real())});
  }
  res.ok = true;
  return res;
}

namespace detail {

// Exact primitive of xi dx - xi_p dx_p for the rotated frame: the difference
// of the two angular forms is d of (x*xi - x_p*xi_p)/2.
inline double frame_correction(Point z, Point v, Point nrm) {
  const double xp = dot(z, v), xip = dot(z, nrm);
  return 0.5 * (z.real() * z.imag() - xp * xip);
}

// Integral of xi_p dx_p over node interval j in the frame (v, n).
inline double rotated_form_integral(const JordanCurve& c, std::size_t j, Point v, Point nrm) {
  const std::size_t n = c.size();
  const Point a = c.pts[j], b = c.pts[(j + 1) % n];
  if (c.kind == CurveKind::polygon) {
    return (dot(b, v) - dot(a, v)) * (dot(a, nrm) + dot(b, nrm)) / 2.0;
  }
  const detail::FormData& fd = *c.form;
  const auto& gn = gauss3_nodes();
  const auto& gw = gauss3_weights();
  const double h = fd.sx.interval_length(j);
  double acc = 0.0;
  for (int q = 0; q < 3; ++q) {
    const double t = gn[q] * h;
    const double x = fd.sx.eval_local(j, t), xi = fd.sxi.eval_local(j, t);
    const double dx = fd.sx.deriv_local(j, t), dxi = fd.sxi.deriv_local(j, t);
    const double xip = x * nrm.real() + xi * nrm.imag();
    const double dxp = dx * v.real() + dxi * v.imag();
    acc += gw[q] * xip * dxp;
  }
  return acc * h;
}

}  // namespace detail

// Primitive assembled from strictly monotone windows: on each window the
// local primitive integrates the projected coordinate against the rotated
// frame plus the closed-form frame correction, negated to match the
// -xi dx convention of primitive(); windows are glued by additive constants
// in order of their left endpoints.
inline Primitive primitive_monotone(const JordanCurve& c,
                                    const std::vector<MonotoneWindow>& windows) {
  const std::size_t n = c.size();
  if (windows.empty()) throw CurveError(CurveErrorKind::CoverageGap, "no windows supplied");

  std::vector<MonotoneWindow> ws = windows;
  std::sort(ws.begin(), ws.end(),
            [](const MonotoneWindow& a, const MonotoneWindow& b) { return a.lo < b.lo; });

  // Circular coverage check.
  {
    double reach = ws[0].lo;
    for (const auto& w : ws) {
      if (w.hi - w.lo >= kTwoPi) {
        reach = ws[0].lo + kTwoPi;
        break;
      }
      if (w.lo > reach + 1e-12)
        throw CurveError(CurveErrorKind::CoverageGap,
                         "windows leave a gap near parameter " + std::to_string(reach));
      reach = std::max(reach, w.hi);
    }
    if (reach < ws[0].lo + kTwoPi - 1e-12)
      throw CurveError(CurveErrorKind::CoverageGap,
                       "windows do not wrap around the curve");
  }

  for (const auto& w : ws)
    if (!(detail::monotonicity_margin(c, w.lo, w.hi, w.dir) > 0))
      throw CurveError(CurveErrorKind::NotMonotone,
                       "projection not strictly monotone on window at " +
                           std::to_string(w.center));

  const double inc_period = area(c);
  std::vector<double> f(n, 0.0);
  std::vector<char> have(n, 0);
  for (const auto& w : ws) {
    // Node indices inside (lo, hi), in circular parameter order, together
    // with the lift branch the walk is on (windows may straddle the seam).
    std::vector<std::size_t> idx;
    std::vector<long> branch;
    const double lo_w = wrap(w.lo, kTwoPi);
    std::size_t k =
        (std::size_t)(std::upper_bound(c.s.begin(), c.s.end(), lo_w) - c.s.begin()) % n;
    double off = c.s[k] - lo_w;
    if (off <= 0) off += kTwoPi;
    double abs_param = w.lo + off;
    while (abs_param < w.hi - 1e-18 && idx.size() < n) {
      idx.push_back(k);
      branch.push_back(std::lround((abs_param - c.s[k]) / kTwoPi));
      const std::size_t k2 = (k + 1) % n;
      double step = c.s[k2] - c.s[k];
      if (step <= 0) step += kTwoPi;
      abs_param += step;
      k = k2;
    }
    if (idx.empty()) continue;
    std::vector<double> local(idx.size(), 0.0);
    for (std::size_t t = 0; t + 1 < idx.size(); ++t) {
      const std::size_t j = idx[t];
      const double inc = detail::rotated_form_integral(c, j, w.dir, w.normal) +
                         detail::frame_correction(c.pts[(j + 1) % n], w.dir, w.normal) -
                         detail::frame_correction(c.pts[j], w.dir, w.normal);
      local[t + 1] = local[t] - inc;  // sign matches the -xi dx convention
    }
    // Reduce the walk's lift to the fundamental branch before gluing.
    for (std::size_t t = 0; t < idx.size(); ++t) local[t] -= inc_period * (double)branch[t];
    double shift = 0.0;
    bool anchored = false;
    for (std::size_t t = 0; t < idx.size(); ++t)
      if (have[idx[t]]) {
        shift = f[idx[t]] - local[t];
        anchored = true;
        break;
      }
    if (!anchored && &w != &ws[0])
      throw CurveError(CurveErrorKind::CoverageGap,
                       "window overlap holds no discretization node near " +
                           std::to_string(w.lo));
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (!have[idx[t]]) {
        f[idx[t]] = local[t] + shift;
        have[idx[t]] = 1;
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!have[j])
      throw CurveError(CurveErrorKind::CoverageGap,
                       "node " + std::to_string(j) + " not covered by any window");

  const double f0 = f[0];
  for (double& v : f) v -= f0;
  const double inc = inc_period;

  if (c.kind == CurveKind::polygon) {
    std::vector<double> s(n + 1), fv(n + 1);
    std::vector<std::array<double, 4>> coef(n);
    for (std::size_t j = 0; j < n; ++j) {
      s[j] = c.s[j];
      fv[j] = f[j];
    }
    s[n] = kTwoPi;
    fv[n] = f[0] + inc;
    for (std::size_t j = 0; j < n; ++j) {
      const Point a = c.pts[j], b = c.pts[(j + 1) % n];
      const double h = s[j + 1] - s[j];
      coef[j] = {fv[j], -((b.real() - a.real()) / h) * a.imag(),
                 -((b.real() - a.real()) / h) * (b.imag() - a.imag()) / (2.0 * h), 0.0};
    }
    return Primitive(std::move(s), std::move(fv), std::move(coef), inc);
  }
  return detail::primitive_from_nodes(c.s, f, c.form->g, f[0] + inc);
}

}  // namespace pegscope

#endif
