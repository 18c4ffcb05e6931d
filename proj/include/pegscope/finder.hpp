#ifndef PEGSCOPE_FINDER_HPP
#define PEGSCOPE_FINDER_HPP

#include <functional>

#include "pegscope/dynamics.hpp"
#include "pegscope/parallel.hpp"

namespace pegscope {

struct FinderOptions {
  int grid = 512;              // torus seeding grid per axis
  double tol_smooth = 1e-11;   // residual acceptance, sampled curves
  double tol_polygon = 1e-9;   // residual acceptance, polygons (kink limited)
  double eps_diag = 1e-3;      // diagonal band, relative to diameter
  double dedup_tol = 1e-6;     // vertex-set dedup, relative to diameter
  int max_newton_iter = 50;
  double fd_step = 1e-6;
  int family_span_cells = 10;  // cluster wider than this many cells => family
  int threads = 0;             // 0: PEGSCOPE_THREADS or hardware
  std::vector<std::pair<double, double>> extra_seeds;  // continuation seeds
};

enum class IntersectionKind { diagonal, nondegenerate };

// Torus point of the intersection locus, with its residual and mod-pi action.
struct IntersectionPoint {
  double s1 = 0, s2 = 0;
  double theta = 0;
  double residual = 0;
  LiftValue action;
  IntersectionKind kind = IntersectionKind::nondegenerate;
};

// Inscribed rectangle: diagonals meet at the center with angle theta.
struct ThetaRectangle {
  Point center{0, 0};
  Point half_diagonal{0, 0};
  double theta = 0;
  std::array<Point, 4> vertices{};
};

inline ThetaRectangle make_theta_rectangle(double theta, Point z1, Point z2) {
  ThetaRectangle r;
  r.center = 0.5 * (z1 + z2);
  r.half_diagonal = 0.5 * (z1 - z2);
  r.theta = theta;
  const Point rot = std::polar(1.0, -theta) * r.half_diagonal;
  r.vertices = {r.center + r.half_diagonal, r.center + rot, r.center - r.half_diagonal,
                r.center - rot};
  return r;
}

struct FoundRectangle {
  IntersectionPoint point;  // cluster representative
  ThetaRectangle rect;
  bool is_family = false;
  int cluster_size = 1;
  double param_span = 0.0;
  double min_action = 0.0;    // over cluster members
  double max_residual = 0.0;  // over cluster members
};

namespace detail {

struct FinderContext {
  const JordanCurve* curve;
  SegmentIndex index;
  Primitive f;
  double tol_accept;

  explicit FinderContext(const JordanCurve& c, const FinderOptions& opt)
      : curve(&c), index(c), f(primitive(c)),
        tol_accept(c.kind == CurveKind::polygon ? opt.tol_polygon : opt.tol_smooth) {}
};

inline std::pair<double, double> residual_pair(const FinderContext& ctx, double theta, double s1,
                                               double s2) {
  const PairPoint p{point_at(*ctx.curve, s1), point_at(*ctx.curve, s2)};
  const PairPoint w = r_theta(theta, p);
  return {ctx.index.signed_distance(w.z1), ctx.index.signed_distance(w.z2)};
}

inline double residual_norm(const FinderContext& ctx, double theta, double s1, double s2) {
  auto [a, b] = residual_pair(ctx, theta, s1, s2);
  return std::max(std::fabs(a), std::fabs(b));
}

struct NewtonResult {
  bool converged = false;
  double s1 = 0, s2 = 0, res = 0;
};

inline NewtonResult newton_refine(const FinderContext& ctx, double theta, double s1, double s2,
                                  const FinderOptions& opt) {
  const double h = opt.fd_step;
  const double step_cap = 1.5 * kTwoPi / opt.grid;
  double cur = residual_norm(ctx, theta, s1, s2);
  for (int iter = 0; iter < opt.max_newton_iter; ++iter) {
    if (cur < 5e-14) break;
    auto [f1, f2] = residual_pair(ctx, theta, s1, s2);
    auto [a1, a2] = residual_pair(ctx, theta, s1 + h, s2);
    auto [b1, b2] = residual_pair(ctx, theta, s1 - h, s2);
    auto [c1, c2] = residual_pair(ctx, theta, s1, s2 + h);
    auto [d1, d2] = residual_pair(ctx, theta, s1, s2 - h);
    const double j11 = (a1 - b1) / (2 * h), j12 = (c1 - d1) / (2 * h);
    const double j21 = (a2 - b2) / (2 * h), j22 = (c2 - d2) / (2 * h);
    double det = j11 * j22 - j12 * j21;
    double d1s, d2s;
    const double scale = j11 * j11 + j12 * j12 + j21 * j21 + j22 * j22;
    if (std::fabs(det) > 1e-10 * scale) {
      d1s = -(j22 * f1 - j12 * f2) / det;
      d2s = -(-j21 * f1 + j11 * f2) / det;
    } else {
      // Gauss-Newton step with a small Tikhonov floor: families make the
      // Jacobian rank deficient along their tangent.
      const double lam = 1e-9 * scale + 1e-300;
      const double g1 = j11 * f1 + j21 * f2;
      const double g2 = j12 * f1 + j22 * f2;
      const double m11 = j11 * j11 + j21 * j21 + lam;
      const double m12 = j11 * j12 + j21 * j22;
      const double m22 = j12 * j12 + j22 * j22 + lam;
      const double mdet = m11 * m22 - m12 * m12;
      d1s = -(m22 * g1 - m12 * g2) / mdet;
      d2s = -(-m12 * g1 + m11 * g2) / mdet;
    }
    double norm = std::hypot(d1s, d2s);
    if (!(norm > 0) || !std::isfinite(norm)) break;
    if (norm > step_cap) {
      d1s *= step_cap / norm;
      d2s *= step_cap / norm;
    }
    bool improved = false;
    for (int halves = 0; halves < 25; ++halves) {
      const double t1 = s1 + d1s, t2 = s2 + d2s;
      const double trial = residual_norm(ctx, theta, t1, t2);
      if (trial < cur * (1.0 - 1e-4) || trial < 5e-14) {
        s1 = t1;
        s2 = t2;
        cur = trial;
        improved = true;
        break;
      }
      d1s *= 0.5;
      d2s *= 0.5;
    }
    if (!improved) break;
  }
  NewtonResult out;
  out.s1 = wrap(s1, kTwoPi);
  out.s2 = wrap(s2, kTwoPi);
  out.res = cur;
  out.converged = cur < ctx.tol_accept;
  return out;
}

inline double torus_dist(double a1, double a2, double b1, double b2) {
  return std::hypot(circular_dist(a1, b1, kTwoPi), circular_dist(a2, b2, kTwoPi));
}

inline double action_of_ctx(const FinderContext& ctx, double theta, double s1, double s2) {
  const JordanCurve& c = *ctx.curve;
  const PairPoint p{point_at(c, s1), point_at(c, s2)};
  const PairPoint w = r_theta(theta, p);
  const double min_sep = 16.0 * kTwoPi / (double)c.size();
  const double amb_tol = 1e-10 * c.diam;
  double sp[2];
  const Point images[2] = {w.z1, w.z2};
  for (int k = 0; k < 2; ++k) {
    const NearestHit hit = ctx.index.nearest(images[k]);
    const NearestHit other =
        ctx.index.nearest_other_branch(images[k], hit.param, min_sep, hit.dist + 2 * amb_tol);
    if (other.dist - hit.dist < amb_tol)
      throw CurveError(CurveErrorKind::ProjectionAmbiguous,
                       "image point equidistant from two curve branches", images[k],
                       other.dist - hit.dist);
    sp[k] = hit.param;
  }
  // Unwrap the projected parameters next to their sources so the real-valued
  // lift is evaluated on one continuous branch.
  auto unwrap_near = [](double target, double near) {
    double u = target;
    while (u - near > kPi) u -= kTwoPi;
    while (u - near < -kPi) u += kTwoPi;
    return u;
  };
  const double s1p = unwrap_near(sp[0], s1);
  const double s2p = unwrap_near(sp[1], s2);
  const double raw =
      (ctx.f(s1) + ctx.f(s2)) - (ctx.f(s1p) + ctx.f(s2p)) - action_shift(theta, p);
  return mod_pi(raw);
}

}  // namespace detail

// Signed distances of the rotated image pair to the curve; both vanish
// exactly when (s1, s2) maps to an inscribed theta-rectangle (or a diagonal
// point).
inline std::pair<double, double> residual(const JordanCurve& c, double theta, double s1,
                                          double s2) {
  detail::FinderContext ctx(c, FinderOptions{});
  return detail::residual_pair(ctx, theta, s1, s2);
}

// Action of an accepted intersection: the mod-pi discrepancy between the
// lifted source pair, its image under the lifted rotation, and the target
// lift. Zero on the diagonal; theta on the circle's antipodal family.
inline LiftValue action_of(const JordanCurve& c, const Primitive& f, double theta, double s1,
                           double s2) {
  FinderOptions opt;
  detail::FinderContext ctx(c, opt);
  ctx.f = f;
  return LiftValue{detail::action_of_ctx(ctx, theta, s1, s2)};
}

// Locates inscribed theta-rectangles: seeds an NxN torus grid on the
// residual, refines seeds by damped Newton, discards the diagonal band,
// deduplicates by vertex sets and clusters continuum families. Returns
// nondegenerate solutions ordered by (s1, s2); empty when the grid finds
// nothing (existence may need a finer grid).
inline std::vector<FoundRectangle> find_rectangles(const JordanCurve& c, double theta,
                                                   const FinderOptions& opt = {}) {
  if (!(theta > 0 && theta < kPi))
    throw CurveError(CurveErrorKind::InvalidCurve, "theta must lie in (0, pi)");
  detail::FinderContext ctx(c, opt);
  const int n = opt.grid;
  const double h = kTwoPi / n;
  const double diag_band = opt.eps_diag * c.diam;
  const double speed = c.length / kTwoPi;
  const double seed_thresh = 2.0 * h * speed;

  std::vector<Point> gp(n);
  for (int i = 0; i < n; ++i) gp[i] = point_at(c, h * i);

  std::vector<double> r1((std::size_t)n * n), r2((std::size_t)n * n);
  parallel_for((std::size_t)n, [&](std::size_t i) {
    for (int j = 0; j < n; ++j) {
      const PairPoint w = r_theta(theta, PairPoint{gp[i], gp[j]});
      r1[i * n + j] = ctx.index.signed_distance(w.z1);
      r2[i * n + j] = ctx.index.signed_distance(w.z2);
    }
  }, opt.threads);

  std::vector<std::pair<double, double>> seeds = opt.extra_seeds;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int i2 = (i + 1) % n, j2 = (j + 1) % n;
      if (std::abs(gp[i] - gp[j]) <= diag_band && std::abs(gp[i2] - gp[j]) <= diag_band &&
          std::abs(gp[i] - gp[j2]) <= diag_band && std::abs(gp[i2] - gp[j2]) <= diag_band)
        continue;
      const double a[4] = {r1[(std::size_t)i * n + j], r1[(std::size_t)i2 * n + j],
                           r1[(std::size_t)i * n + j2], r1[(std::size_t)i2 * n + j2]};
      const double b[4] = {r2[(std::size_t)i * n + j], r2[(std::size_t)i2 * n + j],
                           r2[(std::size_t)i * n + j2], r2[(std::size_t)i2 * n + j2]};
      auto active = [&](const double* v) {
        double mn = 1e300, lo = 1e300, hi = -1e300;
        for (int k = 0; k < 4; ++k) {
          mn = std::min(mn, std::fabs(v[k]));
          lo = std::min(lo, v[k]);
          hi = std::max(hi, v[k]);
        }
        return lo <= 0.0 && hi >= 0.0 ? true : mn < seed_thresh;
      };
      if (active(a) && active(b)) seeds.emplace_back(h * (i + 0.5), h * (j + 0.5));
    }
  }

  std::vector<detail::NewtonResult> refined(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t k) {
    refined[k] = detail::newton_refine(ctx, theta, seeds[k].first, seeds[k].second, opt);
  }, opt.threads);

  struct Member {
    double s1, s2, res;
  };
  std::vector<Member> accepted;
  for (const auto& r : refined) {
    if (!r.converged) continue;
    if (std::abs(point_at(c, r.s1) - point_at(c, r.s2)) <= diag_band) continue;
    accepted.push_back({r.s1, r.s2, r.res});
  }
  std::sort(accepted.begin(), accepted.end(), [](const Member& a, const Member& b) {
    return a.s1 < b.s1 || (a.s1 == b.s1 && a.s2 < b.s2);
  });

  // Cluster by torus parameter distance (union-find).
  std::vector<int> parent(accepted.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const double link_dist = 2.0 * kTwoPi / n;  // 4*pi / grid
  for (std::size_t i = 0; i < accepted.size(); ++i)
    for (std::size_t j = i + 1; j < accepted.size(); ++j)
      if (detail::torus_dist(accepted[i].s1, accepted[i].s2, accepted[j].s1, accepted[j].s2) <
          link_dist)
        parent[find((int)j)] = find((int)i);

  std::vector<std::vector<int>> clusters;
  {
    std::vector<int> root_of(accepted.size(), -1);
    for (std::size_t i = 0; i < accepted.size(); ++i) {
      const int r = find((int)i);
      if (root_of[r] < 0) {
        root_of[r] = (int)clusters.size();
        clusters.emplace_back();
      }
      clusters[root_of[r]].push_back((int)i);
    }
  }

  struct Cluster {
    ThetaRectangle rect;
    IntersectionPoint rep;
    double span = 0, min_action = 0, max_residual = 0;
    int size = 0;
  };
  std::vector<Cluster> out;
  for (const auto& cl : clusters) {
    Cluster agg;
    agg.size = (int)cl.size();
    const Member& rep = accepted[cl.front()];  // lexicographic smallest
    agg.rep.s1 = rep.s1;
    agg.rep.s2 = rep.s2;
    agg.rep.theta = theta;
    agg.rep.residual = rep.res;
    agg.rep.kind = IntersectionKind::nondegenerate;
    agg.rep.action = LiftValue{detail::action_of_ctx(ctx, theta, rep.s1, rep.s2)};
    agg.rect = make_theta_rectangle(theta, point_at(c, rep.s1), point_at(c, rep.s2));
    agg.min_action = agg.rep.action.t;
    agg.max_residual = rep.res;
    for (int mi : cl) {
      const Member& m = accepted[mi];
      agg.max_residual = std::max(agg.max_residual, m.res);
      const double act = detail::action_of_ctx(ctx, theta, m.s1, m.s2);
      agg.min_action = std::min(agg.min_action, act);
      for (int mj : cl) {
        const Member& m2 = accepted[mj];
        agg.span = std::max(agg.span, detail::torus_dist(m.s1, m.s2, m2.s1, m2.s2));
      }
    }
    out.push_back(std::move(agg));
  }

  // Vertex-set dedup across clusters (collapses the (s1,s2) <-> (s2,s1)
  // symmetry; families absorb duplicates).
  const double dedup = opt.dedup_tol * c.diam;
  auto vertex_hausdorff = [](const ThetaRectangle& a, const ThetaRectangle& b) {
    double worst = 0.0;
    for (const Point& p : a.vertices) {
      double best = 1e300;
      for (const Point& q : b.vertices) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    for (const Point& q : b.vertices) {
      double best = 1e300;
      for (const Point& p : a.vertices) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  std::vector<char> dead(out.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (dead[i]) continue;
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (dead[j]) continue;
      if (vertex_hausdorff(out[i].rect, out[j].rect) < dedup) {
        out[i].size += out[j].size;
        out[i].span = std::max(out[i].span, out[j].span);
        out[i].min_action = std::min(out[i].min_action, out[j].min_action);
        out[i].max_residual = std::max(out[i].max_residual, out[j].max_residual);
        dead[j] = 1;
      }
    }
  }

  std::vector<FoundRectangle> result;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (dead[i]) continue;
    FoundRectangle fr;
    fr.point = out[i].rep;
    fr.rect = out[i].rect;
    fr.cluster_size = out[i].size;
    fr.param_span = out[i].span;
    fr.is_family = out[i].span > opt.family_span_cells * h;
    fr.min_action = out[i].min_action;
    fr.max_residual = out[i].max_residual;
    result.push_back(std::move(fr));
  }
  std::sort(result.begin(), result.end(), [](const FoundRectangle& a, const FoundRectangle& b) {
    return a.point.s1 < b.point.s1 || (a.point.s1 == b.point.s1 && a.point.s2 < b.point.s2);
  });
  return result;
}

struct SweepRow {
  double theta = 0;
  int count = 0;
  double min_action = std::numeric_limits<double>::quiet_NaN();
  double max_residual = std::numeric_limits<double>::quiet_NaN();
};

using SweepTable = std::vector<SweepRow>;

// One finder run per theta; earlier solutions seed the next theta
// (continuation). Rows are ordered by theta.
inline SweepTable sweep_theta(const JordanCurve& c, const std::vector<double>& thetas,
                              const FinderOptions& opt = {}) {
  std::vector<double> grid = thetas;
  std::sort(grid.begin(), grid.end());
  SweepTable table;
  FinderOptions cur = opt;
  for (double th : grid) {
    const std::vector<FoundRectangle> found = find_rectangles(c, th, cur);
    SweepRow row;
    row.theta = th;
    row.count = (int)found.size();
    if (!found.empty()) {
      row.min_action = found.front().min_action;
      row.max_residual = 0.0;
      for (const auto& fr : found) {
        row.min_action = std::min(row.min_action, fr.min_action);
        row.max_residual = std::max(row.max_residual, fr.max_residual);
      }
    }
    table.push_back(row);
    cur.extra_seeds = opt.extra_seeds;
    for (const auto& fr : found) {
      if (cur.extra_seeds.size() >= 1024) break;
      cur.extra_seeds.emplace_back(fr.point.s1, fr.point.s2);
    }
  }
  return table;
}

}  // namespace pegscope

#endif
