#ifndef PEGSCOPE_BARCODE_HPP
#define PEGSCOPE_BARCODE_HPP

#include "pegscope/finder.hpp"

namespace pegscope {

// Half-open bar [birth, death) with a cohomological degree.
struct Bar {
  double birth = 0;
  double death = 0;  // +infinity allowed
  int degree = 0;
};

inline bool bar_less(const Bar& a, const Bar& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.birth != b.birth) return a.birth < b.birth;
  return a.death < b.death;
}

struct Barcode {
  std::vector<Bar> bars;
  int window = 0;  // bars kept for |n| <= window

  void canonicalize() { std::sort(bars.begin(), bars.end(), bar_less); }
};

// Reference barcode of the unit circle: bars [n*pi, (n+1)*pi) in degree 2n
// and [theta+(n-1)*pi, theta+n*pi) in degree 2n-1, |n| <= N. Every bar has
// length exactly pi.
inline Barcode circle_barcode(double theta, int window) {
  if (!(theta >= 0 && theta <= kPi))
    throw CurveError(CurveErrorKind::InvalidCurve, "theta must lie in [0, pi]");
  if (window < 0) throw CurveError(CurveErrorKind::InvalidCurve, "window must be nonnegative");
  Barcode bc;
  bc.window = window;
  for (int n = -window; n <= window; ++n) {
    bc.bars.push_back(Bar{n * kPi, (n + 1) * kPi, 2 * n});
    bc.bars.push_back(Bar{theta + (n - 1) * kPi, theta + n * kPi, 2 * n - 1});
  }
  bc.canonicalize();
  return bc;
}

enum class StripShape { triangle_up, triangle_down };

// Region of the (t, theta) strip decomposition, with the degree pair of the
// filtered endomorphisms constant on it.
struct RegionClass {
  StripShape shape = StripShape::triangle_up;
  int n = 0;
  std::pair<int, int> hom_degrees{0, 0};
};

// Classifies t against the half-open triangles: triangle_up_n covers
// (n*pi, n*pi + theta], triangle_down_n covers ((n-1)*pi + theta, n*pi].
inline RegionClass classify_strip(double t, double theta) {
  if (!(theta > 0 && theta < kPi))
    throw CurveError(CurveErrorKind::InvalidCurve, "theta must lie in (0, pi)");
  double k = std::floor(t / kPi);
  double r = t - k * kPi;
  if (r >= kPi) {  // guard against rounding at the seam
    k += 1;
    r -= kPi;
  }
  const double dist_lo = std::fabs(r);
  const double dist_mid = std::fabs(r - theta);
  const double dist_hi = std::fabs(kPi - r);
  const bool exact = (r == 0.0) || (r == theta);
  if (!exact && std::min({dist_lo, dist_mid, dist_hi}) < 1e-12)
    throw CurveError(CurveErrorKind::OnBoundary, "t lies on a region boundary", {t, theta});
  RegionClass out;
  const int n = (int)k;
  if (r == 0.0) {
    out.shape = StripShape::triangle_down;
    out.n = n;
    out.hom_degrees = {2 * n, 2 * n + 1};
  } else if (r <= theta) {
    out.shape = StripShape::triangle_up;
    out.n = n;
    out.hom_degrees = {2 * n + 1, 2 * n + 2};
  } else {
    out.shape = StripShape::triangle_down;
    out.n = n + 1;
    out.hom_degrees = {2 * (n + 1), 2 * (n + 1) + 1};
  }
  return out;
}

// Distinct mod-pi action values over the intersection components found at
// this angle, always including the diagonal value 0.
inline std::vector<double> action_spectrum(const JordanCurve& c, double theta,
                                           const FinderOptions& opt = {}) {
  const std::vector<FoundRectangle> found = find_rectangles(c, theta, opt);
  std::vector<double> vals;
  vals.push_back(0.0);
  for (const auto& fr : found) {
    vals.push_back(fr.point.action.t);
    vals.push_back(fr.min_action);
  }
  std::sort(vals.begin(), vals.end());
  std::vector<double> out;
  for (double v : vals) {
    bool merged = false;
    for (double& o : out)
      if (circ_dist_pi(o, v) < 1e-6) {
        merged = true;
        break;
      }
    if (!merged) out.push_back(v);
  }
  return out;
}

namespace detail {

inline double bar_halflength(const Bar& b) {
  if (std::isinf(b.death)) return std::numeric_limits<double>::infinity();
  return 0.5 * (b.death - b.birth);
}

inline double bar_linf(const Bar& a, const Bar& b) {
  const bool ia = std::isinf(a.death), ib = std::isinf(b.death);
  if (ia != ib) return std::numeric_limits<double>::infinity();
  const double dd = ia ? 0.0 : std::fabs(a.death - b.death);
  return std::max(std::fabs(a.birth - b.birth), dd);
}

// Exact bipartite bottleneck within one degree: real bars may match across,
// or be deleted at half-length cost via interchangeable diagonal slots.
inline double bottleneck_one_degree(const std::vector<Bar>& A, const std::vector<Bar>& B) {
  const std::size_t n = A.size(), m = B.size();
  if (n == 0 && m == 0) return 0.0;
  std::vector<double> cand;
  cand.push_back(0.0);
  for (const auto& a : A) {
    const double h = bar_halflength(a);
    if (std::isfinite(h)) cand.push_back(h);
  }
  for (const auto& b : B) {
    const double h = bar_halflength(b);
    if (std::isfinite(h)) cand.push_back(h);
  }
  for (const auto& a : A)
    for (const auto& b : B) {
      const double d = bar_linf(a, b);
      if (std::isfinite(d)) cand.push_back(d);
    }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  // Left side: A + m diagonal slots; right side: B + n diagonal slots.
  const std::size_t L = n + m, R = m + n;
  auto edge_ok = [&](std::size_t l, std::size_t r, double tau) {
    const bool lreal = l < n, rreal = r < m;
    if (lreal && rreal) return bar_linf(A[l], B[r]) <= tau;
    if (lreal && !rreal) return bar_halflength(A[l]) <= tau;
    if (!lreal && rreal) return bar_halflength(B[r]) <= tau;
    return true;
  };
  auto feasible = [&](double tau) {
    std::vector<int> match_r(R, -1);
    std::vector<char> used(R, 0);
    std::function<bool(std::size_t)> try_kuhn = [&](std::size_t l) -> bool {
      for (std::size_t r = 0; r < R; ++r) {
        if (used[r] || !edge_ok(l, r, tau)) continue;
        used[r] = 1;
        if (match_r[r] < 0 || try_kuhn((std::size_t)match_r[r])) {
          match_r[r] = (int)l;
          return true;
        }
      }
      return false;
    };
    for (std::size_t l = 0; l < L; ++l) {
      std::fill(used.begin(), used.end(), 0);
      if (!try_kuhn(l)) return false;
    }
    return true;
  };

  std::size_t lo = 0, hi = cand.size() - 1;
  if (!feasible(cand[hi])) return std::numeric_limits<double>::infinity();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(cand[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return cand[lo];
}

}  // namespace detail

// Degree-wise bottleneck distance between finite barcodes: optimal matching
// with deletion at half-length cost, maximized over degrees.
inline double bottleneck(const Barcode& b1, const Barcode& b2) {
  std::vector<int> degrees;
  for (const auto& b : b1.bars) degrees.push_back(b.degree);
  for (const auto& b : b2.bars) degrees.push_back(b.degree);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  double worst = 0.0;
  for (int deg : degrees) {
    std::vector<Bar> A, B;
    for (const auto& b : b1.bars)
      if (b.degree == deg) A.push_back(b);
    for (const auto& b : b2.bars)
      if (b.degree == deg) B.push_back(b);
    worst = std::max(worst, detail::bottleneck_one_degree(A, B));
  }
  return worst;
}

}  // namespace pegscope

#endif
