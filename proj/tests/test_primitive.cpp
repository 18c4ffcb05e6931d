#include <catch2/catch_amalgamated.hpp>

#include "pegscope/generators.hpp"
#include "pegscope/monotone.hpp"
#include "pegscope/primitive.hpp"
#include "helpers.hpp"

using namespace pegscope;
using testutil::fstd;

TEST_CASE("unit-circle primitive reproduces the closed form") {
  JordanCurve circ = gen_circle(1.0, 1024);
  Primitive f = primitive(circ);
  CHECK(f(0.0) == 0.0);
  CHECK(std::fabs(f(kPi / 2) - kPi / 4) < 1e-10);
  CHECK(std::fabs(f.period_increment() - kPi) < 1e-10);
  double worst = 0.0;
  for (std::size_t j = 0; j < circ.size(); ++j)
    worst = std::max(worst, std::fabs(f(circ.s[j]) - fstd(circ.s[j])));
  CHECK(worst < 1e-10);
}

TEST_CASE("quasi-periodicity holds exactly through the lift") {
  JordanCurve sq = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  Primitive f = primitive(sq);
  // Exact at representable shifts; elsewhere only the rounding of s + 2*pi
  // itself enters (the lift adds period_increment exactly).
  CHECK(f(kTwoPi) - f(0.0) - f.period_increment() == 0.0);
  for (double s : {0.7, 2.5, 5.9}) {
    CHECK(std::fabs(f(s + kTwoPi) - f(s) - f.period_increment()) < 4e-15);
  }
  CHECK(std::fabs(f.period_increment() - area(sq)) < 1e-12);

  JordanCurve circ = gen_circle(1.0, 512);
  Primitive g = primitive(circ);
  CHECK(g(kTwoPi) - g(0.0) - g.period_increment() == 0.0);
  for (double s : {1.1, 4.0}) {
    CHECK(std::fabs(g(s + kTwoPi) - g(s) - g.period_increment()) < 1e-10);
  }
  CHECK(std::fabs(g.period_increment() - area(circ)) < 1e-10);
}

TEST_CASE("primitive derivative matches -xi x' through a high-order stencil") {
  JordanCurve circ = gen_circle(1.0, 1024);
  Primitive f = primitive(circ);
  const double h = kTwoPi / 1024;
  double worst = 0.0;
  for (std::size_t j = 2; j + 2 < 1024; j += 3) {
    const double m = circ.s[j] + h / 2;
    // 4th-order staggered stencil around the midpoint.
    const double fd = (27.0 * (f(circ.s[j + 1]) - f(circ.s[j])) -
                       (f(circ.s[j + 2]) - f(circ.s[j - 1]))) /
                      (24.0 * h);
    const double truth = std::sin(m) * std::sin(m);  // -xi x' on the unit circle
    worst = std::max(worst, std::fabs(fd - truth));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("polygon primitive is exact per edge") {
  JordanCurve sq = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  Primitive f = primitive(sq);
  // Top edge from (1,1) to (-1,1): f = -xi dx integrates to +2 along it.
  CHECK(std::fabs((f(kPi / 2) - f(0.0)) - 2.0) < 1e-12);
  CHECK(f.period_increment() == area(sq));
}

TEST_CASE("is_locally_monotone: circle and square admit windows") {
  JordanCurve circ = gen_circle(1.0, 512);
  MonotonicityResult rc = is_locally_monotone(circ, 0.5);
  CHECK(rc.ok);
  CHECK(rc.windows.size() == circ.size());

  JordanCurve sq = densify(make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}), 256);
  MonotonicityResult rs = is_locally_monotone(sq, 0.2);
  CHECK(rs.ok);
}

TEST_CASE("is_locally_monotone: a doubled-back needle fails") {
  // (t^2, t^4)-style tip: the curve leaves and re-enters along the same ray,
  // so no direction is strictly monotone through the tip.
  std::vector<Point> pts;
  const int m = 40;
  for (int k = -m; k <= m; ++k) {
    const double t = (double)k / m;
    pts.push_back(Point{2.0 + t * t, 0.25 * t * t * t * t});
  }
  // close up with a wide arc around the origin
  for (int k = 1; k < 60; ++k) {
    const double ang = kTwoPi * k / 60.0;
    pts.push_back(Point{3.2 * std::cos(ang), 3.2 * std::sin(ang)});
  }
  std::vector<double> order(pts.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = (double)j;
  JordanCurve needle = make_samples(order, std::move(pts));
  MonotonicityResult res = is_locally_monotone(needle, 0.05);
  CHECK_FALSE(res.ok);
  // Witness sits near the needle tip (t = 0 maps to the first ring stretch).
  const Point w = point_at(needle, res.witness);
  CHECK(std::abs(w - Point{2.0, 0.0}) < 0.5);
}

TEST_CASE("primitive_monotone matches the closed form on the circle") {
  JordanCurve circ = gen_circle(1.0, 1024);
  std::vector<MonotoneWindow> windows;
  for (int k = 0; k < 8; ++k) {
    MonotoneWindow w;
    w.center = kPi * k / 4.0;
    w.lo = w.center - 0.33 * kPi;
    w.hi = w.center + 0.33 * kPi;
    const Point v = std::polar(1.0, w.center + kPi / 2);
    w.dir = v;
    w.normal = Point(-v.imag(), v.real());
    windows.push_back(w);
  }
  Primitive f = primitive_monotone(circ, windows);
  double base = f(circ.s[0]) - fstd(circ.s[0]);
  double worst = 0.0;
  for (std::size_t j = 0; j < circ.size(); ++j)
    worst = std::max(worst, std::fabs(f(circ.s[j]) - fstd(circ.s[j]) - base));
  CHECK(worst < 1e-8);
}

TEST_CASE("primitive_monotone agrees with primitive up to constant on the square") {
  JordanCurve sq = densify(make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}), 512);
  // Four windows straddling one vertex each, bounded inside the edges.
  std::vector<MonotoneWindow> windows;
  for (int k = 0; k < 4; ++k) {
    MonotoneWindow w;
    w.center = kPi * k / 2.0;
    w.lo = w.center - 0.3 * kPi;
    w.hi = w.center + 0.3 * kPi;
    const Point v = std::polar(1.0, 3.0 * kPi / 4.0 + k * kPi / 2.0);
    w.dir = v;
    w.normal = Point(-v.imag(), v.real());
    windows.push_back(w);
  }
  Primitive fm = primitive_monotone(sq, windows);
  Primitive f = primitive(sq);
  const double base = fm(0.0) - f(0.0);
  double worst = 0.0;
  double mean = 0.0;
  std::vector<double> diffs;
  for (std::size_t j = 0; j < sq.size(); ++j) {
    const double d = fm(sq.s[j]) - f(sq.s[j]) - base;
    worst = std::max(worst, std::fabs(d));
    diffs.push_back(d);
    mean += d;
  }
  mean /= diffs.size();
  double var = 0.0;
  for (double d : diffs) var += (d - mean) * (d - mean);
  var /= diffs.size();
  CHECK(worst < 1e-10);
  CHECK(var < 1e-16);
}

TEST_CASE("primitive_monotone rejects a backtracking window") {
  JordanCurve circ = gen_circle(1.0, 256);
  std::vector<MonotoneWindow> windows;
  MonotoneWindow bad;
  bad.center = 0.0;
  bad.lo = -kPi;  // half the circle: no direction is monotone over it
  bad.hi = kPi;
  bad.dir = Point{1, 0};
  bad.normal = Point{0, 1};
  windows.push_back(bad);
  MonotoneWindow rest;
  rest.center = kPi;
  rest.lo = 0.8 * kPi;
  rest.hi = 1.2 * kPi + 0.2;
  rest.dir = Point{-1, 0};
  rest.normal = Point{0, -1};
  windows.push_back(rest);
  // Ensure coverage so the failure is NotMonotone, not CoverageGap.
  for (int k = 0; k < 8; ++k) {
    MonotoneWindow w;
    w.center = kPi * k / 4.0;
    w.lo = w.center - 0.33 * kPi;
    w.hi = w.center + 0.33 * kPi;
    const Point v = std::polar(1.0, w.center + kPi / 2);
    w.dir = v;
    w.normal = Point(-v.imag(), v.real());
    windows.push_back(w);
  }
  try {
    primitive_monotone(circ, windows);
    FAIL("expected NotMonotone");
  } catch (const CurveError& e) {
    CHECK(e.kind == CurveErrorKind::NotMonotone);
  }
}

TEST_CASE("primitive_monotone reports coverage gaps") {
  JordanCurve circ = gen_circle(1.0, 256);
  std::vector<MonotoneWindow> windows;
  MonotoneWindow w;
  w.center = 0.0;
  w.lo = -0.2;
  w.hi = 0.2;
  w.dir = Point{0, 1};
  w.normal = Point{-1, 0};
  windows.push_back(w);
  try {
    primitive_monotone(circ, windows);
    FAIL("expected CoverageGap");
  } catch (const CurveError& e) {
    CHECK(e.kind == CurveErrorKind::CoverageGap);
  }
}
