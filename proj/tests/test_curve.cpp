#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pegscope/curve.hpp"
#include "pegscope/flow.hpp"
#include "pegscope/generators.hpp"
#include "helpers.hpp"

using namespace pegscope;

TEST_CASE("validate accepts the ccw unit-side-2 square") {
  JordanCurve sq = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  ValidityReport rep = validate(sq);
  CHECK(rep.simple);
  CHECK(rep.closed);
  CHECK_FALSE(rep.reversed);
  CHECK(shoelace_area(sq) > 0);
}

TEST_CASE("validate repairs clockwise orientation and reports it") {
  JordanCurve sq = make_polygon({{1, -1}, {-1, -1}, {-1, 1}, {1, 1}});
  REQUIRE(shoelace_area(sq) < 0);
  ValidityReport rep = validate(sq);
  CHECK(rep.reversed);
  CHECK(shoelace_area(sq) > 0);
}

TEST_CASE("validate rejects the bowtie") {
  JordanCurve bow = make_polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  try {
    validate(bow);
    FAIL("expected SelfIntersection");
  } catch (const CurveError& e) {
    CHECK(e.kind == CurveErrorKind::SelfIntersection);
  }
}

TEST_CASE("zero-length edges are rejected") {
  try {
    make_polygon({{0, 0}, {0, 0}, {1, 1}});
    FAIL("expected DegenerateSegment");
  } catch (const CurveError& e) {
    CHECK(e.kind == CurveErrorKind::DegenerateSegment);
  }
}

TEST_CASE("area: shoelace square, quadrature circle and ellipse") {
  JordanCurve sq = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  CHECK(area(sq) == 4.0);

  JordanCurve circ = gen_circle(1.0, 1024);
  CHECK(std::fabs(area(circ) - kPi) < 1e-6);

  JordanCurve ell = gen_ellipse(2.0, 1.0, 1024);
  CHECK(std::fabs(area(ell) - 2.0 * kPi) < 1e-6);
}

TEST_CASE("area equals the shoelace value exactly on random simple polygons") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    JordanCurve poly = gen_random_star_polygon(rng, 16);
    double shoelace = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t j = 0; j < n; ++j) {
      const Point a = poly.pts[j], b = poly.pts[(j + 1) % n];
      shoelace += a.real() * b.imag() - b.real() * a.imag();
    }
    CHECK(area(poly) == 0.5 * shoelace);
  }
}

TEST_CASE("area of a smooth curve converges at least at second order") {
  // Spectral quadrature is far better than second order; assert the
  // second-order envelope (errors sit at the machine floor).
  const double e1 = std::fabs(area(gen_circle(1.0, 256)) - kPi);
  const double e2 = std::fabs(area(gen_circle(1.0, 512)) - kPi);
  const double h1 = kTwoPi / 256, h2 = kTwoPi / 512;
  CHECK(e1 < h1 * h1);
  CHECK(e2 < h2 * h2);
}

TEST_CASE("arc_length examples") {
  JordanCurve sq = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  CHECK(arc_length(sq) == 8.0);
  CHECK(std::fabs(arc_length(gen_circle(1.0, 1024)) - kTwoPi) < 1e-4);
  CHECK(arc_length(gen_circle(1.0, 64)) < kTwoPi);
}

TEST_CASE("signed_distance examples") {
  JordanCurve circ = gen_circle(1.0, 4096);
  CHECK(std::fabs(signed_distance(circ, {0, 0}) - (-1.0)) < 1e-5);
  CHECK(std::fabs(signed_distance(circ, {2, 0}) - 1.0) < 1e-5);
  JordanCurve sq = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  CHECK(signed_distance(sq, {0.5, 0.0}) == -0.5);
  CHECK(signed_distance(sq, {2.0, 0.0}) == 1.0);
}

TEST_CASE("signed_distance is zero on the polyline") {
  JordanCurve sq = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  SegmentIndex index(sq);
  CHECK(index.signed_distance(Point{1.0, 0.25}) == 0.0);
  CHECK(index.signed_distance(sq.pts[2]) == 0.0);
}

TEST_CASE("point_at interpolates nodes exactly") {
  JordanCurve circ = gen_circle(1.0, 256);
  for (std::size_t j = 0; j < circ.size(); j += 17) {
    CHECK(point_at(circ, circ.s[j]) == circ.pts[j]);
  }
}

TEST_CASE("radial flow: closed-form circle shrink") {
  JordanCurve c2 = gen_circle(2.0, 2048);
  JordanCurve out = radial_flow(c2, -1.5, {0, 0});
  for (const Point& p : out.pts) CHECK(std::fabs(std::abs(p) - 1.0) < 1e-12);
  CHECK(std::fabs(area(out) - kPi) < 1e-8);
}

TEST_CASE("radial flow: area law on the unit square") {
  JordanCurve sq = make_polygon({{0.5, 0.5}, {-0.5, 0.5}, {-0.5, -0.5}, {0.5, -0.5}});
  const double a0 = area(sq);
  JordanCurve out = radial_flow(sq, 0.1, {0, 0});
  CHECK(std::fabs(area(out) - a0 - kTwoPi * 0.1) < 1e-6);
}

TEST_CASE("radial flow: collapse is detected") {
  JordanCurve circ = gen_circle(1.0, 512);
  try {
    radial_flow(circ, -0.6, {0, 0});
    FAIL("expected FlowCollapse");
  } catch (const CurveError& e) {
    CHECK(e.kind == CurveErrorKind::FlowCollapse);
  }
}

TEST_CASE("radial flow: base must be interior") {
  JordanCurve circ = gen_circle(1.0, 512);
  try {
    radial_flow(circ, 0.1, {3, 0});
    FAIL("expected BaseOutside");
  } catch (const CurveError& e) {
    CHECK(e.kind == CurveErrorKind::BaseOutside);
  }
}

TEST_CASE("normalize_area: circle radius 2 contracts to the unit circle") {
  JordanCurve c2 = gen_circle(2.0, 2048);
  CHECK(std::fabs(area_normalizing_time(c2) - (-1.5)) < 1e-12);
  JordanCurve out = normalize_area(c2, {0, 0});
  CHECK(std::fabs(area(out) - kPi) < 1e-9);
  for (const Point& p : out.pts) CHECK(std::fabs(std::abs(p) - 1.0) < 1e-12);
}

TEST_CASE("normalize_area: unit circle is a fixed point") {
  JordanCurve c = gen_circle(1.0, 1024);
  JordanCurve out = normalize_area(c, {0, 0});
  double worst = 0.0;
  for (const Point& p : out.pts) worst = std::max(worst, std::fabs(std::abs(p) - 1.0));
  CHECK(worst < 1e-10);
}

TEST_CASE("normalize_area: square side 2 reaches area pi within 1e-9") {
  JordanCurve sq = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  JordanCurve out = normalize_area(sq, {0, 0});
  CHECK(std::fabs(area(out) - kPi) < 1e-9);
}

TEST_CASE("normalize_area is idempotent within 1e-9") {
  JordanCurve sq = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  JordanCurve once = normalize_area(sq, {0, 0});
  JordanCurve twice = normalize_area(once, {0, 0});
  CHECK(std::fabs(area(twice) - area(once)) < 1e-9);
  SegmentIndex index(once);
  double worst = 0.0;
  for (std::size_t j = 0; j < twice.size(); j += 7)
    worst = std::max(worst, index.unsigned_distance(twice.pts[j]));
  CHECK(worst < 1e-9);
}

TEST_CASE("pole of inaccessibility of a square is near the center") {
  JordanCurve sq = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  const Point pole = pole_of_inaccessibility(sq);
  CHECK(std::abs(pole) < 0.05);
}

TEST_CASE("winding number distinguishes inside from outside") {
  JordanCurve circ = gen_circle(1.0, 256);
  CHECK(winding_number(circ, {0.2, 0.3}) == 1);
  CHECK(winding_number(circ, {1.4, 0.0}) == 0);
}

TEST_CASE("densify preserves the polyline geometry") {
  JordanCurve sq = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  JordanCurve fine = densify(sq, 256);
  CHECK(fine.size() == 256);
  CHECK(std::fabs(area(fine) - area(sq)) < 1e-13);
  SegmentIndex index(sq);
  for (const Point& p : fine.pts) CHECK(index.unsigned_distance(p) < 1e-14);
}
