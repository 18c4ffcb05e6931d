#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pegscope/generators.hpp"
#include "pegscope/io.hpp"

using namespace pegscope;

TEST_CASE("curve JSON round trip is bit exact") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    JordanCurve poly = gen_random_star_polygon(rng, 10 + trial);
    const std::string text = curve_to_json(poly);
    JordanCurve back = curve_from_json(text);
    REQUIRE(back.size() == poly.size());
    for (std::size_t j = 0; j < poly.size(); ++j) {
      CHECK(back.pts[j].real() == poly.pts[j].real());
      CHECK(back.pts[j].imag() == poly.pts[j].imag());
      CHECK(back.s[j] == poly.s[j]);
    }
    CHECK(curve_to_json(back) == text);
  }

  JordanCurve circ = gen_circle(1.0, 512);
  const std::string text = curve_to_json(circ);
  JordanCurve back = curve_from_json(text);
  REQUIRE(back.kind == CurveKind::samples);
  for (std::size_t j = 0; j < circ.size(); ++j) {
    CHECK(back.pts[j] == circ.pts[j]);
    CHECK(back.s[j] == circ.s[j]);
  }
  CHECK(curve_to_json(back) == text);
}

TEST_CASE("curve JSON schema errors") {
  CHECK_THROWS(curve_from_json("{\"kind\":\"blob\"}"));
  CHECK_THROWS(curve_from_json("{\"kind\":\"samples\",\"period\":1.0,\"points\":[[0,1,0]]}"));
  CHECK_THROWS(curve_from_json("not json"));
}

TEST_CASE("sweep CSV format") {
  SweepTable table;
  table.push_back(SweepRow{0.5, 2, 0.25, 1e-12});
  const std::string csv = sweep_to_csv(table);
  CHECK(csv.rfind("theta,count,min_action,max_residual\n", 0) == 0);
  CHECK(csv.find("0.5,2,0.25,") != std::string::npos);
  CHECK(csv.back() == '\n');
}

TEST_CASE("barcode CSV is sorted and spells infinity as inf") {
  Barcode bc;
  bc.bars.push_back(Bar{1.0, std::numeric_limits<double>::infinity(), 1});
  bc.bars.push_back(Bar{0.0, kPi, 0});
  bc.bars.push_back(Bar{-kPi, 0.0, 0});
  const std::string csv = barcode_to_csv(bc);
  const std::string expect_head = "degree,birth,death\n";
  REQUIRE(csv.rfind(expect_head, 0) == 0);
  const std::size_t first = csv.find('\n') + 1;
  const std::size_t second = csv.find('\n', first) + 1;
  CHECK(csv.substr(first, second - first).rfind("0,-3.14", 0) == 0);
  CHECK(csv.find(",inf\n") != std::string::npos);
}

TEST_CASE("find CSV rectangles can be parsed back") {
  JordanCurve circ = gen_circle(1.0, 2048);
  FinderOptions opt;
  opt.grid = 96;
  const auto found = find_rectangles(circ, kPi / 2, opt);
  REQUIRE(!found.empty());
  const std::string csv = find_to_csv(found);
  const auto rects = rects_from_csv(csv);
  REQUIRE(rects.size() == found.size());
  for (std::size_t k = 0; k < rects.size(); ++k)
    for (int v = 0; v < 4; ++v) {
      CHECK(rects[k][v].real() == found[k].rect.vertices[v].real());
      CHECK(rects[k][v].imag() == found[k].rect.vertices[v].imag());
    }
}

TEST_CASE("SVG output is deterministic with the expected element counts") {
  JordanCurve circ = gen_circle(1.0, 256);
  std::array<Point, 4> sq = {Point{1, 0}, Point{0, 1}, Point{-1, 0}, Point{0, -1}};
  const std::string one = plot_svg(circ, {sq});
  const std::string two = plot_svg(circ, {sq});
  CHECK(one == two);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = one.find(needle, pos)) != std::string::npos) {
      ++n;
      pos += needle.size();
    }
    return n;
  };
  CHECK(count("<path") == 1);
  CHECK(count("<line") == 4);
  const std::string empty_rects = plot_svg(circ, {});
  std::size_t lines = 0, pos = 0;
  while ((pos = empty_rects.find("<line", pos)) != std::string::npos) {
    ++lines;
    pos += 5;
  }
  CHECK(lines == 0);
}

TEST_CASE("17 significant digit formatting round trips doubles") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> uni(-10.0, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double v = uni(rng) * std::pow(10.0, trial % 7 - 3);
    CHECK(std::stod(fmt17(v)) == v);
  }
}
