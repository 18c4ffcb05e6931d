#ifndef PEGSCOPE_IO_HPP
#define PEGSCOPE_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pegscope/annulus.hpp"
#include "pegscope/barcode.hpp"
#include "pegscope/finder.hpp"

namespace pegscope {

// All emitted numbers carry 17 significant digits so parsing reproduces the
// exact double.
inline std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string curve_to_json(const JordanCurve& c) {
  std::ostringstream out;
  if (c.kind == CurveKind::polygon) {
    out << "{\"kind\":\"polygon\",\"vertices\":[";
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out << ",";
      out << "[" << fmt17(c.pts[j].real()) << "," << fmt17(c.pts[j].imag()) << "]";
    }
    out << "]}";
  } else {
    out << "{\"kind\":\"samples\",\"period\":" << fmt17(kTwoPi) << ",\"points\":[";
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out << ",";
      out << "[" << fmt17(c.s[j]) << "," << fmt17(c.pts[j].real()) << ","
          << fmt17(c.pts[j].imag()) << "]";
    }
    out << "]}";
  }
  out << "\n";
  return out.str();
}

inline JordanCurve curve_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "polygon") {
    std::vector<Point> pts;
    for (const auto& v : j.at("vertices"))
      pts.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    return make_polygon(std::move(pts));
  }
  if (kind == "samples") {
    const double period = j.at("period").get<double>();
    if (std::fabs(period - kTwoPi) > 1e-6)
      throw CurveError(CurveErrorKind::InvalidCurve, "sample period must be 2*pi");
    std::vector<double> s;
    std::vector<Point> pts;
    for (const auto& v : j.at("points")) {
      s.push_back(v.at(0).get<double>());
      pts.emplace_back(v.at(1).get<double>(), v.at(2).get<double>());
    }
    return make_samples(s, std::move(pts));
  }
  throw CurveError(CurveErrorKind::InvalidCurve, "unknown curve kind: " + kind);
}

inline void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

inline std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline JordanCurve load_curve(const std::string& path) { return curve_from_json(load_text(path)); }

inline std::string sweep_to_csv(const SweepTable& table) {
  std::ostringstream out;
  out << "theta,count,min_action,max_residual\n";
  for (const auto& row : table)
    out << fmt17(row.theta) << "," << row.count << "," << fmt17(row.min_action) << ","
        << fmt17(row.max_residual) << "\n";
  return out.str();
}

inline std::string barcode_to_csv(const Barcode& bc) {
  Barcode sorted = bc;
  sorted.canonicalize();
  std::ostringstream out;
  out << "degree,birth,death\n";
  for (const auto& b : sorted.bars)
    out << b.degree << "," << fmt17(b.birth) << ","
        << (std::isinf(b.death) ? std::string("inf") : fmt17(b.death)) << "\n";
  return out.str();
}

inline std::string spectrum_to_csv(const std::vector<double>& actions) {
  std::ostringstream out;
  out << "action\n";
  for (double a : actions) out << fmt17(a) << "\n";
  return out.str();
}

inline std::string bound_to_csv(const std::vector<EnergyBound>& rows) {
  std::ostringstream out;
  out << "u0,u1,L,area_gap,bound\n";
  for (const auto& r : rows)
    out << fmt17(r.u0) << "," << fmt17(r.u1) << "," << fmt17(r.L) << "," << fmt17(r.area_gap)
        << "," << fmt17(r.bound) << "\n";
  return out.str();
}

inline std::string find_to_csv(const std::vector<FoundRectangle>& results) {
  std::ostringstream out;
  out << "s1,s2,theta,residual,action,kind,family,size,span";
  for (int k = 1; k <= 4; ++k) out << ",v" << k << "x,v" << k << "y";
  out << "\n";
  for (const auto& fr : results) {
    out << fmt17(fr.point.s1) << "," << fmt17(fr.point.s2) << "," << fmt17(fr.point.theta) << ","
        << fmt17(fr.point.residual) << "," << fmt17(fr.point.action.t) << ","
        << (fr.point.kind == IntersectionKind::diagonal ? "diagonal" : "nondegenerate") << ","
        << (fr.is_family ? 1 : 0) << "," << fr.cluster_size << "," << fmt17(fr.param_span);
    for (const Point& v : fr.rect.vertices) out << "," << fmt17(v.real()) << "," << fmt17(v.imag());
    out << "\n";
  }
  return out.str();
}

// Rectangle vertex rows parsed back from a find CSV (for plotting).
inline std::vector<std::array<Point, 4>> rects_from_csv(const std::string& text) {
  std::vector<std::array<Point, 4>> out;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) return out;
  std::vector<std::string> header;
  {
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);
  }
  int v1 = -1;
  for (std::size_t k = 0; k < header.size(); ++k)
    if (header[k] == "v1x") v1 = (int)k;
  if (v1 < 0) throw std::runtime_error("rects CSV is missing vertex columns");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() < (std::size_t)v1 + 8) throw std::runtime_error("short row in rects CSV");
    std::array<Point, 4> rect;
    for (int k = 0; k < 4; ++k)
      rect[k] = Point(std::stod(cells[v1 + 2 * k]), std::stod(cells[v1 + 2 * k + 1]));
    out.push_back(rect);
  }
  return out;
}

// Deterministic SVG: fixed viewBox from the curve bounds, curve path first,
// then rectangle edges in row order.
inline std::string plot_svg(const JordanCurve& c, const std::vector<std::array<Point, 4>>& rects) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  auto grow = [&](Point p) {
    x0 = std::min(x0, p.real());
    x1 = std::max(x1, p.real());
    y0 = std::min(y0, p.imag());
    y1 = std::max(y1, p.imag());
  };
  for (const Point& p : c.pts) grow(p);
  for (const auto& r : rects)
    for (const Point& p : r) grow(p);
  const double mx = 0.05 * (x1 - x0 + 1e-9), my = 0.05 * (y1 - y0 + 1e-9);
  x0 -= mx;
  x1 += mx;
  y0 -= my;
  y1 += my;
  const double sw = std::max(x1 - x0, y1 - y0) / 400.0;
  // Plane y points up; SVG y points down, so emit -y.
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt17(x0) << " "
      << fmt17(-y1) << " " << fmt17(x1 - x0) << " " << fmt17(y1 - y0) << "\">\n";
  out << "<path fill=\"none\" stroke=\"#20435c\" stroke-width=\"" << fmt17(sw) << "\" d=\"";
  for (std::size_t j = 0; j < c.size(); ++j) {
    out << (j == 0 ? "M" : "L") << fmt17(c.pts[j].real()) << " " << fmt17(-c.pts[j].imag());
  }
  out << "Z\"/>\n";
  for (const auto& r : rects) {
    for (int k = 0; k < 4; ++k) {
      const Point a = r[k], b = r[(k + 1) % 4];
      out << "<line x1=\"" << fmt17(a.real()) << "\" y1=\"" << fmt17(-a.imag()) << "\" x2=\""
          << fmt17(b.real()) << "\" y2=\"" << fmt17(-b.imag())
          << "\" stroke=\"#b3382c\" stroke-width=\"" << fmt17(sw) << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pegscope

#endif
