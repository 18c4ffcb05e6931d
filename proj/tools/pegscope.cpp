// pegscope: inscribed-rectangle laboratory for Jordan curves.
//
// Subcommands: gen, find, sweep, spectrum, classify, bound, plot.
// Results go to --out or standard output; diagnostics to standard error.
// Exit codes: 0 success, 1 no solution found (find), 2 usage or input error.

#include <iostream>

#include <CLI11.hpp>

#include "pegscope/barcode.hpp"
#include "pegscope/flow.hpp"
#include "pegscope/generators.hpp"
#include "pegscope/io.hpp"
#include "pegscope/monotone.hpp"

namespace {

using namespace pegscope;

// Radians, with exact pi multiples: "pi", "pi/3", "2pi/3", "0.75pi", "1.047".
double parse_angle(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace((unsigned char)ch)) s.push_back(ch);
  if (s.empty()) throw CLI::ValidationError("angle", "empty angle");
  const std::size_t pos = s.find("pi");
  if (pos == std::string::npos) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw CLI::ValidationError("angle", "cannot parse angle: " + raw);
    return v;
  }
  double mult = 1.0;
  std::string head = s.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  if (!head.empty()) {
    std::size_t used = 0;
    mult = std::stod(head, &used);
    if (used != head.size()) throw CLI::ValidationError("angle", "cannot parse angle: " + raw);
  }
  double den = 1.0;
  std::string tail = s.substr(pos + 2);
  if (!tail.empty()) {
    if (tail[0] != '/') throw CLI::ValidationError("angle", "cannot parse angle: " + raw);
    std::size_t used = 0;
    den = std::stod(tail.substr(1), &used);
    if (used != tail.size() - 1 || den == 0)
      throw CLI::ValidationError("angle", "cannot parse angle: " + raw);
  }
  return mult * kPi / den;
}

Point parse_point(const std::string& raw) {
  const std::size_t comma = raw.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("point", "expected \"x,y\": " + raw);
  return Point(std::stod(raw.substr(0, comma)), std::stod(raw.substr(comma + 1)));
}

std::vector<Point> parse_vertices(const std::string& raw) {
  std::vector<Point> out;
  std::istringstream in(raw);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    out.push_back(parse_point(item));
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    save_text(out_path, text);
}

struct GenArgs {
  std::string shape;
  double radius = 1.0, a = 2.0, b = 1.0, eps = 0.05, side = 2.0;
  int modes = 4, mollify_n = 20;
  unsigned seed = 1;
  std::size_t samples = 8192, grid_nodes = 4096;
  std::string vertices, center = "0,0", out;
  bool area_pi = false;
};

int run_gen(const GenArgs& g) {
  JordanCurve curve;
  if (g.shape == "circle") {
    curve = gen_circle(g.radius, g.samples, parse_point(g.center));
  } else if (g.shape == "ellipse") {
    curve = gen_ellipse(g.a, g.b, g.samples);
  } else if (g.shape == "polygon") {
    curve = make_polygon(parse_vertices(g.vertices));
  } else if (g.shape == "square") {
    curve = gen_square(g.side);
  } else if (g.shape == "mollified-square") {
    curve = gen_mollified_square(g.mollify_n, g.grid_nodes);
  } else if (g.shape == "perturbed-circle") {
    curve = gen_perturbed_circle(g.eps, g.modes, g.seed, g.samples);
  } else {
    throw CLI::ValidationError("shape", "unknown shape: " + g.shape);
  }
  validate(curve);
  if (g.area_pi) {
    const Point base = pole_of_inaccessibility(curve);
    curve = normalize_area(curve, base);
    validate(curve);
  }
  emit(curve_to_json(curve), g.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inscribed-rectangle laboratory for Jordan curves"};
  app.require_subcommand(1);

  GenArgs g;
  CLI::App* gen = app.add_subcommand("gen", "generate a curve file");
  gen->add_option("shape", g.shape,
                  "circle|ellipse|polygon|square|mollified-square|perturbed-circle")
      ->required();
  gen->add_option("--radius", g.radius, "circle radius");
  gen->add_option("--a", g.a, "ellipse semi-axis a");
  gen->add_option("--b", g.b, "ellipse semi-axis b");
  gen->add_option("--side", g.side, "square side");
  gen->add_option("--vertices", g.vertices, "polygon vertices \"x,y;x,y;...\"");
  gen->add_option("--samples", g.samples, "sample count");
  gen->add_option("--grid-nodes", g.grid_nodes, "node count for mollified-square");
  gen->add_option("--n", g.mollify_n, "mollification index");
  gen->add_option("--eps", g.eps, "perturbation amplitude");
  gen->add_option("--modes", g.modes, "perturbation mode count");
  gen->add_option("--seed", g.seed, "perturbation seed");
  gen->add_option("--center", g.center, "circle center \"x,y\"");
  gen->add_flag("--area-pi", g.area_pi, "rescale enclosed area to pi by the radial flow");
  gen->add_option("--out", g.out, "output file (default stdout)");

  std::string in_path, out_path, theta_str = "pi/2", rects_path, t_str;
  std::string inner_path, outer_path, base_str;
  int finder_grid = 512;
  int sweep_count = 11;
  std::string thetas_str;
  double u0 = 0.0, u1 = 1.0;

  CLI::App* find = app.add_subcommand("find", "find inscribed theta-rectangles");
  find->add_option("--in", in_path, "curve JSON file")->required();
  find->add_option("--theta", theta_str, "diagonal angle in (0,pi)")->required();
  find->add_option("--grid", finder_grid, "seeding grid per axis");
  find->add_option("--out", out_path, "output CSV (default stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "sweep theta over a grid");
  sweep->add_option("--in", in_path, "curve JSON file")->required();
  sweep->add_option("--grid", sweep_count, "number of interior theta values");
  sweep->add_option("--thetas", thetas_str, "explicit comma-separated angles");
  sweep->add_option("--finder-grid", finder_grid, "seeding grid per axis");
  sweep->add_option("--out", out_path, "output CSV (default stdout)");

  CLI::App* spectrum = app.add_subcommand("spectrum", "mod-pi action spectrum at one theta");
  spectrum->add_option("--in", in_path, "curve JSON file")->required();
  spectrum->add_option("--theta", theta_str, "diagonal angle in (0,pi)")->required();
  spectrum->add_option("--grid", finder_grid, "seeding grid per axis");
  spectrum->add_option("--out", out_path, "output CSV (default stdout)");

  CLI::App* classify = app.add_subcommand("classify", "classify a (t,theta) strip point");
  classify->add_option("--t", t_str, "filtration parameter t")->required();
  classify->add_option("--theta", theta_str, "angle in (0,pi)")->required();
  classify->add_option("--out", out_path, "output (default stdout)");

  CLI::App* bound = app.add_subcommand("bound", "annulus energy bound between nested curves");
  bound->add_option("--inner", inner_path, "inner curve JSON")->required();
  bound->add_option("--outer", outer_path, "outer curve JSON")->required();
  bound->add_option("--base", base_str, "base point \"x,y\" (default: inner pole)");
  bound->add_option("--u0", u0, "index of the inner curve");
  bound->add_option("--u1", u1, "index of the outer curve");
  bound->add_option("--out", out_path, "output CSV (default stdout)");

  CLI::App* plot = app.add_subcommand("plot", "render curve and rectangles to SVG");
  plot->add_option("--in", in_path, "curve JSON file")->required();
  plot->add_option("--rects", rects_path, "find CSV with rectangles");
  plot->add_option("--out", out_path, "output SVG (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return run_gen(g);

    if (find->parsed()) {
      JordanCurve curve = load_curve(in_path);
      validate(curve);
      FinderOptions opt;
      opt.grid = finder_grid;
      const double theta = parse_angle(theta_str);
      const auto found = find_rectangles(curve, theta, opt);
      emit(find_to_csv(found), out_path);
      if (found.empty()) {
        std::cerr << "no off-diagonal intersection at grid " << finder_grid << "\n";
        return 1;
      }
      return 0;
    }

    if (sweep->parsed()) {
      JordanCurve curve = load_curve(in_path);
      validate(curve);
      FinderOptions opt;
      opt.grid = finder_grid;
      std::vector<double> thetas;
      if (!thetas_str.empty()) {
        std::istringstream in(thetas_str);
        std::string item;
        while (std::getline(in, item, ',')) thetas.push_back(parse_angle(item));
      } else {
        for (int k = 1; k <= sweep_count; ++k)
          thetas.push_back(kPi * (double)k / (double)(sweep_count + 1));
      }
      emit(sweep_to_csv(sweep_theta(curve, thetas, opt)), out_path);
      return 0;
    }

    if (spectrum->parsed()) {
      JordanCurve curve = load_curve(in_path);
      validate(curve);
      FinderOptions opt;
      opt.grid = finder_grid;
      emit(spectrum_to_csv(action_spectrum(curve, parse_angle(theta_str), opt)), out_path);
      return 0;
    }

    if (classify->parsed()) {
      const RegionClass rc = classify_strip(parse_angle(t_str), parse_angle(theta_str));
      std::ostringstream line;
      line << (rc.shape == StripShape::triangle_up ? "triangle_up" : "triangle_down") << ","
           << rc.n << "," << rc.hom_degrees.first << "," << rc.hom_degrees.second << "\n";
      emit(line.str(), out_path);
      return 0;
    }

    if (bound->parsed()) {
      JordanCurve inner = load_curve(inner_path);
      JordanCurve outer = load_curve(outer_path);
      validate(inner);
      validate(outer);
      const Point base = base_str.empty() ? pole_of_inaccessibility(inner) : parse_point(base_str);
      AnnulusFamily fam;
      fam.u = {u0, u1};
      fam.curves = {std::move(inner), std::move(outer)};
      fam.base = base;
      fam.check();
      emit(bound_to_csv({energy_bound(fam, u0, u1)}), out_path);
      return 0;
    }

    if (plot->parsed()) {
      JordanCurve curve = load_curve(in_path);
      validate(curve);
      std::vector<std::array<Point, 4>> rects;
      if (!rects_path.empty()) rects = rects_from_csv(load_text(rects_path));
      emit(plot_svg(curve, rects), out_path);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CurveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
