#ifndef PEGSCOPE_PRIMITIVE_HPP
#define PEGSCOPE_PRIMITIVE_HPP

#include "pegscope/curve.hpp"

namespace pegscope {

// Quasi-periodic action primitive of a curve: f' = -xi x' along the curve,
// f(0) = 0, f(s + 2*pi) = f(s) + period_increment. The sign convention is
// anchored to the unit circle, whose primitive is (s - sin(2s)/2)/2.
// Stored as per-interval cubic polynomials in the local offset t = s - s_j.
class Primitive {
 public:
  Primitive() = default;
  Primitive(std::vector<double> nodes, std::vector<double> values,
            std::vector<std::array<double, 4>> coef, double increment)
      : s_(std::move(nodes)), f_(std::move(values)), coef_(std::move(coef)), inc_(increment) {}

  double period_increment() const { return inc_; }
  const std::vector<double>& nodes() const { return s_; }
  const std::vector<double>& values() const { return f_; }

  // Value of the real-valued lift at any parameter.
  double operator()(double sv) const {
    const double shift = std::floor(sv / kTwoPi);
    const double u = sv - shift * kTwoPi;
    const std::size_t n = s_.size() - 1;  // intervals
    std::size_t lo = 0, hi = n;
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      if (s_[mid] <= u)
        lo = mid;
      else
        hi = mid;
    }
    const double t = u - s_[lo];
    const auto& c = coef_[lo];
    return shift * inc_ + ((c[3] * t + c[2]) * t + c[1]) * t + c[0];
  }

 private:
  std::vector<double> s_;  // n+1 node parameters, s_[0] = 0, s_[n] = 2*pi
  std::vector<double> f_;  // n+1 node values
  std::vector<std::array<double, 4>> coef_;
  double inc_ = 0.0;
};

namespace detail {

inline Primitive primitive_from_nodes(const std::vector<double>& s_open,
                                      const std::vector<double>& f_nodes,
                                      const std::vector<double>& g_nodes, double total) {
  const std::size_t n = s_open.size();
  std::vector<double> s(n + 1), f(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    s[j] = s_open[j];
    f[j] = f_nodes[j];
  }
  s[n] = kTwoPi;
  f[n] = total;
  std::vector<std::array<double, 4>> coef(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double h = s[j + 1] - s[j];
    const double f0 = f[j], f1 = f[j + 1];
    const double d0 = g_nodes[j], d1 = g_nodes[(j + 1) % n];
    // Cubic Hermite on [0, h].
    const double df = (f1 - f0) / h;
    coef[j] = {f0, d0, (3.0 * df - 2.0 * d0 - d1) / h, (d0 + d1 - 2.0 * df) / (h * h)};
  }
  return Primitive(std::move(s), std::move(f), std::move(coef), total);
}

}  // namespace detail

// Primitive of -xi dx along the curve. Exact per-edge integration for
// polygons (piecewise quadratic); spectral or spline quadrature for samples.
inline Primitive primitive(const JordanCurve& c) {
  const std::size_t n = c.size();
  if (c.kind == CurveKind::polygon) {
    std::vector<double> s(n + 1), f(n + 1);
    std::vector<std::array<double, 4>> coef(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = c.s[j];
    s[n] = kTwoPi;
    f[0] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const Point a = c.pts[j], b = c.pts[(j + 1) % n];
      const double h = s[j + 1] - s[j];
      const double dx = b.real() - a.real();
      const double dxi = b.imag() - a.imag();
      // f(t) = f_j - dx/h * (xi_a t + dxi t^2 / (2h)) on the edge.
      coef[j] = {f[j], -(dx / h) * a.imag(), -(dx / h) * dxi / (2.0 * h), 0.0};
      f[j + 1] = f[j] - dx * (a.imag() + b.imag()) / 2.0;
    }
    return Primitive(std::move(s), std::move(f), std::move(coef), f[n]);
  }
  const detail::FormData& fd = *c.form;
  std::vector<double> fn(fd.F.begin(), fd.F.end() - 1);
  return detail::primitive_from_nodes(c.s, fn, fd.g, fd.area);
}

}  // namespace pegscope

#endif
