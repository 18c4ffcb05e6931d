#ifndef PEGSCOPE_SPLINE_HPP
#define PEGSCOPE_SPLINE_HPP

#include <cassert>
#include <cmath>
#include <vector>

#include "pegscope/geometry.hpp"

namespace pegscope {

// Periodic cubic spline on a strictly increasing knot grid covering one
// period. Knot s_N identifies with s_0 + period.
class PeriodicSpline {
 public:
  PeriodicSpline() = default;

  PeriodicSpline(std::vector<double> knots, std::vector<double> values, double period)
      : s_(std::move(knots)), y_(std::move(values)), period_(period) {
    const std::size_t n = s_.size();
    assert(y_.size() == n && n >= 3);
    h_.resize(n);
    for (std::size_t j = 0; j + 1 < n; ++j) h_[j] = s_[j + 1] - s_[j];
    h_[n - 1] = s_[0] + period_ - s_[n - 1];
    solve_moments();
  }

  double period() const { return period_; }
  const std::vector<double>& knots() const { return s_; }

  // Index of the interval containing s (s wrapped into [s_0, s_0 + period)).
  std::size_t interval(double s) const {
    double u = s_[0] + wrap(s - s_[0], period_);
    std::size_t lo = 0, hi = s_.size();
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      if (s_[mid] <= u)
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }

  double eval(double s) const {
    std::size_t j = interval(s);
    double u = s_[0] + wrap(s - s_[0], period_);
    return eval_local(j, u - s_[j]);
  }

  double deriv(double s) const {
    std::size_t j = interval(s);
    double u = s_[0] + wrap(s - s_[0], period_);
    return deriv_local(j, u - s_[j]);
  }

  // Value at offset t in interval j, t in [0, h_j].
  double eval_local(std::size_t j, double t) const {
    const std::size_t n = s_.size();
    const std::size_t k = (j + 1) % n;
    const double h = h_[j];
    const double a = h - t;
    return (m_[j] * a * a * a + m_[k] * t * t * t) / (6.0 * h) +
           (y_[j] / h - m_[j] * h / 6.0) * a + (y_[k] / h - m_[k] * h / 6.0) * t;
  }

  double deriv_local(std::size_t j, double t) const {
    const std::size_t n = s_.size();
    const std::size_t k = (j + 1) % n;
    const double h = h_[j];
    const double a = h - t;
    return (-m_[j] * a * a + m_[k] * t * t) / (2.0 * h) +
           (y_[k] - y_[j]) / h - (m_[k] - m_[j]) * h / 6.0;
  }

  double interval_length(std::size_t j) const { return h_[j]; }

 private:
  void solve_moments() {
    const std::size_t n = s_.size();
    std::vector<double> sub(n), dia(n), sup(n), rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double hm = h_[(j + n - 1) % n];
      const double hj = h_[j];
      sub[j] = hm / 6.0;
      dia[j] = (hm + hj) / 3.0;
      sup[j] = hj / 6.0;
      const double dp = (y_[(j + 1) % n] - y_[j]) / hj;
      const double dm = (y_[j] - y_[(j + n - 1) % n]) / hm;
      rhs[j] = dp - dm;
    }
    m_ = solve_cyclic_tridiag(sub, dia, sup, rhs);
  }

  // Thomas algorithm plus Sherman-Morrison for the wrap-around entries.
  static std::vector<double> solve_cyclic_tridiag(const std::vector<double>& a,
                                                  std::vector<double> b,
                                                  const std::vector<double>& c,
                                                  const std::vector<double>& d) {
    const std::size_t n = b.size();
    const double alpha = a[0];     // A[0][n-1]
    const double beta = c[n - 1];  // A[n-1][0]
    const double gamma = -b[0];
    std::vector<double> bb = b;
    bb[0] = b[0] - gamma;
    bb[n - 1] = b[n - 1] - alpha * beta / gamma;
    auto tridiag = [&](const std::vector<double>& diag, const std::vector<double>& rhs) {
      std::vector<double> cp(n), dp(n), x(n);
      cp[0] = c[0] / diag[0];
      dp[0] = rhs[0] / diag[0];
      for (std::size_t i = 1; i < n; ++i) {
        double m = diag[i] - a[i] * cp[i - 1];
        cp[i] = (i + 1 < n ? c[i] : 0.0) / m;
        dp[i] = (rhs[i] - a[i] * dp[i - 1]) / m;
      }
      x[n - 1] = dp[n - 1];
      for (std::size_t i = n - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
      return x;
    };
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = beta;
    std::vector<double> x = tridiag(bb, d);
    std::vector<double> z = tridiag(bb, u);
    const double fact = (x[0] + x[n - 1] * alpha / gamma) /
                        (1.0 + z[0] + z[n - 1] * alpha / gamma);
    for (std::size_t i = 0; i < n; ++i) x[i] -= fact * z[i];
    return x;
  }

  std::vector<double> s_, y_, h_, m_;
  double period_ = kTwoPi;
};

}  // namespace pegscope

#endif
