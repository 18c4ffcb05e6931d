#ifndef PEGSCOPE_FFT_HPP
#define PEGSCOPE_FFT_HPP

#include <complex>
#include <vector>

#include "pegscope/geometry.hpp"

namespace pegscope {

// In-place iterative radix-2 FFT. n must be a power of two.
inline void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = kTwoPi / (double)len * (inverse ? 1.0 : -1.0);
    std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= (double)n;
}

inline bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

// Spectral derivative of a real periodic sequence sampled uniformly over
// period 2*pi. The Nyquist mode is dropped.
inline std::vector<double> spectral_derivative(const std::vector<double>& g) {
  const std::size_t n = g.size();
  std::vector<std::complex<double>> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = g[j];
  fft_pow2(a, false);
  for (std::size_t k = 0; k < n; ++k) {
    double kk = (k <= n / 2) ? (double)k : (double)k - (double)n;
    if (k == n / 2) kk = 0.0;  // Nyquist
    a[k] *= std::complex<double>(0.0, kk);
  }
  fft_pow2(a, true);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = a[j].real();
  return out;
}

// Antiderivative values F(s_j) = int_0^{s_j} g with F(0) = 0, for g real,
// periodic, sampled uniformly on [0, 2*pi). Also returns the mean of g, so
// that F(s + 2*pi) = F(s) + 2*pi*mean.
inline std::vector<double> spectral_antiderivative(const std::vector<double>& g, double& mean_out) {
  const std::size_t n = g.size();
  std::vector<std::complex<double>> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = g[j];
  fft_pow2(a, false);
  const std::complex<double> c0 = a[0] / (double)n;
  mean_out = c0.real();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0 || k == n / 2) {
      a[k] = 0.0;
      continue;
    }
    double kk = (k <= n / 2) ? (double)k : (double)k - (double)n;
    a[k] /= std::complex<double>(0.0, kk);
  }
  // Periodic part P(s_j) via inverse FFT; F = c0*s + P - P(0).
  fft_pow2(a, true);
  std::vector<double> out(n);
  const double p0 = a[0].real();
  for (std::size_t j = 0; j < n; ++j) {
    double s = kTwoPi * (double)j / (double)n;
    out[j] = mean_out * s + (a[j].real() - p0);
  }
  return out;
}

}  // namespace pegscope

#endif
