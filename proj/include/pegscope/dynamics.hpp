#ifndef PEGSCOPE_DYNAMICS_HPP
#define PEGSCOPE_DYNAMICS_HPP

#include "pegscope/curve.hpp"
#include "pegscope/primitive.hpp"

namespace pegscope {

// Representative of a value in R/(pi Z), stored in [0, pi).
inline double mod_pi(double x) {
  double r = std::fmod(x, kPi);
  if (r < 0) r += kPi;
  if (r >= kPi) r = 0;
  return r;
}

struct LiftValue {
  double t = 0.0;  // representative in [0, pi)
  static LiftValue from_raw(double x) { return LiftValue{mod_pi(x)}; }
};

inline double circ_dist_pi(double a, double b) {
  const double d = std::fabs(mod_pi(a) - mod_pi(b));
  return std::min(d, kPi - d);
}

// Ordered pair of plane points with its center/half-diagonal splitting.
struct PairPoint {
  Point z1{0, 0}, z2{0, 0};
  Point center() const { return 0.5 * (z1 + z2); }
  Point half_diagonal() const { return 0.5 * (z1 - z2); }
};

// The rotation fixing the diagonal of C^2 and turning the difference
// coordinate by exp(-i*theta). Points of the image with all four of
// z1, z2, w1, w2 on a curve are exactly its inscribed theta-rectangles.
inline PairPoint r_theta(double theta, const PairPoint& p) {
  const Point m = p.center();
  const Point d = p.half_diagonal();
  const Point rot = std::polar(1.0, -theta) * d;
  return PairPoint{m + rot, m - rot};
}

// Generating Hamiltonian of the rotation family.
inline double hamiltonian_h(const PairPoint& p) { return norm2(p.z1 - p.z2) / 4.0; }

// Action (t-coordinate) shift of the contact lift along the rotation orbit:
// the integral of (dxi^2 - dx^2)/4 over [0, theta], in closed form.
inline double action_shift(double theta, const PairPoint& p) {
  const Point d0 = p.z1 - p.z2;
  const std::complex<double> one(1.0, 0.0);
  const std::complex<double> twoi(0.0, 2.0);
  const std::complex<double> w = d0 * d0 * (one - std::polar(1.0, -2.0 * theta)) / twoi;
  return -0.25 * w.real();
}

// Legendrian lift t-coordinate of a curve pair: t = -f(s1) - f(s2) mod pi.
// Well defined on R/(pi Z) only when the enclosed area is a multiple of pi.
inline LiftValue lift_t(const Primitive& f, double s1, double s2) {
  const double a = f.period_increment();
  const double viol = std::fabs(a - kPi * std::round(a / kPi));
  if (viol >= 1e-6)
    throw CurveError(CurveErrorKind::LiftNotClosed,
                     "enclosed area is not a multiple of pi", {0, 0}, viol);
  return LiftValue::from_raw(-f(s1) - f(s2));
}

struct LiftClosure {
  bool closed = false;
  double violation = 0.0;
};

// The lift closes in R_t/(pi Z) iff the enclosed area lies in pi*Z.
inline LiftClosure verify_lift_closure(const JordanCurve& c) {
  const double a = area(c);
  const double viol = std::fabs(a - kPi * std::round(a / kPi));
  return LiftClosure{viol < 1e-6, viol};
}

}  // namespace pegscope

#endif
