#pragma once

#include <utility>

#include "rpolylog/mpreal.hpp"

namespace rpolylog {

// Complex value over MPReal. All multivalued operations (arg, log, sqrt,
// powers) use the principal branch with Im(log z) in (-pi, pi]; a zero
// imaginary part is treated as +0 regardless of its floating sign, so points
// on the negative real axis sit on the upper edge of the cut.
struct MPComplex {
  MPReal re, im;

  MPComplex() = default;
  MPComplex(MPReal r, MPReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit MPComplex(const MPReal& r) : re(r), im(zero_like(r)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend bool operator==(const MPComplex& a, const MPComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline MPComplex operator+(const MPComplex& a, const MPComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
inline MPComplex operator-(const MPComplex& a, const MPComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
inline MPComplex operator-(const MPComplex& a) { return {-a.re, -a.im}; }

inline MPComplex operator*(const MPComplex& a, const MPComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline MPComplex operator*(const MPComplex& a, const MPReal& s) {
  return {a.re * s, a.im * s};
}
inline MPComplex operator*(const MPReal& s, const MPComplex& a) { return a * s; }

inline MPComplex operator+(const MPComplex& a, const MPReal& s) {
  return {a.re + s, a.im};
}
inline MPComplex operator+(const MPComplex& a, unsigned long n) {
  return {a.re + n, a.im};
}
inline MPComplex operator-(const MPComplex& a, const MPReal& s) {
  return {a.re - s, a.im};
}
inline MPComplex operator/(const MPComplex& a, const MPReal& s) {
  return {a.re / s, a.im / s};
}
inline MPComplex operator/(const MPComplex& a, long s) {
  return {a.re / s, a.im / s};
}

inline MPComplex conj(const MPComplex& a) { return {a.re, -a.im}; }

inline MPReal cnorm(const MPComplex& a) { return a.re * a.re + a.im * a.im; }
inline MPReal cabs(const MPComplex& a) { return hypot(a.re, a.im); }

inline MPComplex cinv(const MPComplex& a) {
  MPReal n = cnorm(a);
  return {a.re / n, -a.im / n};
}
inline MPComplex operator/(const MPComplex& a, const MPComplex& b) {
  MPReal n = cnorm(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

// Principal argument in (-pi, pi]; +-0 imaginary parts both map to the upper
// edge on the negative axis.
inline MPReal principal_arg(const MPComplex& z) {
  if (z.im == 0) {
    if (z.re < 0) return pi_like(z.re);
    return zero_like(z.re);
  }
  return atan2(z.im, z.re);
}

inline MPComplex clog(const MPComplex& z) {
  if (z.is_zero()) throw DomainError("clog: log of zero");
  return {log(cabs(z)), principal_arg(z)};
}

inline MPComplex cexp(const MPComplex& z) {
  MPReal m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

// Principal square root, arg(sqrt z) in (-pi/2, pi/2].
inline MPComplex csqrt(const MPComplex& z) {
  if (z.im == 0) {
    if (z.re >= 0) return {sqrt(z.re), zero_like(z.re)};
    return {zero_like(z.re), sqrt(-z.re)};
  }
  MPReal r = cabs(z);
  if (z.re >= 0) {
    MPReal t = sqrt((r + z.re) / 2);
    return {t, z.im / (2 * t)};
  }
  MPReal u = sqrt((r - z.re) / 2);
  MPReal t = abs(z.im) / (2 * u);
  if (z.im > 0) return {t, u};
  return {t, -u};
}

// z^s for real s, principal branch.
inline MPComplex cpow_real(const MPComplex& z, const MPReal& s) {
  if (z.is_zero()) {
    if (s > 0) return {zero_like(s), zero_like(s)};
    throw DomainError("cpow_real: 0 raised to non-positive power");
  }
  MPComplex l = clog(z);
  return cexp({l.re * s, l.im * s});
}

}  // namespace rpolylog
