#pragma once

#include <algorithm>
#include <mutex>
#include <vector>

#include "rpolylog/mpcomplex.hpp"

namespace rpolylog {

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

inline BigInt int_pow(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.backend().data(), base, e);
  return r;
}

inline BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), e);
  return r;
}

namespace detail {

// Monotone table of even-index Bernoulli numbers, built from tangent numbers
// (integer-only triangular recurrence, no rational gcd churn). Thread-safe;
// each entry behaves as if computed exactly once.
class BernoulliTable {
 public:
  static BernoulliTable& instance() {
    static BernoulliTable t;
    return t;
  }

  // B_{2 j}
  BigRational even(unsigned long j) {
    std::lock_guard<std::mutex> lock(mu_);
    if (even_.size() <= j) extend(j);
    return even_[j];
  }

 private:
  void extend(unsigned long j) {
    unsigned long n = std::max<unsigned long>(j, std::max<unsigned long>(2 * even_.size(), 16));
    // tangent numbers T_1..T_n
    std::vector<BigInt> t(n + 1);
    t[1] = 1;
    for (unsigned long k = 2; k <= n; ++k) t[k] = t[k - 1] * static_cast<long>(k - 1);
    for (unsigned long k = 2; k <= n; ++k)
      for (unsigned long i = k; i <= n; ++i)
        t[i] = t[i - 1] * static_cast<long>(i - k) + t[i] * static_cast<long>(i - k + 2);
    std::vector<BigRational> e(n + 1);
    e[0] = 1;
    BigInt four_k = 1;
    for (unsigned long k = 1; k <= n; ++k) {
      four_k *= 4;
      // B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1))
      BigInt num = t[k] * static_cast<long>(2 * k);
      if (k % 2 == 0) num = -num;
      e[k] = BigRational(num, four_k * (four_k - 1));
    }
    even_ = std::move(e);
  }

  std::mutex mu_;
  std::vector<BigRational> even_{BigRational(1)};
};

// B_n for any n >= 0 (B_1 = -1/2, higher odd indices vanish). Internal: the
// public bernoulli() contract covers even indices only.
inline BigRational bernoulli_any(unsigned long n) {
  if (n == 1) return BigRational(-1, 2);
  if (n % 2 == 1) return BigRational(0);
  return BernoulliTable::instance().even(n / 2);
}

}  // namespace detail

// Exact Bernoulli number B_n for even n >= 0.
inline BigRational bernoulli(unsigned long n) {
  if (n % 2 != 0) throw DomainError("bernoulli: only even indices are defined here");
  return detail::BernoulliTable::instance().even(n / 2);
}

// Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!): the rational factor.
inline BigRational gamma_half_rational(unsigned long m) {
  return BigRational(factorial(2 * m), int_pow(4UL, m) * factorial(m));
}

inline MPReal gamma_half(unsigned long m, const PrecisionContext& ctx) {
  ctx.activate();
  return ctx.real(gamma_half_rational(m)) * ctx.sqrt_pi();
}

// Principal-branch w^{-3/2}. For Re(w) > 0 the product w*sqrt(w) stays inside
// the principal sector, so no log/exp is needed.
inline MPComplex cpow_neg32(const MPComplex& w, const PrecisionContext& ctx) {
  ctx.activate();
  if (w.is_zero()) throw DomainError("cpow_neg32: w = 0");
  if (w.re > 0) return cinv(w * csqrt(w));
  MPComplex l = clog(w);
  MPReal mh = ctx.real(-3L) / 2;
  return cexp({l.re * mh, l.im * mh});
}

}  // namespace rpolylog
