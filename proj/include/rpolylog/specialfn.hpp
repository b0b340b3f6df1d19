#pragma once

#include <cmath>
#include <map>
#include <utility>

#include "rpolylog/mpcore.hpp"

namespace rpolylog {

// Parameters of one Euler-Maclaurin evaluation: N direct terms, M Bernoulli
// correction terms.
struct HurwitzParams {
  MPReal s;
  MPComplex a;
  unsigned em_terms = 0;
  unsigned em_order = 0;
};

namespace detail {

// (w)^{-s}; s == 3/2 gets the sqrt route, valid while Re(w) > 0.
inline MPComplex pow_neg_s(const MPComplex& w, const MPReal& s, bool three_half) {
  if (three_half && w.re > 0) return cinv(w * csqrt(w));
  return cpow_real(w, -s);
}

// B_{2j} / (2j)! as an exact rational, converted at working precision.
inline MPReal em_coefficient(unsigned j, const PrecisionContext& ctx) {
  return ctx.real(bernoulli(2 * j) / BigRational(factorial(2 * j)));
}

struct EmEval {
  MPComplex value;
  unsigned m_used = 0;
  bool stalled = false;
};

// Euler-Maclaurin sum for zeta(s, a) with N direct terms:
//   sum_{n<N} (n+a)^{-s} + w^{1-s}/(s-1) + w^{-s}/2
//     + sum_{j>=1} B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1},   w = N + a.
// In adaptive mode the correction sum stops once a term drops below
// thr_rel * |accumulated|; if terms start growing first (asymptotic tail
// entered too early) the caller must retry with larger N.
inline EmEval hurwitz_em(const MPReal& s, const MPComplex& a, unsigned n_terms,
                         unsigned m_max, bool adaptive, const MPReal& thr_rel,
                         const PrecisionContext& ctx) {
  const bool th = (s == 1.5);
  MPComplex acc(ctx.zero(), ctx.zero());
  for (unsigned long n = 0; n < n_terms; ++n) acc = acc + pow_neg_s(a + n, s, th);

  MPComplex w = a + static_cast<unsigned long>(n_terms);
  MPComplex ws = pow_neg_s(w, s, th);
  acc = acc + (w * ws) / (s - 1);
  acc = acc + ws / 2L;

  MPReal thr_abs = thr_rel * (cabs(acc) + 1);

  MPComplex winv = cinv(w);
  MPComplex winv2 = winv * winv;
  MPComplex p = ws * winv;  // w^{-s-1}
  MPReal poch = s;          // (s)_{2j-1}
  MPReal prev_mag;
  bool have_prev = false;
  EmEval out;
  for (unsigned j = 1; j <= m_max; ++j) {
    MPComplex term = p * (em_coefficient(j, ctx) * poch);
    acc = acc + term;
    out.m_used = j;
    MPReal mag = cabs(term);
    if (adaptive && mag < thr_abs) break;
    if (have_prev && mag > prev_mag) {
      out.stalled = true;
      break;
    }
    prev_mag = mag;
    have_prev = true;
    p = p * winv2;
    poch = poch * (s + (2 * j - 1)) * (s + (2 * j));
    if (adaptive && j == m_max) out.stalled = true;
  }
  out.value = acc;
  return out;
}

}  // namespace detail

// Hurwitz zeta zeta(s, a) = sum_{n>=0} (n+a)^{-s}, real s > 1, Re(a) > 0,
// with self-sized Euler-Maclaurin parameters.
inline MPComplex hurwitz_zeta(const MPReal& s, const MPComplex& a,
                              const PrecisionContext& ctx,
                              HurwitzParams* used = nullptr) {
  ctx.activate();
  if (!(s > 1)) throw DomainError("hurwitz_zeta: requires s > 1");
  if (!(a.re > 0)) throw DomainError("hurwitz_zeta: requires Re(a) > 0");

  const unsigned wp = ctx.work_digits();
  const double im_abs = std::abs(to_double(a.im));
  const double re_a = to_double(a.re);
  const double sd = to_double(s);

  // Anchor |N + a| so the correction series bottoms out below 10^-wp; large s
  // decays fast enough in the direct sum alone.
  double anchor = std::max(0.45 * wp + 4.0, 1.15 * im_abs + 4.0);
  if (sd > 30) {
    double e10 = wp / (sd - 1.0);
    if (e10 < 8.0) anchor = std::min(anchor, std::pow(10.0, e10) + im_abs + 2.0);
  }
  double n_est = std::max(2.0, anchor - re_a);
  if (n_est + re_a < 1.05 * im_abs + 2.0) n_est = 1.05 * im_abs + 2.0 - re_a;
  auto n_terms = static_cast<unsigned>(std::ceil(n_est));

  const MPReal thr = ctx.work_eps();
  for (int attempt = 0; attempt < 8; ++attempt) {
    detail::EmEval r = detail::hurwitz_em(s, a, n_terms, 4 * wp + 64, true, thr, ctx);
    if (!r.stalled) {
      if (used) *used = HurwitzParams{s, a, n_terms, r.m_used};
      return r.value;
    }
    n_terms += n_terms / 2 + 8;
  }
  throw PrecisionError("hurwitz_zeta: Euler-Maclaurin did not reach the target accuracy");
}

// Fixed-parameter evaluation, used by the parameter-doubling property check.
inline MPComplex hurwitz_zeta_fixed(const MPReal& s, const MPComplex& a,
                                    unsigned n_terms, unsigned m_order,
                                    const PrecisionContext& ctx) {
  ctx.activate();
  return detail::hurwitz_em(s, a, n_terms, m_order, false, ctx.zero(), ctx).value;
}

namespace detail {

struct ZetaHalfCache {
  static ZetaHalfCache& instance() {
    static ZetaHalfCache c;
    return c;
  }
  std::mutex mu;
  std::map<std::pair<unsigned, unsigned>, MPReal> plus;   // zeta(n + 3/2)
  std::map<std::pair<unsigned, unsigned>, MPReal> minus;  // zeta(-n - 1/2)
};

}  // namespace detail

// zeta(n + 3/2) for n >= 0, cached per working precision.
inline MPReal zeta_half(unsigned n, const PrecisionContext& ctx) {
  auto& c = detail::ZetaHalfCache::instance();
  std::lock_guard<std::mutex> lock(c.mu);
  auto key = std::make_pair(ctx.work_digits(), n);
  auto it = c.plus.find(key);
  if (it != c.plus.end()) return it->second;
  MPReal s = ctx.real(2L * n + 3) / 2;
  MPReal v = hurwitz_zeta(s, MPComplex(ctx.one(), ctx.zero()), ctx).re;
  c.plus.emplace(key, v);
  return v;
}

// zeta(-n - 1/2) = -2 sin((2n+1) pi/4) Gamma(n + 3/2) zeta(n + 3/2) / (2 pi)^{n + 3/2}.
// sin((2n+1) pi/4) is +-sqrt(2)/2 with sign pattern +,+,-,- in n mod 4.
inline MPReal zeta_neg_half(unsigned n, const PrecisionContext& ctx) {
  ctx.activate();
  auto& c = detail::ZetaHalfCache::instance();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.minus.find(std::make_pair(ctx.work_digits(), n));
    if (it != c.minus.end()) return it->second;
  }
  MPReal zh = zeta_half(n, ctx);
  MPReal tp = ctx.two_pi();
  MPReal denom = pow(tp, n) * tp * sqrt(tp);
  MPReal v = -sqrt(ctx.real(2L)) * gamma_half(n + 1, ctx) * zh / denom;
  if (n % 4 >= 2) v = -v;
  std::lock_guard<std::mutex> lock(c.mu);
  c.minus.emplace(std::make_pair(ctx.work_digits(), n), v);
  return v;
}

namespace detail {

// w_n with eta(2n) Gamma(2n + 1/2) = w_n pi^{2n} sqrt(pi), exact.
class EtaWeightTable {
 public:
  static EtaWeightTable& instance() {
    static EtaWeightTable t;
    return t;
  }
  BigRational weight(unsigned long n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (w_.size() <= n) {
      unsigned long k = w_.size();
      // eta(2k) = (1 - 2^{1-2k}) zeta(2k),
      // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!),
      // Gamma(2k + 1/2) = (4k)! sqrt(pi) / (4^{2k} (2k)!).
      BigRational eta_rat = (1 - BigRational(2, int_pow(4UL, k))) * bernoulli(2 * k) *
                            BigRational(int_pow(2UL, 2 * k), 2 * factorial(2 * k));
      if (k % 2 == 0) eta_rat = -eta_rat;
      BigRational gam_rat(factorial(4 * k), int_pow(4UL, 2 * k) * factorial(2 * k));
      w_.push_back(eta_rat * gam_rat);
    }
    return w_[n];
  }

 private:
  std::mutex mu_;
  std::vector<BigRational> w_;
};

}  // namespace detail

// Exact rational weight of the negative-axis expansion:
// eta(2n) Gamma(2n + 1/2) = eta_gamma_weight(n) * pi^{2n} * sqrt(pi).
inline BigRational eta_gamma_weight(unsigned long n) {
  return detail::EtaWeightTable::instance().weight(n);
}

// eta(2n); exactly 1/2 at n = 0, otherwise a rational multiple of pi^{2n}.
inline MPReal eta_even(unsigned long n, const PrecisionContext& ctx) {
  ctx.activate();
  if (n == 0) return ctx.one() / 2;
  BigRational eta_rat = (1 - BigRational(2, int_pow(4UL, n))) * bernoulli(2 * n) *
                        BigRational(int_pow(2UL, 2 * n), 2 * factorial(2 * n));
  if (n % 2 == 0) eta_rat = -eta_rat;
  return ctx.real(eta_rat) * pow(ctx.pi(), 2 * static_cast<unsigned long>(n));
}

}  // namespace rpolylog
