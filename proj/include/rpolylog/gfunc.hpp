#pragma once

#include <optional>
#include <string>

#include "rpolylog/specialfn.hpp"

namespace rpolylog {

enum class Method { Series, ZetaExpansion, Bilateral, Inversion, NegAxis };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Series: return "series";
    case Method::ZetaExpansion: return "zeta-expansion";
    case Method::Bilateral: return "bilateral";
    case Method::Inversion: return "inversion";
    case Method::NegAxis: return "neg-axis";
  }
  return "?";
}

// One G(z) evaluation: value, claimed absolute error bound, method used.
// On success err <= 10^-digits (1 + |value|).
struct EvalResult {
  MPComplex value;
  MPReal err;
  Method method;
};

// Evaluation point with its principal log cached. Construction rejects the
// branch cut z in [1, inf); z = 0 is allowed but has no log.
class ZPoint {
 public:
  ZPoint(MPComplex z, const PrecisionContext& ctx) : z_(std::move(z)) {
    (void)ctx;
    if (z_.im == 0 && z_.re >= 1) throw BranchCutError("z lies on the branch cut [1, inf)");
    if (!z_.is_zero()) log_ = clog(z_);
  }
  const MPComplex& z() const { return z_; }
  bool is_zero() const { return !log_.has_value(); }
  const MPComplex& log() const {
    if (!log_) throw DomainError("ZPoint: log of zero");
    return *log_;
  }

 private:
  MPComplex z_;
  std::optional<MPComplex> log_;
};

namespace detail {

// Truncation tail + ulp slack, kept within the EvalResult contract.
inline MPReal quoted_err(const PrecisionContext& ctx, const MPReal& vmag, const MPReal& tail) {
  MPReal cap = ctx.eps() * (1 + vmag);
  MPReal e = tail + cap / 10;
  if (!(e < cap)) throw PrecisionError("evaluator: truncation tail exceeds the quoted-error budget");
  return e;
}

}  // namespace detail

// Direct power series sum_{n>0} sqrt(n) z^n, restricted to |z| <= 1/2 where the
// geometric tail bound sqrt(n)|z|^n/(1-|z|) is effective.
inline EvalResult g_series(const ZPoint& p, const PrecisionContext& ctx) {
  ctx.activate();
  const MPComplex& z = p.z();
  MPReal az = cabs(z);
  if (az > ctx.one() / 2) throw DomainError("g_series: requires |z| <= 1/2");
  if (p.is_zero())
    return {MPComplex(ctx.zero(), ctx.zero()), detail::quoted_err(ctx, ctx.zero(), ctx.zero()),
            Method::Series};

  MPReal thr = ctx.work_eps() * az;
  MPComplex acc(ctx.zero(), ctx.zero());
  MPComplex zp = z;
  MPReal azp = az;
  MPReal tail = ctx.one();
  for (unsigned long n = 1;; ++n) {
    acc = acc + zp * sqrt(ctx.real(n));
    zp = zp * z;
    azp = azp * az;
    tail = sqrt(ctx.real(n + 1)) * azp / (1 - az);
    if (tail < thr) break;
    if (n > 4'000'000) throw PrecisionError("g_series: term budget exhausted");
  }
  return {acc, detail::quoted_err(ctx, cabs(acc), tail), Method::Series};
}

// Expansion around the log singularity (valid for |log z| < 2 pi):
//   G(z) = sqrt(pi)/(2 (-log z)^{3/2}) + sum_{n>=0} zeta(-n-1/2) (log z)^n / n!.
// A 5% margin off |log z| = 2 pi keeps the term ratio geometric.
inline EvalResult g_zeta_expansion(const ZPoint& p, const PrecisionContext& ctx) {
  ctx.activate();
  const MPComplex& l = p.log();
  MPReal al = cabs(l);
  MPReal tp = ctx.two_pi();
  if (!(al < tp * 95 / 100))
    throw DomainError("g_zeta_expansion: requires |log z| < 0.95 * 2 pi");

  MPComplex acc = cpow_neg32(-l, ctx) * (ctx.sqrt_pi() / 2);
  MPReal q = al / tp;
  MPComplex lp(ctx.one(), ctx.zero());
  MPReal alp = ctx.one();
  MPReal invfac = ctx.one();
  MPReal thr = ctx.work_eps();
  MPReal tail = ctx.one();
  for (unsigned n = 0;; ++n) {
    MPReal zn = zeta_neg_half(n, ctx);
    acc = acc + lp * (zn * invfac);
    MPReal mag = abs(zn) * alp * invfac;
    lp = lp * l;
    alp = alp * al;
    invfac = invfac / (n + 1);
    if (n >= 8) {
      MPReal qe = q * (1 + ctx.real(2L) / n);
      if (qe < ctx.real(99L) / 100) {
        tail = mag * qe / (1 - qe);
        if (tail < thr * (1 + cabs(acc))) break;
      }
    }
    if (n > 2'000'000) throw PrecisionError("g_zeta_expansion: term budget exhausted");
  }
  return {acc, detail::quoted_err(ctx, cabs(acc), tail), Method::ZetaExpansion};
}

namespace detail {

// Bilateral sum (sqrt(pi)/2) sum_{n in Z} (2 n pi i - L)^{-3/2} evaluated via
// two Hurwitz zeta values. Im(L) is first reduced to (-pi, pi] (a shift of n
// absorbs any 2 pi i multiple); then for n >= 1,
//   (2 n pi i - L)^{-3/2} = (2 pi i)^{-3/2} (n + i L / 2 pi)^{-3/2}
// is branch-safe because the shifted arguments have real part >= 1/2, and
// symmetrically for n <= -1.
inline MPComplex bilateral_at_log(const MPComplex& log_z, const PrecisionContext& ctx) {
  MPReal tp = ctx.two_pi();
  MPComplex l = log_z;
  if (!(l.im > -ctx.pi() && l.im <= ctx.pi())) {
    MPReal shift = ceil((l.im - ctx.pi()) / tp);
    l.im = l.im - tp * shift;
  }
  MPReal s = ctx.real(3L) / 2;
  MPComplex a_up(1 - l.im / tp, l.re / tp);    // 1 + i L / 2 pi
  MPComplex a_dn(1 + l.im / tp, -l.re / tp);   // 1 - i L / 2 pi
  MPComplex sum = cpow_neg32(-l, ctx);
  sum = sum + cpow_neg32(MPComplex(ctx.zero(), tp), ctx) * hurwitz_zeta(s, a_up, ctx);
  sum = sum + cpow_neg32(MPComplex(ctx.zero(), -tp), ctx) * hurwitz_zeta(s, a_dn, ctx);
  return sum * (ctx.sqrt_pi() / 2);
}

}  // namespace detail

inline EvalResult g_bilateral(const ZPoint& p, const PrecisionContext& ctx) {
  ctx.activate();
  MPComplex v = detail::bilateral_at_log(p.log(), ctx);
  return {v, detail::quoted_err(ctx, cabs(v), ctx.zero()), Method::Bilateral};
}

// Inversion formula for |z| >= 1, Im z >= 0:
//   G(z) = i G(1/z) + ((i-1)/(4 pi)) zeta(3/2, L/(2 pi i)),  L = log z;
// points below the axis evaluate at conj(z) and conjugate the result.
inline EvalResult g_inversion(const ZPoint& p, const PrecisionContext& ctx) {
  ctx.activate();
  const MPComplex& z = p.z();
  if (cabs(z) < 1) throw DomainError("g_inversion: requires |z| >= 1");
  if (z.im < 0) {
    ZPoint pc(conj(z), ctx);
    EvalResult r = g_inversion(pc, ctx);
    return {conj(r.value), r.err, Method::Inversion};
  }
  const MPComplex& l = p.log();
  MPReal tp = ctx.two_pi();
  MPComplex a(l.im / tp, -l.re / tp);  // L / (2 pi i)
  MPComplex h = hurwitz_zeta(ctx.real(3L) / 2, a, ctx);

  MPComplex zinv = cinv(z);
  ZPoint pinv(zinv, ctx);
  EvalResult inner = (cabs(zinv) <= ctx.one() / 2) ? g_series(pinv, ctx)
                                                   : g_zeta_expansion(pinv, ctx);
  MPReal c = 1 / (4 * ctx.pi());
  MPComplex v = MPComplex(-inner.value.im, inner.value.re) + MPComplex(-c, c) * h;
  MPReal err = inner.err + detail::quoted_err(ctx, cabs(v), ctx.zero());
  MPReal cap = ctx.eps() * (1 + cabs(v));
  if (!(err < cap)) err = cap;
  return {v, err, Method::Inversion};
}

// Negative-axis specialization: G(-e^u) = Re[((i-1)/(4 pi)) zeta(3/2, 1/2 + u/(2 pi i))].
inline EvalResult g_negative_axis(const MPReal& u, const PrecisionContext& ctx) {
  ctx.activate();
  if (u < 0) throw DomainError("g_negative_axis: requires u >= 0");
  MPComplex a(ctx.one() / 2, -u / ctx.two_pi());
  MPComplex h = hurwitz_zeta(ctx.real(3L) / 2, a, ctx);
  MPReal v = -(h.re + h.im) / (4 * ctx.pi());
  return {MPComplex(v, ctx.zero()), detail::quoted_err(ctx, abs(v), ctx.zero()),
          Method::NegAxis};
}

inline EvalResult g_eval(const ZPoint& p, Method m, const PrecisionContext& ctx) {
  switch (m) {
    case Method::Series: return g_series(p, ctx);
    case Method::ZetaExpansion: return g_zeta_expansion(p, ctx);
    case Method::Bilateral: return g_bilateral(p, ctx);
    case Method::Inversion: return g_inversion(p, ctx);
    case Method::NegAxis: {
      if (!(p.z().im == 0 && p.z().re < 0))
        throw DomainError("neg-axis method: z must be a negative real");
      return g_negative_axis(log(-p.z().re), ctx);
    }
  }
  throw DomainError("g_eval: unknown method");
}

// Region dispatch over the validity domains: series inside |z| <= 1/2, the
// zeta expansion on 1/2 < |z| <= 20 (there |log z| < 2 pi automatically),
// inversion beyond, bilateral as the fallback for anything left over.
inline Method g_auto_method(const MPComplex& z, const PrecisionContext& ctx) {
  MPReal az = cabs(z);
  if (az <= ctx.one() / 2) return Method::Series;
  if (az <= 20) {
    MPReal al = cabs(clog(z));
    if (al < ctx.two_pi() * 95 / 100) return Method::ZetaExpansion;
    return Method::Bilateral;
  }
  return Method::Inversion;
}

inline EvalResult g_auto(const MPComplex& z, const PrecisionContext& ctx,
                         bool crosscheck = false,
                         std::optional<Method> forced = std::nullopt) {
  ZPoint p(z, ctx);
  Method m = forced ? *forced : g_auto_method(z, ctx);
  EvalResult r = g_eval(p, m, ctx);
  if (crosscheck && !p.is_zero()) {
    Method alt = (m == Method::Bilateral) ? Method::ZetaExpansion : Method::Bilateral;
    EvalResult r2 = g_eval(p, alt, ctx);
    if (cabs(r.value - r2.value) > r.err + r2.err)
      throw CrosscheckError(std::string("g_auto: ") + method_name(m) + " and " +
                            method_name(alt) + " disagree beyond combined error bounds");
  }
  return r;
}

}  // namespace rpolylog
