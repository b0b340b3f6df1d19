#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace rpolylog;
using rptest::Rng;

namespace {

// Brute-force oracle for |z| <= 1/2: plain partial sums of sum sqrt(n) z^n.
MPComplex series_oracle(const MPComplex& z, unsigned long n_terms, const PrecisionContext& ctx) {
  MPComplex acc(ctx.zero(), ctx.zero());
  MPComplex zp = z;
  for (unsigned long n = 1; n <= n_terms; ++n) {
    acc = acc + zp * sqrt(ctx.real(n));
    zp = zp * z;
  }
  return acc;
}

MPReal closed_form_gm1(const PrecisionContext& ctx) {
  return (1 - 2 * sqrt(ctx.real(2L))) * zeta_half(0, ctx) / (4 * ctx.pi());
}

}  // namespace

TEST_CASE("g_series: oracle values at +-1/2 and the empty sum") {
  PrecisionContext ctx(50);
  MPComplex zp(ctx.one() / 2, ctx.zero());
  MPComplex zm(-ctx.one() / 2, ctx.zero());
  EvalResult rp = g_series(ZPoint(zp, ctx), ctx);
  EvalResult rm = g_series(ZPoint(zm, ctx), ctx);
  CHECK(cabs(rp.value - series_oracle(zp, 10000, ctx)) < ctx.pow10(-45));
  CHECK(cabs(rm.value - series_oracle(zm, 10000, ctx)) < ctx.pow10(-45));
  // frozen from the oracle
  CHECK(abs(rp.value.re - ctx.real("1.3472537527357506922")) < ctx.pow10(-18));
  CHECK(abs(rm.value.re - ctx.real("-0.28301281074650602317")) < ctx.pow10(-18));

  EvalResult r0 = g_series(ZPoint(MPComplex(ctx.zero(), ctx.zero()), ctx), ctx);
  CHECK(r0.value.is_zero());
  CHECK(r0.method == Method::Series);
  CHECK_THROWS_AS(g_series(ZPoint(MPComplex(ctx.real("0.6"), ctx.zero()), ctx), ctx),
                  DomainError);
}

TEST_CASE("g_zeta_expansion: special value at z = -1 and overlap with the series") {
  PrecisionContext ctx(100);
  ZPoint pm1(MPComplex(ctx.real(-1L), ctx.zero()), ctx);
  EvalResult r = g_zeta_expansion(pm1, ctx);
  CHECK(abs(r.value.re - closed_form_gm1(ctx)) < ctx.pow10(-100));
  CHECK(abs(r.value.re - ctx.real("-0.3801048126")) < ctx.pow10(-10));
  CHECK(abs(r.value.im) <= r.err);

  ZPoint ph(MPComplex(ctx.one() / 2, ctx.zero()), ctx);
  EvalResult a = g_series(ph, ctx);
  EvalResult b = g_zeta_expansion(ph, ctx);
  CHECK(cabs(a.value - b.value) <= a.err + b.err);

  MPComplex z23(ctx.real(2L), ctx.real(3L));
  EvalResult c = g_zeta_expansion(ZPoint(z23, ctx), ctx);
  EvalResult d = g_bilateral(ZPoint(z23, ctx), ctx);
  CHECK(cabs(c.value - d.value) <= c.err + d.err);

  // |log z| too large
  CHECK_THROWS_AS(g_zeta_expansion(ZPoint(MPComplex(ctx.real("0.001"), ctx.zero()), ctx), ctx),
                  DomainError);
}

TEST_CASE("g_bilateral: two-Hurwitz factorization against direct bilateral summation") {
  PrecisionContext ctx(40);
  Rng rng(611);
  MPReal tp = ctx.two_pi();
  for (int i = 0; i < 8; ++i) {
    MPComplex z = rptest::random_complex(rng, ctx, 0.3, 8.0, 0.15, 6.13);
    ZPoint p(z, ctx);
    EvalResult fast = g_bilateral(p, ctx);
    // direct sum over |n| <= N with Euler-Maclaurin style tail corrections on
    // both wings (the raw sum alone converges only like N^{-1/2})
    long n_sum = 20000;
    const MPComplex& l = p.log();
    MPComplex acc(ctx.zero(), ctx.zero());
    for (long n = -n_sum; n <= n_sum; ++n) {
      MPComplex w(-l.re, tp * n - l.im);
      acc = acc + cpow_neg32(w, ctx);
    }
    for (int sign : {+1, -1}) {
      // tail sum_{n > N} (2 n pi i s - L)^{-3/2}, s = +-1
      MPComplex w(-l.re, tp * sign * (n_sum + 1) - l.im);
      MPComplex scale = cpow_neg32(MPComplex(ctx.zero(), tp * sign), ctx);
      MPComplex a = w * cinv(MPComplex(ctx.zero(), tp * sign));  // (N+1) + shift
      // integral + half: scale * (2 a^{-1/2} + a^{-3/2}/2)
      MPComplex am12 = cinv(csqrt(a));
      MPComplex am32 = cinv(a * csqrt(a));
      acc = acc + scale * (am12 * ctx.real(2L) + am32 / 2L);
    }
    MPComplex direct = acc * (ctx.sqrt_pi() / 2);
    CHECK(cabs(fast.value - direct) < ctx.pow10(-8));
  }
}

TEST_CASE("g_bilateral: conjugation symmetry and special value") {
  PrecisionContext ctx(100);
  ZPoint pm1(MPComplex(ctx.real(-1L), ctx.zero()), ctx);
  CHECK(abs(g_bilateral(pm1, ctx).value.re - closed_form_gm1(ctx)) < ctx.pow10(-100));

  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    MPComplex z = rptest::random_complex(rng, ctx, 0.3, 30.0, 0.05, 3.1);
    EvalResult a = g_bilateral(ZPoint(z, ctx), ctx);
    EvalResult b = g_bilateral(ZPoint(conj(z), ctx), ctx);
    CHECK(cabs(conj(b.value) - a.value) <= a.err + b.err);
  }

  ZPoint p03(MPComplex(ctx.real("0.3"), ctx.zero()), ctx);
  EvalResult s = g_series(p03, ctx);
  EvalResult b = g_bilateral(p03, ctx);
  CHECK(cabs(s.value - b.value) <= s.err + b.err);
}

TEST_CASE("g_bilateral: integer shifts of log z are absorbed") {
  PrecisionContext ctx(60);
  MPComplex z(ctx.real(2L), ctx.real(3L));
  MPComplex l = clog(z);
  MPComplex l_up(l.re, l.im + ctx.two_pi());
  MPComplex l_dn(l.re, l.im - 2 * ctx.two_pi());
  MPComplex v = detail::bilateral_at_log(l, ctx);
  CHECK(cabs(detail::bilateral_at_log(l_up, ctx) - v) < ctx.eps());
  CHECK(cabs(detail::bilateral_at_log(l_dn, ctx) - v) < ctx.eps());
}

TEST_CASE("g_inversion: special value, cross-method, conjugate route") {
  PrecisionContext ctx(100);
  ZPoint pm1(MPComplex(ctx.real(-1L), ctx.zero()), ctx);
  CHECK(abs(g_inversion(pm1, ctx).value.re - closed_form_gm1(ctx)) < ctx.pow10(-100));

  // z = -e: inversion against the zeta expansion (|log z| = sqrt(1 + pi^2) < 2 pi)
  ZPoint pe(MPComplex(-exp(ctx.one()), ctx.zero()), ctx);
  EvalResult inv = g_inversion(pe, ctx);
  EvalResult ze = g_zeta_expansion(pe, ctx);
  CHECK(cabs(inv.value - ze.value) <= inv.err + ze.err);

  ZPoint p25(MPComplex(ctx.zero(), ctx.real(25L)), ctx);
  EvalResult a = g_inversion(p25, ctx);
  EvalResult b = g_bilateral(p25, ctx);
  CHECK(cabs(a.value - b.value) <= a.err + b.err);

  // below the axis: evaluates via the conjugate
  ZPoint pdn(MPComplex(ctx.real(2L), ctx.real(-5L)), ctx);
  ZPoint pup(MPComplex(ctx.real(2L), ctx.real(5L)), ctx);
  EvalResult rdn = g_inversion(pdn, ctx);
  EvalResult rup = g_inversion(pup, ctx);
  CHECK(cabs(rdn.value - conj(rup.value)) <= rdn.err + rup.err);

  CHECK_THROWS_AS(g_inversion(ZPoint(MPComplex(ctx.one() / 2, ctx.zero()), ctx), ctx),
                  DomainError);
}

TEST_CASE("g_negative_axis: u = 0 and the inversion specialization") {
  PrecisionContext ctx(100);
  EvalResult r0 = g_negative_axis(ctx.zero(), ctx);
  CHECK(abs(r0.value.re - closed_form_gm1(ctx)) < ctx.pow10(-100));
  CHECK(r0.value.im == 0);

  EvalResult r1 = g_negative_axis(ctx.one(), ctx);
  ZPoint pe(MPComplex(-exp(ctx.one()), ctx.zero()), ctx);
  EvalResult inv = g_inversion(pe, ctx);
  CHECK(abs(r1.value.re - inv.value.re) <= r1.err + inv.err);

  CHECK_THROWS_AS(g_negative_axis(ctx.real(-1L), ctx), DomainError);
}

TEST_CASE("ZPoint: branch cut rejected, zero handled") {
  PrecisionContext ctx(40);
  CHECK_THROWS_AS(ZPoint(MPComplex(ctx.real(3L), ctx.zero()), ctx), BranchCutError);
  CHECK_THROWS_AS(ZPoint(MPComplex(ctx.one(), ctx.zero()), ctx), BranchCutError);
  ZPoint ok(MPComplex(ctx.real("0.99"), ctx.zero()), ctx);
  CHECK_FALSE(ok.is_zero());
  ZPoint zero(MPComplex(ctx.zero(), ctx.zero()), ctx);
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(zero.log(), DomainError);
}

TEST_CASE("g_auto: dispatch, crosscheck, and the special value by any method") {
  PrecisionContext ctx(60);
  CHECK(g_auto(MPComplex(ctx.one() / 4, ctx.zero()), ctx, true).method == Method::Series);
  CHECK(g_auto(MPComplex(ctx.zero(), ctx.real(100L)), ctx, true).method == Method::Inversion);
  CHECK(g_auto(MPComplex(ctx.real(2L), ctx.real(3L)), ctx, true).method ==
        Method::ZetaExpansion);
  EvalResult r = g_auto(MPComplex(ctx.real(-1L), ctx.zero()), ctx, true);
  CHECK(abs(r.value.re - ctx.real("-0.3801048126096840168")) < ctx.pow10(-18));
  CHECK_THROWS_AS(g_auto(MPComplex(ctx.real(7L), ctx.zero()), ctx), BranchCutError);
  // forced method dispatch
  EvalResult rb = g_auto(MPComplex(ctx.real(-1L), ctx.zero()), ctx, false, Method::Bilateral);
  CHECK(rb.method == Method::Bilateral);
}

TEST_CASE("EvalResult: error bound contract and realness on the real axis") {
  PrecisionContext ctx(50);
  Rng rng(5150);
  for (int i = 0; i < 25; ++i) {
    MPComplex z = rptest::random_complex(rng, ctx, 0.05, 0.5, -3.1, 3.1);
    EvalResult r = g_series(ZPoint(z, ctx), ctx);
    CHECK(r.err <= ctx.eps() * (1 + cabs(r.value)));
  }
  // real z off the cut: imaginary part within err
  for (double x : {-0.4, 0.3, -7.0, 0.9}) {
    MPComplex z(ctx.real(x), ctx.zero());
    EvalResult r = g_auto(z, ctx);
    CHECK(abs(r.value.im) <= r.err);
  }
  // negative real axis through the bilateral route as well
  EvalResult rb = g_auto(MPComplex(ctx.real(-3L), ctx.zero()), ctx, false, Method::Bilateral);
  CHECK(abs(rb.value.im) <= rb.err);
}

TEST_CASE("cross-method agreement on random overlap points") {
  PrecisionContext ctx(60);
  Rng rng(8888);
  for (int i = 0; i < 15; ++i) {
    MPComplex z = rptest::random_complex(rng, ctx, 0.55, 18.0, 0.1, 6.18);
    ZPoint p(z, ctx);
    EvalResult a = g_zeta_expansion(p, ctx);
    EvalResult b = g_bilateral(p, ctx);
    CHECK(cabs(a.value - b.value) <= a.err + b.err);
    if (cabs(z) >= 1) {
      EvalResult c = g_inversion(p, ctx);
      CHECK(cabs(a.value - c.value) <= a.err + c.err);
    }
  }
}
