#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace rpolylog;
using rptest::Rng;
using rptest::within_ulps;

namespace {

// Independent oracle: Bernoulli numbers straight from the defining recurrence
// sum_{j=0}^{n} C(n+1, j) B_j = 0 with exact integers.
std::vector<BigRational> bernoulli_by_recurrence(unsigned n_max) {
  std::vector<BigRational> b(n_max + 1);
  b[0] = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    BigRational acc(0);
    for (unsigned j = 0; j < n; ++j) acc += BigRational(binomial(n + 1, j)) * b[j];
    b[n] = -acc / BigRational(BigInt(static_cast<long>(n) + 1));
  }
  return b;
}

}  // namespace

TEST_CASE("bernoulli: fixed values") {
  CHECK(bernoulli(0) == BigRational(1));
  CHECK(bernoulli(2) == BigRational(1, 6));
  CHECK(bernoulli(4) == BigRational(-1, 30));
  CHECK(bernoulli(12) == BigRational(-691, 2730));
}

TEST_CASE("bernoulli: matches the defining recurrence up to B_80") {
  auto oracle = bernoulli_by_recurrence(80);
  for (unsigned n = 0; n <= 80; n += 2) CHECK(bernoulli(n) == oracle[n]);
}

TEST_CASE("bernoulli: recurrence identity holds exactly for computed values") {
  // sum_{j=0}^{n} C(n+1, j) B_j = 0, with B_1 = -1/2 supplied internally
  for (unsigned n : {10u, 40u, 96u}) {
    BigRational acc(0);
    for (unsigned j = 0; j <= n; ++j)
      acc += BigRational(binomial(n + 1, j)) * detail::bernoulli_any(j);
    CHECK(acc == 0);
  }
}

TEST_CASE("bernoulli: odd index rejected") {
  CHECK_THROWS_AS(bernoulli(7), DomainError);
}

TEST_CASE("gamma_half: closed-form values") {
  PrecisionContext ctx(60);
  CHECK(within_ulps(gamma_half(0, ctx), ctx.sqrt_pi(), 4));
  CHECK(within_ulps(gamma_half(2, ctx), 3 * ctx.sqrt_pi() / 4, 4));
}

TEST_CASE("gamma_half: recurrence oracle Gamma(x+1) = x Gamma(x)") {
  PrecisionContext ctx(80);
  // build Gamma(m + 1/2) from Gamma(1/2) = sqrt(pi) by repeated multiplication
  MPReal g = ctx.sqrt_pi();
  for (unsigned m = 1; m <= 16; ++m) {
    g *= (ctx.real(2L * m - 1) / 2);
    CHECK(within_ulps(gamma_half(m, ctx), g, 32));
  }
  // frozen from the oracle: Gamma(10.5) = (19!!/2^10) sqrt(pi) = 639383.8623046875 sqrt(pi)
  CHECK(gamma_half_rational(10) == BigRational(654729075, 1024));
  CHECK(within_ulps(gamma_half(10, ctx), ctx.real("639383.8623046875") * ctx.sqrt_pi(), 8));
}

TEST_CASE("cpow_neg32: fixed points") {
  PrecisionContext ctx(60);
  MPComplex one(ctx.one(), ctx.zero());
  MPComplex r1 = cpow_neg32(one, ctx);
  CHECK(within_ulps(r1.re, ctx.one(), 4));
  CHECK(abs(r1.im) < ctx.work_eps() * 10);

  // principal branch at the upper edge of the cut: (-1)^{-3/2} = +i
  MPComplex rm = cpow_neg32(MPComplex(ctx.real(-1L), ctx.zero()), ctx);
  CHECK(abs(rm.re) < ctx.pow10(-static_cast<long>(ctx.work_digits()) + 4));
  CHECK(within_ulps(rm.im, ctx.one(), 8));

  MPComplex r4 = cpow_neg32(MPComplex(ctx.real(4L), ctx.zero()), ctx);
  CHECK(within_ulps(r4.re, ctx.one() / 8, 4));

  CHECK_THROWS_AS(cpow_neg32(MPComplex(ctx.zero(), ctx.zero()), ctx), DomainError);
}

TEST_CASE("cpow_neg32: branch identity w^{-3/2} w^{-3/2} w^3 = 1 in the safe sector") {
  PrecisionContext ctx(50);
  Rng rng(20250901);
  for (int i = 0; i < 100; ++i) {
    MPComplex w = rptest::random_complex(rng, ctx, 0.05, 50.0, -1.5, 1.5);
    MPComplex p = cpow_neg32(w, ctx);
    MPComplex prod = p * p * (w * w * w);
    CHECK(cabs(prod - MPComplex(ctx.one(), ctx.zero())) < ctx.eps());
  }
}

TEST_CASE("complex primitives: principal branch conventions") {
  PrecisionContext ctx(50);
  // arg of a negative real is +pi regardless of the zero sign of im
  MPComplex neg(ctx.real(-2L), ctx.zero());
  CHECK(within_ulps(principal_arg(neg), ctx.pi(), 4));
  MPComplex inv = cinv(neg);  // im becomes -0 here
  CHECK(mpfr_signbit(inv.im.backend().data()));
  CHECK(within_ulps(principal_arg(inv), ctx.pi(), 4));
  // principal sqrt of -1 is +i
  MPComplex s = csqrt(MPComplex(ctx.real(-1L), ctx.zero()));
  CHECK(within_ulps(s.im, ctx.one(), 4));
  // log is principal: Im in (-pi, pi]
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    MPComplex z = rptest::random_complex(rng, ctx, 0.01, 100.0, -3.14159, 3.14159);
    MPComplex l = clog(z);
    CHECK(l.im > -ctx.pi() - ctx.eps());
    CHECK(l.im <= ctx.pi() + ctx.eps());
    // exp(log z) = z
    CHECK(cabs(cexp(l) - z) / cabs(z) < ctx.eps());
  }
}

TEST_CASE("precision doubling: mpcore operations are stable") {
  PrecisionContext lo(40), hi(80);
  for (unsigned m : {0u, 3u, 11u}) {
    MPReal a = gamma_half(m, lo);
    MPReal b = gamma_half(m, hi);
    CHECK(within_ulps(a, b, 2));  // hi rounded into lo's precision comparison
  }
  Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    MPComplex w_lo = rptest::random_complex(rng, lo, 0.1, 10.0, -3.0, 3.0);
    MPComplex w_hi(hi.real(0L), hi.real(0L));
    mpfr_set(w_hi.re.backend().data(), w_lo.re.backend().data(), MPFR_RNDN);
    mpfr_set(w_hi.im.backend().data(), w_lo.im.backend().data(), MPFR_RNDN);
    MPComplex p_lo = cpow_neg32(w_lo, lo);
    MPComplex p_hi = cpow_neg32(w_hi, hi);
    CHECK(rptest::rel_err(p_lo.re, p_hi.re) < lo.eps() * 100);
    CHECK(rptest::rel_err(p_lo.im, p_hi.im) < lo.eps() * 100);
  }
}

TEST_CASE("PrecisionContext: validation and conversions") {
  CHECK_THROWS_AS(PrecisionContext(20), DomainError);
  CHECK_THROWS_AS(PrecisionContext(40, 5), DomainError);
  PrecisionContext ctx(30, 10);
  CHECK(ctx.work_digits() == 40);
  CHECK(ctx.real(BigRational(-3, 2)) == ctx.real(-3L) / 2);
  // big-integer conversion is correctly rounded, not squeezed through a
  // low-precision intermediate
  BigInt f = factorial(28);
  MPReal x = ctx.real(f);
  MPReal direct(0, ctx.work_digits());
  mpfr_set_z(direct.backend().data(), f.backend().data(), MPFR_RNDN);
  CHECK(x == direct);
  CHECK(exact_rational(ctx.real(1L) / 2) == BigRational(1, 2));
}
