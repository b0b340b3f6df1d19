#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace rpolylog;

TEST_CASE("truncated_sum: leading term is -1/sqrt(pi u) at u = 4") {
  PrecisionContext ctx(40);
  // n = 0 term alone: -(2/(pi sqrt(u))) eta(0) Gamma(1/2) = -1/sqrt(pi u)
  MPReal leading = -2 * eta_even(0, ctx) * gamma_half(0, ctx) / (ctx.pi() * 2);
  CHECK(abs(leading + 1 / sqrt(4 * ctx.pi())) < ctx.work_eps() * 10);
  CHECK(abs(leading - ctx.real("-0.28209479177387814347")) < ctx.pow10(-19));
}

TEST_CASE("truncated_sum: u = 7 truncates at n = 3 (four summands)") {
  PrecisionContext ctx(40);
  MPReal u = ctx.real(7L);
  MPReal manual = ctx.zero();
  for (unsigned n = 0; n <= 3; ++n)
    manual += eta_even(n, ctx) * gamma_half(2 * n, ctx) / pow(u, 2 * n);
  manual *= -2 / (ctx.pi() * sqrt(u));
  CHECK(abs(truncated_sum(u, ctx) - manual) < ctx.work_eps() * 100);
  // a fifth summand would change the value
  MPReal extra = manual - 2 * eta_even(4, ctx) * gamma_half(8, ctx) / pow(u, 8UL) /
                              (ctx.pi() * sqrt(u));
  CHECK(abs(truncated_sum(u, ctx) - extra) > ctx.pow10(-8));
}

TEST_CASE("truncated_sum: sign-constant terms, partial sums decrease") {
  PrecisionContext ctx(40);
  // every eta(2n) Gamma(2n+1/2) u^{-2n} > 0, so against the negative prefactor
  // the partial sums are strictly decreasing
  for (unsigned n = 0; n <= 40; ++n) CHECK(eta_gamma_weight(n) > 0);
  MPReal u = ctx.real(30L);
  MPReal prev = ctx.zero();
  MPReal acc = ctx.zero();
  for (unsigned n = 0; n <= 15; ++n) {
    acc += ctx.real(eta_gamma_weight(n)) * pow(ctx.pi() / u, 2 * n) * ctx.sqrt_pi();
    MPReal partial = -2 * acc / (ctx.pi() * sqrt(u));
    if (n > 0) CHECK(partial < prev);
    prev = partial;
  }
  CHECK_THROWS_AS(truncated_sum(ctx.real(0L), ctx), DomainError);
}

TEST_CASE("residual smallness: |G(-e^u) - truncated_sum(u)| at the e^{-u} scale") {
  PrecisionContext ctx(80);
  for (double ud : {4.0, 6.5, 10.0, 20.0, 50.0}) {
    MPReal u = ctx.real(ud);
    MPReal diff = abs(g_negative_axis(u, ctx).value.re - truncated_sum(u, ctx));
    MPReal bound = ctx.sqrt_two_pi() * exp(-u) * ctx.real(7L) / 10 * 2 / (ctx.pi() * sqrt(u));
    CHECK(diff <= bound);
  }
}

TEST_CASE("s_of_u: range, x values, and the large-u limit") {
  PrecisionContext ctx(180);
  for (double ud : {1.0, 2.5, 10.0, 47.5, 300.0}) {
    ResidualSample s = s_of_u(ctx.real(ud), ctx);
    CHECK(s.s > ctx.real(-7L) / 10);
    CHECK(s.s < ctx.real(4L) / 10);
    CHECK(s.x >= 0);
    CHECK(s.x < 1);
  }
  ResidualSample s10 = s_of_u(ctx.real(10L), ctx);
  CHECK(s10.x == 0);
  ResidualSample s25 = s_of_u(ctx.real("2.5"), ctx);
  CHECK(s25.x == ctx.one() / 4);
  // S(u) = x - 2/3 + O(1/u)
  ResidualSample s300 = s_of_u(ctx.real(300L), ctx);
  CHECK(abs(s300.s + ctx.real(2L) / 3) < ctx.real(1L) / 100);
  CHECK(s300.digits_effective > 20);
}

TEST_CASE("s_of_u: S(300) against the second-level expansion through k = 20") {
  PrecisionContext ctx(180);
  ResidualSample s = s_of_u(ctx.real(300L), ctx);
  auto polys = assemble(20, shipped_constants(20)).polys();
  MPReal pred = s_predicted(ctx.real(300L), polys, ctx);
  CHECK(abs(s.s - pred) < ctx.pow10(-40));
}

TEST_CASE("s_of_u: parity consistency S(u) vs S(u+2)") {
  PrecisionContext ctx(120);
  ResidualSample a = s_of_u(ctx.real(100L), ctx);
  ResidualSample b = s_of_u(ctx.real(102L), ctx);
  CHECK(a.x == b.x);
  CHECK(abs(a.s - b.s) < ctx.one() / 100);  // O(1/u)
}

TEST_CASE("s_of_u: cancellation budget is a hard precondition") {
  PrecisionContext ctx(60);
  CHECK_THROWS_AS(s_of_u(ctx.real(300L), ctx), PrecisionError);
  CHECK_THROWS_AS(s_of_u(ctx.real(-2L), ctx), DomainError);
}

TEST_CASE("s_predicted: first-order predictions") {
  PrecisionContext ctx(40);
  std::vector<RationalPolynomial> p0 = {
      RationalPolynomial({BigRational(-2, 3), BigRational(1)})};
  // even u: P_0(0) = -2/3
  CHECK(abs(s_predicted(ctx.real(100L), p0, ctx) + ctx.real(2L) / 3) < ctx.work_eps() * 10);
  // x = 1/2: P_0(1/2) = -1/6
  CHECK(abs(s_predicted(ctx.real(101L), p0, ctx) + ctx.one() / 6) < ctx.work_eps() * 10);
  // K = 1 at u = 100: -2/3 + (47/2160)/100
  auto polys = assemble(1, {BigRational(-2, 3), BigRational(47, 2160)}).polys();
  MPReal expect = ctx.real(-2L) / 3 + ctx.real(BigRational(47, 216000));
  CHECK(abs(s_predicted(ctx.real(100L), polys, ctx) - expect) < ctx.work_eps() * 10);
  // K must not exceed floor(u)
  auto many = assemble(3, {BigRational(-2, 3), BigRational(47, 2160), BigRational(-433, 24192),
                           BigRational(28583, 2488320)})
                  .polys();
  CHECK_THROWS_AS(s_predicted(ctx.real("2.5"), many, ctx), DomainError);
}
