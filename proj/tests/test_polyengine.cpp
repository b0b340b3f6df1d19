#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace rpolylog;
using rptest::Rng;

namespace {

using Q = BigRational;

std::vector<Q> paper_constants() {
  return {Q(-2, 3), Q(47, 2160), Q(-433, 24192), Q(28583, 2488320)};
}

std::vector<RationalPolynomial> paper_polys() {
  return {
      RationalPolynomial({Q(-2, 3), Q(1)}),
      RationalPolynomial({Q(47, 2160), Q(7, 24), Q(-1), Q(2, 3)}),
      RationalPolynomial({Q(-433, 24192), Q(-73, 1920), Q(1, 3), Q(-1, 36), Q(-2, 3), Q(2, 5)}),
      RationalPolynomial({Q(28583, 2488320), Q(-106619, 2903040), Q(-223, 1152), Q(433, 1728),
                          Q(31, 72), Q(-5, 12), Q(-2, 9), Q(4, 21)}),
  };
}

}  // namespace

TEST_CASE("delta_table: the printed low orders") {
  auto d = delta_table(2);
  CHECK(d[0] == RationalPolynomial({Q(1)}));
  CHECK(d[1] == RationalPolynomial({Q(-1, 24), Q(0), Q(2)}));
  CHECK(d[1].eval(Q(-1, 4)) == Q(1, 12));  // g_1
}

TEST_CASE("delta_table: degrees, leading signs") {
  auto d = delta_table(25);
  for (unsigned k = 1; k <= 25; ++k) {
    CHECK(d[k].degree() == static_cast<int>(2 * k));
    CHECK(d[k].leading() > 0);
  }
}

TEST_CASE("g_sequence: printed values and the delta identity") {
  auto g = g_sequence(40);
  CHECK(g[0] == Q(1));
  CHECK(g[1] == Q(1, 12));
  CHECK(g[2] == Q(1, 288));
  CHECK(g[3] == Q(-139, 51840));
  CHECK(g[4] == Q(-571, 2488320));
  auto d = delta_table(40);
  for (unsigned k = 0; k <= 40; ++k) CHECK(d[k].eval(Q(-1, 4)) == g[k]);
}

TEST_CASE("g_sequence: factorial growth trend k g_k = O(k!/(2 pi)^k)") {
  auto g = g_sequence(41);
  CHECK(abs(g[10]) < abs(g[11]));  // onset of growth
  PrecisionContext ctx(40);
  for (unsigned k = 30; k <= 40; ++k) {
    MPReal ratio = abs(ctx.real(g[k + 1]) / ctx.real(g[k])) * ctx.two_pi() / k;
    CHECK(ratio > ctx.real(8L) / 10);
    CHECK(ratio < ctx.real(12L) / 10);
  }
}

TEST_CASE("antidifference: base cases and the printed F_1") {
  CHECK(antidifference(RationalPolynomial({Q(1)})) == RationalPolynomial({Q(0), Q(1)}));
  auto d = delta_table(1);
  CHECK(antidifference(d[1]) == RationalPolynomial({Q(0), Q(7, 24), Q(-1), Q(2, 3)}));
  // zero maps to zero
  CHECK(antidifference(RationalPolynomial{}).is_zero());
}

TEST_CASE("antidifference: exact identity on random polynomials") {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    std::vector<Q> c(static_cast<size_t>(rng.integer(1, 16)));
    for (auto& v : c) v = Q(rng.integer(-60, 60), rng.integer(1, 48));
    RationalPolynomial q(std::move(c));
    RationalPolynomial f = antidifference(q);
    CHECK(f.shifted(1) - f == q);
    CHECK(f.eval(Q(0)) == 0);
  }
}

TEST_CASE("p_prime_values: printed derivative pairs") {
  auto pv = p_prime_values(2);
  CHECK(pv[0] == std::pair<Q, Q>{Q(1), Q(0)});
  CHECK(pv[1] == std::pair<Q, Q>{Q(7, 24), Q(-2)});
  CHECK(pv[2] == std::pair<Q, Q>{Q(-73, 1920), Q(2, 3)});
  // cross-check against the full antidifference route
  auto d = delta_table(5);
  for (unsigned k = 0; k <= 5; ++k) {
    RationalPolynomial f = antidifference(d[k]);
    auto all = p_prime_values(5);
    CHECK(all[k].first == f.derivative().eval(Q(0)));
    CHECK(all[k].second == f.derivative().derivative().eval(Q(0)));
  }
}

TEST_CASE("assemble: reproduces the printed P_0..P_3 exactly") {
  PolyTable t = assemble(3, paper_constants());
  auto frozen = paper_polys();
  for (unsigned k = 0; k <= 3; ++k) {
    CHECK(t.poly(k) == frozen[k]);
    CHECK(t.poly(k).degree() == static_cast<int>(2 * k + 1));
    // difference identity, exactly
    CHECK(t.poly(k).shifted(1) - t.poly(k) == t.deltas[k]);
  }
}

TEST_CASE("assemble: two routes to Delta agree for the printed P_k") {
  // (P_k(x+1) - P_k(x)) from the frozen polynomials vs the series route
  auto frozen = paper_polys();
  auto d = delta_table(3);
  for (unsigned k = 0; k <= 3; ++k) CHECK(frozen[k].shifted(1) - frozen[k] == d[k]);
}

TEST_CASE("assemble: a wrong constant violates denominator smoothness") {
  // 1/7 at k = 1: the prime 7 exceeds 2k+3 = 5
  std::vector<Q> bad = {Q(-2, 3), Q(1, 7)};
  CHECK_THROWS_AS(assemble(1, bad), SmoothnessError);
  CHECK_THROWS_AS(assemble(2, paper_constants()), DomainError);  // wrong count
  // K = 0 with the right constant
  PolyTable t0 = assemble(0, {Q(-2, 3)});
  CHECK(t0.poly(0) == RationalPolynomial({Q(-2, 3), Q(1)}));
}

TEST_CASE("assemble: denominator smoothness holds for deeper tables") {
  PolyTable t = assemble(3, paper_constants());
  for (unsigned k = 0; k <= 3; ++k)
    for (const auto& c : t.poly(k).coeffs())
      CHECK(detail::is_smooth(denominator(c), 2 * k + 3));
  CHECK_FALSE(detail::is_smooth(BigInt(7), 5));
  CHECK(detail::is_smooth(BigInt(2488320), 9));
}

TEST_CASE("PolyTable: constants required for poly()") {
  PolyTable t = delta_antidiff_table(2);
  CHECK_FALSE(t.has_constants());
  CHECK_THROWS_AS(t.poly(1), DomainError);
}

TEST_CASE("USeries: exp/log round trip and the delta series") {
  // build the delta series via the public USeries ops and compare with the
  // engine's table
  unsigned k_max = 8;
  USeries s = USeries::zero(k_max);
  for (unsigned k = 1; k <= k_max; ++k) {
    RationalPolynomial sk =
        RationalPolynomial::monomial(Q(1, BigInt(static_cast<long>(k) * (k + 1))), k + 1) +
        RationalPolynomial::monomial(Q(-1, 2 * static_cast<long>(k)), k);
    for (unsigned n = 1; 2 * n - 1 <= k; ++n) {
      Q coeff = bernoulli(2 * n) * Q(binomial(k - 1, 2 * n - 2)) /
                Q(BigInt(2L * n) * (2L * n - 1));
      sk = sk + RationalPolynomial::monomial(coeff, k - 2 * n + 1);
    }
    // substitute t = 2x + 1/2
    s.coeffs[k] = sk.compose_linear(Q(2), Q(1, 2));
  }
  USeries e = s.exp_series();
  auto d = delta_table(k_max);
  for (unsigned k = 0; k <= k_max; ++k) CHECK(e.coeffs[k] == d[k]);
  USeries back = e.log_series();
  for (unsigned k = 0; k <= k_max; ++k) CHECK(back.coeffs[k] == s.coeffs[k]);
}

TEST_CASE("delta_sinusoid_check: O(1/k) deviation, improving with k") {
  PrecisionContext ctx(40);
  MPReal x = ctx.real("0.3");
  MPReal d40 = delta_sinusoid_check(40, x, ctx);
  MPReal d80 = delta_sinusoid_check(80, x, ctx);
  CHECK(d40 < ctx.one() / 10);
  CHECK(d80 < ctx.one() / 20);
  CHECK(d80 < d40);
  CHECK_THROWS_AS(delta_sinusoid_check(5, x, ctx), DomainError);
  CHECK_THROWS_AS(delta_sinusoid_check(40, ctx.real(2L), ctx), DomainError);
}

TEST_CASE("resurgence_residual: optimal truncation quality") {
  PrecisionContext ctx(50);
  MPReal r6 = resurgence_residual(6, Parity::Even, ctx);
  MPReal r10 = resurgence_residual(10, Parity::Even, ctx);
  CHECK(r6 < ctx.one() / 10);
  CHECK(r10 < ctx.one() / 100);
  CHECK(r10 < r6);
  // odd relation, same machinery
  MPReal o6 = resurgence_residual(6, Parity::Odd, ctx);
  MPReal o10 = resurgence_residual(10, Parity::Odd, ctx);
  CHECK(o10 < o6);
  CHECK_THROWS_AS(resurgence_residual(1, Parity::Even, ctx), DomainError);
}

TEST_CASE("polytable serialization: exact round trip") {
  PolyTable t = assemble(3, paper_constants());
  std::string text = polytable_to_text(t);
  PolyTable back = polytable_from_text(text);
  CHECK(polytable_to_text(back) == text);
  CHECK(back.k_max == 3);
  for (unsigned k = 0; k <= 3; ++k) {
    CHECK(back.deltas[k] == t.deltas[k]);
    CHECK(back.antidiffs[k] == t.antidiffs[k]);
    CHECK(back.poly(k) == t.poly(k));
  }
  // tables without constants round-trip too
  PolyTable bare = delta_antidiff_table(2);
  CHECK(polytable_to_text(polytable_from_text(polytable_to_text(bare))) ==
        polytable_to_text(bare));
}

TEST_CASE("polytable serialization: malformed input is rejected") {
  CHECK_THROWS_AS(polytable_from_text("nonsense"), IOError);
  CHECK_THROWS_AS(polytable_from_text("polytable v1\ndelta 0: 1\n"), IOError);
  // poly line inconsistent with antidiff + const
  PolyTable t = assemble(0, {Q(-2, 3)});
  std::string text = polytable_to_text(t);
  auto pos = text.find("poly 0: -2/3 1");
  REQUIRE(pos != std::string::npos);
  std::string broken = text.substr(0, pos) + "poly 0: -1/3 1\n";
  CHECK_THROWS_AS(polytable_from_text(broken), IOError);
}
