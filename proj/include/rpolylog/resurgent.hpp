#pragma once

#include <vector>

#include "rpolylog/gfunc.hpp"
#include "rpolylog/polynomial.hpp"

namespace rpolylog {

// One evaluation of the exponentially suppressed residual S(u):
// u > 0, x = u/2 - floor(u/2), s = S(u), and how many digits of s survived
// the e^{-u} cancellation.
struct ResidualSample {
  MPReal u;
  MPReal x;
  MPReal s;
  long digits_effective = 0;
};

inline MPReal frac_half(const MPReal& u) { return u / 2 - floor(u / 2); }

namespace detail {

// sum_{n=0}^{floor(u/2)} eta(2n) Gamma(2n + 1/2) u^{-2n}, assembled from the
// exact rational weights: each term is w_n sqrt(pi) (pi/u)^{2n}.
inline MPReal gu_inner_sum(const MPReal& u, const PrecisionContext& ctx) {
  long n_max = to_long(floor(u / 2));
  MPReal ratio = ctx.pi() / u;
  MPReal r2 = ratio * ratio;
  MPReal p = ctx.one();
  MPReal acc = ctx.zero();
  for (long n = 0; n <= n_max; ++n) {
    acc += ctx.real(eta_gamma_weight(static_cast<unsigned long>(n))) * p;
    p *= r2;
  }
  return acc * ctx.sqrt_pi();
}

}  // namespace detail

// Optimally truncated sign-constant expansion of G(-e^u):
//   -(2/(pi sqrt(u))) sum_{n=0}^{floor(u/2)} eta(2n) Gamma(2n+1/2) u^{-2n}.
inline MPReal truncated_sum(const MPReal& u, const PrecisionContext& ctx) {
  ctx.activate();
  if (!(u > 0)) throw DomainError("truncated_sum: requires u > 0");
  return -2 * detail::gu_inner_sum(u, ctx) / (ctx.pi() * sqrt(u));
}

// S(u) = -e^u/sqrt(2 pi) [ (pi sqrt(u)/2) G(-e^u) + inner sum ]. The residual
// sits e^{-u} below the leading terms, so the context must budget
// u log10(e) + target_digits + guard decimal digits or the subtraction is
// pure noise; that precondition is enforced, not assumed.
inline ResidualSample s_of_u(const MPReal& u, const PrecisionContext& ctx,
                             unsigned target_digits = 10) {
  ctx.activate();
  if (!(u > 0)) throw DomainError("s_of_u: requires u > 0");
  MPReal budget = u * ctx.log10_e() + target_digits + ctx.guard();
  if (ctx.digits() < budget)
    throw PrecisionError("s_of_u: cancellation budget requires digits >= " +
                         budget.str(8) + " at u = " + u.str(8));

  MPReal g = g_negative_axis(u, ctx).value.re;
  MPReal inner = detail::gu_inner_sum(u, ctx);
  MPReal s = -exp(u) / ctx.sqrt_two_pi() * (ctx.pi() * sqrt(u) / 2 * g + inner);

  ResidualSample out;
  out.u = u;
  out.x = frac_half(u);
  out.s = s;
  out.digits_effective = to_long(floor(ctx.digits() - u * ctx.log10_e())) -
                         static_cast<long>(ctx.guard());
  if (!(s > ctx.real(-7L) / 10 && s < ctx.real(4L) / 10))
    throw PrecisionError("s_of_u: residual " + s.str(8) + " escaped (-0.7, 0.4) at u = " +
                         u.str(8) + "; cancellation budget violated?");
  return out;
}

// Second-level prediction sum_{k<=K} P_k(x) / u^k at x = u/2 - floor(u/2).
inline MPReal s_predicted(const MPReal& u, const std::vector<RationalPolynomial>& polys,
                          const PrecisionContext& ctx) {
  ctx.activate();
  if (polys.empty()) throw DomainError("s_predicted: empty polynomial list");
  if (ctx.real(static_cast<long>(polys.size() - 1)) > floor(u))
    throw DomainError("s_predicted: K must not exceed floor(u)");
  MPReal x = frac_half(u);
  MPReal acc = ctx.zero();
  for (size_t k = polys.size(); k-- > 0;) acc = acc / u + polys[k].eval(x, ctx);
  return acc;
}

}  // namespace rpolylog
