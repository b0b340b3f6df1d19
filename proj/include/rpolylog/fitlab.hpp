#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rpolylog/parallel.hpp"
#include "rpolylog/polyengine.hpp"
#include "rpolylog/resurgent.hpp"

namespace rpolylog {

// Sampling plan for the residual fit: even-integer grid (so x = 0 and the fit
// is a pure power series in 1/u), with the cancellation + conditioning digit
// budget validated up front.
struct FitConfig {
  long u_min = 402;
  long u_max = 600;
  unsigned count = 100;
  unsigned digits = 450;
  unsigned k_max = 12;
  double holdout = 0.1;

  void validate() const {
    if (u_min < 4 || u_min % 2 != 0 || u_max % 2 != 0 || u_max <= u_min)
      throw DomainError("FitConfig: u_min/u_max must be even with 4 <= u_min < u_max");
    if (u_min < static_cast<long>(4 * k_max))
      throw DomainError("FitConfig: requires u_min >= 4 K");
    if (count < k_max + 6) throw DomainError("FitConfig: requires count >= K + 6");
    if (count > static_cast<unsigned>((u_max - u_min) / 2 + 1))
      throw DomainError("FitConfig: more samples than even integers in [u_min, u_max]");
    double need = u_max * 0.4342944819032518 + 1.5 * k_max * std::log10(double(u_min)) + 50;
    if (digits < need)
      throw DomainError("FitConfig: digits below the budget " + std::to_string(need));
    if (holdout < 0 || holdout > 0.5) throw DomainError("FitConfig: holdout in [0, 0.5]");
  }

  std::vector<long> grid() const {
    std::vector<long> us;
    us.reserve(count);
    long prev = u_min - 2;
    for (unsigned i = 0; i < count; ++i) {
      double t = count == 1 ? 0.0 : double(i) / (count - 1);
      long u = u_min + 2 * std::lround(t * (u_max - u_min) / 2.0);
      if (u <= prev) u = prev + 2;
      us.push_back(u);
      prev = u;
    }
    if (us.back() > u_max) throw DomainError("FitConfig: grid overflows u_max");
    return us;
  }
};

// S(u) over the even grid, parallel over samples, output ordered by u.
inline std::vector<ResidualSample> sample_residuals(const FitConfig& cfg,
                                                    unsigned threads = 0) {
  cfg.validate();
  PrecisionContext ctx(cfg.digits);
  std::vector<long> us = cfg.grid();
  std::vector<ResidualSample> out(us.size());
  // warm the shared Bernoulli / eta tables once before fanning out
  eta_gamma_weight(static_cast<unsigned long>(cfg.u_max / 2));
  out[0] = s_of_u(ctx.real(us[0]), ctx);
  parallel_for(us.size() - 1, threads,
               [&](std::size_t i) { out[i + 1] = s_of_u(ctx.real(us[i + 1]), ctx); });
  return out;
}

namespace detail {

// Thin QR (modified Gram-Schmidt) of the Vandermonde columns u^{-j},
// j = 0..j_max, over the fit samples. The columns are fixed across peeling
// steps, so the factorization is built once; a step with J unknowns uses the
// leading J columns. Conditioning is paid for with working precision, per the
// brute-precision design.
struct VandermondeQr {
  std::vector<std::vector<MPReal>> q;  // orthonormal columns
  std::vector<std::vector<MPReal>> r;  // r[j]: projections, r[j][j] = norm

  void build(const std::vector<MPReal>& u, unsigned j_max, const PrecisionContext& ctx) {
    std::size_t m = u.size();
    std::vector<MPReal> col(m);
    for (std::size_t n = 0; n < m; ++n) col[n] = ctx.one();
    for (unsigned j = 0; j <= j_max; ++j) {
      std::vector<MPReal> v = col;
      std::vector<MPReal> rj(j + 1, ctx.zero());
      for (unsigned i = 0; i < j; ++i) {
        MPReal dot = ctx.zero();
        for (std::size_t n = 0; n < m; ++n) dot += q[i][n] * v[n];
        rj[i] = dot;
        for (std::size_t n = 0; n < m; ++n) v[n] -= dot * q[i][n];
      }
      MPReal norm = ctx.zero();
      for (std::size_t n = 0; n < m; ++n) norm += v[n] * v[n];
      norm = sqrt(norm);
      if (norm == 0) throw PrecisionError("VandermondeQr: rank-deficient column set");
      rj[j] = norm;
      for (std::size_t n = 0; n < m; ++n) v[n] /= norm;
      q.push_back(std::move(v));
      r.push_back(std::move(rj));
      for (std::size_t n = 0; n < m; ++n) col[n] /= u[n];
    }
  }

  // least-squares coefficients of y against the leading n_cols columns
  std::vector<MPReal> solve(const std::vector<MPReal>& y, unsigned n_cols,
                            const PrecisionContext& ctx) const {
    std::vector<MPReal> z(n_cols, ctx.zero());
    for (unsigned j = 0; j < n_cols; ++j)
      for (std::size_t n = 0; n < y.size(); ++n) z[j] += q[j][n] * y[n];
    std::vector<MPReal> beta(n_cols, ctx.zero());
    for (unsigned j = n_cols; j-- > 0;) {
      MPReal acc = z[j];
      for (unsigned i = j + 1; i < n_cols; ++i) acc -= r[i][j] * beta[i];
      beta[j] = acc / r[j][j];
    }
    return beta;
  }
};

struct ReconstructionHit {
  BigRational value;
  double gap_log10 = 0;
  bool used_prior = false;
};

// Continued-fraction rational reconstruction: walk the convergents of the
// float, accept the first one inside the error interval whose denominator is
// `smooth_bound`-smooth and whose next partial quotient jumps by at least
// gap_min_log10 orders (the jump is what distinguishes a genuine rational from
// noise fitting).
inline std::optional<ReconstructionHit> reconstruct_cf(const MPReal& estimate,
                                                       const MPReal& interval,
                                                       unsigned long smooth_bound,
                                                       double gap_min_log10) {
  BigRational cq = exact_rational(estimate);
  BigRational tol = exact_rational(abs(interval));
  BigInt gap_min = int_pow(10UL, static_cast<unsigned long>(gap_min_log10));

  BigInt qcap;
  if (tol == 0) {
    qcap = int_pow(10UL, 400);
  } else {
    BigInt inv_tol = denominator(tol) / numerator(tol) + 1;
    qcap = sqrt(inv_tol) * 1000000;
  }

  BigInt n = numerator(cq), d = denominator(cq);
  BigInt p_prev = 1, q_prev = 0;
  BigInt a;
  mpz_fdiv_q(a.backend().data(), n.backend().data(), d.backend().data());
  BigInt p_cur = a, q_cur = 1;
  BigInt rem = n - a * d;
  n = d;
  d = rem;
  for (;;) {
    BigRational conv(p_cur, q_cur);
    if (abs(cq - conv) <= tol) {
      bool terminal = (d == 0);
      BigInt a_next = 0;
      if (!terminal) mpz_fdiv_q(a_next.backend().data(), n.backend().data(), d.backend().data());
      if ((terminal || a_next >= gap_min) && is_smooth(denominator(conv), smooth_bound)) {
        ReconstructionHit hit;
        hit.value = conv;
        hit.gap_log10 =
            terminal ? 999.0
                     : static_cast<double>(mpz_sizeinbase(a_next.backend().data(), 10));
        return hit;
      }
    }
    if (d == 0 || q_cur > qcap) return std::nullopt;
    mpz_fdiv_q(a.backend().data(), n.backend().data(), d.backend().data());
    rem = n - a * d;
    BigInt p_new = a * p_cur + p_prev;
    BigInt q_new = a * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_new;
    q_cur = q_new;
    n = d;
    d = rem;
  }
}

// Fallback: candidate denominators prior * f over smooth multipliers f. Valid
// whenever the true denominator divides prior * f, which covers the observed
// D_k = D_{k-1} * (small smooth rational) drift. Accepts only a unique,
// tightly-pinned value.
inline std::optional<ReconstructionHit> reconstruct_near_prior(
    const MPReal& estimate, const MPReal& interval, unsigned long smooth_bound,
    const BigInt& prior, unsigned long multiplier_bound) {
  BigRational cq = exact_rational(estimate);
  BigRational tol = exact_rational(abs(interval));
  std::optional<BigRational> found;
  for (unsigned long f = 1; f <= multiplier_bound; ++f) {
    if (!is_smooth(BigInt(static_cast<long>(f)), smooth_bound)) continue;
    BigInt q = prior * static_cast<long>(f);
    BigRational scaled = cq * BigRational(q);
    BigInt p;
    // round to nearest integer
    BigInt num = numerator(scaled), den = denominator(scaled);
    BigInt twice = 2 * num + den;
    mpz_fdiv_q(p.backend().data(), twice.backend().data(), (2 * den).backend().data());
    BigRational cand(p, q);
    if (abs(cq - cand) <= tol / 1000000 && is_smooth(denominator(cand), smooth_bound)) {
      if (found && *found != cand) return std::nullopt;  // ambiguous
      found = cand;
    }
  }
  if (!found) return std::nullopt;
  ReconstructionHit hit;
  hit.value = *found;
  hit.gap_log10 = 6.0;
  hit.used_prior = true;
  return hit;
}

}  // namespace detail

struct PeelOptions {
  std::optional<std::vector<BigInt>> prior_denoms;  // known denominators per k
  unsigned tail_buffer = 12;       // extra 1/u orders fitted beyond K
  double gap_min_log10 = 10.0;     // confidence gap for CF acceptance
  unsigned long smooth_multiplier_bound = 10000;
  double holdout_fraction = 0.1;
};

struct CoefficientEvidence {
  unsigned k = 0;
  std::string estimate;
  std::string interval;
  BigRational value;
  double gap_log10 = 0;
  bool used_prior = false;
};

struct FitReport {
  std::vector<BigRational> constants;
  std::vector<CoefficientEvidence> evidence;
  std::vector<std::pair<long, MPReal>> holdout_residuals;
  MPReal max_holdout_residual;

  std::string to_text() const {
    std::ostringstream os;
    os << "fit report\n";
    os << "K " << (constants.empty() ? 0 : constants.size() - 1) << "\n";
    for (const auto& e : evidence) {
      os << "k " << e.k << ": value " << e.value.str() << " estimate " << e.estimate
         << " interval " << e.interval << " gap10 " << e.gap_log10
         << (e.used_prior ? " via-prior" : "") << "\n";
    }
    for (const auto& [u, r] : holdout_residuals)
      os << "holdout u " << u << " residual " << r.str(6) << "\n";
    if (!holdout_residuals.empty())
      os << "max holdout residual " << max_holdout_residual.str(6) << "\n";
    return os.str();
  }
};

// Iterative peel: least-squares the leading unknown at full precision,
// rationalize it under the smoothness + interval + gap criteria, subtract the
// exact term, repeat. Holdout samples never enter the fit; their residuals
// after all K+1 subtractions are reported.
inline FitReport peel_constants_report(const std::vector<ResidualSample>& samples,
                                       unsigned k_max, const PeelOptions& opts = {}) {
  if (samples.size() < k_max + 6)
    throw DomainError("peel_constants: need at least K + 6 samples");
  for (const auto& s : samples)
    if (!(s.x == 0))
      throw DomainError("peel_constants: requires even-u samples (x = 0)");

  unsigned wp = samples[0].s.precision();
  PrecisionContext ctx(wp >= 50 ? wp - 20 : 30, 20);
  ctx.activate();

  // split holdout / fit / half-A / half-B
  std::size_t stride =
      opts.holdout_fraction > 0
          ? std::max<std::size_t>(2, std::llround(1.0 / opts.holdout_fraction))
          : samples.size() + 1;
  std::vector<std::size_t> fit_idx, hold_idx;
  for (std::size_t i = 0; i < samples.size(); ++i)
    (i % stride == stride / 2 ? hold_idx : fit_idx).push_back(i);

  std::size_t m = fit_idx.size();
  unsigned j_max = std::min<unsigned>(k_max + opts.tail_buffer,
                                      static_cast<unsigned>(m) - 2);
  if (j_max < k_max) throw DomainError("peel_constants: too few fit samples for K");

  std::vector<MPReal> u(m), uinv_pow(m), r(m);
  for (std::size_t n = 0; n < m; ++n) {
    u[n] = samples[fit_idx[n]].u;
    uinv_pow[n] = ctx.one();
    r[n] = samples[fit_idx[n]].s;
  }
  std::vector<MPReal> uh(hold_idx.size()), uh_pow(hold_idx.size()), rh(hold_idx.size());
  for (std::size_t n = 0; n < hold_idx.size(); ++n) {
    uh[n] = samples[hold_idx[n]].u;
    uh_pow[n] = ctx.one();
    rh[n] = samples[hold_idx[n]].s;
  }

  detail::VandermondeQr qr_full;
  qr_full.build(u, j_max, ctx);
  std::vector<MPReal> ua, ub;
  std::vector<std::size_t> ia, ib;
  for (std::size_t n = 0; n < m; ++n)
    (n % 2 == 0 ? ia : ib).push_back(n);
  for (auto n : ia) ua.push_back(u[n]);
  for (auto n : ib) ub.push_back(u[n]);
  unsigned j_half = std::min<unsigned>(j_max, static_cast<unsigned>(std::min(ua.size(), ub.size())) - 2);
  detail::VandermondeQr qr_a, qr_b;
  qr_a.build(ua, j_half, ctx);
  qr_b.build(ub, j_half, ctx);

  FitReport report;
  BigInt prior_denom = 1;
  std::vector<MPReal> y(m), ya(ia.size()), yb(ib.size());
  for (unsigned k = 0; k <= k_max; ++k) {
    for (std::size_t n = 0; n < m; ++n) y[n] = r[n] / uinv_pow[n];  // r * u^k
    for (std::size_t n = 0; n < ia.size(); ++n) ya[n] = y[ia[n]];
    for (std::size_t n = 0; n < ib.size(); ++n) yb[n] = y[ib[n]];

    unsigned n_cols = j_max - k + 1;
    unsigned n_cols_half = std::min(n_cols, j_half + 1);
    MPReal c_full = qr_full.solve(y, n_cols, ctx)[0];
    MPReal c_a = qr_a.solve(ya, n_cols_half, ctx)[0];
    MPReal c_b = qr_b.solve(yb, n_cols_half, ctx)[0];

    // The split halves see the noise but share the tail-truncation bias;
    // probe that bias with shallower fits and take the estimate spread.
    MPReal bias_probe = ctx.zero();
    for (unsigned drop : {3u, 6u}) {
      if (n_cols <= drop + 1) break;
      MPReal moved = abs(c_full - qr_full.solve(y, n_cols - drop, ctx)[0]);
      if (moved > bias_probe) bias_probe = moved;
    }

    MPReal interval = 8 * (abs(c_full - c_a) + abs(c_full - c_b)) + 4 * bias_probe +
                      pow(samples.back().u, k) * ctx.pow10(10 - static_cast<long>(wp));

    unsigned long smooth_bound = 2UL * k + 3;
    std::optional<detail::ReconstructionHit> hit =
        detail::reconstruct_cf(c_full, interval, smooth_bound, opts.gap_min_log10);
    if (!hit) {
      BigInt prior = prior_denom;
      if (opts.prior_denoms && k < opts.prior_denoms->size())
        prior = (*opts.prior_denoms)[k];
      hit = detail::reconstruct_near_prior(c_full, interval, smooth_bound, prior,
                                           opts.smooth_multiplier_bound);
    }
    if (!hit)
      throw ReconstructionError(
          "peel_constants: no (2k+3)-smooth rational within the confidence interval at k=" +
          std::to_string(k) + "; estimate " + c_full.str(std::min(wp, 40u)) +
          ", interval " + interval.str(6));

    CoefficientEvidence ev;
    ev.k = k;
    ev.estimate = c_full.str(std::min(wp, 40u));
    ev.interval = interval.str(6);
    ev.value = hit->value;
    ev.gap_log10 = hit->gap_log10;
    ev.used_prior = hit->used_prior;
    report.evidence.push_back(ev);
    report.constants.push_back(hit->value);
    prior_denom = denominator(hit->value);

    MPReal cexact = ctx.real(hit->value);
    for (std::size_t n = 0; n < m; ++n) {
      r[n] -= cexact * uinv_pow[n];
      uinv_pow[n] /= u[n];
    }
    for (std::size_t n = 0; n < hold_idx.size(); ++n) {
      rh[n] -= cexact * uh_pow[n];
      uh_pow[n] /= uh[n];
    }
  }

  report.max_holdout_residual = ctx.zero();
  for (std::size_t n = 0; n < hold_idx.size(); ++n) {
    report.holdout_residuals.emplace_back(to_long(uh[n]), abs(rh[n]));
    if (abs(rh[n]) > report.max_holdout_residual)
      report.max_holdout_residual = abs(rh[n]);
  }
  return report;
}

inline std::vector<BigRational> peel_constants(
    const std::vector<ResidualSample>& samples, unsigned k_max,
    const std::optional<std::vector<BigInt>>& prior_denoms = std::nullopt) {
  PeelOptions opts;
  opts.prior_denoms = prior_denoms;
  return peel_constants_report(samples, k_max, opts).constants;
}

// Out-of-sample check at odd u (x = 1/2): the fit never saw x != 0, so this
// exercises the full polynomials, not just their constant terms.
inline MPReal odd_u_validation(const PolyTable& table, long u_min, long u_max,
                               unsigned n_points, const PrecisionContext& ctx,
                               unsigned threads = 0) {
  if (!table.has_constants()) throw DomainError("odd_u_validation: table lacks constants");
  std::vector<long> us;
  long lo = u_min + 1 + (u_min % 2 == 0 ? 0 : 1);
  if (lo % 2 == 0) ++lo;
  for (unsigned i = 0; i < n_points; ++i) {
    long u = lo + 2 * std::lround(double(i) * (u_max - 1 - lo) / 2.0 /
                                  std::max(1u, n_points - 1));
    if (u % 2 == 0) ++u;
    if (us.empty() || u > us.back()) us.push_back(u);
  }
  auto polys = table.polys();
  std::vector<MPReal> res(us.size());
  parallel_for(us.size(), threads, [&](std::size_t i) {
    MPReal uu = ctx.real(us[i]);
    ResidualSample s = s_of_u(uu, ctx);
    res[i] = abs(s.s - s_predicted(uu, polys, ctx));
  });
  MPReal worst = ctx.zero();
  for (const auto& v : res)
    if (v > worst) worst = v;
  return worst;
}

// ---- asymptotic constants ---------------------------------------------------

struct PhaseAmplitude {
  MPReal theta;  // in (-pi, pi]
  MPReal amp;    // > 0
};

// Invert the local sinusoid model P(x) ~ A sin(theta - 2 pi x) near x = 0:
// A sin(theta) = -P''(0)/(2 pi)^2, A cos(theta) = -P'(0)/(2 pi).
inline PhaseAmplitude phase_amplitude_from(const MPReal& p_prime, const MPReal& p_second,
                                           const PrecisionContext& ctx) {
  ctx.activate();
  MPReal tp = ctx.two_pi();
  MPReal s = -p_second / (tp * tp);
  MPReal c = -p_prime / tp;
  if (s == 0 && c == 0) throw DegenerateError("phase_amplitude: both derivatives vanish");
  return {atan2(s, c), hypot(s, c)};
}

// Phase/amplitude of P_k from the exact rational derivative pair; no Hurwitz
// sampling involved.
inline PhaseAmplitude phase_amplitude(unsigned k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("phase_amplitude: requires k >= 1");
  auto pv = p_prime_values(k);
  return phase_amplitude_from(ctx.real(pv[k].first), ctx.real(pv[k].second), ctx);
}

// C and R with a per-digit stability claim from the two top k-windows.
struct ConstantsEstimate {
  MPReal c;
  MPReal r;
  long stable_digits = 0;
  std::pair<unsigned, unsigned> k_window;
};

namespace detail {

// Core of extract_CR, shared with the synthetic-inverse tests: pts[i] holds
// the phase/amplitude of P_{k_lo + i}.
inline ConstantsEstimate fit_phase_sequence(const std::vector<PhaseAmplitude>& pts,
                                            unsigned k_lo, const PrecisionContext& ctx) {
  if (pts.size() < 21) throw DomainError("extract_CR: requires k_hi >= k_lo + 20");
  unsigned k_hi = k_lo + static_cast<unsigned>(pts.size()) - 1;
  MPReal tp = ctx.two_pi();
  MPReal edge = ctx.real(1L) / 1000;

  // unwrapped consecutive phase differences, each reduced into (0, 2 pi)
  std::vector<MPReal> diffs(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    MPReal d = pts[i + 1].theta - pts[i].theta;
    while (d <= 0) d += tp;
    while (d > tp) d -= tp;
    if (d < edge || d > tp - edge)
      throw UnwrapError("extract_CR: consecutive phase difference too close to 0 or 2 pi at k=" +
                        std::to_string(k_lo + i));
    diffs[i] = d;
  }
  // amplitude ratios r_k = A_{k+1} / (A_k (k + 1/2)) -> R^2
  std::vector<MPReal> ratios(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    MPReal kk = ctx.real(static_cast<long>(k_lo + i));
    ratios[i] = pts[i + 1].amp / (pts[i].amp * (kk + ctx.one() / 2));
  }

  auto window_mean = [&](const std::vector<MPReal>& v, std::size_t lo, std::size_t hi) {
    MPReal acc = ctx.zero();
    for (std::size_t i = lo; i < hi; ++i) acc += v[i];
    return acc / static_cast<long>(hi - lo);
  };

  // windows over diff indices (diff i couples k_lo+i and k_lo+i+1)
  std::size_t nd = diffs.size();
  std::size_t w = std::min<std::size_t>(20, nd / 2);
  std::size_t b_lo = nd - w, a_lo = nd - 2 * w;
  MPReal c_b = window_mean(diffs, b_lo, nd) / 2;
  MPReal c_a = window_mean(diffs, a_lo, nd - w) / 2;
  MPReal r_b = sqrt(window_mean(ratios, b_lo, nd));
  MPReal r_a = sqrt(window_mean(ratios, a_lo, nd - w));

  auto digits_agreeing = [&](const MPReal& x, const MPReal& y) -> long {
    MPReal d = abs(x - y);
    if (d == 0) return static_cast<long>(ctx.digits());
    long n = to_long(floor(-log10(d)));
    return std::min<long>(n, static_cast<long>(ctx.digits()));
  };

  ConstantsEstimate est;
  est.c = c_b;
  est.r = r_b;
  est.stable_digits = std::min(digits_agreeing(c_a, c_b), digits_agreeing(r_a, r_b));
  est.k_window = {k_lo + static_cast<unsigned>(b_lo), k_hi};
  if (est.stable_digits < 1)
    throw PrecisionError("extract_CR: windows disagree on every digit");
  if (!(est.c > 1 && est.c < ctx.real(12L) / 10))
    throw PrecisionError("extract_CR: C outside the sanity corridor (1, 1.2): " + est.c.str(12));
  if (!(est.r > ctx.one() / 2 && est.r < ctx.real(55L) / 100))
    throw PrecisionError("extract_CR: R outside the sanity corridor (0.5, 0.55): " + est.r.str(12));
  return est;
}

}  // namespace detail

// Extract C and R from the rational derivative data P_k'(0), P_k''(0) over
// k in [k_lo, k_hi]. Corrections fall off like (2 pi R^2)^{-k}, so plain
// tail-window averaging of theta_{k+1} - theta_k = 2C (mod 2 pi) and of the
// amplitude ratios converges geometrically.
inline ConstantsEstimate extract_CR(unsigned k_lo, unsigned k_hi,
                                    const PrecisionContext& ctx) {
  if (k_lo < 1 || k_hi < k_lo + 20)
    throw DomainError("extract_CR: requires 1 <= k_lo and k_hi >= k_lo + 20");
  auto pv = p_prime_values(k_hi);
  std::vector<PhaseAmplitude> pts;
  pts.reserve(k_hi - k_lo + 1);
  for (unsigned k = k_lo; k <= k_hi; ++k)
    pts.push_back(phase_amplitude_from(ctx.real(pv[k].first), ctx.real(pv[k].second), ctx));
  return detail::fit_phase_sequence(pts, k_lo, ctx);
}

// Conjectured amplitude R^{2k+1} Gamma(k + 1/2) / sqrt(2 pi).
inline MPReal conjectured_amplitude(unsigned k, const MPReal& r, const PrecisionContext& ctx) {
  return pow(r, 2 * k + 1) * gamma_half(k, ctx) / ctx.sqrt_two_pi();
}

// Max over the grid of |P_k(x)/A_k - sin((2k+1) C - 2 pi x)|; the conjecture
// puts this at O(exp(-k log(2 pi R^2))).
inline MPReal conjecture_residual(const PolyTable& table, unsigned k,
                                  const std::vector<MPReal>& x_grid, const MPReal& c,
                                  const MPReal& r, const PrecisionContext& ctx) {
  ctx.activate();
  if (k > table.k_max) throw DomainError("conjecture_residual: k beyond assembled table");
  RationalPolynomial pk = table.poly(k);
  MPReal amp = conjectured_amplitude(k, r, ctx);
  MPReal worst = ctx.zero();
  for (const auto& x : x_grid) {
    MPReal dev = abs(pk.eval(x, ctx) / amp - sin((2 * k + 1) * c - ctx.two_pi() * x));
    if (dev > worst) worst = dev;
  }
  return worst;
}

}  // namespace rpolylog
