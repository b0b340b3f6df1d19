#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rpolylog/polynomial.hpp"

namespace rpolylog {

namespace detail {

// Integer-cleared polynomial (sum c_i t^i) / den, den > 0. The series engine
// works in this form to keep gcd churn out of the convolution hot path; only
// finished coefficients are normalized.
struct ZPoly {
  std::vector<BigInt> c;
  BigInt den{1};

  bool is_zero() const { return c.empty(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) den = 1;
  }

  void normalize() {
    trim();
    if (c.empty()) return;
    BigInt g = den;
    for (const auto& v : c) {
      g = gcd(g, v);
      if (g == 1) return;
    }
    den /= g;
    for (auto& v : c) v /= g;
  }

  // += (num/den0) t^deg
  void add_term(const BigInt& num, const BigInt& den0, unsigned deg) {
    if (num == 0) return;
    BigInt g = gcd(den, den0);
    BigInt scale_self = den0 / g;  // multiply own numerators by this
    BigInt scale_term = den / g;
    if (scale_self != 1) {
      for (auto& v : c) v *= scale_self;
      den *= scale_self;
    }
    if (c.size() <= deg) c.resize(deg + 1);
    c[deg] += num * scale_term;
  }
};

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      mpz_addmul(r.c[i + j].backend().data(), a.c[i].backend().data(),
                 b.c[j].backend().data());
    }
  }
  r.den = a.den * b.den;
  return r;
}

// acc += m * p for integer m
inline void zpoly_add_scaled(ZPoly& acc, const ZPoly& p, const BigInt& m) {
  if (p.is_zero() || m == 0) return;
  BigInt g = gcd(acc.den, p.den);
  BigInt scale_self = p.den / g;
  BigInt scale_term = m * (acc.den / g);
  if (scale_self != 1) {
    for (auto& v : acc.c) v *= scale_self;
    acc.den *= scale_self;
  }
  if (acc.c.size() < p.c.size()) acc.c.resize(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i)
    mpz_addmul(acc.c[i].backend().data(), scale_term.backend().data(),
               p.c[i].backend().data());
}

// Substitute t = 2x + 1/2 and hand back exact rational coefficients in x.
inline RationalPolynomial zpoly_to_x(const ZPoly& p) {
  if (p.is_zero()) return {};
  size_t d = p.c.size() - 1;
  // (2x + 1/2)^i = sum_j C(i,j) 2^{2j-i} x^j; clear with 2^d.
  std::vector<BigInt> num(d + 1, BigInt(0));
  for (size_t i = 0; i <= d; ++i) {
    if (p.c[i] == 0) continue;
    for (size_t j = 0; j <= i; ++j) {
      BigInt term = p.c[i] * binomial(i, j) * int_pow(2UL, static_cast<unsigned long>(d + 2 * j - i));
      num[j] += term;
    }
  }
  BigInt den = p.den * int_pow(2UL, static_cast<unsigned long>(d));
  std::vector<BigRational> out(d + 1);
  for (size_t j = 0; j <= d; ++j) out[j] = BigRational(num[j], den);
  return RationalPolynomial(std::move(out));
}

// Shared table of the difference-polynomial series: S holds the logarithmic
// series coefficients in t (order k has the closed form
//   t^{k+1}/(k(k+1)) - t^k/(2k) + sum_n B_{2n}/(2n(2n-1)) C(k-1, 2n-2) t^{k-2n+1},
// the 1/u^k coefficient of t + (u + 1/2 - t) log(1 - t/u)
// + sum_n B_{2n}/(2n(2n-1)) (u - t)^{1-2n}), E = exp(S), and delta_x is E with
// t = 2x + 1/2. g is the scalar sequence exp(sum B_{2n} y^{2n-1}/(2n(2n-1))).
class DeltaTable {
 public:
  static DeltaTable& instance() {
    static DeltaTable t;
    return t;
  }

  void ensure(unsigned k_max) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_locked(k_max);
  }

  RationalPolynomial delta(unsigned k) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_locked(k);
    return delta_x_[k];
  }

  std::vector<RationalPolynomial> deltas(unsigned k_max) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_locked(k_max);
    return {delta_x_.begin(), delta_x_.begin() + k_max + 1};
  }

  BigRational g(unsigned k) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_g_locked(k);
    return g_[k];
  }

  std::vector<BigRational> gs(unsigned k_max) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_g_locked(k_max);
    return {g_.begin(), g_.begin() + k_max + 1};
  }

 private:
  ZPoly log_coeff(unsigned k) const {
    ZPoly s;
    if (k == 0) return s;
    s.add_term(BigInt(1), BigInt(static_cast<long>(k)) * static_cast<long>(k + 1), k + 1);
    s.add_term(BigInt(-1), BigInt(2L * static_cast<long>(k)), k);
    for (unsigned n = 1; 2 * n - 1 <= k; ++n) {
      BigRational q = bernoulli(2 * n) * BigRational(binomial(k - 1, 2 * n - 2),
                                                     BigInt(2L * n) * (2L * n - 1));
      s.add_term(numerator(q), denominator(q), k - 2 * n + 1);
    }
    s.normalize();
    return s;
  }

  void ensure_locked(unsigned k_max) {
    if (e_.empty()) {
      ZPoly one;
      one.c = {BigInt(1)};
      e_.push_back(one);
      s_.push_back(ZPoly{});
      delta_x_.push_back(RationalPolynomial::constant(BigRational(1)));
    }
    while (e_.size() <= k_max) {
      unsigned k = static_cast<unsigned>(e_.size());
      s_.push_back(log_coeff(k));
      ZPoly acc;
      for (unsigned j = 1; j <= k; ++j)
        zpoly_add_scaled(acc, zpoly_mul(s_[j], e_[k - j]), BigInt(static_cast<long>(j)));
      acc.den *= static_cast<long>(k);
      acc.normalize();
      e_.push_back(acc);
      delta_x_.push_back(zpoly_to_x(e_[k]));
    }
  }

  void ensure_g_locked(unsigned k_max) {
    if (g_.empty()) g_.push_back(BigRational(1));
    while (g_.size() <= k_max) {
      unsigned k = static_cast<unsigned>(g_.size());
      BigRational acc(0);
      for (unsigned j = 1; j <= k; j += 2) {
        // h_j = B_{j+1} / ((j+1) j) for odd j
        BigRational hj = bernoulli(j + 1) / BigRational(BigInt(static_cast<long>(j) + 1) *
                                                        static_cast<long>(j));
        acc += BigRational(static_cast<long>(j)) * hj * g_[k - j];
      }
      g_.push_back(acc / BigRational(static_cast<long>(k)));
    }
  }

  std::mutex mu_;
  std::vector<ZPoly> s_, e_;
  std::vector<RationalPolynomial> delta_x_;
  std::vector<BigRational> g_;
};

}  // namespace detail

// Difference polynomials Delta_0..Delta_K in x (Delta_0 = 1, deg Delta_k = 2k).
inline std::vector<RationalPolynomial> delta_table(unsigned k_max) {
  return detail::DeltaTable::instance().deltas(k_max);
}

// g_0..g_K, coefficients of exp(sum_{n>0} B_{2n} y^{2n-1}/(2n(2n-1))); equals
// Delta_k(-1/4).
inline std::vector<BigRational> g_sequence(unsigned k_max) {
  return detail::DeltaTable::instance().gs(k_max);
}

// The unique F with F(x+1) - F(x) = q(x) and F(0) = 0, assembled from
// Bernoulli polynomials: x^m maps to (B_{m+1}(x) - B_{m+1})/(m+1).
inline RationalPolynomial antidifference(const RationalPolynomial& q) {
  if (q.is_zero()) return {};
  size_t d = static_cast<size_t>(q.degree());
  std::vector<BigRational> out(d + 2);
  for (size_t m = 0; m <= d; ++m) {
    BigRational qm = q.coeff(m);
    if (qm == 0) continue;
    BigRational scale = qm / BigRational(static_cast<long>(m) + 1);
    for (size_t i = 1; i <= m + 1; ++i)
      out[i] += scale * BigRational(binomial(m + 1, i)) * detail::bernoulli_any(m + 1 - i);
  }
  return RationalPolynomial(std::move(out));
}

// (F_k'(0), F_k''(0)) for F_k = antidifference(Delta_k); these equal
// (P_k'(0), P_k''(0)) since the missing constant term has zero derivative.
// From the Bernoulli-polynomial form: F'(0) = sum_m c_m B_m and
// F''(0) = sum_{m>=1} c_m m B_{m-1} with c_m the coefficients of Delta_k.
inline std::vector<std::pair<BigRational, BigRational>> p_prime_values(unsigned k_max) {
  auto deltas = delta_table(k_max);
  std::vector<std::pair<BigRational, BigRational>> out(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) {
    BigRational d1(0), d2(0);
    const auto& c = deltas[k].coeffs();
    for (size_t m = 0; m < c.size(); ++m) {
      if (c[m] == 0) continue;
      d1 += c[m] * detail::bernoulli_any(m);
      if (m >= 1) d2 += c[m] * BigRational(static_cast<long>(m)) * detail::bernoulli_any(m - 1);
    }
    out[k] = {d1, d2};
  }
  return out;
}

namespace detail {

inline std::vector<unsigned long> primes_upto(unsigned long n) {
  std::vector<bool> sieve(n + 1, true);
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p <= n; ++p) {
    if (!sieve[p]) continue;
    out.push_back(p);
    for (unsigned long q = p * p; q <= n; q += p) sieve[q] = false;
  }
  return out;
}

// true iff v has no prime factor above `bound`
inline bool is_smooth(const BigInt& v, unsigned long bound) {
  BigInt r = abs(v);
  if (r <= 1) return true;
  for (unsigned long p : primes_upto(bound)) {
    BigInt pp(static_cast<long>(p));
    mpz_remove(r.backend().data(), r.backend().data(), pp.backend().data());
    if (r == 1) return true;
  }
  return r == 1;
}

}  // namespace detail

// Exact table of Delta_k, antidifferences F_k, and (optionally) the constant
// terms that complete P_k = F_k + P_k(0).
struct PolyTable {
  unsigned k_max = 0;
  std::vector<RationalPolynomial> deltas;
  std::vector<RationalPolynomial> antidiffs;
  std::vector<BigRational> constants;  // empty when unknown

  bool has_constants() const { return !constants.empty(); }
  RationalPolynomial poly(unsigned k) const {
    if (!has_constants()) throw DomainError("PolyTable: constants not assembled");
    return antidiffs[k] + RationalPolynomial::constant(constants[k]);
  }
  std::vector<RationalPolynomial> polys() const {
    std::vector<RationalPolynomial> out;
    out.reserve(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) out.push_back(poly(k));
    return out;
  }
};

// Build the table up to K with the given constant terms. Validates the
// structural facts: deg P_k = 2k+1 and every coefficient denominator
// (2k+3)-smooth, which a wrong constant destroys.
inline PolyTable assemble(unsigned k_max, const std::vector<BigRational>& constants) {
  if (constants.size() != k_max + 1)
    throw DomainError("assemble: need exactly K+1 constant terms");
  PolyTable t;
  t.k_max = k_max;
  t.deltas = delta_table(k_max);
  t.antidiffs.reserve(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) t.antidiffs.push_back(antidifference(t.deltas[k]));
  t.constants = constants;
  for (unsigned k = 0; k <= k_max; ++k) {
    RationalPolynomial p = t.poly(k);
    if (p.degree() != static_cast<int>(2 * k + 1))
      throw DomainError("assemble: deg P_k != 2k+1 at k=" + std::to_string(k));
    for (const auto& c : p.coeffs())
      if (!detail::is_smooth(denominator(c), 2UL * k + 3))
        throw SmoothnessError("assemble: P_" + std::to_string(k) +
                              " has a coefficient denominator with a prime factor > " +
                              std::to_string(2 * k + 3));
  }
  return t;
}

// Table without constants (deltas + antidifferences only).
inline PolyTable delta_antidiff_table(unsigned k_max) {
  PolyTable t;
  t.k_max = k_max;
  t.deltas = delta_table(k_max);
  t.antidiffs.reserve(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) t.antidiffs.push_back(antidifference(t.deltas[k]));
  return t;
}

// Relative deviation of Delta_k(x) from 2 Gamma(k) (2 pi)^{-(k+1)} sin(4 pi x - k pi/2);
// O(1/k) for large k, x in (-1, 1).
inline MPReal delta_sinusoid_check(unsigned k, const MPReal& x, const PrecisionContext& ctx) {
  ctx.activate();
  if (k < 10) throw DomainError("delta_sinusoid_check: requires k >= 10");
  if (!(x > -1 && x < 1)) throw DomainError("delta_sinusoid_check: requires x in (-1, 1)");
  RationalPolynomial dk = detail::DeltaTable::instance().delta(k);
  MPReal amp = 2 * ctx.real(factorial(k - 1)) / pow(ctx.two_pi(), k + 1);
  MPReal model = amp * sin(4 * ctx.pi() * x - k * ctx.pi() / 2);
  return abs(dk.eval(x, ctx) - model) / amp;
}

enum class Parity { Even, Odd };

// Relative residual of the resurgence relation for g: even targets
//   g_{2m} ~ -2 sum_{n=0}^{floor(m/2)} Gamma(2m-2n-1) g_{2n+1} / (2 pi i)^{2m-2n},
// odd targets g_{2m-1} with g_{2n} inside the sum. (2 pi i)^{even} is real, so
// the estimate is a real number.
inline MPReal resurgence_residual(unsigned m, Parity parity, const PrecisionContext& ctx) {
  ctx.activate();
  if (m < 2) throw DomainError("resurgence_residual: requires m >= 2");
  unsigned target_idx = (parity == Parity::Even) ? 2 * m : 2 * m - 1;
  auto g = g_sequence(target_idx);
  MPReal est = ctx.zero();
  for (unsigned n = 0; n <= m / 2; ++n) {
    const BigRational& gsrc = (parity == Parity::Even) ? g[2 * n + 1] : g[2 * n];
    MPReal term = ctx.real(factorial(2 * m - 2 * n - 2)) * ctx.real(gsrc) /
                  pow(ctx.two_pi(), 2 * (m - n));
    if ((m - n) % 2 == 1) term = -term;  // i^{2m-2n} = (-1)^{m-n}
    est += term;
  }
  est *= -2;
  MPReal target = ctx.real(g[target_idx]);
  return abs(target - est) / abs(target);
}

// ---- exact text serialization ----------------------------------------------
//
// One line per polynomial, coefficients ascending as canonical rational
// strings; `poly` lines are emitted alongside when constants are present.
//
//   polytable v1
//   K 3
//   delta 0: 1
//   antidiff 0: 0 1
//   const 0: -2/3
//   poly 0: -2/3 1

namespace detail {

inline std::string poly_line(const RationalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ' ';
    os << p.coeffs()[i].str();
  }
  return os.str();
}

inline RationalPolynomial parse_poly_line(const std::string& s) {
  std::istringstream is(s);
  std::vector<BigRational> c;
  std::string tok;
  while (is >> tok) c.emplace_back(tok);
  return RationalPolynomial(std::move(c));
}

}  // namespace detail

inline std::string polytable_to_text(const PolyTable& t) {
  std::ostringstream os;
  os << "polytable v1\n";
  os << "K " << t.k_max << "\n";
  for (unsigned k = 0; k <= t.k_max; ++k)
    os << "delta " << k << ": " << detail::poly_line(t.deltas[k]) << "\n";
  for (unsigned k = 0; k <= t.k_max; ++k)
    os << "antidiff " << k << ": " << detail::poly_line(t.antidiffs[k]) << "\n";
  if (t.has_constants()) {
    for (unsigned k = 0; k <= t.k_max; ++k)
      os << "const " << k << ": " << t.constants[k].str() << "\n";
    for (unsigned k = 0; k <= t.k_max; ++k)
      os << "poly " << k << ": " << detail::poly_line(t.poly(k)) << "\n";
  }
  return os.str();
}

inline PolyTable polytable_from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || line != "polytable v1")
    throw IOError("polytable: bad header");
  PolyTable t;
  bool have_k = false;
  std::vector<RationalPolynomial> polys;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "K") {
      ls >> t.k_max;
      have_k = true;
      t.deltas.resize(t.k_max + 1);
      t.antidiffs.resize(t.k_max + 1);
      polys.resize(t.k_max + 1);
      continue;
    }
    if (!have_k) throw IOError("polytable: K line must precede polynomial lines");
    unsigned k = 0;
    char colon = 0;
    ls >> k >> colon;
    if (colon != ':' || k > t.k_max) throw IOError("polytable: malformed line: " + line);
    std::string rest;
    std::getline(ls, rest);
    if (tag == "delta")
      t.deltas[k] = detail::parse_poly_line(rest);
    else if (tag == "antidiff")
      t.antidiffs[k] = detail::parse_poly_line(rest);
    else if (tag == "const") {
      if (t.constants.empty()) t.constants.resize(t.k_max + 1);
      std::istringstream rs(rest);
      std::string tok;
      rs >> tok;
      t.constants[k] = BigRational(tok);
    } else if (tag == "poly")
      polys[k] = detail::parse_poly_line(rest);
    else
      throw IOError("polytable: unknown tag: " + tag);
  }
  if (!have_k) throw IOError("polytable: missing K line");
  if (t.has_constants())
    for (unsigned k = 0; k <= t.k_max; ++k)
      if (!polys[k].is_zero() && !(polys[k] == t.poly(k)))
        throw IOError("polytable: poly line inconsistent with antidiff + const at k=" +
                      std::to_string(k));
  return t;
}

}  // namespace rpolylog
