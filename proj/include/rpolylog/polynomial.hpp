#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rpolylog/mpcore.hpp"

namespace rpolylog {

// Dense polynomial over exact rationals, coefficients ascending in x.
// Canonical form: trailing coefficient nonzero; the zero polynomial has an
// empty coefficient vector and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> c) : c_(std::move(c)) { trim(); }
  RationalPolynomial(std::initializer_list<BigRational> c)
      : c_(c.begin(), c.end()) {
    trim();
  }

  static RationalPolynomial constant(const BigRational& v) {
    return RationalPolynomial(std::vector<BigRational>{v});
  }
  static RationalPolynomial monomial(const BigRational& v, unsigned deg) {
    std::vector<BigRational> c(deg + 1);
    c[deg] = v;
    return RationalPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigRational coeff(size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational leading() const { return c_.empty() ? BigRational(0) : c_.back(); }

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return RationalPolynomial(std::move(c));
  }
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return RationalPolynomial(std::move(c));
  }
  friend RationalPolynomial operator-(const RationalPolynomial& a) {
    std::vector<BigRational> c(a.c_);
    for (auto& v : c) v = -v;
    return RationalPolynomial(std::move(c));
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RationalPolynomial(std::move(c));
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const BigRational& s) {
    std::vector<BigRational> c(a.c_);
    for (auto& v : c) v *= s;
    return RationalPolynomial(std::move(c));
  }
  friend RationalPolynomial operator*(const BigRational& s, const RationalPolynomial& a) {
    return a * s;
  }

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.c_ == b.c_;
  }

  BigRational eval(const BigRational& x) const {
    BigRational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  MPReal eval(const MPReal& x, const PrecisionContext& ctx) const {
    ctx.activate();
    MPReal acc = ctx.zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + ctx.real(c_[i]);
    return acc;
  }

  RationalPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * BigRational(static_cast<long>(i));
    return RationalPolynomial(std::move(c));
  }

  // p(a x + b)
  RationalPolynomial compose_linear(const BigRational& a, const BigRational& b) const {
    RationalPolynomial acc;
    RationalPolynomial lin({b, a});
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(c_[i]);
    return acc;
  }
  RationalPolynomial shifted(long d) const {
    return compose_linear(BigRational(1), BigRational(d));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigRational> c_;
};

// Truncated series in 1/u with polynomial coefficients; coeffs[k] multiplies
// u^{-k}. All arithmetic truncates at the common order.
struct USeries {
  std::vector<RationalPolynomial> coeffs;
  unsigned order = 0;  // K: coeffs.size() == K + 1

  static USeries zero(unsigned k) {
    USeries s;
    s.order = k;
    s.coeffs.assign(k + 1, RationalPolynomial{});
    return s;
  }
  static USeries one(unsigned k) {
    USeries s = zero(k);
    s.coeffs[0] = RationalPolynomial::constant(BigRational(1));
    return s;
  }

  friend USeries operator+(const USeries& a, const USeries& b) {
    USeries r = zero(std::min(a.order, b.order));
    for (unsigned k = 0; k <= r.order; ++k) r.coeffs[k] = a.coeffs[k] + b.coeffs[k];
    return r;
  }
  friend USeries operator*(const USeries& a, const USeries& b) {
    USeries r = zero(std::min(a.order, b.order));
    for (unsigned i = 0; i <= r.order; ++i) {
      if (a.coeffs[i].is_zero()) continue;
      for (unsigned j = 0; i + j <= r.order; ++j) {
        if (b.coeffs[j].is_zero()) continue;
        r.coeffs[i + j] = r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
      }
    }
    return r;
  }

  // exp of a series with zero constant term: E_k = (1/k) sum_j j S_j E_{k-j}.
  USeries exp_series() const {
    if (!coeffs[0].is_zero()) throw DomainError("USeries::exp_series: constant term must vanish");
    USeries e = zero(order);
    e.coeffs[0] = RationalPolynomial::constant(BigRational(1));
    for (unsigned k = 1; k <= order; ++k) {
      RationalPolynomial acc;
      for (unsigned j = 1; j <= k; ++j)
        acc = acc + BigRational(static_cast<long>(j)) * (coeffs[j] * e.coeffs[k - j]);
      e.coeffs[k] = acc * BigRational(1, static_cast<long>(k));
    }
    return e;
  }

  // log of a series with constant term 1: L_k = E_k - (1/k) sum_{j<k} j L_j E_{k-j}.
  USeries log_series() const {
    if (!(coeffs[0] == RationalPolynomial::constant(BigRational(1))))
      throw DomainError("USeries::log_series: constant term must be 1");
    USeries l = zero(order);
    for (unsigned k = 1; k <= order; ++k) {
      RationalPolynomial acc;
      for (unsigned j = 1; j < k; ++j)
        acc = acc + BigRational(static_cast<long>(j)) * (l.coeffs[j] * coeffs[k - j]);
      l.coeffs[k] = coeffs[k] - acc * BigRational(1, static_cast<long>(k));
    }
    return l;
  }
};

}  // namespace rpolylog
