#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>
#include <utility>

#include "rpolylog/errors.hpp"

namespace rpolylog {

// Arbitrary-precision scalar types. MPReal carries its own precision; results
// of arithmetic inherit the highest operand precision, so any computation whose
// leaves were created at working precision stays at working precision.
using MPReal =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

// Decimal working-precision contract: results are quoted to `digits`, all
// internal arithmetic carries `digits + guard` decimal digits. Immutable and
// freely shareable across threads.
class PrecisionContext {
 public:
  explicit PrecisionContext(unsigned digits, unsigned guard = 20)
      : digits_(digits), guard_(guard) {
    if (digits_ < 30) throw DomainError("PrecisionContext: digits must be >= 30");
    if (guard_ < 10) throw DomainError("PrecisionContext: guard must be >= 10");
  }

  unsigned digits() const { return digits_; }
  unsigned guard() const { return guard_; }
  unsigned work_digits() const { return digits_ + guard_; }

  PrecisionContext with_digits(unsigned d) const { return PrecisionContext(d, guard_); }
  PrecisionContext doubled() const { return PrecisionContext(2 * digits_, guard_); }

  // Align the process-default precision with this context. Boost's et_off
  // entry points set/restore the process-wide default around each call; if the
  // resting default differs from the working precision, a concurrent restore
  // exposes another thread's in-flight temporaries to the wrong precision.
  // Keeping resting == working makes those transitions no-ops. Consequence:
  // concurrent batches must share one working precision.
  void activate() const { MPReal::default_precision(work_digits()); }

  // All conversions go through raw mpfr set calls on a pre-sized target: the
  // boost (value, digits10) constructor routes number-to-number conversions
  // through the global default precision and silently truncates.
  MPReal real(long v) const {
    MPReal x(0, work_digits());
    mpfr_set_si(x.backend().data(), v, MPFR_RNDN);
    return x;
  }
  MPReal real(unsigned long v) const {
    MPReal x(0, work_digits());
    mpfr_set_ui(x.backend().data(), v, MPFR_RNDN);
    return x;
  }
  MPReal real(int v) const { return real(static_cast<long>(v)); }
  MPReal real(unsigned v) const { return real(static_cast<unsigned long>(v)); }
  MPReal real(double v) const {
    MPReal x(0, work_digits());
    mpfr_set_d(x.backend().data(), v, MPFR_RNDN);
    return x;
  }
  MPReal real(const BigInt& v) const {
    MPReal x(0, work_digits());
    mpfr_set_z(x.backend().data(), v.backend().data(), MPFR_RNDN);
    return x;
  }
  MPReal real(const BigRational& v) const {
    MPReal x(0, work_digits());
    mpfr_set_q(x.backend().data(), v.backend().data(), MPFR_RNDN);
    return x;
  }
  MPReal real(std::string_view s) const {
    MPReal x(0, work_digits());
    if (mpfr_set_str(x.backend().data(), std::string(s).c_str(), 10, MPFR_RNDN) != 0)
      throw DomainError("PrecisionContext::real: unparseable number literal");
    return x;
  }

  MPReal zero() const { return real(0L); }
  MPReal one() const { return real(1L); }

  MPReal pi() const {
    MPReal x(0, work_digits());
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
  }
  MPReal two_pi() const { return 2 * pi(); }
  MPReal sqrt_pi() const { return sqrt(pi()); }
  MPReal sqrt_two_pi() const { return sqrt(two_pi()); }
  MPReal log10_e() const { return 1 / log(real(10L)); }

  // 10^e at working precision.
  MPReal pow10(long e) const {
    MPReal t = real(10L);
    if (e >= 0) return pow(t, static_cast<unsigned long>(e));
    return 1 / pow(t, static_cast<unsigned long>(-e));
  }
  MPReal eps() const { return pow10(-static_cast<long>(digits_)); }
  MPReal work_eps() const { return pow10(-static_cast<long>(work_digits())); }

  friend bool operator==(const PrecisionContext& a, const PrecisionContext& b) {
    return a.digits_ == b.digits_ && a.guard_ == b.guard_;
  }

 private:
  unsigned digits_;
  unsigned guard_;
};

// A zero with the same mpfr precision as x.
inline MPReal zero_like(const MPReal& x) {
  MPReal z(x);
  z = 0;
  return z;
}

// pi at the same mpfr precision as x.
inline MPReal pi_like(const MPReal& x) {
  MPReal p(x);
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

inline long to_long(const MPReal& x) { return x.convert_to<long>(); }
inline double to_double(const MPReal& x) { return x.convert_to<double>(); }

// Exact conversion float -> rational (the float is a dyadic rational).
inline BigRational exact_rational(const MPReal& x) {
  BigRational q;
  mpfr_get_q(q.backend().data(), x.backend().data());
  return q;
}

inline std::string to_string(const MPReal& x, unsigned digits) {
  return x.str(digits);
}

}  // namespace rpolylog
