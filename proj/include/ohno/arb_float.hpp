#ifndef OHNO_ARB_FLOAT_HPP
#define OHNO_ARB_FLOAT_HPP

// Arbitrary-precision binary floating point backed by MPFR. Every value carries
// its own precision; binary operations round to the larger of the two.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ohno/rational.hpp"
#include "ohno/series.hpp"

namespace ohno {

struct Precision {
  long bits = 128;
  friend bool operator==(const Precision&, const Precision&) = default;
};

/// Guard bits added on top of a requested precision for internal work.
inline constexpr long kGuardBits = 32;

class ArbFloat {
 public:
  explicit ArbFloat(Precision p = Precision{64}) {
    mpfr_init2(v_, p.bits);
    mpfr_set_zero(v_, 1);
  }
  ArbFloat(const Rational& q, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  ArbFloat(long n, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  static ArbFloat from_string(const std::string& s, Precision p) {
    ArbFloat r(p);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw ParseError("bad decimal literal: " + s);
    return r;
  }

  ArbFloat(const ArbFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  ArbFloat(ArbFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  ArbFloat& operator=(const ArbFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ArbFloat& operator=(ArbFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~ArbFloat() { mpfr_clear(v_); }

  Precision precision() const { return Precision{static_cast<long>(mpfr_get_prec(v_))}; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits > 1 ? digits - 1 : 0, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }
  /// Significant digits matching the precision (bits / log2(10)).
  std::string to_string() const { return to_string(digits_for(precision())); }

  static int digits_for(Precision p) { return static_cast<int>(static_cast<double>(p.bits) / 3.3219280948873623); }

  friend ArbFloat operator+(const ArbFloat& a, const ArbFloat& b) {
    ArbFloat r(wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend ArbFloat operator-(const ArbFloat& a, const ArbFloat& b) {
    ArbFloat r(wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend ArbFloat operator*(const ArbFloat& a, const ArbFloat& b) {
    ArbFloat r(wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend ArbFloat operator/(const ArbFloat& a, const ArbFloat& b) {
    ArbFloat r(wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend ArbFloat operator*(const ArbFloat& a, const Rational& q) {
    ArbFloat r(a.precision());
    mpfr_mul_q(r.v_, a.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  friend ArbFloat operator-(const ArbFloat& a) {
    ArbFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  ArbFloat& operator+=(const ArbFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ArbFloat& operator-=(const ArbFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend bool operator<(const ArbFloat& a, const ArbFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const ArbFloat& a, const ArbFloat& b) { return b < a; }
  friend bool operator<=(const ArbFloat& a, const ArbFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const ArbFloat& a, const ArbFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend ArbFloat abs(const ArbFloat& a) {
    ArbFloat r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  static ArbFloat pi(Precision p) {
    ArbFloat r(p);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static ArbFloat log2(Precision p) {
    ArbFloat r(p);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
  }
  static ArbFloat euler_gamma(Precision p) {
    ArbFloat r(p);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
  }
  /// 2^e
  static ArbFloat pow2(long e, Precision p) {
    ArbFloat r(1L, p);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

 private:
  static Precision wider(const ArbFloat& a, const ArbFloat& b) {
    return Precision{std::max(static_cast<long>(mpfr_get_prec(a.v_)), static_cast<long>(mpfr_get_prec(b.v_)))};
  }

  mpfr_t v_;
};

template <>
struct ring_traits<ArbFloat> {
  static ArbFloat zero() { return ArbFloat(Precision{64}); }
  static ArbFloat one() { return ArbFloat(1L, Precision{64}); }
  static bool is_zero(const ArbFloat& v) { return v.is_zero(); }
  static std::string to_string(const ArbFloat& v) { return v.to_string(); }
};

}  // namespace ohno

#endif
