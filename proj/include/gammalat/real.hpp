#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "gammalat/rational.hpp"

namespace gammalat {

// Arbitrary-precision binary float with value semantics. Every value carries
// its own precision; binary operations produce the larger operand precision.
// All rounding is to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  // Bits needed to carry `digits` significant decimal digits.
  static mpfr_prec_t bits_for_digits(int digits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(const Rational& rhs);
  Real& operator-=(const Rational& rhs);
  Real& operator*=(const Rational& rhs);
  Real& operator/=(const Rational& rhs);

  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // Scientific notation with `digits` significant digits, e.g. "-5.772e-1".
  std::string to_string(int digits) const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t value_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);
Real operator+(Real a, const Rational& b);
Real operator-(Real a, const Rational& b);
Real operator*(Real a, const Rational& b);
Real operator/(Real a, const Rational& b);
Real operator*(const Rational& a, Real b);

Real abs(Real x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real pow(const Real& x, unsigned long e);

// |a - b| / |b|, or |a - b| when |b| < 1.
Real residual(const Real& a, const Real& b);

// 10^(-digits) at the given precision.
Real ten_to_minus(int digits, mpfr_prec_t bits);

}  // namespace gammalat
