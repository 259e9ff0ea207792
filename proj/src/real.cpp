#include "gammalat/real.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace gammalat {

namespace {

void widen(Real& a, mpfr_prec_t bits) {
  if (a.precision() < bits) mpfr_prec_round(a.get(), bits, MPFR_RNDN);
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

mpfr_prec_t Real::bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

Real& Real::operator+=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(const Rational& rhs) {
  mpfr_add_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Rational& rhs) {
  mpfr_sub_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Rational& rhs) {
  mpfr_mul_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Rational& rhs) {
  mpfr_div_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string out;
  if (mantissa.front() == '-') {
    out.push_back('-');
    mantissa.erase(0, 1);
  }
  out.push_back(mantissa.front());
  if (mantissa.size() > 1) {
    out.push_back('.');
    out.append(mantissa, 1, std::string::npos);
  }
  out += "e" + std::to_string(static_cast<long>(exponent) - 1);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }
Real operator+(Real a, const Rational& b) { return a += b; }
Real operator-(Real a, const Rational& b) { return a -= b; }
Real operator*(Real a, const Rational& b) { return a *= b; }
Real operator/(Real a, const Rational& b) { return a /= b; }
Real operator*(const Rational& a, Real b) { return b *= a; }

Real abs(Real x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, unsigned long e) {
  Real r(x.precision());
  mpfr_pow_ui(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real residual(const Real& a, const Real& b) {
  Real diff = abs(a - b);
  Real scale = abs(b);
  if (scale < Real(1L, scale.precision())) return diff;
  return diff / scale;
}

Real ten_to_minus(int digits, mpfr_prec_t bits) {
  Real r(10L, bits);
  mpfr_pow_si(r.get(), r.get(), -static_cast<long>(digits), MPFR_RNDN);
  return r;
}

}  // namespace gammalat
