#pragma once

// Oracles used only by the tests. None of them goes through the library's
// prefix tables or polygamma code.

#include <mpfr.h>

#include <vector>

#include "gammalat/rational.hpp"
#include "gammalat/real.hpp"

namespace gammalat::oracle {

// Truncated power series in t: coefficients of t^0..t^(size-1).
using Series = std::vector<Rational>;

inline Series multiply(const Series& a, const Series& b) {
  Series out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1/a for a[0] != 0.
inline Series reciprocal(const Series& a) {
  Series out(a.size(), Rational(0));
  out[0] = 1 / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * out[k - i];
    out[k] = -acc / a[0];
  }
  return out;
}

// prod over shifts c of (c + t), truncated to `terms` coefficients.
inline Series linear_product(const std::vector<Rational>& shifts, std::size_t terms) {
  Series p(terms, Rational(0));
  p[0] = 1;
  for (const auto& c : shifts) {
    Series factor(terms, Rational(0));
    factor[0] = c;
    if (terms > 1) factor[1] = 1;
    p = multiply(p, factor);
  }
  return p;
}

// Leibniz: if Gamma(x + t) = Gamma(base + t) * F(t) then the coefficient of
// Gamma^(l)(base) in Gamma^(n)(x) is n!/l! * [t^(n-l)] F.
inline Rational leibniz_coefficient(const Series& f, unsigned n, unsigned ell) {
  return Rational(falling_ratio(n, ell)) * f[n - ell];
}

inline Rational plain_coefficient(unsigned n, unsigned ell, unsigned m) {
  std::vector<Rational> shifts;
  for (unsigned u = 1; u < m; ++u) shifts.emplace_back(u);
  return leibniz_coefficient(linear_product(shifts, n + 1), n, ell);
}

inline Rational plus_coefficient(unsigned n, unsigned ell, unsigned m, const Rational& kappa) {
  std::vector<Rational> shifts;
  for (unsigned u = 0; u < m; ++u) shifts.push_back(Rational(u) + kappa);
  return leibniz_coefficient(linear_product(shifts, n + 1), n, ell);
}

inline Rational minus_coefficient(unsigned n, unsigned ell, unsigned m, const Rational& kappa) {
  std::vector<Rational> shifts;
  for (unsigned u = 1; u <= m; ++u) shifts.push_back(kappa - Rational(u));
  return leibniz_coefficient(reciprocal(linear_product(shifts, n + 1)), n, ell);
}

inline Real mpfr_euler(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

inline Real mpfr_pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

// Gamma at a rational point; the argument is rounded to `bits` first, which
// perturbs the result by a relative O(2^-bits).
inline Real mpfr_gamma_at(const Rational& q, mpfr_prec_t bits) {
  Real x(q, bits);
  Real r(bits);
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real mpfr_digamma_at(const Rational& q, mpfr_prec_t bits) {
  Real x(q, bits);
  Real r(bits);
  mpfr_digamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace gammalat::oracle
