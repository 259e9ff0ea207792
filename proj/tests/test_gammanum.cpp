#include "doctest.h"
#include "gammalat/coeffs.hpp"
#include "gammalat/error.hpp"
#include "gammalat/gammanum.hpp"
#include "oracles.hpp"

using namespace gammalat;

namespace {

const PrecisionContext kCtx{60, 20};

// Relative (or absolute below 1) agreement to `digits` decimal digits.
bool close(const Real& a, const Real& b, int digits) { return residual(a, b) < ten_to_minus(digits, a.precision()); }

}  // namespace

TEST_CASE("precision context") {
  CHECK(kCtx.working_digits() == 80);
  CHECK(kCtx.default_tolerance() == ten_to_minus(40, kCtx.bits()));
  const PrecisionContext narrow{20, 20};
  CHECK(narrow.default_tolerance() == ten_to_minus(10, narrow.bits()));
  CHECK_THROWS_AS((PrecisionContext{19, 20}.validate()), Error);
}

TEST_CASE("Bernoulli numbers") {
  const auto b = bernoulli_even(6);
  CHECK(b[0] == Rational(1, 6));
  CHECK(b[1] == Rational(-1, 30));
  CHECK(b[2] == Rational(1, 42));
  CHECK(b[3] == Rational(-1, 30));
  CHECK(b[4] == Rational(5, 66));
  CHECK(b[5] == Rational(-691, 2730));
}

TEST_CASE("constants against MPFR") {
  const auto bits = kCtx.bits();
  CHECK(close(euler_gamma(kCtx), oracle::mpfr_euler(bits), 75));
  CHECK(close(pi(kCtx), oracle::mpfr_pi(bits), 75));
}

TEST_CASE("polygamma") {
  const auto bits = kCtx.bits();
  const Real g = oracle::mpfr_euler(bits);
  const Real p = oracle::mpfr_pi(bits);
  CHECK(close(polygamma(0, Rational(1), kCtx), -g, 75));
  CHECK(close(polygamma(1, Rational(1), kCtx), p * p / Rational(6), 75));
  Real ln2(2L, bits);
  ln2 = log(ln2);
  CHECK(close(polygamma(0, Rational(1, 2), kCtx), -g - Rational(2) * ln2, 75));
  for (const auto& q : {Rational(1, 3), Rational(7, 4), Rational(-5, 6), Rational(-13, 2)}) {
    CHECK(close(polygamma(0, q, kCtx), oracle::mpfr_digamma_at(q, bits), 70));
  }
  // psi''(1) = -2 zeta(3); zeta(3) from MPFR.
  Real z3(bits);
  mpfr_zeta_ui(z3.get(), 3, MPFR_RNDN);
  CHECK(close(polygamma(2, Rational(1), kCtx), Rational(-2) * z3, 75));
  try {
    polygamma(0, Rational(-3), kCtx);
    FAIL("expected PoleArgument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleArgument);
  }
}

TEST_CASE("gamma values") {
  const auto bits = kCtx.bits();
  const Real root_pi = sqrt(oracle::mpfr_pi(bits));
  CHECK(close(gamma_value(Rational(1, 2), kCtx), root_pi, 75));
  CHECK(close(gamma_value(Rational(5), kCtx), Real(24L, bits), 75));
  CHECK(close(gamma_value(Rational(-1, 2), kCtx), Rational(-2) * root_pi, 75));
  for (const auto& q : {Rational(1, 6), Rational(5, 6), Rational(13, 3), Rational(-7, 4), Rational(-23, 6)}) {
    CHECK(close(gamma_value(q, kCtx), oracle::mpfr_gamma_at(q, bits), 70));
  }
  CHECK_THROWS_AS(gamma_value(Rational(0), kCtx), Error);
}

TEST_CASE("gamma derivatives") {
  const auto bits = kCtx.bits();
  const Real g = oracle::mpfr_euler(bits);
  const Real p = oracle::mpfr_pi(bits);
  const auto at1 = gamma_derivatives(Rational(1), 2, kCtx);
  CHECK(at1.values.size() == 3);
  CHECK(close(at1.values[1], -g, 75));
  CHECK(close(at1.values[2], g * g + p * p / Rational(6), 75));
  const auto at2 = gamma_derivatives(Rational(2), 1, kCtx);
  CHECK(close(at2.values[1], Real(1L, bits) - g, 75));
  CHECK(gamma_derivatives(Rational(2, 3), 0, kCtx).values[0].sign() > 0);
}

TEST_CASE("low precision near the asymptotic limit") {
  // Shift targets at 20..40 digits sit close to the smallest reachable term.
  for (int digits = 20; digits <= 40; ++digits) {
    const PrecisionContext ctx{digits, 20};
    for (const auto& q : {Rational(-4, 5), Rational(1, 5), Rational(2, 7)}) {
      for (unsigned k = 0; k <= 3; ++k) {
        CHECK(residual(polygamma(k, q, ctx), polygamma(k, q, kCtx)) < ten_to_minus(digits, kCtx.bits()));
      }
      CHECK(residual(gamma_value(q, ctx), gamma_value(q, kCtx)) < ten_to_minus(digits, kCtx.bits()));
    }
  }
}

TEST_CASE("precision doubling") {
  const PrecisionContext wide{120, 20};
  for (const auto& q : {Rational(1), Rational(1, 4), Rational(-5, 3)}) {
    const auto lo = gamma_derivatives(q, 4, kCtx);
    const auto hi = gamma_derivatives(q, 4, wide);
    for (std::size_t i = 0; i < lo.values.size(); ++i) {
      CHECK(residual(lo.values[i], hi.values[i]) < ten_to_minus(60, hi.values[i].precision()));
    }
  }
}

TEST_CASE("verify_identity examples") {
  const auto flat = verify_identity(FamilyKind::Plain, 0, 5, std::nullopt, kCtx);
  CHECK(flat.pass);
  CHECK(close(flat.lhs, Real(24L, kCtx.bits()), 75));

  const auto second = verify_identity(FamilyKind::Plain, 2, 3, std::nullopt, kCtx);
  CHECK(second.pass);
  CHECK(second.rel_residual < ten_to_minus(40, kCtx.bits()));

  const auto half = Kappa::make(Rational(1, 2));
  const auto neg = verify_identity(FamilyKind::MinusShift, 0, 1, half, kCtx);
  CHECK(neg.pass);
  CHECK(close(neg.lhs, Rational(-2) * sqrt(oracle::mpfr_pi(kCtx.bits())), 75));

  CHECK_THROWS_AS(verify_identity(FamilyKind::MinusShift, 0, 1, std::nullopt, kCtx), Error);
}

TEST_CASE("recover_basis examples") {
  const auto bits = kCtx.bits();
  const auto plain = recover_basis({FamilyKind::Plain, {1, 2}, std::nullopt}, 2, kCtx);
  REQUIRE(plain.size() == 2);
  CHECK(close(plain[0], -oracle::mpfr_euler(bits), 70));

  const auto plus = recover_basis({FamilyKind::PlusShift, {0, 1}, Kappa::make(Rational(1, 2))}, 1, kCtx);
  REQUIRE(plus.size() == 2);
  CHECK(close(plus[0], sqrt(oracle::mpfr_pi(bits)), 70));

  CHECK_THROWS_AS(recover_basis({FamilyKind::Plain, {1}, std::nullopt}, 2, kCtx), Error);
}

TEST_CASE("recovered basis reproduces lattice derivatives") {
  const LatticeSpec spec{FamilyKind::MinusShift, {0, 2, 3, 5}, Kappa::make(Rational(1, 3))};
  const unsigned n = 3;
  const auto basis = recover_basis(spec, n, kCtx);
  const auto sys = build_system(spec, n);
  for (std::size_t r = 0; r < spec.indices.size(); ++r) {
    Real sum(kCtx.bits());
    for (std::size_t c = 0; c < basis.size(); ++c) sum += basis[c] * sys.matrix(r, c);
    const auto direct = gamma_derivatives(spec.point(spec.indices[r]), n, kCtx);
    CHECK(close(sum, direct.values[n], 40));
  }
}
