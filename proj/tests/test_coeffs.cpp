#include "doctest.h"
#include "gammalat/coeffs.hpp"
#include "gammalat/error.hpp"
#include "oracles.hpp"

using namespace gammalat;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("kappa classification") {
  CHECK(known_transcendental_shifts().size() == 7);
  CHECK(Kappa::make(Rational(3, 4)).known_transcendental);
  CHECK_FALSE(Kappa::make(Rational(1, 5)).known_transcendental);
  CHECK(kind_of([] { Kappa::make(Rational(0)); }) == ErrorKind::InvalidKappa);
  CHECK(kind_of([] { Kappa::make(Rational(1)); }) == ErrorKind::InvalidKappa);
}

TEST_CASE("rational gamma ratio") {
  const auto half = Kappa::make(Rational(1, 2));
  CHECK(rational_gamma_ratio(half, 1, FamilyKind::PlusShift) == Rational(1, 2));
  CHECK(rational_gamma_ratio(half, 0, FamilyKind::PlusShift) == 1);
  CHECK(rational_gamma_ratio(half, 0, FamilyKind::MinusShift) == 1);
  CHECK(rational_gamma_ratio(half, 1, FamilyKind::MinusShift) == -2);
  CHECK(rational_gamma_ratio(half, 2, FamilyKind::MinusShift) == Rational(4, 3));
}

TEST_CASE("t_plain examples") {
  CHECK(t_plain(1, 0, 2) == 1);
  CHECK(t_plain(1, 1, 2) == 1);
  CHECK(t_plain(2, 0, 3) == 2);
  CHECK(t_plain(2, 1, 3) == 6);
  CHECK(t_plain(2, 2, 3) == 2);
  CHECK(t_plain(3, 0, 1) == 0);
}

TEST_CASE("t_plus and t_minus examples") {
  const auto half = Kappa::make(Rational(1, 2));
  CHECK(t_plus(1, 0, 1, half) == 1);
  CHECK(t_plus(1, 1, 1, half) == Rational(1, 2));
  CHECK(t_plus(0, 0, 0, Kappa::make(Rational(2, 3))) == 1);
  CHECK(t_plus(2, 2, 3, Kappa::make(Rational(1, 4))) == Rational(45, 64));
  CHECK(t_minus(0, 0, 1, half) == -2);
  CHECK(t_minus(0, 0, 0, Kappa::make(Rational(1, 6))) == 1);
  CHECK(t_minus(1, 0, 1, half) == -4);
}

TEST_CASE("degenerate plain row and n = 0") {
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned ell = 0; ell <= n; ++ell) CHECK(t_plain(n, ell, 1) == (ell == n ? 1 : 0));
  }
  for (unsigned m = 1; m <= 10; ++m) CHECK(t_plain(0, 0, m) == Rational(factorial(m - 1)));
}

TEST_CASE("plain coefficients against product expansion") {
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned m = 1; m <= 6; ++m) {
      for (unsigned ell = 0; ell <= n; ++ell) CHECK(t_plain(n, ell, m) == oracle::plain_coefficient(n, ell, m));
    }
  }
}

TEST_CASE("shifted coefficients against power-series expansion") {
  for (const auto& k : known_transcendental_shifts()) {
    const auto kappa = Kappa::make(k);
    for (unsigned n = 0; n <= 4; ++n) {
      for (unsigned m = 0; m <= 4; ++m) {
        for (unsigned ell = 0; ell <= n; ++ell) {
          CHECK(t_plus(n, ell, m, kappa) == oracle::plus_coefficient(n, ell, m, k));
          CHECK(t_minus(n, ell, m, kappa) == oracle::minus_coefficient(n, ell, m, k));
        }
      }
    }
  }
}

TEST_CASE("build_system examples") {
  const auto sys = build_system({FamilyKind::Plain, {1, 2}, std::nullopt}, 2);
  CHECK(sys.matrix == RationalMatrix{{0, 1}, {2, 1}});
  CHECK(sys.constant_column == std::vector<Rational>{0, 0});
  CHECK(sys.is_square());

  const auto rect = build_system({FamilyKind::Plain, {1}, std::nullopt}, 2);
  CHECK(rect.matrix == RationalMatrix{{0, 1}});
  CHECK_FALSE(rect.is_square());

  const auto plus = build_system({FamilyKind::PlusShift, {0, 1}, Kappa::make(Rational(1, 2))}, 1);
  CHECK(plus.matrix == RationalMatrix{{0, 1}, {1, Rational(1, 2)}});
  CHECK(plus.constant_column.empty());
  CHECK(plus.basis_order(0) == 0);
}

TEST_CASE("lattice spec validation") {
  const auto half = Kappa::make(Rational(1, 2));
  CHECK(kind_of([&] { build_system({FamilyKind::Plain, {1, 2}, half}, 2); }) == ErrorKind::SpecMismatch);
  CHECK(kind_of([] { build_system({FamilyKind::MinusShift, {0, 1}, std::nullopt}, 1); }) == ErrorKind::SpecMismatch);
  CHECK(kind_of([] { build_system({FamilyKind::Plain, {0, 1}, std::nullopt}, 2); }) == ErrorKind::SpecMismatch);
  CHECK(kind_of([] { build_system({FamilyKind::Plain, {2, 2}, std::nullopt}, 2); }) ==
        ErrorKind::NonIncreasingIndices);
  CHECK(kind_of([] { build_system({FamilyKind::Plain, {1, 2, 3}, std::nullopt}, 2); }) == ErrorKind::SpecMismatch);
  const LatticeSpec minus{FamilyKind::MinusShift, {0, 2}, half};
  CHECK(minus.point(2) == Rational(-3, 2));
  CHECK(minus.square_size(3) == 4);
}
