#include <vector>

#include "doctest.h"
#include "gammalat/error.hpp"
#include "gammalat/sympoly.hpp"

using namespace gammalat;

namespace {

const std::vector<ArgumentFamily> kFamilies = {ArgumentFamily::plain(), ArgumentFamily::plus(Rational(1, 3)),
                                               ArgumentFamily::minus(Rational(1, 2)),
                                               ArgumentFamily::minus(Rational(5, 6))};

}  // namespace

TEST_CASE("argument families") {
  CHECK(ArgumentFamily::plain().x(3) == Rational(1, 3));
  CHECK(ArgumentFamily::plus(Rational(1, 2)).x(1) == 2);
  CHECK(ArgumentFamily::plus(Rational(1, 2)).x(2) == Rational(2, 3));
  CHECK(ArgumentFamily::minus(Rational(1, 2)).x(2) == Rational(2, 3));
  CHECK(parse_family("minus") == FamilyKind::MinusShift);
  CHECK_THROWS_AS(parse_family("both"), Error);
}

TEST_CASE("elementary prefix examples") {
  const auto t = elementary_prefix(ArgumentFamily::plain(), 3, 3);
  CHECK(t.at(3, 1) == Rational(11, 6));
  CHECK(t.at(3, 2) == 1);
  CHECK(t.at(3, 3) == Rational(1, 6));
  CHECK(t.at(0, 2) == 0);
  CHECK(t.at(2, 0) == 1);
  CHECK_THROWS_AS(t.at(4, 0), Error);
}

TEST_CASE("homogeneous prefix examples") {
  const auto t = homogeneous_prefix(ArgumentFamily::minus(Rational(1, 2)), 2, 2);
  CHECK(t.at(2, 1) == Rational(8, 3));
  CHECK(t.at(2, 2) == Rational(52, 9));
  CHECK(t.at(0, 1) == 0);
  CHECK(t.at(1, 2) == 4);
}

TEST_CASE("kappa validation") {
  auto missing = [] { elementary_prefix(ArgumentFamily{FamilyKind::PlusShift, std::nullopt}, 2, 2); };
  auto bad = [] { homogeneous_prefix(ArgumentFamily::minus(Rational(1)), 2, 2); };
  try {
    missing();
    FAIL("expected MissingKappa");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingKappa);
  }
  try {
    bad();
    FAIL("expected InvalidKappa");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidKappa);
  }
}

TEST_CASE("brute force examples and guards") {
  const std::vector<Rational> a{1, Rational(1, 2)};
  CHECK(elementary_bruteforce(a, 2) == Rational(1, 2));
  CHECK(elementary_bruteforce({}, 0) == 1);
  const std::vector<Rational> third{Rational(1, 3)};
  CHECK(elementary_bruteforce(third, 2) == 0);

  const std::vector<Rational> two{2};
  const std::vector<Rational> pair{2, Rational(2, 3)};
  CHECK(homogeneous_bruteforce(two, 3) == 8);
  CHECK(homogeneous_bruteforce(pair, 1) == Rational(8, 3));
  CHECK(homogeneous_bruteforce({}, 2) == 0);
  CHECK(homogeneous_bruteforce({}, 0) == 1);

  const std::vector<Rational> long_list(21, Rational(1));
  CHECK_THROWS_AS(elementary_bruteforce(long_list, 2), Error);
  const std::vector<Rational> wide(30, Rational(1));
  CHECK_THROWS_AS(homogeneous_bruteforce(wide, 10), Error);
}

TEST_CASE("recurrence matches enumeration") {
  for (const auto& fam : kFamilies) {
    const auto xs = fam.arguments(8);
    const auto e = elementary_prefix(fam, 8, 8);
    const auto h = homogeneous_prefix(fam, 8, 8);
    for (std::size_t j = 0; j <= 8; ++j) {
      const std::span<const Rational> prefix(xs.data(), j);
      for (std::size_t v = 0; v <= 8; ++v) {
        CHECK(e.at(j, v) == elementary_bruteforce(prefix, v));
        CHECK(h.at(j, v) == homogeneous_bruteforce(prefix, v));
      }
    }
  }
}

TEST_CASE("e/h duality and positivity") {
  for (const auto& fam : kFamilies) {
    const auto e = elementary_prefix(fam, 8, 8);
    const auto h = homogeneous_prefix(fam, 8, 8);
    for (std::size_t j = 0; j <= 8; ++j) {
      for (std::size_t k = 1; k <= 8; ++k) {
        Rational sum = 0;
        for (std::size_t i = 0; i <= k; ++i) sum += (i % 2 ? -1 : 1) * e.at(j, i) * h.at(j, k - i);
        CHECK(sum == 0);
      }
      for (std::size_t v = 0; v <= 8; ++v) {
        CHECK(e.at(j, v) >= 0);
        CHECK(h.at(j, v) >= 0);
        if (v <= j) CHECK(e.at(j, v) > 0);
        if (j >= 1) CHECK(h.at(j, v) > 0);
      }
    }
  }
}
