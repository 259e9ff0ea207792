#include "doctest.h"
#include "gammalat/density.hpp"
#include "gammalat/error.hpp"

using namespace gammalat;

TEST_CASE("prior bound") {
  CHECK(*beta_prior(4).exact == 0);
  CHECK(*beta_prior(6).exact == 0);
  CHECK(*beta_prior(25).exact == Rational(1, 10));
  CHECK(beta_prior(25).branch == "perfect-square");
  const auto seven = beta_prior(7);
  CHECK_FALSE(seven.is_exact());
  // (sqrt(7) - 5/2)/7
  CHECK(seven.decimal.substr(0, 12) == "2.0821615866");
  CHECK_THROWS_AS(beta_prior(0), Error);
}

TEST_CASE("fixed-n bounds") {
  CHECK(*beta_fixed_n(2, 1).exact == 0);
  CHECK(*beta_fixed_n(3, 10).exact == Rational(4, 5));
  CHECK(*beta_fixed_n(5, 3).exact == 0);
  CHECK(beta_fixed_n(5, 3).branch == "M<=n-1");
  CHECK(*beta_fixed_n_shifted(1, 0).exact == 0);
  CHECK(*beta_fixed_n_shifted(2, 9).exact == Rational(4, 5));
  CHECK(*beta_fixed_n_shifted(4, 2).exact == 0);
  CHECK_THROWS_AS(beta_fixed_n(1, 3), Error);
  CHECK_THROWS_AS(beta_fixed_n_shifted(0, 3), Error);
}

TEST_CASE("bivariate bounds") {
  CHECK(*beta_bivariate(10, 10).exact == Rational(1, 2));
  CHECK(*beta_bivariate(10, 9).exact == Rational(4, 9));
  CHECK(Rational(9 - 1, 2 * (10 - 1)) == 1 - Rational(10, 2 * 9));
  CHECK(*beta_bivariate(50, 10).exact == Rational(9, 98));
  CHECK(*beta_bivariate_shifted(4, 2).exact == Rational(1, 4));
  CHECK(*beta_bivariate_shifted(1, 0).exact == 0);
  CHECK(bivariate_oracle(LatticeSide::Plain, 10, 10) == Rational(1, 2));
  CHECK(bivariate_oracle(LatticeSide::Shifted, 4, 2) == Rational(1, 4));
  CHECK(bivariate_oracle(LatticeSide::Plain, 2, 1) == 0);
  CHECK_THROWS_AS(beta_bivariate(1, 3), Error);
}

TEST_CASE("branch continuity") {
  for (long N = 2; N <= 60; ++N) {
    const long M = N - 1;
    CHECK(ratio(M - 1, 2 * (N - 1)) == 1 - ratio(N, 2 * M));
    const long Ms = N - 1;
    CHECK(ratio(Ms, 2 * N) == 1 - ratio(N + 1, 2 * (Ms + 1)));
  }
}

TEST_CASE("range and monotonicity") {
  for (long n = 2; n <= 12; ++n) {
    Rational prev = -1;
    Rational prev_s = -1;
    for (long M = 1; M <= 40; ++M) {
      const Rational v = *beta_fixed_n(n, M).exact;
      const Rational s = *beta_fixed_n_shifted(n, M).exact;
      CHECK(v >= prev);
      CHECK(s >= prev_s);
      CHECK((v >= 0 && v <= 1));
      prev = v;
      prev_s = s;
    }
  }
  for (long M = 1; M <= 30; ++M) {
    Rational prev = 2;
    for (long N = 2; N <= 60; ++N) {
      const Rational v = *beta_bivariate(N, M).exact;
      CHECK(v <= prev);
      CHECK((v >= 0 && v <= 1));
      prev = v;
    }
  }
}

TEST_CASE("density grid") {
  const auto grid = density_grid(DensityVariant::BivariatePlain, {2, 4}, {1, 3});
  CHECK(grid.size() == 9);
  for (const auto& row : grid) CHECK(row.agrees());
  CHECK(density_grid(DensityVariant::BivariateShifted, {3, 2}, {0, 4}).empty());
  const auto prior = density_grid(DensityVariant::PriorBetaN, {1, 30}, {});
  CHECK(prior.size() == 30);
  CHECK_FALSE(prior.front().oracle.has_value());
  for (const auto& row : density_grid(DensityVariant::FixedNShifted, {1, 6}, {0, 8})) CHECK(row.agrees());
  CHECK_THROWS_AS(density_grid(DensityVariant::BivariatePlain, {1, 3}, {1, 3}), Error);
}

TEST_CASE("asymptotic surrogate") {
  for (const long N : {10L, 100L, 200L}) {
    const Rational gap = abs(*beta_bivariate(N, N).exact - Rational(1, 2));
    CHECK(gap <= ratio(1, 2 * (N - 1)));
  }
}
