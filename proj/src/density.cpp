#include "gammalat/density.hpp"

#include <algorithm>
#include <string>

#include "gammalat/error.hpp"
#include "gammalat/real.hpp"

namespace gammalat {

namespace {

constexpr int kDecimalDigits = 30;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

std::string decimal_of(const Rational& q) {
  return Real(q, Real::bits_for_digits(kDecimalDigits + 5)).to_string(kDecimalDigits);
}

DensityBound exact_bound(DensityVariant variant, DensityParams params, Rational value, std::string branch) {
  DensityBound b{variant, params, std::move(value), {}, std::move(branch)};
  b.decimal = decimal_of(*b.exact);
  return b;
}

}  // namespace

std::string_view to_string(DensityVariant v) noexcept {
  switch (v) {
    case DensityVariant::PriorBetaN: return "prior";
    case DensityVariant::FixedNPlain: return "fixed-n";
    case DensityVariant::FixedNShifted: return "fixed-n-shifted";
    case DensityVariant::BivariatePlain: return "bivariate";
    case DensityVariant::BivariateShifted: return "bivariate-shifted";
  }
  return "unknown";
}

DensityVariant parse_density_variant(std::string_view text) {
  for (auto v : {DensityVariant::PriorBetaN, DensityVariant::FixedNPlain, DensityVariant::FixedNShifted,
                 DensityVariant::BivariatePlain, DensityVariant::BivariateShifted}) {
    if (text == to_string(v)) return v;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown density variant '" + std::string(text) + "'");
}

std::string DensityBound::value_string() const { return exact ? to_string(*exact) : decimal; }

DensityBound beta_prior(long N) {
  require(N >= 1, "prior bound needs N >= 1");
  const DensityParams params{N, std::nullopt, std::nullopt};
  // sqrt(N) <= 5/2  <=>  N <= 25/4  <=>  N <= 6.
  if (N <= 6) return exact_bound(DensityVariant::PriorBetaN, params, Rational(0), "sqrt(N)<=5/2");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), Integer(N).get_mpz_t());
  if (root * root == N) {
    return exact_bound(DensityVariant::PriorBetaN, params, (Rational(root) - Rational(5, 2)) / N, "perfect-square");
  }
  const mpfr_prec_t bits = Real::bits_for_digits(kDecimalDigits + 10);
  Real value = (sqrt(Real(N, bits)) - Rational(5, 2)) / Rational(N);
  return DensityBound{DensityVariant::PriorBetaN, params, std::nullopt, value.to_string(kDecimalDigits),
                      "irrational"};
}

DensityBound beta_fixed_n(long n, long M) {
  require(n >= 2 && M >= 1, "fixed-n bound needs n >= 2 and M >= 1");
  const bool saturated = M <= n - 1;
  return exact_bound(DensityVariant::FixedNPlain, {std::nullopt, M, n}, 1 - ratio(std::min(n - 1, M), M),
                     saturated ? "M<=n-1" : "M>n-1");
}

DensityBound beta_fixed_n_shifted(long n, long M) {
  require(n >= 1 && M >= 0, "shifted fixed-n bound needs n >= 1 and M >= 0");
  const bool saturated = M + 1 <= n;
  return exact_bound(DensityVariant::FixedNShifted, {std::nullopt, M, n},
                     1 - ratio(std::min(n, M + 1), M + 1), saturated ? "M+1<=n" : "M+1>n");
}

DensityBound beta_bivariate(long N, long M) {
  require(N >= 2 && M >= 1, "bivariate bound needs N >= 2 and M >= 1");
  const DensityParams params{N, M, std::nullopt};
  if (M <= N - 1) return exact_bound(DensityVariant::BivariatePlain, params, ratio(M - 1, 2 * (N - 1)), "M<=N-1");
  return exact_bound(DensityVariant::BivariatePlain, params, 1 - ratio(N, 2 * M), "M>N-1");
}

DensityBound beta_bivariate_shifted(long N, long M) {
  require(N >= 1 && M >= 0, "shifted bivariate bound needs N >= 1 and M >= 0");
  const DensityParams params{N, M, std::nullopt};
  if (M + 1 <= N) return exact_bound(DensityVariant::BivariateShifted, params, ratio(M, 2 * N), "M+1<=N");
  return exact_bound(DensityVariant::BivariateShifted, params, 1 - ratio(N + 1, 2 * (M + 1)), "M+1>N");
}

Rational bivariate_oracle(LatticeSide side, long N, long M) {
  Integer sum = 0;
  if (side == LatticeSide::Plain) {
    require(N >= 2 && M >= 1, "plain oracle needs N >= 2 and M >= 1");
    for (long n = 2; n <= N; ++n) sum += std::min(n - 1, M);
    return 1 - ratio(sum, Integer(N - 1) * M);
  }
  require(N >= 1 && M >= 0, "shifted oracle needs N >= 1 and M >= 0");
  for (long n = 1; n <= N; ++n) sum += std::min(n, M + 1);
  return 1 - ratio(sum, Integer(N) * (M + 1));
}

namespace {

// Worst case: every cell not excluded by the per-n algebraic cap is counted
// as algebraic, cell by cell.
Rational fixed_n_oracle(LatticeSide side, long n, long M) {
  long algebraic = 0;
  long cells = 0;
  const long first = side == LatticeSide::Plain ? 1 : 0;
  const long cap = side == LatticeSide::Plain ? n - 1 : n;
  for (long m = first; m <= M; ++m, ++cells) {
    if (algebraic < cap) ++algebraic;
  }
  return 1 - ratio(algebraic, cells);
}

DensityRow grid_cell(DensityVariant variant, long a, long b) {
  switch (variant) {
    case DensityVariant::PriorBetaN: return {beta_prior(a), std::nullopt};
    case DensityVariant::FixedNPlain: return {beta_fixed_n(a, b), fixed_n_oracle(LatticeSide::Plain, a, b)};
    case DensityVariant::FixedNShifted:
      return {beta_fixed_n_shifted(a, b), fixed_n_oracle(LatticeSide::Shifted, a, b)};
    case DensityVariant::BivariatePlain: return {beta_bivariate(a, b), bivariate_oracle(LatticeSide::Plain, a, b)};
    case DensityVariant::BivariateShifted:
      return {beta_bivariate_shifted(a, b), bivariate_oracle(LatticeSide::Shifted, a, b)};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown density variant");
}

}  // namespace

std::vector<DensityRow> density_grid(DensityVariant variant, IntRange first, IntRange second) {
  std::vector<DensityRow> rows;
  if (variant == DensityVariant::PriorBetaN) {
    for (long a = first.first; a <= first.last; ++a) rows.push_back(grid_cell(variant, a, 0));
    return rows;
  }
  if (first.empty() || second.empty()) return rows;
  rows.reserve(static_cast<std::size_t>(first.size() * second.size()));
  for (long a = first.first; a <= first.last; ++a) {
    for (long b = second.first; b <= second.last; ++b) rows.push_back(grid_cell(variant, a, b));
  }
  return rows;
}

}  // namespace gammalat
