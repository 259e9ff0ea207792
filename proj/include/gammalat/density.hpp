#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammalat/rational.hpp"

namespace gammalat {

enum class DensityVariant { PriorBetaN, FixedNPlain, FixedNShifted, BivariatePlain, BivariateShifted };

std::string_view to_string(DensityVariant v) noexcept;
// prior | fixed-n | fixed-n-shifted | bivariate | bivariate-shifted
DensityVariant parse_density_variant(std::string_view text);

struct DensityParams {
  std::optional<long> N;
  std::optional<long> M;
  std::optional<long> n;
};

// A lower bound on a density of transcendental Gamma-derivative values.
// `exact` is empty only for the irrational branch of the prior bound, which
// is then carried by `decimal` alone.
struct DensityBound {
  DensityVariant variant = DensityVariant::PriorBetaN;
  DensityParams params;
  std::optional<Rational> exact;
  std::string decimal;  // 30 significant digits
  std::string branch;

  bool is_exact() const { return exact.has_value(); }
  // "num/den" when exact, else the decimal rendering.
  std::string value_string() const;
};

// max{0, sqrt(N) - 5/2} / N, N >= 1.
DensityBound beta_prior(long N);
// 1 - min{n-1, M}/M, n >= 2, M >= 1.
DensityBound beta_fixed_n(long n, long M);
// 1 - min{n, M+1}/(M+1), n >= 1, M >= 0.
DensityBound beta_fixed_n_shifted(long n, long M);
// (M-1)/[2(N-1)] if M <= N-1, else 1 - N/(2M); N >= 2, M >= 1.
DensityBound beta_bivariate(long N, long M);
// M/(2N) if M+1 <= N, else 1 - (N+1)/[2(M+1)]; N >= 1, M >= 0.
DensityBound beta_bivariate_shifted(long N, long M);

enum class LatticeSide { Plain, Shifted };

// Direct min-sum, no closed form:
//   Plain:   1 - sum_{n=2}^{N} min{n-1, M} / ((N-1) M)
//   Shifted: 1 - sum_{n=1}^{N} min{n, M+1} / (N (M+1))
Rational bivariate_oracle(LatticeSide side, long N, long M);

struct IntRange {
  long first = 0;
  long last = -1;

  bool empty() const { return last < first; }
  long size() const { return empty() ? 0 : last - first + 1; }
};

struct DensityRow {
  DensityBound bound;
  std::optional<Rational> oracle;  // absent for the prior bound

  bool agrees() const { return !oracle || (bound.exact && *bound.exact == *oracle); }
};

// Cartesian sweep, rows ordered by (first, second). The first range is N
// for the prior and bivariate variants and n for the fixed-n variants; the
// second range is M (ignored by the prior bound). Cells outside a variant's
// domain throw InvalidArgument.
std::vector<DensityRow> density_grid(DensityVariant variant, IntRange first, IntRange second);

}  // namespace gammalat
