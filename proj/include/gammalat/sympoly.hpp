#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gammalat/rational.hpp"

namespace gammalat {

enum class FamilyKind { Plain, PlusShift, MinusShift };

std::string_view to_string(FamilyKind kind) noexcept;
// "plain" | "plus" | "minus"
FamilyKind parse_family(std::string_view text);

// The argument sequence x_1, x_2, ... used by one family of lattice points:
//   Plain       x_s = 1/s
//   PlusShift   x_s = 1/(s - 1 + kappa)
//   MinusShift  x_s = 1/(s - kappa)
struct ArgumentFamily {
  FamilyKind kind = FamilyKind::Plain;
  std::optional<Rational> kappa;

  static ArgumentFamily plain() { return {FamilyKind::Plain, std::nullopt}; }
  static ArgumentFamily plus(const Rational& k) { return {FamilyKind::PlusShift, k}; }
  static ArgumentFamily minus(const Rational& k) { return {FamilyKind::MinusShift, k}; }

  // Throws MissingKappa / InvalidKappa.
  void validate() const;

  // x_s for s >= 1.
  Rational x(std::size_t s) const;

  // [x_1, ..., x_len].
  std::vector<Rational> arguments(std::size_t len) const;
};

enum class PolyKind { Elementary, Homogeneous };

// Dense (prefix length j, degree v) table of e_v or h_v evaluated on the
// prefixes x^(j) = [x_1..x_j], for 0 <= j <= max_len and 0 <= v <= max_deg.
// Row j = 0 is the empty prefix.
class PrefixTable {
 public:
  PrefixTable(ArgumentFamily family, PolyKind kind, std::size_t max_len, std::size_t max_deg);

  const ArgumentFamily& family() const { return family_; }
  PolyKind kind() const { return kind_; }
  std::size_t max_len() const { return max_len_; }
  std::size_t max_deg() const { return max_deg_; }

  const Rational& at(std::size_t j, std::size_t v) const;
  Rational& at(std::size_t j, std::size_t v);

 private:
  ArgumentFamily family_;
  PolyKind kind_;
  std::size_t max_len_;
  std::size_t max_deg_;
  std::vector<Rational> values_;
};

// e_c(x^(j)) = e_c(x^(j-1)) + x_j e_{c-1}(x^(j-1)).
PrefixTable elementary_prefix(const ArgumentFamily& family, std::size_t max_len, std::size_t max_deg);

// h_c(x^(j)) = h_c(x^(j-1)) + x_j h_{c-1}(x^(j)).
PrefixTable homogeneous_prefix(const ArgumentFamily& family, std::size_t max_len, std::size_t max_deg);

PrefixTable symmetric_prefix(PolyKind kind, const ArgumentFamily& family, std::size_t max_len,
                             std::size_t max_deg);

inline constexpr std::size_t kElementaryBruteforceMaxLen = 20;
inline constexpr std::size_t kHomogeneousBruteforceMaxTerms = 1'000'000;

// Sum of all size-v subset products. Exponential; rejects lists longer than
// kElementaryBruteforceMaxLen with GuardExceeded.
Rational elementary_bruteforce(std::span<const Rational> xs, std::size_t v);

// Sum of all degree-v monomials with repetition. Rejects inputs with more than
// kHomogeneousBruteforceMaxTerms monomials with GuardExceeded.
Rational homogeneous_bruteforce(std::span<const Rational> xs, std::size_t v);

}  // namespace gammalat
