#include "gammalat/sympoly.hpp"

#include <string>
#include <utility>

#include "gammalat/error.hpp"

namespace gammalat {

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Plain: return "plain";
    case FamilyKind::PlusShift: return "plus";
    case FamilyKind::MinusShift: return "minus";
  }
  return "unknown";
}

FamilyKind parse_family(std::string_view text) {
  if (text == "plain") return FamilyKind::Plain;
  if (text == "plus") return FamilyKind::PlusShift;
  if (text == "minus") return FamilyKind::MinusShift;
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(text) + "'");
}

void ArgumentFamily::validate() const {
  if (kind == FamilyKind::Plain) return;
  if (!kappa) throw Error(ErrorKind::MissingKappa, std::string(to_string(kind)) + " family requires kappa");
  if (*kappa <= 0 || *kappa >= 1) {
    throw Error(ErrorKind::InvalidKappa, "kappa " + to_string(*kappa) + " is not in (0,1)");
  }
}

Rational ArgumentFamily::x(std::size_t s) const {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "argument index starts at 1");
  const Rational idx(static_cast<unsigned long>(s));
  switch (kind) {
    case FamilyKind::Plain: return 1 / idx;
    case FamilyKind::PlusShift: return 1 / (idx - 1 + *kappa);
    case FamilyKind::MinusShift: return 1 / (idx - *kappa);
  }
  return 0;
}

std::vector<Rational> ArgumentFamily::arguments(std::size_t len) const {
  validate();
  std::vector<Rational> xs;
  xs.reserve(len);
  for (std::size_t s = 1; s <= len; ++s) xs.push_back(x(s));
  return xs;
}

PrefixTable::PrefixTable(ArgumentFamily family, PolyKind kind, std::size_t max_len, std::size_t max_deg)
    : family_(std::move(family)),
      kind_(kind),
      max_len_(max_len),
      max_deg_(max_deg),
      values_((max_len + 1) * (max_deg + 1)) {}

const Rational& PrefixTable::at(std::size_t j, std::size_t v) const {
  if (j > max_len_ || v > max_deg_) throw Error(ErrorKind::InvalidArgument, "prefix table index out of range");
  return values_[j * (max_deg_ + 1) + v];
}

Rational& PrefixTable::at(std::size_t j, std::size_t v) {
  if (j > max_len_ || v > max_deg_) throw Error(ErrorKind::InvalidArgument, "prefix table index out of range");
  return values_[j * (max_deg_ + 1) + v];
}

PrefixTable elementary_prefix(const ArgumentFamily& family, std::size_t max_len, std::size_t max_deg) {
  const auto xs = family.arguments(max_len);
  PrefixTable t(family, PolyKind::Elementary, max_len, max_deg);
  // Empty prefix: e_0 = 1, e_v = 0 for v > 0 (already zero-initialized).
  t.at(0, 0) = 1;
  for (std::size_t j = 1; j <= max_len; ++j) {
    const Rational& xj = xs[j - 1];
    t.at(j, 0) = 1;
    for (std::size_t c = 1; c <= max_deg; ++c) {
      t.at(j, c) = t.at(j - 1, c) + xj * t.at(j - 1, c - 1);
    }
  }
  return t;
}

PrefixTable homogeneous_prefix(const ArgumentFamily& family, std::size_t max_len, std::size_t max_deg) {
  const auto xs = family.arguments(max_len);
  PrefixTable t(family, PolyKind::Homogeneous, max_len, max_deg);
  t.at(0, 0) = 1;
  for (std::size_t j = 1; j <= max_len; ++j) {
    const Rational& xj = xs[j - 1];
    t.at(j, 0) = 1;
    // Ascending c so that h_{c-1}(x^(j)) is already final.
    for (std::size_t c = 1; c <= max_deg; ++c) {
      t.at(j, c) = t.at(j - 1, c) + xj * t.at(j, c - 1);
    }
  }
  return t;
}

PrefixTable symmetric_prefix(PolyKind kind, const ArgumentFamily& family, std::size_t max_len,
                             std::size_t max_deg) {
  return kind == PolyKind::Elementary ? elementary_prefix(family, max_len, max_deg)
                                      : homogeneous_prefix(family, max_len, max_deg);
}

namespace {

void subsets(std::span<const Rational> xs, std::size_t start, std::size_t remaining, const Rational& product,
             Rational& sum) {
  if (remaining == 0) {
    sum += product;
    return;
  }
  for (std::size_t i = start; i + remaining <= xs.size(); ++i) {
    subsets(xs, i + 1, remaining - 1, product * xs[i], sum);
  }
}

void multisets(std::span<const Rational> xs, std::size_t start, std::size_t remaining, const Rational& product,
               Rational& sum) {
  if (remaining == 0) {
    sum += product;
    return;
  }
  for (std::size_t i = start; i < xs.size(); ++i) {
    multisets(xs, i, remaining - 1, product * xs[i], sum);
  }
}

}  // namespace

Rational elementary_bruteforce(std::span<const Rational> xs, std::size_t v) {
  if (xs.size() > kElementaryBruteforceMaxLen) {
    throw Error(ErrorKind::GuardExceeded, "subset enumeration limited to " +
                                              std::to_string(kElementaryBruteforceMaxLen) + " arguments");
  }
  Rational sum = 0;
  if (v > xs.size()) return sum;
  subsets(xs, 0, v, Rational(1), sum);
  return sum;
}

Rational homogeneous_bruteforce(std::span<const Rational> xs, std::size_t v) {
  if (v == 0) return 1;
  if (xs.empty()) return 0;
  Integer terms;
  mpz_bin_uiui(terms.get_mpz_t(), xs.size() + v - 1, v);
  if (terms > static_cast<unsigned long>(kHomogeneousBruteforceMaxTerms)) {
    throw Error(ErrorKind::GuardExceeded, "multiset enumeration would visit " + terms.get_str() + " monomials");
  }
  Rational sum = 0;
  multisets(xs, 0, v, Rational(1), sum);
  return sum;
}

}  // namespace gammalat
