#include "gammalat/coeffs.hpp"

#include <algorithm>

#include "gammalat/error.hpp"

namespace gammalat {

const std::array<Rational, 7>& known_transcendental_shifts() {
  static const std::array<Rational, 7> shifts = {Rational(1, 6), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                                 Rational(2, 3), Rational(3, 4), Rational(5, 6)};
  return shifts;
}

Kappa Kappa::make(const Rational& value) {
  if (value <= 0 || value >= 1) throw Error(ErrorKind::InvalidKappa, "kappa " + to_string(value) + " is not in (0,1)");
  const auto& known = known_transcendental_shifts();
  return Kappa{value, std::find(known.begin(), known.end(), value) != known.end()};
}

void LatticeSpec::validate() const {
  if (family == FamilyKind::Plain && kappa) throw Error(ErrorKind::SpecMismatch, "plain family takes no kappa");
  if (family != FamilyKind::Plain && !kappa) throw Error(ErrorKind::SpecMismatch, "shifted family requires kappa");
  if (kappa && (kappa->value <= 0 || kappa->value >= 1)) {
    throw Error(ErrorKind::InvalidKappa, "kappa " + to_string(kappa->value) + " is not in (0,1)");
  }
  if (indices.empty()) throw Error(ErrorKind::SpecMismatch, "index set is empty");
  const long lowest = family == FamilyKind::Plain ? 1 : 0;
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] < lowest) {
      throw Error(ErrorKind::SpecMismatch, "index " + std::to_string(indices[r]) + " below " + std::to_string(lowest));
    }
    if (r > 0 && indices[r] <= indices[r - 1]) {
      throw Error(ErrorKind::NonIncreasingIndices, "indices must be strictly increasing");
    }
  }
}

ArgumentFamily LatticeSpec::arguments() const {
  switch (family) {
    case FamilyKind::Plain: return ArgumentFamily::plain();
    case FamilyKind::PlusShift: return ArgumentFamily::plus(kappa->value);
    case FamilyKind::MinusShift: return ArgumentFamily::minus(kappa->value);
  }
  return ArgumentFamily::plain();
}

Rational LatticeSpec::point(long m) const {
  switch (family) {
    case FamilyKind::Plain: return Rational(m);
    case FamilyKind::PlusShift: return Rational(m) + kappa->value;
    case FamilyKind::MinusShift: return -Rational(m) + kappa->value;
  }
  return 0;
}

std::size_t LatticeSpec::square_size(unsigned n) const { return family == FamilyKind::Plain ? n : n + 1; }

unsigned CoeffSystem::basis_order(std::size_t column) const {
  return static_cast<unsigned>(spec.family == FamilyKind::Plain ? column + 1 : column);
}

Rational rational_gamma_ratio(const Kappa& kappa, unsigned m, FamilyKind family) {
  Rational r = 1;
  if (family == FamilyKind::PlusShift) {
    for (unsigned u = 0; u < m; ++u) r *= Rational(u) + kappa.value;
  } else if (family == FamilyKind::MinusShift) {
    // Signed product taken literally: 1 / prod_{u=1}^{m} (-u + kappa).
    for (unsigned u = 1; u <= m; ++u) r /= kappa.value - u;
  } else {
    throw Error(ErrorKind::SpecMismatch, "gamma ratio is defined for shifted families only");
  }
  return r;
}

namespace {

void check_orders(unsigned n, unsigned ell) {
  if (ell > n) throw Error(ErrorKind::InvalidArgument, "ell must not exceed n");
}

}  // namespace

Rational t_plain(unsigned n, unsigned ell, unsigned m) {
  check_orders(n, ell);
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "plain lattice points start at m = 1");
  const auto table = elementary_prefix(ArgumentFamily::plain(), m - 1, n - ell);
  return Rational(factorial(m - 1) * falling_ratio(n, ell)) * table.at(m - 1, n - ell);
}

Rational t_plus(unsigned n, unsigned ell, unsigned m, const Kappa& kappa) {
  check_orders(n, ell);
  const auto table = elementary_prefix(ArgumentFamily::plus(kappa.value), m, n - ell);
  return rational_gamma_ratio(kappa, m, FamilyKind::PlusShift) * Rational(falling_ratio(n, ell)) *
         table.at(m, n - ell);
}

Rational t_minus(unsigned n, unsigned ell, unsigned m, const Kappa& kappa) {
  check_orders(n, ell);
  const auto table = homogeneous_prefix(ArgumentFamily::minus(kappa.value), m, n - ell);
  return rational_gamma_ratio(kappa, m, FamilyKind::MinusShift) * Rational(falling_ratio(n, ell)) *
         table.at(m, n - ell);
}

Rational coefficient(FamilyKind family, unsigned n, unsigned ell, unsigned m, const std::optional<Kappa>& kappa) {
  if (family != FamilyKind::Plain && !kappa) throw Error(ErrorKind::MissingKappa, "shifted family requires kappa");
  switch (family) {
    case FamilyKind::Plain: return t_plain(n, ell, m);
    case FamilyKind::PlusShift: return t_plus(n, ell, m, *kappa);
    case FamilyKind::MinusShift: return t_minus(n, ell, m, *kappa);
  }
  return 0;
}

CoeffSystem build_system(const LatticeSpec& spec, unsigned n) {
  spec.validate();
  const bool plain = spec.family == FamilyKind::Plain;
  if (plain && n == 0) throw Error(ErrorKind::SpecMismatch, "plain systems need n >= 1");
  const std::size_t k = spec.indices.size();
  if (k > spec.square_size(n)) {
    throw Error(ErrorKind::SpecMismatch, std::to_string(k) + " lattice points exceed the " +
                                             std::to_string(spec.square_size(n)) + " unknowns");
  }

  // One prefix table covers every row: row m needs the prefix of length
  // m - 1 (Plain) or m (shifted).
  const auto longest = static_cast<std::size_t>(spec.indices.back());
  const PolyKind kind = spec.family == FamilyKind::MinusShift ? PolyKind::Homogeneous : PolyKind::Elementary;
  const auto table = symmetric_prefix(kind, spec.arguments(), plain ? longest - 1 : longest, n);

  CoeffSystem sys;
  sys.spec = spec;
  sys.n = n;
  const std::size_t cols = plain ? n : n + 1;
  sys.matrix = RationalMatrix(k, cols);
  sys.unknowns_label = plain ? "Gamma^(1.." + std::to_string(n) + ")(1)"
                             : "Gamma^(0.." + std::to_string(n) + ")(" + to_string(spec.kappa->value) + ")";

  for (std::size_t r = 0; r < k; ++r) {
    const auto m = static_cast<unsigned>(spec.indices[r]);
    const Rational scale = plain ? Rational(factorial(m - 1)) : rational_gamma_ratio(*spec.kappa, m, spec.family);
    const std::size_t len = plain ? m - 1 : m;
    auto entry = [&](unsigned ell) -> Rational { return scale * Rational(falling_ratio(n, ell)) * table.at(len, n - ell); };
    for (std::size_t c = 0; c < cols; ++c) sys.matrix(r, c) = entry(sys.basis_order(c));
    if (plain) sys.constant_column.push_back(entry(0));
  }
  return sys;
}

}  // namespace gammalat
