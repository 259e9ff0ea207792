#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gammalat/matrix.hpp"
#include "gammalat/rational.hpp"
#include "gammalat/sympoly.hpp"

namespace gammalat {

// Shifts whose Gamma value is provably transcendental.
const std::array<Rational, 7>& known_transcendental_shifts();

struct Kappa {
  Rational value;
  bool known_transcendental = false;

  // Throws InvalidKappa unless 0 < value < 1.
  static Kappa make(const Rational& value);
};

// Lattice points {m_r} (Plain), {m_r + kappa} (PlusShift) or {-m_r + kappa}
// (MinusShift), with m_1 < m_2 < ... strictly increasing.
struct LatticeSpec {
  FamilyKind family = FamilyKind::Plain;
  std::vector<long> indices;
  std::optional<Kappa> kappa;

  // Throws SpecMismatch (family/kappa, empty set, m out of range) or
  // NonIncreasingIndices.
  void validate() const;

  ArgumentFamily arguments() const;
  // The actual point q at which Gamma is evaluated for index m.
  Rational point(long m) const;
  // Number of rows a square system of derivative order n needs.
  std::size_t square_size(unsigned n) const;
};

// Exact linear system linking n-th derivatives at the lattice points to the
// basis derivatives at 1 (Plain) or kappa (shifted).
struct CoeffSystem {
  LatticeSpec spec;
  unsigned n = 0;
  RationalMatrix matrix;
  // Plain only: T_{n,0}(m_r).
  std::vector<Rational> constant_column;
  // "Gamma^(1..n)(1)" or "Gamma^(0..n)(kappa)".
  std::string unknowns_label;

  bool is_square() const { return matrix.is_square(); }
  // Derivative order of the basis value in matrix column c.
  unsigned basis_order(std::size_t column) const;
};

// Gamma(m + kappa) / Gamma(kappa) (PlusShift) or Gamma(-m + kappa) / Gamma(kappa)
// (MinusShift), as an exact rational.
Rational rational_gamma_ratio(const Kappa& kappa, unsigned m, FamilyKind family);

// (m-1)! (n!/l!) e_{n-l}(1, 1/2, ..., 1/(m-1)); m >= 1.
Rational t_plain(unsigned n, unsigned ell, unsigned m);

// Gamma(m+kappa)/Gamma(kappa) (n!/l!) e_{n-l}(1/kappa, ..., 1/(m-1+kappa)).
Rational t_plus(unsigned n, unsigned ell, unsigned m, const Kappa& kappa);

// Gamma(-m+kappa)/Gamma(kappa) (n!/l!) h_{n-l}(1/(1-kappa), ..., 1/(m-kappa)).
Rational t_minus(unsigned n, unsigned ell, unsigned m, const Kappa& kappa);

// Dispatches on family; kappa is ignored for Plain.
Rational coefficient(FamilyKind family, unsigned n, unsigned ell, unsigned m, const std::optional<Kappa>& kappa);

// Rows follow spec.indices. Fewer rows than the square size give a
// rectangular system; more rows, or n = 0 for Plain, throw SpecMismatch.
CoeffSystem build_system(const LatticeSpec& spec, unsigned n);

}  // namespace gammalat
