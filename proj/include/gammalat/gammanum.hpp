#pragma once

#include <optional>
#include <vector>

#include "gammalat/coeffs.hpp"
#include "gammalat/rational.hpp"
#include "gammalat/real.hpp"

namespace gammalat {

// Results are computed at decimal_digits + guard_digits and reported at
// decimal_digits.
struct PrecisionContext {
  int decimal_digits = 60;
  int guard_digits = 20;

  static constexpr int kMinDigits = 20;

  // Throws InvalidArgument when decimal_digits < kMinDigits.
  void validate() const;
  int working_digits() const { return decimal_digits + guard_digits; }
  mpfr_prec_t bits() const { return Real::bits_for_digits(working_digits()); }
  // 10^-max(decimal_digits - 20, decimal_digits / 2); 1e-40 at 60 digits.
  Real default_tolerance() const;
};

// Exact even-index Bernoulli numbers B_2, B_4, ..., B_{2 count}. Shared
// cache; concurrent callers are safe.
std::vector<Rational> bernoulli_even(std::size_t count);

// pi from Machin's arctangent formula.
Real pi(const PrecisionContext& ctx);

// Euler-Mascheroni constant as -psi(1).
Real euler_gamma(const PrecisionContext& ctx);

// psi^(k)(q): reflection-free, via the recurrence
//   psi^(k)(z) = psi^(k)(z+1) + (-1)^(k+1) k! z^-(k+1)
// up to a large argument, then the asymptotic series. Throws PoleArgument
// for q in {0, -1, -2, ...}.
Real polygamma(unsigned k, const Rational& q, const PrecisionContext& ctx);

// Gamma(q) via Stirling's series at q + J and the exact rational product
// q (q+1) ... (q+J-1). Throws PoleArgument.
Real gamma_value(const Rational& q, const PrecisionContext& ctx);

struct GammaDerivatives {
  Rational point;
  unsigned order = 0;
  std::vector<Real> values;  // Gamma^(0..order)(point)
  PrecisionContext precision;
};

// Gamma^(j)(q) = Gamma(q) Y_j(psi(q), psi'(q), ..., psi^(j-1)(q)) for j <= n,
// using the complete Bell recurrence
//   Y_{j+1} = sum_{i=0}^{j} C(j, i) Y_{j-i} psi^(i).
GammaDerivatives gamma_derivatives(const Rational& q, unsigned n, const PrecisionContext& ctx);

struct VerificationReport {
  FamilyKind family = FamilyKind::Plain;
  unsigned n = 0;
  long m = 0;
  std::optional<Rational> kappa;
  Real lhs;
  Real rhs;
  Real abs_residual;
  Real rel_residual;
  Real tolerance;
  bool pass = false;
};

// Compares Gamma^(n) at the lattice point (computed directly) against the
// rational-coefficient expansion over the basis derivatives at 1 or kappa.
// pass <=> residual < tolerance, where the residual is relative unless
// |lhs| < 1. The default tolerance is ctx.default_tolerance().
VerificationReport verify_identity(FamilyKind family, unsigned n, long m, const std::optional<Kappa>& kappa,
                                   const PrecisionContext& ctx,
                                   const std::optional<Real>& tolerance = std::nullopt);

// Solves the square system of `spec` for the basis vector:
// Gamma^(1..n)(1) (Plain) or Gamma^(0..n)(kappa) (shifted), using the exact
// rational inverse applied to numerically evaluated lattice derivatives.
// Throws NotSquare for rectangular systems.
std::vector<Real> recover_basis(const LatticeSpec& spec, unsigned n, const PrecisionContext& ctx);

}  // namespace gammalat
