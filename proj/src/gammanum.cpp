#include "gammalat/gammanum.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "gammalat/error.hpp"
#include "gammalat/linalg.hpp"

namespace gammalat {

void PrecisionContext::validate() const {
  if (decimal_digits < kMinDigits) {
    throw Error(ErrorKind::InvalidArgument,
                "precision must be at least " + std::to_string(kMinDigits) + " digits");
  }
  if (guard_digits < 0) throw Error(ErrorKind::InvalidArgument, "guard digits must be nonnegative");
}

Real PrecisionContext::default_tolerance() const {
  return ten_to_minus(std::max(decimal_digits - 20, decimal_digits / 2), bits());
}

std::vector<Rational> bernoulli_even(std::size_t count) {
  // all[i] = B_i; odd entries past B_1 are zero and skipped in the sums.
  static std::mutex mutex;
  static std::vector<Rational> all{Rational(1)};
  std::lock_guard lock(mutex);
  const std::size_t needed = 2 * count + 1;
  while (all.size() < needed) {
    const std::size_t m = all.size();
    Rational sum = 0;
    Integer binom = 1;  // C(m+1, k)
    for (std::size_t k = 0; k < m; ++k) {
      if (k == 1 || k % 2 == 0) sum += Rational(binom) * all[k];
      binom = binom * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    Rational b = m > 1 && m % 2 == 1 ? Rational(0) : Rational(-sum / static_cast<unsigned long>(m + 1));
    all.push_back(std::move(b));
  }
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t j = 1; j <= count; ++j) out.push_back(all[2 * j]);
  return out;
}

namespace {

constexpr std::size_t kMaxAsymptoticTerms = 2000;

void require_regular(const Rational& q) {
  if (q <= 0 && q.get_den() == 1) throw Error(ErrorKind::PoleArgument, "Gamma has a pole at " + to_string(q));
}

// 1 / x^p for exact x.
Rational inverse_power(const Rational& x, unsigned long p) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_den_mpz_t(), p);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_num_mpz_t(), p);
  r.canonicalize();
  return r;
}

// Number of unit steps J taking q to at least `target`.
unsigned long shift_count(const Rational& q, long target) {
  if (q >= target) return 0;
  Rational gap = Rational(target) - q;
  Integer steps;
  mpz_cdiv_q(steps.get_mpz_t(), gap.get_num_mpz_t(), gap.get_den_mpz_t());
  return steps.get_ui();
}

long asymptotic_target(const PrecisionContext& ctx, unsigned k) {
  return std::max(10L, static_cast<long>(std::ceil(0.4 * ctx.working_digits()))) + static_cast<long>(k);
}

// atan(1/x) for integer x > 1.
Real arctan_inverse(unsigned long x, mpfr_prec_t bits) {
  const Real eps = ten_to_minus(static_cast<int>(bits / 3.32) + 2, bits);
  const Rational x2(static_cast<unsigned long>(x * x));
  Real power(Rational(1, x), bits);  // 1 / x^(2k+1)
  Real sum(bits);
  for (unsigned long k = 0;; ++k) {
    Real term = power / Rational(static_cast<long>(2 * k + 1));
    if (k % 2 == 0) sum += term; else sum -= term;
    if (abs(term) < eps) break;
    power /= x2;
  }
  return sum;
}

// Sum_{j>=1} coeff(j) / z^(2j + offset) until terms fall below the working
// precision relative to |scale|. The series is asymptotic: if the terms start
// growing first, the sum is kept only when the smallest term already meets
// `digits` decimal digits relative to |scale|.
template <typename Coeff>
Real asymptotic_tail(const Real& z, unsigned long offset, const Real& scale, mpfr_prec_t bits, int digits,
                     Coeff coeff) {
  const Real eps = abs(scale) * ten_to_minus(static_cast<int>(bits / 3.32) + 2, bits);
  const Real required = abs(scale) * ten_to_minus(digits, bits);
  const Real inv_z2 = Real(1L, bits) / (z * z);
  Real power = Real(1L, bits) / pow(z, offset);
  Real sum(bits);
  Real last_magnitude(bits);
  std::vector<Rational> bern = bernoulli_even(64);
  for (std::size_t j = 1; j <= kMaxAsymptoticTerms; ++j) {
    power *= inv_z2;
    if (j > bern.size()) bern = bernoulli_even(2 * bern.size());
    Real term = power * coeff(j, bern[j - 1]);
    const Real magnitude = abs(term);
    if (j > 2 && magnitude > last_magnitude) {
      if (last_magnitude < required) return sum;
      throw Error(ErrorKind::InvalidArgument, "asymptotic series diverged before converging");
    }
    sum += term;
    if (magnitude < eps) return sum;
    last_magnitude = magnitude;
  }
  throw Error(ErrorKind::InvalidArgument, "asymptotic series did not converge");
}

Real polygamma_asymptotic(unsigned k, const Real& z, mpfr_prec_t bits, int digits) {
  if (k == 0) {
    // ln z - 1/(2z) - sum B_2j / (2j z^2j)
    Real lead = log(z) - Real(1L, bits) / (Real(2L, bits) * z);
    Real tail = asymptotic_tail(z, 0, lead, bits, digits, [](std::size_t j, const Rational& b) {
      return Rational(b / static_cast<unsigned long>(2 * j));
    });
    return lead - tail;
  }
  // (-1)^(k+1) [ (k-1)!/z^k + k!/(2 z^(k+1)) + sum B_2j (2j+k-1)!/(2j)! / z^(2j+k) ]
  Real lead = Rational(factorial(k - 1)) * (Real(1L, bits) / pow(z, k));
  lead += ratio(factorial(k), 2) * (Real(1L, bits) / pow(z, k + 1));
  Real tail = asymptotic_tail(z, k, lead, bits, digits, [k](std::size_t j, const Rational& b) {
    return Rational(b * falling_ratio(static_cast<std::uint32_t>(2 * j + k - 1), static_cast<std::uint32_t>(2 * j)));
  });
  Real value = lead + tail;
  return k % 2 == 1 ? value : -value;
}

}  // namespace

Real pi(const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  Real value = Rational(16) * arctan_inverse(5, bits) - Rational(4) * arctan_inverse(239, bits);
  mpfr_prec_round(value.get(), ctx.bits(), MPFR_RNDN);
  return value;
}

Real euler_gamma(const PrecisionContext& ctx) { return -polygamma(0, Rational(1), ctx); }

Real polygamma(unsigned k, const Rational& q, const PrecisionContext& ctx) {
  ctx.validate();
  require_regular(q);
  const mpfr_prec_t bits = ctx.bits();
  const unsigned long steps = shift_count(q, asymptotic_target(ctx, k));

  // Recurrence part, summed exactly.
  Rational shifted_sum = 0;
  for (unsigned long i = 0; i < steps; ++i) shifted_sum += inverse_power(q + i, k + 1);
  Rational recurrence = Rational(factorial(k)) * shifted_sum;
  if (k % 2 == 0) recurrence = -recurrence;  // (-1)^(k+1)

  const Real z(Rational(q + steps), bits);
  return polygamma_asymptotic(k, z, bits, ctx.working_digits()) + recurrence;
}

Real gamma_value(const Rational& q, const PrecisionContext& ctx) {
  ctx.validate();
  require_regular(q);
  const mpfr_prec_t bits = ctx.bits() + 16;
  const unsigned long steps = shift_count(q, asymptotic_target(ctx, 0));

  Rational product = 1;
  for (unsigned long i = 0; i < steps; ++i) product *= q + i;

  PrecisionContext wide = ctx;
  wide.guard_digits += 5;
  const Real z(Rational(q + steps), bits);
  const Real half(Rational(1, 2), bits);
  // (z - 1/2) ln z - z + ln(2 pi)/2 + sum B_2j / (2j (2j-1) z^(2j-1))
  Real lead = (z - half) * log(z) - z + half * log(Rational(2) * pi(wide));
  Real tail = asymptotic_tail(z, 0, Real(1L, bits), bits, ctx.working_digits() + 2, [](std::size_t j, const Rational& b) {
    return Rational(b / static_cast<unsigned long>(2 * j * (2 * j - 1)));
  });
  // The tail sums B_2j / (...) z^-2j; one more factor of z restores z^-(2j-1).
  Real log_gamma = lead + tail * z;
  Real value = exp(log_gamma) / product;
  mpfr_prec_round(value.get(), ctx.bits(), MPFR_RNDN);
  return value;
}

GammaDerivatives gamma_derivatives(const Rational& q, unsigned n, const PrecisionContext& ctx) {
  ctx.validate();
  require_regular(q);
  std::vector<Real> psi;
  psi.reserve(n);
  for (unsigned i = 0; i < n; ++i) psi.push_back(polygamma(i, q, ctx));

  GammaDerivatives out{q, n, {}, ctx};
  out.values.reserve(n + 1);
  out.values.push_back(gamma_value(q, ctx));
  for (unsigned j = 0; j < n; ++j) {
    Real next(ctx.bits());
    Integer binom = 1;  // C(j, i)
    for (unsigned i = 0; i <= j; ++i) {
      next += Rational(binom) * (out.values[j - i] * psi[i]);
      binom = binom * (j - i) / (i + 1);
    }
    out.values.push_back(std::move(next));
  }
  return out;
}

VerificationReport verify_identity(FamilyKind family, unsigned n, long m, const std::optional<Kappa>& kappa,
                                   const PrecisionContext& ctx, const std::optional<Real>& tolerance) {
  ctx.validate();
  LatticeSpec spec{family, {m}, family == FamilyKind::Plain ? std::nullopt : kappa};
  if (family != FamilyKind::Plain && !kappa) throw Error(ErrorKind::MissingKappa, "shifted family requires kappa");
  spec.validate();

  const Rational basis_point = family == FamilyKind::Plain ? Rational(1) : kappa->value;
  const auto basis = gamma_derivatives(basis_point, n, ctx);
  const auto at_point = gamma_derivatives(spec.point(m), n, ctx);

  VerificationReport report;
  report.family = family;
  report.n = n;
  report.m = m;
  if (spec.kappa) report.kappa = spec.kappa->value;
  report.lhs = at_point.values[n];
  report.rhs = Real(ctx.bits());
  for (unsigned ell = 0; ell <= n; ++ell) {
    report.rhs += coefficient(family, n, ell, static_cast<unsigned>(m), spec.kappa) * basis.values[ell];
  }
  report.abs_residual = abs(report.lhs - report.rhs);
  report.rel_residual = report.lhs.is_zero() ? report.abs_residual : report.abs_residual / abs(report.lhs);
  report.tolerance = tolerance.value_or(ctx.default_tolerance());
  const bool small = abs(report.lhs) < Real(1L, ctx.bits());
  report.pass = (small ? report.abs_residual : report.rel_residual) < report.tolerance;
  return report;
}

std::vector<Real> recover_basis(const LatticeSpec& spec, unsigned n, const PrecisionContext& ctx) {
  ctx.validate();
  const CoeffSystem sys = build_system(spec, n);
  if (!sys.is_square()) {
    throw Error(ErrorKind::NotSquare, "recovery needs " + std::to_string(spec.square_size(n)) + " lattice points");
  }
  const RationalMatrix inverse = inverse_exact(sys.matrix);

  std::vector<Real> rhs;
  rhs.reserve(spec.indices.size());
  for (std::size_t r = 0; r < spec.indices.size(); ++r) {
    Real y = gamma_derivatives(spec.point(spec.indices[r]), n, ctx).values[n];
    if (!sys.constant_column.empty()) y -= sys.constant_column[r];
    rhs.push_back(std::move(y));
  }

  std::vector<Real> basis;
  basis.reserve(inverse.rows());
  for (std::size_t i = 0; i < inverse.rows(); ++i) {
    Real acc(ctx.bits());
    for (std::size_t j = 0; j < inverse.cols(); ++j) {
      if (inverse(i, j) != 0) acc += inverse(i, j) * rhs[j];
    }
    basis.push_back(std::move(acc));
  }
  return basis;
}

}  // namespace gammalat
