#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gammalat/matrix.hpp"
#include "gammalat/rational.hpp"
#include "gammalat/sympoly.hpp"

namespace gammalat {

// Exact determinant by fraction-free (Bareiss) elimination. Rows are first
// scaled to integers, so all elimination happens in Z with exact division.
// Throws NotSquare.
Rational det_exact(const RationalMatrix& m);

// Exact inverse. Throws NotSquare, or Singular when det = 0.
RationalMatrix inverse_exact(const RationalMatrix& m);

// Sign (+1/-1) of a permutation of {0..n-1} given in one-line notation.
int permutation_sign(std::span<const std::size_t> perm);

// n x n matrix with entry (r, c) = e_{c-1}(x^(m'_r)); requires |m'| = n.
// Throws NonIncreasingIndices or DimensionMismatch.
RationalMatrix build_E(std::span<const long> m_primes, const ArgumentFamily& family, std::size_t n);

// (n+1) x (n+1) matrix with entry (r, c) = h_{c-1}(x^(m'_r)); requires |m'| = n + 1.
RationalMatrix build_H(std::span<const long> m_primes, const ArgumentFamily& family, std::size_t n);

// Square matrix with entry (r, c) = p_{c-1}(x^(m'_r)), size |m'|; the common
// shape behind build_E and build_H.
RationalMatrix build_structured(std::span<const long> m_primes, const ArgumentFamily& family, PolyKind kind);

// First row kept; row r replaced by row r minus row r-1. Preserves det.
RationalMatrix row_difference(const RationalMatrix& m);

// The (k-1) x (k-1) matrix left after row differencing a structured matrix
// and expanding along its first column [1 0 ... 0]^T.
RationalMatrix minor_reduced_difference(const RationalMatrix& m);

struct ABFactors {
  RationalMatrix a;  // (k-1) x m'_max, banded
  RationalMatrix b;  // m'_max x (k-1)
};

// A(r, j) = x_j when m'_r < j <= m'_{r+1}, else 0.
// B(j, c) = e_{c-1}(x^(j-1)) (Elementary) or h_{c-1}(x^(j)) (Homogeneous).
// A * B equals minor_reduced_difference of the matching structured matrix.
// Requires |m'| >= 2.
ABFactors ab_factorization(std::span<const long> m_primes, const ArgumentFamily& family, PolyKind kind);

struct CauchyBinetTerm {
  std::vector<std::size_t> subset;  // 1-based column indices of A, ascending
  Rational det_a;
  Rational det_b;
};

struct CauchyBinetCertificate {
  Rational total_det;
  std::vector<CauchyBinetTerm> surviving;
  std::size_t pruned_count = 0;

  // Every surviving term has det_a > 0 and det_b > 0, and at least one exists.
  bool all_terms_positive() const;
};

inline constexpr std::size_t kCauchyBinetMaxSubsets = 1'000'000;

// det(A B) expanded over all size-p column subsets S of the p x q matrix A,
// enumerated in lexicographic order. Subsets for which A_{*,S} is visibly
// singular (a zero column, or two columns supported on the same row of a
// banded A) are pruned before any determinant is computed; subsets whose
// term is zero are pruned after. Throws DimensionMismatch or GuardExceeded.
CauchyBinetCertificate cauchy_binet(const RationalMatrix& a, const RationalMatrix& b);

// Whether m'_r < s_r <= m'_{r+1} for every r (s is 1-based).
bool interleaves(std::span<const std::size_t> subset, std::span<const long> m_primes);

}  // namespace gammalat
