#include "gammalat/linalg.hpp"

#include <optional>
#include <string>
#include <utility>

#include "gammalat/error.hpp"

namespace gammalat {

namespace {

void require_square(const RationalMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NotSquare,
                "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_increasing(std::span<const long> m_primes) {
  for (std::size_t r = 0; r < m_primes.size(); ++r) {
    if (m_primes[r] < 0) throw Error(ErrorKind::NonIncreasingIndices, "indices must be nonnegative");
    if (r > 0 && m_primes[r] <= m_primes[r - 1]) {
      throw Error(ErrorKind::NonIncreasingIndices, "indices must be strictly increasing");
    }
  }
}

}  // namespace

Rational det_exact(const RationalMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row.
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (const auto& q : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    scale *= l;
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rational det(at(n - 1, n - 1) * sign, scale);
  det.canonicalize();
  return det;
}

RationalMatrix inverse_exact(const RationalMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && work(pivot, k) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::Singular, "det = 0");
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(k, c), work(pivot, c));
        std::swap(inv(k, c), inv(pivot, c));
      }
    }
    const Rational p = work(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      work(k, c) /= p;
      inv(k, c) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || work(i, k) == 0) continue;
      const Rational f = work(i, k);
      for (std::size_t c = 0; c < n; ++c) {
        work(i, c) -= f * work(k, c);
        inv(i, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

int permutation_sign(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      if (j >= perm.size()) throw Error(ErrorKind::InvalidArgument, "not a permutation");
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

RationalMatrix build_structured(std::span<const long> m_primes, const ArgumentFamily& family, PolyKind kind) {
  require_increasing(m_primes);
  const std::size_t k = m_primes.size();
  if (k == 0) return RationalMatrix(0, 0);
  const auto table =
      symmetric_prefix(kind, family, static_cast<std::size_t>(m_primes.back()), k - 1);
  RationalMatrix out(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) out(r, c) = table.at(static_cast<std::size_t>(m_primes[r]), c);
  }
  return out;
}

RationalMatrix build_E(std::span<const long> m_primes, const ArgumentFamily& family, std::size_t n) {
  if (m_primes.size() != n) throw Error(ErrorKind::DimensionMismatch, "E_n needs exactly n indices");
  return build_structured(m_primes, family, PolyKind::Elementary);
}

RationalMatrix build_H(std::span<const long> m_primes, const ArgumentFamily& family, std::size_t n) {
  if (m_primes.size() != n + 1) throw Error(ErrorKind::DimensionMismatch, "H_{n+1} needs exactly n+1 indices");
  return build_structured(m_primes, family, PolyKind::Homogeneous);
}

RationalMatrix row_difference(const RationalMatrix& m) {
  RationalMatrix out = m;
  for (std::size_t r = 1; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) - m(r - 1, c);
  }
  return out;
}

RationalMatrix minor_reduced_difference(const RationalMatrix& m) {
  require_square(m);
  if (m.rows() == 0) throw Error(ErrorKind::DimensionMismatch, "empty matrix has no minor");
  return row_difference(m).minor(0, 0);
}

ABFactors ab_factorization(std::span<const long> m_primes, const ArgumentFamily& family, PolyKind kind) {
  require_increasing(m_primes);
  const std::size_t k = m_primes.size();
  if (k < 2) throw Error(ErrorKind::DimensionMismatch, "factorization needs at least two indices");
  const auto width = static_cast<std::size_t>(m_primes.back());
  const auto xs = family.arguments(width);
  const auto table = symmetric_prefix(kind, family, width, k - 2);

  ABFactors f{RationalMatrix(k - 1, width), RationalMatrix(width, k - 1)};
  for (std::size_t r = 0; r + 1 < k; ++r) {
    for (auto j = m_primes[r] + 1; j <= m_primes[r + 1]; ++j) {
      const auto col = static_cast<std::size_t>(j);
      f.a(r, col - 1) = xs[col - 1];
    }
  }
  for (std::size_t j = 1; j <= width; ++j) {
    const std::size_t len = kind == PolyKind::Elementary ? j - 1 : j;
    for (std::size_t c = 0; c + 1 < k; ++c) f.b(j - 1, c) = table.at(len, c);
  }
  return f;
}

bool CauchyBinetCertificate::all_terms_positive() const {
  if (surviving.empty()) return false;
  for (const auto& t : surviving) {
    if (t.det_a <= 0 || t.det_b <= 0) return false;
  }
  return true;
}

CauchyBinetCertificate cauchy_binet(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t p = a.rows();
  const std::size_t q = a.cols();
  if (b.rows() != q || b.cols() != p) throw Error(ErrorKind::DimensionMismatch, "B must be the shape of A^T");

  CauchyBinetCertificate cert;
  cert.total_det = 0;
  if (p > q) return cert;
  Integer count;
  mpz_bin_uiui(count.get_mpz_t(), q, p);
  if (count > static_cast<unsigned long>(kCauchyBinetMaxSubsets)) {
    throw Error(ErrorKind::GuardExceeded, "Cauchy-Binet expansion would visit " + count.get_str() + " subsets");
  }

  // Row support of each column: nullopt for a zero column, -1 when the
  // column has several nonzeros (A not banded).
  std::vector<std::optional<long>> support(q);
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t r = 0; r < p; ++r) {
      if (a(r, j) == 0) continue;
      support[j] = support[j] ? -1L : static_cast<long>(r);
    }
  }
  auto visibly_singular = [&](const std::vector<std::size_t>& cols) {
    std::vector<bool> used(p, false);
    for (std::size_t j : cols) {
      if (!support[j]) return true;
      const long r = *support[j];
      if (r < 0) continue;
      if (used[static_cast<std::size_t>(r)]) return true;
      used[static_cast<std::size_t>(r)] = true;
    }
    return false;
  };

  std::vector<std::size_t> cols(p);
  for (std::size_t i = 0; i < p; ++i) cols[i] = i;
  while (true) {
    if (visibly_singular(cols)) {
      ++cert.pruned_count;
    } else {
      Rational da = det_exact(a.select_columns(cols));
      Rational db = da == 0 ? Rational(0) : det_exact(b.select_rows(cols));
      if (da == 0 || db == 0) {
        ++cert.pruned_count;
      } else {
        cert.total_det += da * db;
        CauchyBinetTerm term{cols, std::move(da), std::move(db)};
        for (auto& s : term.subset) ++s;
        cert.surviving.push_back(std::move(term));
      }
    }
    // Next combination in lexicographic order.
    std::size_t i = p;
    while (i > 0 && cols[i - 1] == q - p + (i - 1)) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < p; ++j) cols[j] = cols[j - 1] + 1;
  }
  return cert;
}

bool interleaves(std::span<const std::size_t> subset, std::span<const long> m_primes) {
  if (subset.size() + 1 != m_primes.size()) return false;
  for (std::size_t r = 0; r < subset.size(); ++r) {
    const auto s = static_cast<long>(subset[r]);
    if (!(m_primes[r] < s && s <= m_primes[r + 1])) return false;
  }
  return true;
}

}  // namespace gammalat
