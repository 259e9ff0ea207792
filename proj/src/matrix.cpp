#include "gammalat/matrix.hpp"

#include "gammalat/error.hpp"

namespace gammalat {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> cols) const {
  RationalMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(r, cols[c]);
  }
  return out;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> rows) const {
  RationalMatrix out(rows.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(rows[r], c);
  }
  return out;
}

RationalMatrix RationalMatrix::minor(std::size_t row, std::size_t col) const {
  RationalMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, ro = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, co = 0; c < cols_; ++c) {
      if (c == col) continue;
      out(ro, co++) = (*this)(r, c);
    }
    ++ro;
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from columns");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  }
  return out;
}

}  // namespace gammalat
