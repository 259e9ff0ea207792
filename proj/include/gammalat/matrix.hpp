#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "gammalat/rational.hpp"

namespace gammalat {

// Dense row-major matrix of exact rationals. Zero-sized dimensions are
// allowed (an empty Cauchy-Binet factor is 0 x q).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> entries() const { return entries_; }

  RationalMatrix select_columns(std::span<const std::size_t> cols) const;
  RationalMatrix select_rows(std::span<const std::size_t> rows) const;
  // Removes one row and one column.
  RationalMatrix minor(std::size_t row, std::size_t col) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Throws DimensionMismatch.
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> v);

}  // namespace gammalat
