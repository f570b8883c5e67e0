#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "giq/rational.hpp"

namespace giq {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const;
  bool is_symmetric() const;

  /// Rows of `below` appended under this matrix; column counts must match.
  void append_rows(const Matrix& below);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Rank by fraction-free (Bareiss) elimination on the denominator-cleared
/// integer matrix.
std::size_t rank(const Matrix& m);

/// Null-space basis. One vector per free column, ascending; each vector has a
/// 1 in its free column and zeros in the other free columns. Pivot choice is
/// leftmost column, then the first usable row.
std::vector<std::vector<Rational>> kernel(const Matrix& m);

/// Exact determinant (Bareiss). Requires a square matrix.
Rational determinant(const Matrix& m);

/// Row-major strings, e.g. [["1","0"],["0","-1/3"]] rendered as text.
std::vector<std::vector<std::string>> to_strings(const Matrix& m);

}  // namespace giq
