#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fiberfan/rational.hpp"

namespace fiberfan {

/// Row-major rational matrix. Shape is fixed at construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix from_rows(std::vector<Vector> rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Vector& row(std::size_t r) const { return rows_[r]; }
  const std::vector<Vector>& row_vectors() const { return rows_; }
  Vector column(std::size_t c) const;

  Vector apply(const Vector& x) const;
  Vector apply_transpose(const Vector& y) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const = default;

 private:
  std::vector<Vector> rows_;
  std::size_t cols_ = 0;
};

/// Reduced row echelon form (nonzero rows only) with pivot columns.
struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;

  std::size_t rank() const { return rows.size(); }
  /// Canonical representative of v modulo the row space (pivot coordinates zeroed).
  Vector reduce(const Vector& v) const;
  bool in_span(const Vector& v) const { return is_zero(reduce(v)); }
};

Echelon reduced_echelon(std::vector<Vector> rows, std::size_t cols);
std::size_t rank_of(const std::vector<Vector>& rows, std::size_t cols);
/// Basis of {x : r . x = 0 for every row r}, one vector per free column.
std::vector<Vector> kernel_basis(const std::vector<Vector>& rows, std::size_t cols);
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);
/// Dimension of the affine hull (-1 for no points).
int affine_dimension(const std::vector<Vector>& points);
Vector homogenize(const Vector& point);

}  // namespace fiberfan
