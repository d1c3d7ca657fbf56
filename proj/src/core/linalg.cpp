#include "fiberfan/linalg.hpp"

#include "fiberfan/error.hpp"

namespace fiberfan {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows, zeros(cols)), cols_(cols) {}

Matrix Matrix::from_rows(std::vector<Vector> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) raise(ErrorCode::DimMismatch, "matrix row has wrong length");
  }
  Matrix m;
  m.rows_ = std::move(rows);
  m.cols_ = cols;
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) v[r] = rows_[r][c];
  return v;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) raise(ErrorCode::DimMismatch, "matrix-vector product: length mismatch");
  Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = dot(rows_[r], x);
  return out;
}

Vector Matrix::apply_transpose(const Vector& y) const {
  if (y.size() != rows()) raise(ErrorCode::DimMismatch, "transpose product: length mismatch");
  Vector out = zeros(cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    if (sgn(y[r]) == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] += y[r] * rows_[r][c];
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = rows_[r][c];
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows()) raise(ErrorCode::DimMismatch, "matrix product: shape mismatch");
  Matrix out(rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(rows_[r][k]) == 0) continue;
      for (std::size_t c = 0; c < other.cols(); ++c) out(r, c) += rows_[r][k] * other(k, c);
    }
  }
  return out;
}

Vector Echelon::reduce(const Vector& v) const {
  Vector out = v;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational f = out[pivots[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(rows[i][c]) != 0) out[c] -= f * rows[i][c];
    }
  }
  return out;
}

Echelon reduced_echelon(std::vector<Vector> rows, std::size_t cols) {
  Echelon e;
  e.cols = cols;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const Rational inv = 1 / rows[lead][c];
    for (auto& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        if (sgn(rows[lead][k]) != 0) rows[r][k] -= f * rows[lead][k];
      }
    }
    e.pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  e.rows = std::move(rows);
  return e;
}

std::size_t rank_of(const std::vector<Vector>& rows, std::size_t cols) {
  return reduced_echelon(rows, cols).rank();
}

std::vector<Vector> kernel_basis(const std::vector<Vector>& rows, std::size_t cols) {
  Echelon e = reduced_echelon(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zeros(cols);
    x[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) raise(ErrorCode::DimMismatch, "solve_linear: right-hand side length");
  std::vector<Vector> aug;
  aug.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row = a.row(r);
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  Echelon e = reduced_echelon(std::move(aug), a.cols() + 1);
  Vector x = zeros(a.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][a.cols()];
  }
  return x;
}

Vector homogenize(const Vector& point) {
  Vector h = point;
  h.emplace_back(1);
  return h;
}

int affine_dimension(const std::vector<Vector>& points) {
  if (points.empty()) return -1;
  std::vector<Vector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(homogenize(p));
  return static_cast<int>(rank_of(rows, points.front().size() + 1)) - 1;
}

}  // namespace fiberfan
