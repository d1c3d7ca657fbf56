#include "fiberfan/integer.hpp"

#include <algorithm>
#include <utility>

#include "fiberfan/error.hpp"

namespace fiberfan {

IntVector to_integers(const Vector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) raise(ErrorCode::DimMismatch, "expected an integer vector, got " + format_vector(v));
    out[i] = v[i].get_num();
  }
  return out;
}

Vector to_rationals(const IntVector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

namespace {

// Unimodular row echelon on the leading `span` columns; returns the number of pivot rows.
std::size_t integer_echelon(IntMatrix& rows, std::size_t span) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < span && lead < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = lead; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[lead], rows[best]);
      bool done = true;
      for (std::size_t r = lead + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[lead][c].get_mpz_t());
        for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= q * rows[lead][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) {
        if (rows[lead][c] < 0) {
          for (auto& x : rows[lead]) x = -x;
        }
        for (std::size_t r = 0; r < lead; ++r) {
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[lead][c].get_mpz_t());
          if (q == 0) continue;
          for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= q * rows[lead][k];
        }
        ++lead;
        break;
      }
    }
  }
  return lead;
}

}  // namespace

IntVector smith_divisors(IntMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t t = 0;
  IntVector out;
  while (t < rows && t < cols) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (m[r][c] != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t r = t + 1; r < rows; ++r) {
      if (m[r][t] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[r][t].get_mpz_t(), m[t][t].get_mpz_t());
      for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
      if (m[r][t] != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      if (m[t][c] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[t][c].get_mpz_t(), m[t][t].get_mpz_t());
      for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
      if (m[t][c] != 0) clean = false;
    }
    if (!clean) continue;
    bool divides = true;
    for (std::size_t r = t + 1; r < rows && divides; ++r) {
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (!mpz_divisible_p(m[r][c].get_mpz_t(), m[t][t].get_mpz_t())) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
          divides = false;
          break;
        }
      }
    }
    if (!divides) continue;
    out.push_back(abs(m[t][t]));
    ++t;
  }
  return out;
}

IntMatrix hermite_basis(IntMatrix rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) raise(ErrorCode::DimMismatch, "hermite_basis: row length");
  }
  rows.resize(integer_echelon(rows, cols));
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& rows, std::size_t cols) {
  const std::size_t r = rows.size();
  IntMatrix aug(cols, IntVector(r + cols, Integer(0)));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug[i][j] = rows[j][i];
    aug[i][r + i] = 1;
  }
  std::size_t rank = integer_echelon(aug, r);
  IntMatrix kernel;
  for (std::size_t i = rank; i < cols; ++i) {
    kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(r), aug[i].end());
  }
  return hermite_basis(std::move(kernel), cols);
}

}  // namespace fiberfan
