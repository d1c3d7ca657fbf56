#include "fiberfan/lp.hpp"

#include "fiberfan/error.hpp"

namespace fiberfan {

void LinearProgram::add(Vector coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != num_vars) raise(ErrorCode::DimMismatch, "LP constraint has wrong length");
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

struct Tableau {
  std::vector<Vector> a;
  Vector b;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) {
      if (sgn(x) != 0) x *= inv;
    }
    b[row] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) {
        if (sgn(a[row][c]) != 0) a[r][c] -= f * a[row][c];
      }
      b[r] -= f * b[row];
    }
    basis[row] = col;
  }

  // Maximizes cost . x over columns flagged in `allowed`. Returns false when unbounded.
  bool optimize(const Vector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols && enter == cols; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (sgn(a[i][j]) != 0) reduced -= cost[basis[i]] * a[i][j];
        }
        if (sgn(reduced) > 0) enter = j;
      }
      if (enter == cols) return true;
      std::size_t leave = a.size();
      Rational best;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i][enter]) <= 0) continue;
        Rational ratio = b[i] / a[i][enter];
        if (leave == a.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == a.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  std::vector<std::size_t> plus(n), minus(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t v = 0; v < n; ++v) {
    plus[v] = cols++;
    if (!lp.nonnegative[v]) minus[v] = cols++;
  }
  const std::size_t structural = cols;
  const std::size_t m = lp.constraints.size();
  std::vector<Relation> rel(m);
  std::vector<bool> flip(m, false);
  std::size_t slack_count = 0, artificial_count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = lp.constraints[i].relation;
    if (sgn(lp.constraints[i].rhs) < 0) {
      flip[i] = true;
      if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
      else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
    }
    if (rel[i] != Relation::Equal) ++slack_count;
    if (rel[i] != Relation::LessEqual) ++artificial_count;
  }
  const std::size_t artificial_start = structural + slack_count;
  Tableau t;
  t.cols = artificial_start + artificial_count;
  t.a.assign(m, zeros(t.cols));
  t.b.resize(m);
  t.basis.resize(m);
  std::size_t next_slack = structural, next_art = artificial_start;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = lp.constraints[i];
    const Rational s = flip[i] ? Rational(-1) : Rational(1);
    for (std::size_t v = 0; v < n; ++v) {
      if (sgn(con.coeffs[v]) == 0) continue;
      t.a[i][plus[v]] = s * con.coeffs[v];
      if (minus[v] != SIZE_MAX) t.a[i][minus[v]] = -s * con.coeffs[v];
    }
    t.b[i] = s * con.rhs;
    if (rel[i] == Relation::LessEqual) {
      t.a[i][next_slack] = 1;
      t.basis[i] = next_slack++;
    } else {
      if (rel[i] == Relation::GreaterEqual) t.a[i][next_slack++] = -1;
      t.a[i][next_art] = 1;
      t.basis[i] = next_art++;
    }
  }

  LpResult result;
  if (artificial_count > 0) {
    Vector phase1 = zeros(t.cols);
    for (std::size_t j = artificial_start; j < t.cols; ++j) phase1[j] = -1;
    t.optimize(phase1, std::vector<bool>(t.cols, true));
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] >= artificial_start) infeasibility += t.b[i];
    }
    if (sgn(infeasibility) != 0) return result;
    for (std::size_t i = 0; i < t.a.size();) {
      if (t.basis[i] < artificial_start) {
        ++i;
        continue;
      }
      std::size_t col = artificial_start;
      for (std::size_t j = 0; j < artificial_start; ++j) {
        if (sgn(t.a[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == artificial_start) {
        t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
        t.b.erase(t.b.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        t.pivot(i, col);
        ++i;
      }
    }
  }

  Vector cost = zeros(t.cols);
  for (std::size_t v = 0; v < n; ++v) {
    cost[plus[v]] = lp.objective[v];
    if (minus[v] != SIZE_MAX) cost[minus[v]] = -lp.objective[v];
  }
  std::vector<bool> allowed(t.cols, true);
  for (std::size_t j = artificial_start; j < t.cols; ++j) allowed[j] = false;
  if (!t.optimize(cost, allowed)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  Vector column_values = zeros(t.cols);
  for (std::size_t i = 0; i < t.a.size(); ++i) column_values[t.basis[i]] = t.b[i];
  result.status = LpStatus::Optimal;
  result.x = zeros(n);
  for (std::size_t v = 0; v < n; ++v) {
    result.x[v] = column_values[plus[v]];
    if (minus[v] != SIZE_MAX) result.x[v] -= column_values[minus[v]];
  }
  result.value = dot(lp.objective, result.x);
  return result;
}

}  // namespace fiberfan
