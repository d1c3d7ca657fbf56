#pragma once

#include <vector>

#include "fiberfan/rational.hpp"

namespace fiberfan {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  Vector coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// maximize objective . x subject to the constraints. Variables are free unless listed as nonnegative.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<bool> nonnegative;
  std::vector<Constraint> constraints;
  Vector objective;

  explicit LinearProgram(std::size_t n) : num_vars(n), nonnegative(n, false), objective(n, Rational(0)) {}
  void add(Vector coeffs, Relation rel, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  Vector x;
};

/// Exact two-phase simplex with Bland's rule.
LpResult solve(const LinearProgram& lp);

}  // namespace fiberfan
