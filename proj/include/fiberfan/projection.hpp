#pragma once

#include <vector>

#include "fiberfan/linalg.hpp"

namespace fiberfan {

/// Surjective linear map V -> W with the dual restriction V* -> (ker)*.
struct ProjectionPair {
  Matrix forward;
  std::vector<Vector> kernel_basis;
  /// Rows are the kernel basis vectors: covector a maps to (a.k_1, ..., a.k_r).
  Matrix dual;

  std::size_t source_dim() const { return forward.cols(); }
  std::size_t target_dim() const { return forward.rows(); }
  std::size_t kernel_dim() const { return kernel_basis.size(); }
};

/// Throws NotSurjective when the rows are dependent.
ProjectionPair make_projection(const Matrix& forward);

}  // namespace fiberfan
