#include "fiberfan/projection.hpp"

#include "fiberfan/error.hpp"

namespace fiberfan {

ProjectionPair make_projection(const Matrix& forward) {
  if (rank_of(forward.row_vectors(), forward.cols()) != forward.rows()) {
    raise(ErrorCode::NotSurjective, "projection matrix does not have full row rank");
  }
  ProjectionPair pp;
  pp.forward = forward;
  for (const auto& k : kernel_basis(forward.row_vectors(), forward.cols())) {
    pp.kernel_basis.push_back(primitive_oriented(k));
  }
  pp.dual = Matrix::from_rows(pp.kernel_basis, forward.cols());
  return pp;
}

}  // namespace fiberfan
