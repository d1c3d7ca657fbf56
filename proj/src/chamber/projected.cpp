#include "fiberfan/chamber.hpp"

#include "fiberfan/error.hpp"
#include "fiberfan/parallel.hpp"

namespace fiberfan {

ProjectedPolytope::ProjectedPolytope(Polytope p, ProjectionPair pp)
    : p_(std::move(p)), pp_(std::move(pp)), lattice_(p_) {
  if (pp_.source_dim() != p_.ambient_dim()) raise(ErrorCode::DimMismatch, "projection does not match the polytope");
  if (p_.dim() != static_cast<int>(p_.ambient_dim())) raise(ErrorCode::NotFullDimensional, "polytope is not full-dimensional");
  std::vector<Vector> projected;
  for (const auto& v : p_.vertices()) projected.push_back(pp_.forward.apply(v));
  q_ = Polytope::hull(projected);
  const std::size_t n = lattice_.size();
  images_.resize(n);
  normals_.resize(n);
  dual_images_.resize(n);
  parallel_for(n, [&](std::size_t i) {
    LabelSet f = lattice_.faces()[i];
    if (f.empty()) return;
    images_[i] = Polytope::hull(select(projected, f));
    normals_[i] = normal_cone(p_, lattice_, f);
    dual_images_[i] = fiberfan::image(normals_[i], pp_.dual);
  });
}

std::size_t ProjectedPolytope::face_index(LabelSet f) const {
  auto i = lattice_.index_of(f);
  if (!i) raise(ErrorCode::NotAFace, f.to_string() + " is not a face");
  return *i;
}

Fan ProjectedPolytope::normal_fan() const {
  std::vector<Cone> cones(normals_.begin() + 1, normals_.end());
  return Fan(std::move(cones), p_.ambient_dim(), false);
}

}  // namespace fiberfan
