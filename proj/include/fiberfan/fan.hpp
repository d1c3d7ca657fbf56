#pragma once

#include <optional>
#include <vector>

#include "fiberfan/cone.hpp"

namespace fiberfan {

/// Finite set of cones keyed canonically, sorted by (dim, key).
class Fan {
 public:
  Fan() = default;
  Fan(std::vector<Cone> cones, std::size_t ambient, bool close_under_faces = true);

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Cone>& cones() const { return cones_; }
  std::size_t size() const { return cones_.size(); }
  std::vector<Cone> maximal_cones() const;
  std::optional<std::size_t> find(const Cone& c) const;
  bool contains(const Cone& c) const { return find(c).has_value(); }

  bool is_face_to_face() const;
  bool is_complete() const;
  bool closed_under_faces() const;
  /// Index of the lowest-dimensional member containing x.
  std::optional<std::size_t> minimal_cone_containing(const Vector& x) const;

  bool operator==(const Fan& other) const { return ambient_ == other.ambient_ && cones_ == other.cones_; }

 private:
  std::size_t ambient_ = 0;
  std::vector<Cone> cones_;
};

/// Every cone of `fine` lies in a cone of `coarse`, and every cone of `coarse` is a union of cones of `fine`.
bool refines(const Fan& fine, const Fan& coarse);

/// All intersections of one cone from each part (parts closed under faces first).
Fan common_refinement(const std::vector<Fan>& parts);

}  // namespace fiberfan
