#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "fiberfan/secondary.hpp"

namespace fiberfan::detail {

/// Lifted point set (a_i, 1) with cached simplex predicates.
class Lifted {
 public:
  explicit Lifted(const PointConfiguration& a);

  std::size_t dim() const { return d_; }
  std::size_t size() const { return pts_.size(); }
  const Vector& lifted(std::size_t i) const { return pts_[i]; }
  bool independent(LabelSet s) const;
  /// Normal h of the hyperplane through the lifted points of an independent set of size dim.
  Vector normal(LabelSet f) const;
  int side(LabelSet f, std::size_t p) const;
  /// All points lie weakly on one side of the hyperplane through f.
  bool on_boundary(LabelSet f) const;
  /// conv(s) and conv(t) meet in conv(s & t).
  bool proper(LabelSet s, LabelSet t) const;
  /// Affine coordinates of point p with respect to the simplex s.
  Vector barycentric(LabelSet s, std::size_t p) const;
  std::vector<LabelSet> simplices() const;

 private:
  std::size_t d_;
  std::vector<Vector> pts_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::uint64_t, std::uint64_t>, bool> proper_cache_;
};

}  // namespace fiberfan::detail
