#pragma once

#include <optional>
#include <vector>

#include "fiberfan/cone.hpp"
#include "fiberfan/label_set.hpp"

namespace fiberfan {

/// Convex polytope given by its vertices; vertex i carries label i.
class Polytope {
 public:
  Polytope() = default;
  /// Throws DegenerateInput unless the points are distinct and in convex position.
  static Polytope from_vertices(const std::vector<Vector>& vertices);
  /// Convex hull; keeps extreme points in input order.
  static Polytope hull(const std::vector<Vector>& points);
  /// Polytope whose homogenization is `cone` (in dimension ambient + 1). Bounded cones only.
  static Polytope from_homogeneous(const Cone& cone);

  std::size_t ambient_dim() const { return ambient_; }
  int dim() const { return cone_.dim() - 1; }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vector>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  /// Cone over P x {1}; its facets (a,b) read a.x + b >= 0.
  const Cone& homogeneous() const { return cone_; }

  bool contains(const Vector& x) const { return cone_.contains(homogenize(x)); }
  bool in_relint(const Vector& x) const { return cone_.in_relint(homogenize(x)); }
  Vector centroid() const;
  /// Vertex labels on each facet, in facet order.
  std::vector<LabelSet> facet_label_sets() const;
  /// Labels of vertices with a.x + b = 0 for the homogeneous covector (a,b).
  LabelSet tight_labels(const Vector& covector) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> vertices_;
  Cone cone_;
};

/// Face poset of a polytope; faces sorted by (dim, labels), empty face first.
class FaceLattice {
 public:
  FaceLattice() = default;
  explicit FaceLattice(const Polytope& p);

  const std::vector<LabelSet>& faces() const { return faces_; }
  int dim(std::size_t index) const { return dims_[index]; }
  std::size_t size() const { return faces_.size(); }
  std::optional<std::size_t> index_of(LabelSet face) const;
  bool is_face(LabelSet s) const { return index_of(s).has_value(); }
  /// Intersection of all faces containing s.
  LabelSet smallest_face_containing(LabelSet s) const;
  const std::vector<LabelSet>& facets() const { return facets_; }
  LabelSet top() const { return faces_.back(); }

 private:
  std::vector<LabelSet> faces_;
  std::vector<int> dims_;
  std::vector<LabelSet> facets_;
};

/// Points whose indices are in `labels`, in index order.
std::vector<Vector> select(const std::vector<Vector>& points, LabelSet labels);

/// Covectors maximized on F, closure taken.
Cone normal_cone(const Polytope& p, const FaceLattice& lattice, LabelSet face);

}  // namespace fiberfan
