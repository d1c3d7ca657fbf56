#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fiberfan/linalg.hpp"

namespace fiberfan {

struct Generators {
  std::vector<Vector> rays;
  std::vector<Vector> lineality;
};

/// Double description: generators of {x : a.x >= 0 for a in ineqs, e.x = 0 for e in eqs}.
Generators double_description(const std::vector<Vector>& ineqs, const std::vector<Vector>& eqs,
                              std::size_t ambient);

/// Closed rational polyhedral cone, stored in both representations with a canonical key.
class Cone {
 public:
  Cone() = default;
  static Cone from_constraints(const std::vector<Vector>& ineqs, const std::vector<Vector>& eqs,
                               std::size_t ambient);
  static Cone from_generators(const std::vector<Vector>& rays, const std::vector<Vector>& lineality,
                              std::size_t ambient);
  static Cone zero(std::size_t ambient);
  static Cone whole(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(ambient_ - equations_.size()); }
  const std::vector<Vector>& rays() const { return rays_; }
  const std::vector<Vector>& lineality() const { return lineality_; }
  /// Inward normals: a.x >= 0 on the cone.
  const std::vector<Vector>& facets() const { return facets_; }
  const std::vector<Vector>& equations() const { return equations_; }
  const std::string& key() const { return key_; }

  bool strongly_convex() const { return lineality_.empty(); }
  bool contains(const Vector& x) const;
  bool contains(const Cone& other) const;
  bool in_relint(const Vector& x) const;
  Vector relint_point() const;
  /// Smallest face containing x (x must lie in the cone).
  Cone face_containing(const Vector& x) const;
  /// All faces including the cone itself, sorted.
  std::vector<Cone> faces() const;

  bool operator==(const Cone& other) const { return key_ == other.key_; }
  std::strong_ordering operator<=>(const Cone& other) const;

 private:
  void canonicalize();

  std::size_t ambient_ = 0;
  std::vector<Vector> rays_;
  std::vector<Vector> lineality_;
  std::vector<Vector> facets_;
  std::vector<Vector> equations_;
  std::string key_;
};

Cone intersect(const Cone& a, const Cone& b);
Cone image(const Cone& c, const Matrix& m);
/// {x : m x in c}.
Cone preimage(const Cone& c, const Matrix& m);
bool is_face_of(const Cone& a, const Cone& b);

}  // namespace fiberfan
