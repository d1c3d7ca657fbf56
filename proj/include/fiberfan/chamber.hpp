#pragma once

#include <optional>
#include <vector>

#include "fiberfan/fan.hpp"
#include "fiberfan/graph.hpp"
#include "fiberfan/polytope.hpp"
#include "fiberfan/projection.hpp"

namespace fiberfan {

/// A full-dimensional polytope together with a projection and the derived per-face data.
class ProjectedPolytope {
 public:
  ProjectedPolytope(Polytope p, ProjectionPair pp);

  const Polytope& polytope() const { return p_; }
  const ProjectionPair& projection() const { return pp_; }
  const FaceLattice& lattice() const { return lattice_; }
  const Polytope& image() const { return q_; }
  std::size_t kernel_dim() const { return pp_.kernel_dim(); }

  /// Per lattice index; entries for the empty face are unused.
  const Polytope& face_image(std::size_t i) const { return images_[i]; }
  const Cone& normal(std::size_t i) const { return normals_[i]; }
  const Cone& dual_image(std::size_t i) const { return dual_images_[i]; }
  std::size_t face_index(LabelSet f) const;
  Fan normal_fan() const;

 private:
  Polytope p_;
  ProjectionPair pp_;
  FaceLattice lattice_;
  Polytope q_;
  std::vector<Polytope> images_;
  std::vector<Cone> normals_;
  std::vector<Cone> dual_images_;
};

struct Cell {
  Polytope polytope;
  /// Faces F with the cell inside pi(F), sorted.
  std::vector<LabelSet> defining;
  Vector interior;

  int dim() const { return polytope.dim(); }
  bool operator==(const Cell& o) const { return defining == o.defining; }
};

/// The cells of the chamber complex sorted by (dim, defining faces).
struct CellComplex {
  std::vector<Cell> cells;
  std::vector<std::size_t> chambers;

  /// Cell a is a face of cell b.
  bool leq(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> find(const Cell& c) const;
  std::size_t hasse_edge_count() const;
};

CellComplex chamber_complex(const ProjectedPolytope& pp);
Cell cell_of(const ProjectedPolytope& pp, const Vector& q);
std::vector<LabelSet> defining_faces(const ProjectedPolytope& pp, const Vector& q);

/// Fiber over q in coordinates of the kernel basis.
Polytope fiber(const ProjectedPolytope& pp, const Vector& q);
/// Normal fan of the fiber over the interior of cell `c`.
Fan fiber_normal_fan(const ProjectedPolytope& pp, const CellComplex& gamma, const Cell& c);
/// Smallest cone of the fiber normal fan of `c` containing psi.
Cone local_cone(const ProjectedPolytope& pp, const CellComplex& gamma, const Cell& c, const Vector& psi);

/// Labels of the smallest face of P containing the psi-maximal face of the fiber over q.
LabelSet minimal_face_over(const ProjectedPolytope& pp, const Vector& q, const Vector& psi);

/// Intersection of the projected normal cones containing psi.
Cone cone_of(const ProjectedPolytope& pp, const Vector& psi);

struct FiberFan {
  Fan fan;
  /// Relative interior point per cone of `fan`, same order.
  std::vector<Vector> witnesses;
};

FiberFan fiber_fan(const ProjectedPolytope& pp);

std::vector<std::size_t> lexicographic_cells(const CellComplex& gamma, const Polytope& q);
Graph chamber_adjacency(const CellComplex& gamma);

}  // namespace fiberfan
