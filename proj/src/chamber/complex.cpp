#include <algorithm>
#include <map>

#include "fiberfan/arrangement.hpp"
#include "fiberfan/chamber.hpp"
#include "fiberfan/error.hpp"
#include "fiberfan/parallel.hpp"

namespace fiberfan {

namespace {

Cell make_cell(const ProjectedPolytope& pp, std::vector<LabelSet> defining) {
  std::vector<Vector> ineqs, eqs;
  for (LabelSet f : defining) {
    const Cone& h = pp.face_image(pp.face_index(f)).homogeneous();
    ineqs.insert(ineqs.end(), h.facets().begin(), h.facets().end());
    eqs.insert(eqs.end(), h.equations().begin(), h.equations().end());
  }
  Cell c;
  c.polytope = Polytope::from_homogeneous(Cone::from_constraints(ineqs, eqs, pp.image().ambient_dim() + 1));
  c.defining = std::move(defining);
  c.interior = c.polytope.centroid();
  return c;
}

}  // namespace

std::vector<LabelSet> defining_faces(const ProjectedPolytope& pp, const Vector& q) {
  std::vector<LabelSet> out;
  const auto& faces = pp.lattice().faces();
  for (std::size_t i = 1; i < faces.size(); ++i) {
    if (pp.face_image(i).contains(q)) out.push_back(faces[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CellComplex chamber_complex(const ProjectedPolytope& pp) {
  const Polytope& q = pp.image();
  std::vector<Vector> hyperplanes;
  for (std::size_t i = 1; i < pp.lattice().size(); ++i) {
    const Cone& h = pp.face_image(i).homogeneous();
    hyperplanes.insert(hyperplanes.end(), h.facets().begin(), h.facets().end());
    hyperplanes.insert(hyperplanes.end(), h.equations().begin(), h.equations().end());
  }
  std::vector<Cone> pieces;
  for (auto& face : arrangement_faces(q.homogeneous(), hyperplanes)) {
    if (face.dim() > 0) pieces.push_back(std::move(face));
  }
  std::vector<std::vector<LabelSet>> keys(pieces.size());
  parallel_for(pieces.size(), [&](std::size_t i) {
    Vector x = pieces[i].relint_point();
    Vector point(x.begin(), x.end() - 1);
    keys[i] = defining_faces(pp, scaled(point, 1 / x.back()));
  });
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  CellComplex gamma;
  gamma.cells.resize(keys.size());
  parallel_for(keys.size(), [&](std::size_t i) { gamma.cells[i] = make_cell(pp, keys[i]); });
  std::sort(gamma.cells.begin(), gamma.cells.end(), [](const Cell& a, const Cell& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.defining < b.defining;
  });
  for (std::size_t i = 0; i < gamma.cells.size(); ++i) {
    if (gamma.cells[i].dim() == q.dim()) gamma.chambers.push_back(i);
  }
  return gamma;
}

bool CellComplex::leq(std::size_t a, std::size_t b) const {
  const auto& da = cells[a].defining;
  const auto& db = cells[b].defining;
  return std::includes(da.begin(), da.end(), db.begin(), db.end());
}

std::optional<std::size_t> CellComplex::find(const Cell& c) const {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] == c) return i;
  }
  return std::nullopt;
}

std::size_t CellComplex::hasse_edge_count() const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (std::size_t m = 0; m < cells.size() && covered; ++m) {
        if (m != a && m != b && leq(a, m) && leq(m, b)) covered = false;
      }
      count += covered;
    }
  }
  return count;
}

Cell cell_of(const ProjectedPolytope& pp, const Vector& q) {
  if (q.size() != pp.image().ambient_dim()) raise(ErrorCode::DimMismatch, "point has wrong length");
  if (!pp.image().contains(q)) raise(ErrorCode::PointOutsideQ, format_vector(q) + " is outside the image");
  return make_cell(pp, defining_faces(pp, q));
}

std::vector<std::size_t> lexicographic_cells(const CellComplex& gamma, const Polytope& q) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gamma.cells.size(); ++i) {
    const Polytope& c = gamma.cells[i].polytope;
    bool touches = std::any_of(q.vertices().begin(), q.vertices().end(), [&](const Vector& v) { return c.contains(v); });
    if (touches) out.push_back(i);
  }
  return out;
}

Graph chamber_adjacency(const CellComplex& gamma) {
  Graph g;
  g.nodes = gamma.chambers.size();
  for (std::size_t i = 0; i < gamma.chambers.size(); ++i) {
    const int top = gamma.cells[gamma.chambers[i]].dim();
    for (std::size_t j = i + 1; j < gamma.chambers.size(); ++j) {
      for (std::size_t w = 0; w < gamma.cells.size(); ++w) {
        if (gamma.cells[w].dim() == top - 1 && gamma.leq(w, gamma.chambers[i]) && gamma.leq(w, gamma.chambers[j])) {
          g.add_edge(i, j);
          break;
        }
      }
    }
  }
  g.normalize();
  return g;
}

}  // namespace fiberfan
