#include "fiberfan/polytope.hpp"

#include <algorithm>
#include <set>

#include "fiberfan/error.hpp"

namespace fiberfan {

namespace {

Vector dehomogenize(const Vector& h) {
  Vector p(h.begin(), h.end() - 1);
  return scaled(p, 1 / h.back());
}

}  // namespace

Polytope Polytope::hull(const std::vector<Vector>& points) {
  if (points.empty()) raise(ErrorCode::DegenerateInput, "hull of no points");
  const std::size_t d = points.front().size();
  std::vector<Vector> lifted;
  for (const auto& p : points) {
    if (p.size() != d) raise(ErrorCode::DimMismatch, "points of different lengths");
    lifted.push_back(homogenize(p));
  }
  Polytope poly;
  poly.ambient_ = d;
  poly.cone_ = Cone::from_generators(lifted, {}, d + 1);
  std::set<std::string> extreme;
  for (const auto& r : poly.cone_.rays()) extreme.insert(format_vector(dehomogenize(r)));
  for (const auto& p : points) {
    auto it = extreme.find(format_vector(p));
    if (it == extreme.end()) continue;
    extreme.erase(it);
    poly.vertices_.push_back(p);
  }
  return poly;
}

Polytope Polytope::from_vertices(const std::vector<Vector>& vertices) {
  Polytope p = hull(vertices);
  if (p.vertices_.size() != vertices.size()) {
    raise(ErrorCode::DegenerateInput, "vertices are not distinct points in convex position");
  }
  return p;
}

Polytope Polytope::from_homogeneous(const Cone& cone) {
  if (cone.ambient_dim() == 0) raise(ErrorCode::DimMismatch, "homogeneous cone needs positive ambient dimension");
  if (!cone.strongly_convex()) raise(ErrorCode::DegenerateInput, "homogeneous cone has lineality");
  Polytope poly;
  poly.ambient_ = cone.ambient_dim() - 1;
  poly.cone_ = cone;
  for (const auto& r : cone.rays()) {
    if (sgn(r.back()) <= 0) raise(ErrorCode::DegenerateInput, "unbounded polyhedron");
    poly.vertices_.push_back(dehomogenize(r));
  }
  return poly;
}

Vector Polytope::centroid() const {
  if (vertices_.empty()) raise(ErrorCode::DegenerateInput, "centroid of the empty polytope");
  Vector c = zeros(ambient_);
  for (const auto& v : vertices_) c = add(c, v);
  return scaled(c, Rational(1, static_cast<unsigned long>(vertices_.size())));
}

LabelSet Polytope::tight_labels(const Vector& covector) const {
  LabelSet s;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (sgn(dot(covector, homogenize(vertices_[i]))) == 0) s.insert(static_cast<int>(i));
  }
  return s;
}

std::vector<LabelSet> Polytope::facet_label_sets() const {
  std::vector<LabelSet> out;
  for (const auto& f : cone_.facets()) out.push_back(tight_labels(f));
  return out;
}

std::vector<Vector> select(const std::vector<Vector>& points, LabelSet labels) {
  std::vector<Vector> out;
  for (int l : labels.labels()) out.push_back(points.at(static_cast<std::size_t>(l)));
  return out;
}

FaceLattice::FaceLattice(const Polytope& p) {
  if (p.size() > 64) raise(ErrorCode::DegenerateInput, "at most 64 vertices are supported");
  facets_ = p.facet_label_sets();
  std::set<LabelSet> all{LabelSet::first(static_cast<int>(p.size())), LabelSet()};
  std::vector<LabelSet> queue(all.begin(), all.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& f : facets_) {
      LabelSet next = queue[head] & f;
      if (all.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<std::pair<int, LabelSet>> keyed;
  for (const auto& s : all) keyed.emplace_back(affine_dimension(select(p.vertices(), s)), s);
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [d, s] : keyed) {
    dims_.push_back(d);
    faces_.push_back(s);
  }
}

std::optional<std::size_t> FaceLattice::index_of(LabelSet face) const {
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i] == face) return i;
  }
  return std::nullopt;
}

LabelSet FaceLattice::smallest_face_containing(LabelSet s) const {
  LabelSet out = top();
  for (const auto& f : facets_) {
    if (s.subset_of(f)) out = out & f;
  }
  return out;
}

Cone normal_cone(const Polytope& p, const FaceLattice& lattice, LabelSet face) {
  if (face.empty() || !lattice.is_face(face)) raise(ErrorCode::NotAFace, face.to_string() + " is not a nonempty face");
  const std::size_t d = p.ambient_dim();
  const auto& facets = p.homogeneous().facets();
  std::vector<Vector> rays, lin;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (!face.subset_of(lattice.facets()[i])) continue;
    rays.push_back(negated(Vector(facets[i].begin(), facets[i].end() - 1)));
  }
  for (const auto& e : p.homogeneous().equations()) {
    Vector linear(e.begin(), e.end() - 1);
    if (!is_zero(linear)) lin.push_back(linear);
  }
  return Cone::from_generators(rays, lin, d);
}

}  // namespace fiberfan
