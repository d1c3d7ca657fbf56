#include "fiberfan/arrangement.hpp"

#include <algorithm>
#include <set>

namespace fiberfan {

namespace {

bool splits(const Cone& c, const Vector& h) {
  for (const auto& l : c.lineality()) {
    if (sgn(dot(h, l)) != 0) return true;
  }
  bool pos = false, neg = false;
  for (const auto& r : c.rays()) {
    int s = sgn(dot(h, r));
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  return pos && neg;
}

std::vector<Vector> normalized(const std::vector<Vector>& hyperplanes) {
  std::vector<Vector> out;
  for (const auto& h : hyperplanes) {
    if (!is_zero(h)) out.push_back(primitive_oriented(h));
  }
  std::sort(out.begin(), out.end(), [](const Vector& a, const Vector& b) { return compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Cone> arrangement_faces(const Cone& region, const std::vector<Vector>& hyperplanes) {
  std::vector<Cone> faces = region.faces();
  for (const auto& h : normalized(hyperplanes)) {
    std::vector<Cone> next;
    for (const auto& c : faces) {
      if (!splits(c, h)) {
        next.push_back(c);
        continue;
      }
      std::vector<Vector> ineqs = c.facets();
      std::vector<Vector> eqs = c.equations();
      ineqs.push_back(h);
      next.push_back(Cone::from_constraints(ineqs, eqs, c.ambient_dim()));
      ineqs.back() = negated(h);
      next.push_back(Cone::from_constraints(ineqs, eqs, c.ambient_dim()));
      ineqs.pop_back();
      eqs.push_back(h);
      next.push_back(Cone::from_constraints(ineqs, eqs, c.ambient_dim()));
    }
    faces = std::move(next);
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

std::vector<Cone> arrangement_chambers(const Cone& region, const std::vector<Vector>& hyperplanes) {
  std::vector<Cone> chambers{region};
  for (const auto& h : normalized(hyperplanes)) {
    std::vector<Cone> next;
    for (const auto& c : chambers) {
      if (!splits(c, h)) {
        next.push_back(c);
        continue;
      }
      std::vector<Vector> ineqs = c.facets();
      ineqs.push_back(h);
      next.push_back(Cone::from_constraints(ineqs, c.equations(), c.ambient_dim()));
      ineqs.back() = negated(h);
      next.push_back(Cone::from_constraints(ineqs, c.equations(), c.ambient_dim()));
    }
    chambers = std::move(next);
  }
  std::sort(chambers.begin(), chambers.end());
  return chambers;
}

bool union_covers(const std::vector<Cone>& pieces, const Cone& target) {
  if (target.dim() == 0) return !pieces.empty();
  // Closed pieces cover the target iff the ones of full dimension in it do.
  std::vector<Cone> full;
  for (const auto& p : pieces) {
    Cone q = intersect(p, target);
    if (q.dim() != target.dim()) continue;
    if (q == target) return true;
    full.push_back(std::move(q));
  }
  if (full.empty()) return false;
  std::vector<Vector> hyperplanes;
  for (const auto& q : full) hyperplanes.insert(hyperplanes.end(), q.facets().begin(), q.facets().end());
  const std::vector<Cone> chambers = arrangement_chambers(target, hyperplanes);
  return std::all_of(chambers.begin(), chambers.end(), [&](const Cone& c) {
    const Vector x = c.relint_point();
    return std::any_of(full.begin(), full.end(), [&](const Cone& q) { return q.contains(x); });
  });
}

}  // namespace fiberfan
