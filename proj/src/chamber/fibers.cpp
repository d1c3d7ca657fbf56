#include <algorithm>
#include <set>

#include "fiberfan/chamber.hpp"
#include "fiberfan/error.hpp"
#include "fiberfan/parallel.hpp"

namespace fiberfan {

namespace {

Vector lift(const ProjectedPolytope& pp, const Vector& q) {
  auto x = solve_linear(pp.projection().forward, q);
  if (!x) raise(ErrorCode::NotSurjective, "cannot lift " + format_vector(q));
  return *x;
}

Vector linear_part(const Vector& homogeneous) { return Vector(homogeneous.begin(), homogeneous.end() - 1); }

void require_in_image(const ProjectedPolytope& pp, const Vector& q) {
  if (q.size() != pp.image().ambient_dim()) raise(ErrorCode::DimMismatch, "point has wrong length");
  if (!pp.image().contains(q)) raise(ErrorCode::PointOutsideQ, format_vector(q) + " is outside the image");
}

void require_kernel_covector(const ProjectedPolytope& pp, const Vector& psi) {
  if (psi.size() != pp.kernel_dim()) raise(ErrorCode::DimMismatch, "covector has wrong length");
}

Fan normal_fan_of(const Polytope& p) {
  FaceLattice lattice(p);
  std::vector<Cone> cones;
  for (std::size_t i = 1; i < lattice.size(); ++i) cones.push_back(normal_cone(p, lattice, lattice.faces()[i]));
  return Fan(std::move(cones), p.ambient_dim(), false);
}

}  // namespace

Polytope fiber(const ProjectedPolytope& pp, const Vector& q) {
  require_in_image(pp, q);
  const Vector x0 = lift(pp, q);
  const std::size_t r = pp.kernel_dim();
  std::vector<Vector> ineqs, eqs;
  auto restrict_covector = [&](const Vector& h) {
    Vector a = linear_part(h);
    Vector t = pp.projection().dual.apply(a);
    t.push_back(dot(a, x0) + h.back());
    return t;
  };
  for (const auto& f : pp.polytope().homogeneous().facets()) ineqs.push_back(restrict_covector(f));
  for (const auto& e : pp.polytope().homogeneous().equations()) eqs.push_back(restrict_covector(e));
  ineqs.push_back(unit(r + 1, r));
  return Polytope::from_homogeneous(Cone::from_constraints(ineqs, eqs, r + 1));
}

Fan fiber_normal_fan(const ProjectedPolytope& pp, const CellComplex& gamma, const Cell& c) {
  if (!gamma.find(c)) raise(ErrorCode::CellNotInComplex, "cell is not part of the complex");
  return normal_fan_of(fiber(pp, c.interior));
}

Cone local_cone(const ProjectedPolytope& pp, const CellComplex& gamma, const Cell& c, const Vector& psi) {
  require_kernel_covector(pp, psi);
  Fan delta = fiber_normal_fan(pp, gamma, c);
  return delta.cones()[*delta.minimal_cone_containing(psi)];
}

LabelSet minimal_face_over(const ProjectedPolytope& pp, const Vector& q, const Vector& psi) {
  require_kernel_covector(pp, psi);
  Polytope f = fiber(pp, q);
  Rational best;
  std::vector<const Vector*> argmax;
  for (const auto& t : f.vertices()) {
    Rational val = dot(psi, t);
    if (argmax.empty() || val > best) {
      best = val;
      argmax.clear();
    }
    if (val == best) argmax.push_back(&t);
  }
  Vector mean = zeros(pp.kernel_dim());
  for (const Vector* t : argmax) mean = add(mean, *t);
  mean = scaled(mean, Rational(1, static_cast<unsigned long>(argmax.size())));
  Vector x = lift(pp, q);
  for (std::size_t i = 0; i < pp.kernel_dim(); ++i) x = add(x, scaled(pp.projection().kernel_basis[i], mean[i]));
  LabelSet face = pp.lattice().top();
  const Polytope& p = pp.polytope();
  const auto& facets = p.homogeneous().facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (sgn(dot(facets[i], homogenize(x))) == 0) face = face & pp.lattice().facets()[i];
  }
  return face;
}

Cone cone_of(const ProjectedPolytope& pp, const Vector& psi) {
  require_kernel_covector(pp, psi);
  std::vector<Vector> ineqs, eqs;
  for (std::size_t i = 1; i < pp.lattice().size(); ++i) {
    const Cone& c = pp.dual_image(i);
    if (!c.contains(psi)) continue;
    ineqs.insert(ineqs.end(), c.facets().begin(), c.facets().end());
    eqs.insert(eqs.end(), c.equations().begin(), c.equations().end());
  }
  return Cone::from_constraints(ineqs, eqs, pp.kernel_dim());
}

FiberFan fiber_fan(const ProjectedPolytope& pp) {
  const std::size_t r = pp.kernel_dim();
  const int full = static_cast<int>(r);
  FiberFan out;
  if (r == 0) {
    out.fan = Fan({Cone::zero(0)}, 0);
    out.witnesses.push_back({});
    return out;
  }
  Cone start;
  for (long t = 1;; ++t) {
    Vector psi(r);
    Rational power = 1;
    for (std::size_t i = 0; i < r; ++i, power *= t) psi[i] = power;
    start = cone_of(pp, psi);
    if (start.dim() == full) break;
    if (t > 10000) raise(ErrorCode::DegenerateInput, "no generic covector found");
  }
  std::vector<Cone> maximal{start};
  std::set<std::string> seen{start.key()};
  for (std::size_t head = 0; head < maximal.size(); ++head) {
    const Cone sigma = maximal[head];
    const auto& normals = sigma.facets();
    std::vector<Cone> neighbor(normals.size());
    parallel_for(normals.size(), [&](std::size_t k) {
      std::vector<Vector> eqs = sigma.equations();
      eqs.push_back(normals[k]);
      Vector w = Cone::from_constraints(sigma.facets(), eqs, r).relint_point();
      for (Rational eps = 1;; eps /= 2) {
        Cone c = cone_of(pp, subtract(w, scaled(normals[k], eps)));
        if (c.dim() == full && c.contains(w)) {
          neighbor[k] = std::move(c);
          return;
        }
        if (eps < Rational(1, 1L << 40)) raise(ErrorCode::DegenerateInput, "failed to cross a wall of the fiber fan");
      }
    });
    for (auto& c : neighbor) {
      if (seen.insert(c.key()).second) maximal.push_back(std::move(c));
    }
  }
  out.fan = Fan(std::move(maximal), r, true);
  for (const auto& c : out.fan.cones()) out.witnesses.push_back(c.relint_point());
  return out;
}

}  // namespace fiberfan
