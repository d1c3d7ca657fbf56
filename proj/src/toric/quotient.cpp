#include <algorithm>

#include "fiberfan/error.hpp"
#include "fiberfan/toric.hpp"

namespace fiberfan {

namespace {

bool is_primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g == 1;
}

Matrix integer_rows(const IntMatrix& rows, std::size_t cols) {
  std::vector<Vector> out;
  for (const auto& r : rows) out.push_back(to_rationals(r));
  return Matrix::from_rows(std::move(out), cols);
}

}  // namespace

LatticeFan LatticeFan::from_rays(std::size_t rank, const std::vector<IntVector>& rays,
                                 const std::vector<std::vector<std::size_t>>& cones) {
  for (const auto& r : rays) {
    if (r.size() != rank) raise(ErrorCode::DimMismatch, "ray of wrong length");
    if (!is_primitive(r)) raise(ErrorCode::NonPrimitiveRay, "ray is not primitive");
  }
  std::vector<Cone> cs;
  for (const auto& idx : cones) {
    std::vector<Vector> gens;
    for (std::size_t i : idx) {
      if (i >= rays.size()) raise(ErrorCode::DegenerateInput, "cone refers to a missing ray");
      gens.push_back(to_rationals(rays[i]));
    }
    cs.push_back(Cone::from_generators(gens, {}, rank));
  }
  return of(Fan(std::move(cs), rank));
}

LatticeFan LatticeFan::of(Fan fan) {
  for (const auto& c : fan.cones()) {
    if (!c.strongly_convex()) raise(ErrorCode::DegenerateInput, "cone " + c.key() + " is not strongly convex");
  }
  LatticeFan lf;
  lf.rank = fan.ambient_dim();
  lf.fan = std::move(fan);
  return lf;
}

std::vector<Vector> LatticeFan::rays() const {
  std::vector<Vector> out;
  for (const auto& c : fan.cones()) {
    if (c.dim() == 1) out.push_back(c.rays().front());
  }
  return out;
}

SublatticeData SublatticeData::from_kernel(const IntMatrix& basis, std::size_t ambient) {
  for (const auto& b : basis) {
    if (b.size() != ambient) raise(ErrorCode::DimMismatch, "sublattice vector of wrong length");
  }
  SublatticeData s;
  s.ambient = ambient;
  s.n1_basis = hermite_basis(basis, ambient);
  s.projection = integer_rows(integer_kernel(s.n1_basis, ambient), ambient);
  if (s.projection.rows() == 0) s.projection = Matrix(0, ambient);
  for (const auto& d : smith_divisors(s.n1_basis, ambient)) {
    if (d > 1) s.torsion.push_back(d);
  }
  return s;
}

SublatticeData SublatticeData::from_projection(const Matrix& map) {
  IntMatrix rows;
  for (const auto& r : map.row_vectors()) rows.push_back(to_integers(r));
  IntVector divs = smith_divisors(rows, map.cols());
  if (divs.size() != map.rows() || std::any_of(divs.begin(), divs.end(), [](const Integer& d) { return d != 1; })) {
    raise(ErrorCode::NotSurjective, "projection is not surjective onto the integer lattice");
  }
  SublatticeData s;
  s.ambient = map.cols();
  s.n1_basis = integer_kernel(rows, map.cols());
  s.projection = map;
  return s;
}

QuotientReport quotient_fan(const LatticeFan& host, const std::vector<Cone>& subset, const SublatticeData& sub) {
  if (sub.ambient != host.rank) raise(ErrorCode::DimMismatch, "sublattice and fan live in different lattices");
  for (const auto& c : subset) {
    if (!host.fan.contains(c)) raise(ErrorCode::NotASubset, "cone " + c.key() + " is not in the fan");
  }
  QuotientReport r;
  const Matrix& proj = sub.projection;
  ConeCollection cc = ConeCollection::of(subset);
  CheckReport chk = validate_costring(cc, host.fan, proj);
  r.valid_costring = chk.ok;
  r.violation = chk.violation;
  std::vector<Cone> images;
  for (const auto& c : cc.cones) images.push_back(image(c, proj));
  r.strongly_convex = std::all_of(images.begin(), images.end(), [](const Cone& c) { return c.strongly_convex(); });
  if (r.valid_costring && r.strongly_convex) {
    r.quotient_fan = LatticeFan::of(Fan(images, proj.rows()));
    r.categorical = true;
    r.geometric = is_tight_costring(cc, proj);
  }
  if (!r.strongly_convex) {
    r.degenerate = true;
    std::vector<Vector> lin;
    for (const auto& c : images) lin.insert(lin.end(), c.lineality().begin(), c.lineality().end());
    IntMatrix lin_int;
    for (const auto& l : reduced_echelon(lin, proj.rows()).rows) lin_int.push_back(to_integers(primitive(l)));
    Reduction red;
    IntMatrix ann = integer_kernel(lin_int, proj.rows());
    red.lineality = integer_kernel(ann, proj.rows());
    red.map = ann.empty() ? Matrix(0, proj.rows()) : integer_rows(ann, proj.rows());
    std::vector<Cone> reduced;
    for (const auto& c : images) reduced.push_back(image(c, red.map));
    red.fan = Fan(std::move(reduced), red.map.rows());
    r.reduction = std::move(red);
  }
  return r;
}

}  // namespace fiberfan
