#include <algorithm>

#include "fiberfan/error.hpp"
#include "fiberfan/toric.hpp"

namespace fiberfan {

CoxData cox_construction(const LatticeFan& fan) {
  const std::vector<Vector> rays = fan.rays();
  const std::size_t m = rays.size();
  const std::size_t n = fan.rank;
  if (m == 0) raise(ErrorCode::DegenerateInput, "fan has no rays");

  Matrix proj(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) proj(i, j) = rays[j][i];
  }
  CoxData out;
  out.geometric = true;
  std::vector<Cone> coord;
  for (const auto& c : fan.fan.cones()) {
    std::vector<Vector> gens;
    for (const auto& r : c.rays()) {
      std::size_t j = static_cast<std::size_t>(std::find(rays.begin(), rays.end(), r) - rays.begin());
      Vector e(m, Rational(0));
      e[j] = 1;
      gens.push_back(std::move(e));
    }
    if (static_cast<int>(gens.size()) != c.dim()) out.geometric = false;
    coord.push_back(Cone::from_generators(gens, {}, m));
  }
  out.orthant = LatticeFan::of(Fan(coord, m));
  out.costring = ConeCollection::of(coord);

  IntMatrix rows;
  for (const auto& r : proj.row_vectors()) rows.push_back(to_integers(r));
  IntVector divs = smith_divisors(rows, m);
  out.group.free_rank = m - divs.size();
  for (const auto& d : divs) {
    if (d > 1) out.group.torsion.push_back(d);
  }
  out.ambient.ambient = m;
  out.ambient.n1_basis = integer_kernel(rows, m);
  out.ambient.projection = proj;
  out.ambient.torsion = out.group.torsion;

  QuotientReport q = quotient_fan(out.orthant, out.costring.cones, out.ambient);
  out.round_trip = q.valid_costring && q.quotient_fan && q.quotient_fan->fan == fan.fan;
  return out;
}

}  // namespace fiberfan
