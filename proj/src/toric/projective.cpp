#include "fiberfan/error.hpp"
#include "fiberfan/lp.hpp"
#include "fiberfan/toric.hpp"

namespace fiberfan {

ProjectivityResult is_projective_fan(const LatticeFan& fan) {
  if (!fan.complete()) raise(ErrorCode::NotComplete, "fan is not complete");
  const std::size_t n = fan.rank;
  const std::vector<Cone> maxi = fan.fan.maximal_cones();
  const std::size_t k = maxi.size();
  const std::size_t slack = n * k;
  LinearProgram lp(n * k + 1);
  lp.nonnegative[slack] = true;
  Vector bound(n * k + 1, Rational(0));
  bound[slack] = 1;
  lp.add(bound, Relation::LessEqual, 1);
  lp.objective[slack] = 1;

  auto row = [&](std::size_t s, std::size_t t, const Vector& r) {
    Vector c(n * k + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      c[t * n + i] += r[i];
      c[s * n + i] -= r[i];
    }
    return c;
  };
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = 0; t < k; ++t) {
      if (s == t) continue;
      Cone wall = intersect(maxi[s], maxi[t]);
      if (wall.dim() + 1 != static_cast<int>(n)) continue;
      if (s < t) {
        for (const auto& r : wall.rays()) lp.add(row(s, t, r), Relation::Equal, 0);
        for (const auto& l : wall.lineality()) lp.add(row(s, t, l), Relation::Equal, 0);
      }
      for (const auto& r : maxi[t].rays()) {
        if (wall.contains(r)) continue;
        Vector c = row(s, t, r);
        c[slack] = -1;
        lp.add(std::move(c), Relation::GreaterEqual, 0);
      }
    }
  }
  LpResult res = solve(lp);
  ProjectivityResult out;
  if (res.status == LpStatus::Optimal && res.value > 0) {
    out.projective = true;
    for (std::size_t s = 0; s < k; ++s) out.certificate.emplace_back(res.x.begin() + s * n, res.x.begin() + (s + 1) * n);
  }
  return out;
}

}  // namespace fiberfan
