#include "json_views.hpp"

namespace fiberfan {

Json rows_json(const std::vector<Vector>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

Json int_rows_json(const IntMatrix& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(to_json(to_rationals(r)));
  return a;
}

Json cell_json(const Cell& c) {
  Json defining = Json::array();
  for (LabelSet f : c.defining) defining.push_back(to_json(f));
  return {{"dim", c.dim()},
          {"defining", defining},
          {"interior", to_json(c.interior)},
          {"vertices", rows_json(c.polytope.vertices())}};
}

Json sublattice_json(const SublatticeData& s) {
  return {{"ambient", s.ambient},
          {"basis", int_rows_json(s.n1_basis)},
          {"projection", rows_json(s.projection.row_vectors())},
          {"torsion", to_json(to_rationals(s.torsion))}};
}

Json lattice_fan_json(const LatticeFan& f) {
  Json maximal = Json::array();
  for (const auto& c : f.fan.maximal_cones()) maximal.push_back(to_json(c));
  return {{"rank", f.rank}, {"rays", rows_json(f.rays())}, {"maximal", maximal}, {"cones", f.fan.size()}};
}

Json quotient_json(const QuotientReport& q) {
  Json j = {{"valid_costring", q.valid_costring},
            {"strongly_convex", q.strongly_convex},
            {"categorical", q.categorical},
            {"geometric", q.geometric},
            {"degenerate", q.degenerate},
            {"violation", q.violation}};
  if (q.quotient_fan) j["fan"] = lattice_fan_json(*q.quotient_fan);
  if (q.reduction) {
    j["reduction"] = {{"lineality", int_rows_json(q.reduction->lineality)},
                      {"map", rows_json(q.reduction->map.row_vectors())},
                      {"fan", to_json(q.reduction->fan)},
                      {"best_effort", q.reduction->best_effort}};
  }
  return j;
}

Json cox_json(const CoxData& c) {
  return {{"ambient", sublattice_json(c.ambient)},
          {"orthant", lattice_fan_json(c.orthant)},
          {"costring", to_json(c.costring)},
          {"group", {{"free_rank", c.group.free_rank}, {"torsion", to_json(to_rationals(c.group.torsion))}}},
          {"geometric", c.geometric},
          {"round_trip", c.round_trip}};
}

Json poset_json(const PosetReport& p) {
  return {{"map", p.map},
          {"elements", p.elements},
          {"relations", p.relations},
          {"order_reversing", p.order_reversing},
          {"bijective", p.bijective},
          {"counterexamples", p.counterexamples}};
}

Graph hasse_diagram(const CellComplex& gamma) {
  Graph g;
  const std::size_t n = gamma.cells.size();
  g.nodes = n;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !gamma.leq(a, b)) continue;
      bool covered = true;
      for (std::size_t m = 0; m < n && covered; ++m) {
        if (m != a && m != b && gamma.leq(a, m) && gamma.leq(m, b)) covered = false;
      }
      if (covered) g.add_edge(a, b);
    }
  }
  g.normalize();
  return g;
}

Graph wall_graph(const Fan& fan) {
  const auto maxi = fan.maximal_cones();
  Graph g;
  g.nodes = maxi.size();
  for (std::size_t s = 0; s < maxi.size(); ++s) {
    for (std::size_t t = s + 1; t < maxi.size(); ++t) {
      if (intersect(maxi[s], maxi[t]).dim() + 1 == maxi[s].dim()) g.add_edge(s, t);
    }
  }
  g.normalize();
  return g;
}

}  // namespace fiberfan
