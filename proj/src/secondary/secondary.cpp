#include <algorithm>
#include <map>
#include <set>

#include "fiberfan/error.hpp"
#include "fiberfan/lp.hpp"
#include "fiberfan/parallel.hpp"
#include "geometry.hpp"

namespace fiberfan {

using detail::Lifted;

bool is_regular(const PointConfiguration& a, Triangulation& t) {
  check_triangulation(a, t);
  Lifted g(a);
  const std::size_t n = a.size();
  LinearProgram lp(n + 1);
  lp.nonnegative[n] = true;
  lp.objective[n] = 1;
  Vector bound(n + 1, Rational(0));
  bound[n] = 1;
  lp.add(bound, Relation::LessEqual, 1);
  for (LabelSet s : t.simplices) {
    const auto sl = s.labels();
    for (std::size_t j = 0; j < n; ++j) {
      if (s.contains(static_cast<int>(j))) continue;
      Vector beta = g.barycentric(s, j);
      Vector row(n + 1, Rational(0));
      row[j] = 1;
      for (std::size_t i = 0; i < sl.size(); ++i) row[static_cast<std::size_t>(sl[i])] -= beta[i];
      row[n] = -1;
      lp.add(std::move(row), Relation::GreaterEqual, 0);
    }
  }
  LpResult r = solve(lp);
  if (r.status == LpStatus::Optimal && r.value > 0) {
    t.regularity = Regularity::Regular;
    t.heights = Vector(r.x.begin(), r.x.begin() + static_cast<long>(n));
    t.witness.clear();
    return true;
  }
  t.regularity = Regularity::NonRegular;
  t.heights.reset();
  t.witness = "no heights lift every non-member point strictly above each simplex";
  return false;
}

SecondaryReport secondary_fan(const PointConfiguration& a, std::size_t cap) {
  SecondaryReport rep;
  ProjectedPolytope pp = simplex_projection(a);
  CellComplex gamma = chamber_complex(pp);
  rep.fan = fiber_fan(pp);
  auto all = enumerate_triangulations(a, cap);
  if (all.truncated) raise(ErrorCode::CapExceeded, "triangulation enumeration exceeded the cap");
  std::vector<Triangulation> tris = all.items;
  parallel_for(tris.size(), [&](std::size_t i) { is_regular(a, tris[i]); });
  rep.triangulation_count = tris.size();
  std::set<Triangulation> regular;
  for (const auto& t : tris) {
    if (t.regularity == Regularity::Regular) regular.insert(t);
  }
  rep.regular_count = regular.size();

  const auto maxi = rep.fan.fan.maximal_cones();
  rep.cone_triangulations.resize(maxi.size());
  std::vector<std::string> issue(maxi.size());
  parallel_for(maxi.size(), [&](std::size_t k) {
    const Vector& w = rep.fan.witnesses[*rep.fan.fan.find(maxi[k])];
    FaceCollection s = coherent_string(pp, gamma, w);
    std::vector<LabelSet> cells;
    for (LabelSet f : s.faces) {
      if (pp.face_image(pp.face_index(f)).dim() == static_cast<int>(a.dim)) cells.push_back(f);
    }
    Triangulation t = Triangulation::of(std::move(cells));
    try {
      if (!is_regular(a, t)) issue[k] = "cone " + std::to_string(k) + " gives a non-regular triangulation";
    } catch (const Error& e) {
      issue[k] = "cone " + std::to_string(k) + ": " + e.what();
    }
    rep.cone_triangulations[k] = std::move(t);
  });
  for (const auto& s : issue) {
    if (!s.empty()) rep.issues.push_back(s);
  }
  std::set<Triangulation> seen(rep.cone_triangulations.begin(), rep.cone_triangulations.end());
  if (seen.size() != rep.cone_triangulations.size()) rep.issues.push_back("two maximal cones give the same triangulation");
  if (seen != regular) rep.issues.push_back("maximal cones and regular triangulations differ");
  rep.bijective = rep.issues.empty();
  return rep;
}

namespace {

// Circuit signs of Z as (positive part, negative part), or nothing if Z is not a circuit.
std::optional<std::pair<LabelSet, LabelSet>> circuit(const Lifted& g, LabelSet z) {
  const auto zl = z.labels();
  std::vector<Vector> cols;
  for (int i : zl) cols.push_back(g.lifted(static_cast<std::size_t>(i)));
  // Dependencies among the lifted points: kernel of the (d+1) x |Z| matrix.
  std::vector<Vector> rows(g.dim() + 1, Vector(zl.size(), Rational(0)));
  for (std::size_t k = 0; k <= g.dim(); ++k) {
    for (std::size_t i = 0; i < zl.size(); ++i) rows[k][i] = cols[i][k];
  }
  auto ker = kernel_basis(rows, zl.size());
  if (ker.size() != 1) return std::nullopt;
  LabelSet pos, neg;
  for (std::size_t i = 0; i < zl.size(); ++i) {
    int s = sgn(ker[0][i]);
    if (s == 0) return std::nullopt;
    (s > 0 ? pos : neg).insert(zl[i]);
  }
  return std::pair{pos, neg};
}

bool swapped_on(LabelSet z, LabelSet from, LabelSet to, const std::vector<LabelSet>& d1, const std::vector<LabelSet>& d2) {
  std::set<LabelSet> links;
  for (LabelSet s : d1) {
    LabelSet missing = z.minus(s);
    if (missing.size() != 1 || !missing.subset_of(from)) return false;
    links.insert(s.minus(z));
  }
  auto expand = [&](LabelSet part) {
    std::vector<LabelSet> out;
    for (int zi : part.labels()) {
      LabelSet base = z;
      base.erase(zi);
      for (LabelSet l : links) out.push_back(base | l);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  return expand(from) == d1 && expand(to) == d2;
}

bool flip_between(const Lifted& g, const Triangulation& s, const Triangulation& t) {
  std::vector<LabelSet> d1, d2;
  std::set_difference(s.simplices.begin(), s.simplices.end(), t.simplices.begin(), t.simplices.end(), std::back_inserter(d1));
  std::set_difference(t.simplices.begin(), t.simplices.end(), s.simplices.begin(), s.simplices.end(), std::back_inserter(d2));
  if (d1.empty() || d2.empty()) return false;
  LabelSet support;
  for (LabelSet x : d1) support = support | x;
  for (LabelSet x : d2) support = support | x;
  const std::uint64_t bits = support.bits();
  for (std::uint64_t sub = bits; sub != 0; sub = (sub - 1) & bits) {
    LabelSet z(sub);
    if (z.size() < 2 || static_cast<std::size_t>(z.size()) > g.dim() + 2) continue;
    auto c = circuit(g, z);
    if (!c) continue;
    if (swapped_on(z, c->first, c->second, d1, d2) || swapped_on(z, c->second, c->first, d1, d2)) return true;
  }
  return false;
}

}  // namespace

bool is_flip(const PointConfiguration& a, const Triangulation& s, const Triangulation& t) {
  return flip_between(Lifted(a), s, t);
}

FlipReport flip_graph(const PointConfiguration& a, std::size_t cap) {
  FlipReport rep;
  auto all = enumerate_triangulations(a, cap);
  if (all.truncated) raise(ErrorCode::CapExceeded, "triangulation enumeration exceeded the cap");
  rep.triangulations = all.items;
  const std::size_t n = rep.triangulations.size();
  parallel_for(n, [&](std::size_t i) { is_regular(a, rep.triangulations[i]); });
  Lifted g(a);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = flip_between(g, rep.triangulations[i], rep.triangulations[j]) ? 1 : 0;
  });
  rep.flips.nodes = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adj[i][j]) rep.flips.add_edge(i, j);
    }
    if (rep.triangulations[i].regularity == Regularity::Regular) rep.regular.push_back(i);
  }
  rep.flips.normalize();

  std::map<Triangulation, std::size_t> slot;
  for (std::size_t k = 0; k < rep.regular.size(); ++k) slot[rep.triangulations[rep.regular[k]]] = k;
  rep.regular_flips.nodes = rep.regular.size();
  for (std::size_t x = 0; x < rep.regular.size(); ++x) {
    for (std::size_t y = x + 1; y < rep.regular.size(); ++y) {
      if (adj[rep.regular[x]][rep.regular[y]]) rep.regular_flips.add_edge(x, y);
    }
  }
  rep.regular_flips.normalize();

  SecondaryReport sec = secondary_fan(a, cap);
  const auto maxi = sec.fan.fan.maximal_cones();
  rep.walls.nodes = rep.regular.size();
  bool mapped = sec.bijective;
  for (std::size_t s = 0; s < maxi.size() && mapped; ++s) {
    for (std::size_t t = s + 1; t < maxi.size(); ++t) {
      if (intersect(maxi[s], maxi[t]).dim() + 1 != maxi[s].dim()) continue;
      rep.walls.add_edge(slot.at(sec.cone_triangulations[s]), slot.at(sec.cone_triangulations[t]));
    }
  }
  rep.walls.normalize();
  rep.walls_in_flips = mapped && std::all_of(rep.walls.edges.begin(), rep.walls.edges.end(), [&](const auto& e) {
                         return rep.regular_flips.has_edge(e.first, e.second);
                       });
  rep.walls_equal_flips = rep.walls_in_flips && rep.walls.edges == rep.regular_flips.edges;
  return rep;
}

LatticeFan fan_of_triangulation(const PointConfiguration& a, const Triangulation& t) {
  check_triangulation(a, t);
  Lifted g(a);
  const std::size_t n = a.size();
  Vector c(a.dim + 1, Rational(0));
  for (const auto& p : a.points) {
    for (std::size_t k = 0; k < a.dim; ++k) c[k] -= p[k];
  }
  c[a.dim] = -static_cast<long>(n);
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(to_integers(g.lifted(i)));
  rays.push_back(to_integers(primitive(c)));
  std::vector<std::vector<std::size_t>> cones;
  for (LabelSet s : t.simplices) {
    std::vector<std::size_t> idx;
    for (int i : s.labels()) idx.push_back(static_cast<std::size_t>(i));
    cones.push_back(idx);
    for (int v : s.labels()) {
      LabelSet f = s;
      f.erase(v);
      if (!g.on_boundary(f)) continue;
      std::vector<std::size_t> join{n};
      for (int i : f.labels()) join.push_back(static_cast<std::size_t>(i));
      cones.push_back(std::move(join));
    }
  }
  LatticeFan fan = LatticeFan::from_rays(a.dim + 1, rays, cones);
  if (!fan.complete()) raise(ErrorCode::NotFullDimensional, "joined fan is not complete");
  return fan;
}

}  // namespace fiberfan
