#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "fiberfan/error.hpp"
#include "fiberfan/secondary.hpp"

using namespace fiberfan;
using fx::v;

namespace {

using Pts = std::vector<Vector>;

Rational cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational shoelace(const Pts& cyc) {
  Rational s = 0;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const auto& p = cyc[i];
    const auto& q = cyc[(i + 1) % cyc.size()];
    s += p[0] * q[1] - p[1] * q[0];
  }
  return abs(s) / 2;
}

// Some edge line of one triangle has the other triangle weakly on its far side.
bool separated(const Pts& a, const Pts& b) {
  for (const Pts* t : {&a, &b}) {
    const Pts& o = (t == &a) ? b : a;
    for (int i = 0; i < 3; ++i) {
      const Vector& p = (*t)[i];
      const Vector& q = (*t)[(i + 1) % 3];
      const Vector& r = (*t)[(i + 2) % 3];
      int inside = sgn(cross(p, q, r));
      if (std::all_of(o.begin(), o.end(), [&](const Vector& x) { return sgn(cross(p, q, x)) * inside <= 0; })) return true;
    }
  }
  return false;
}

bool on_open_edge(const Vector& x, const Vector& p, const Vector& q) {
  if (cross(p, q, x) != 0) return false;
  auto between = [](const Rational& u, const Rational& a, const Rational& b) {
    return (a < u && u < b) || (b < u && u < a);
  };
  return between(x[0], p[0], q[0]) || between(x[1], p[1], q[1]);
}

// Planar triangulations by brute force: interior-disjoint, face-to-face, total area = hull area.
long count_triangulations(const Pts& pts, const Rational& hull_area) {
  struct Tri {
    Pts v;
    Rational area;
  };
  std::vector<Tri> tris;
  for (const auto& s : oracle::subsets_of_size(static_cast<int>(pts.size()), 3)) {
    Pts t{pts[s[0]], pts[s[1]], pts[s[2]]};
    Rational ar = abs(cross(t[0], t[1], t[2])) / 2;
    if (ar > 0) tris.push_back({t, ar});
  }
  auto fits = [&](const Tri& a, const Tri& b) {
    if (!separated(a.v, b.v)) return false;
    for (const auto& x : a.v) {
      for (int i = 0; i < 3; ++i) {
        if (on_open_edge(x, b.v[i], b.v[(i + 1) % 3])) return false;
      }
    }
    for (const auto& x : b.v) {
      for (int i = 0; i < 3; ++i) {
        if (on_open_edge(x, a.v[i], a.v[(i + 1) % 3])) return false;
      }
    }
    return true;
  };
  long count = 0;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t start, Rational area) -> void {
    if (area == hull_area) {
      ++count;
      return;
    }
    for (std::size_t i = start; i < tris.size(); ++i) {
      if (area + tris[i].area > hull_area) continue;
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) { return fits(tris[i], tris[j]); })) continue;
      chosen.push_back(i);
      self(self, i + 1, area + tris[i].area);
      chosen.pop_back();
    }
  };
  rec(rec, 0, Rational(0));
  return count;
}

// Lifted non-members lie strictly above the plane through each lifted simplex.
bool heights_certify(const PointConfiguration& a, const Triangulation& t) {
  const Vector& h = *t.heights;
  auto lift = [&](std::size_t i) { return Vector{a.points[i][0], a.points[i][1], h[i], Rational(1)}; };
  for (LabelSet s : t.simplices) {
    auto sl = s.labels();
    std::vector<Vector> base;
    for (int i : sl) base.push_back(lift(static_cast<std::size_t>(i)));
    Vector below{base[0][0], base[0][1], base[0][2] - 1, Rational(1)};
    std::vector<Vector> ref = base;
    ref.push_back(below);
    int down = sgn(oracle::det(ref));
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (s.contains(static_cast<int>(j))) continue;
      std::vector<Vector> m = base;
      m.push_back(lift(j));
      if (sgn(oracle::det(m)) != -down) return false;
    }
  }
  return true;
}

PointConfiguration cfg(const Pts& p) { return PointConfiguration::of(p); }

}  // namespace

TEST_CASE("point configurations and simplex projections") {
  CHECK_THROWS_AS(cfg({v({0, 0}), v({1, 0})}), Error);
  CHECK_THROWS_AS(cfg({v({0, 0}), v({1, 1}), v({2, 2})}), Error);
  auto line = cfg({v({0}), v({1}), v({2})});
  ProjectedPolytope pp = simplex_projection(line);
  CHECK(pp.polytope().dim() == 2);
  CHECK(pp.kernel_dim() == 1);
  CHECK(pp.image().vertices().size() == 2);
  ProjectedPolytope moae = simplex_projection(cfg(fx::moae()));
  CHECK(moae.polytope().dim() == 5);
  CHECK(moae.image().vertices().size() == 3);
}

TEST_CASE("triangulation counts") {
  auto quad = enumerate_triangulations(cfg(fx::square()), 100000);
  CHECK(quad.items.size() == 2);
  for (int n = 4; n <= 7; ++n) {
    auto pts = fx::parabola_gon(n);
    auto t = enumerate_triangulations(cfg(pts), 1000000);
    CHECK(static_cast<long long>(t.items.size()) == oracle::catalan(n - 2));
    CHECK(static_cast<long>(t.items.size()) == count_triangulations(pts, shoelace(pts)));
    for (auto& tri : t.items) CHECK(is_regular(cfg(pts), tri));
  }
  auto pent = enumerate_triangulations(cfg(fx::pentagon()), 100000);
  CHECK(pent.items.size() == 5);
  auto moae = enumerate_triangulations(cfg(fx::moae()), 1000000);
  CHECK(static_cast<long>(moae.items.size()) == count_triangulations(fx::moae(), Rational(8)));
  auto full = enumerate_triangulations(cfg(fx::moae()), 1000000, true);
  for (const auto& t : full.items) CHECK(t.used == LabelSet::first(6));
  CHECK(full.items.size() < moae.items.size());
  auto tiny = enumerate_triangulations(cfg(fx::moae()), 3);
  CHECK(tiny.truncated);
  for (const auto& t : moae.items) CHECK_NOTHROW(check_triangulation(cfg(fx::moae()), t));
}

TEST_CASE("invalid triangulations are rejected") {
  auto a = cfg(fx::square());
  CHECK_THROWS_AS(check_triangulation(a, Triangulation::of({LabelSet::of({0, 1, 2})})), Error);
  CHECK_THROWS_AS(check_triangulation(a, Triangulation::of({LabelSet::of({0, 1, 2}), LabelSet::of({1, 2, 3})})), Error);
  CHECK_NOTHROW(check_triangulation(a, Triangulation::of({LabelSet::of({0, 1, 2}), LabelSet::of({0, 2, 3})})));
  Triangulation bad = Triangulation::of({LabelSet::of({0, 1, 2})});
  CHECK_THROWS_AS(is_regular(a, bad), Error);
}

TEST_CASE("regularity") {
  auto tri = cfg({v({0, 0}), v({1, 0}), v({0, 1})});
  Triangulation one = Triangulation::of({LabelSet::of({0, 1, 2})});
  CHECK(is_regular(tri, one));
  REQUIRE(one.heights);

  auto a = cfg(fx::moae());
  auto all = enumerate_triangulations(a, 1000000);
  std::size_t non_regular = 0;
  for (auto& t : all.items) {
    if (is_regular(a, t)) {
      CHECK(heights_certify(a, t));
    } else {
      ++non_regular;
      CHECK(!t.witness.empty());
    }
  }
  CHECK(non_regular >= 1);
}

TEST_CASE("secondary fans") {
  for (const auto& pts : {fx::square(), fx::pentagon(), fx::moae()}) {
    SecondaryReport r = secondary_fan(cfg(pts), 1000000);
    CHECK(r.bijective);
    CHECK(r.issues.empty());
    CHECK(r.fan.fan.maximal_cones().size() == r.regular_count);
  }
  CHECK(secondary_fan(cfg(fx::square()), 100000).regular_count == 2);
  CHECK(secondary_fan(cfg(fx::pentagon()), 100000).regular_count == 5);
  SecondaryReport m = secondary_fan(cfg(fx::moae()), 1000000);
  CHECK(m.regular_count < m.triangulation_count);
}

TEST_CASE("flip graphs") {
  FlipReport quad = flip_graph(cfg(fx::square()), 100000);
  CHECK(quad.flips.edges.size() == 1);
  FlipReport pent = flip_graph(cfg(fx::pentagon()), 100000);
  CHECK(pent.flips.edges.size() == 5);
  CHECK(pent.flips.connected());
  for (auto d : pent.flips.degrees()) CHECK(d == 2);
  FlipReport hex = flip_graph(cfg(fx::parabola_gon(6)), 100000);
  CHECK(hex.flips.connected());
  // Associahedron: each triangulation of an n-gon has n - 3 diagonals, each flippable.
  for (auto d : hex.flips.degrees()) CHECK(d == 3);
  FlipReport moae = flip_graph(cfg(fx::moae()), 1000000);
  CHECK(moae.walls_in_flips);
  CHECK(moae.walls_equal_flips);
  CHECK(pent.walls_equal_flips);

  auto a = cfg(fx::square());
  Triangulation d1 = Triangulation::of({LabelSet::of({0, 1, 2}), LabelSet::of({0, 2, 3})});
  Triangulation d2 = Triangulation::of({LabelSet::of({0, 1, 3}), LabelSet::of({1, 2, 3})});
  CHECK(is_flip(a, d1, d2));
  CHECK(!is_flip(a, d1, d1));
}

TEST_CASE("fans of triangulations") {
  auto seg = cfg({v({0}), v({2})});
  LatticeFan f = fan_of_triangulation(seg, Triangulation::of({LabelSet::of({0, 1})}));
  CHECK(f.complete());
  CHECK(f.fan.maximal_cones().size() == 3);

  for (const auto& pts : {fx::square(), fx::pentagon(), fx::moae()}) {
    auto a = cfg(pts);
    auto all = enumerate_triangulations(a, 1000000);
    for (auto& t : all.items) {
      LatticeFan dt = fan_of_triangulation(a, t);
      CHECK(dt.complete());
      CHECK(is_regular(a, t) == is_projective_fan(dt).projective);
    }
  }
}

TEST_CASE("triangulations as strings") {
  auto a = cfg(fx::pentagon());
  ProjectedPolytope pp = simplex_projection(a);
  for (const auto& t : enumerate_triangulations(a, 100000).items) {
    FaceCollection s = as_string(t);
    CHECK(is_locally_coherent_string(pp, s));
    CHECK(is_tight_string(pp, s));
  }
}
