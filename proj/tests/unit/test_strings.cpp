#include "doctest.h"
#include "fixtures.hpp"

#include <set>

#include "fiberfan/error.hpp"
#include "fiberfan/strings.hpp"

using namespace fiberfan;
using fx::v;

namespace {

Cone ray(std::initializer_list<long> r) { return Cone::from_generators({v(r)}, {}, r.size()); }
LabelSet L(std::initializer_list<int> xs) { return LabelSet::of(xs); }

// Every subset of nonempty faces passing the validator.
std::set<std::vector<LabelSet>> brute_force_strings(const ProjectedPolytope& pp) {
  std::vector<LabelSet> faces(pp.lattice().faces().begin() + 1, pp.lattice().faces().end());
  std::set<std::vector<LabelSet>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << faces.size()); ++mask) {
    std::vector<LabelSet> pick;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if ((mask >> i) & 1) pick.push_back(faces[i]);
    }
    FaceCollection fc = FaceCollection::of(pick);
    if (is_locally_coherent_string(pp, fc)) out.insert(fc.faces);
  }
  return out;
}

Rational twice_area(const std::vector<Vector>& pts, LabelSet tri) {
  auto l = tri.labels();
  const Vector& a = pts[static_cast<std::size_t>(l[0])];
  const Vector& b = pts[static_cast<std::size_t>(l[1])];
  const Vector& c = pts[static_cast<std::size_t>(l[2])];
  return abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

}  // namespace

TEST_CASE("square coherent strings") {
  auto pp = fx::sq();
  CellComplex gamma = chamber_complex(pp);
  FaceCollection up = coherent_string(pp, gamma, v({1}));
  CHECK(up.faces == FaceCollection::of({L({2}), L({3}), L({2, 3})}).faces);
  FaceCollection flat = coherent_string(pp, gamma, v({0}));
  CHECK(flat.faces == FaceCollection::of({L({0, 1, 2, 3}), L({0, 3}), L({1, 2})}).faces);
  CHECK(validate_string_subdivision(pp, up).ok);
  CHECK(is_tight_string(pp, up));
  CHECK(!is_tight_string(pp, flat));
  CheckReport broken = validate_string_subdivision(pp, FaceCollection::of({L({2, 3})}));
  CHECK(!broken.ok);
  CHECK(!broken.violation.empty());
  // Both edges over [0,1] repeat the same image.
  CHECK(!is_locally_coherent_string(pp, FaceCollection::of({L({2, 3}), L({0, 1}), L({0}), L({1})})));
}

TEST_CASE("string enumeration matches exhaustive search") {
  auto pp = fx::sq();
  CellComplex gamma = chamber_complex(pp);
  auto t = enumerate_locally_coherent_strings(pp, gamma, 100000);
  CHECK(!t.truncated);
  CHECK(t.items.size() == 3);
  std::set<std::vector<LabelSet>> found;
  for (const auto& s : t.items) found.insert(s.faces);
  CHECK(found == brute_force_strings(pp));

  ProjectedPolytope tri(Polytope::from_vertices({v({0, 0}), v({1, 0}), v({0, 1})}),
                        make_projection(Matrix::from_rows({v({1, 0})}, 2)));
  CellComplex g2 = chamber_complex(tri);
  auto t2 = enumerate_locally_coherent_strings(tri, g2, 100000);
  CHECK(t2.items.size() == 3);
  std::set<std::vector<LabelSet>> found2;
  for (const auto& s : t2.items) found2.insert(s.faces);
  CHECK(found2 == brute_force_strings(tri));

  auto capped = enumerate_locally_coherent_strings(pp, gamma, 1);
  CHECK(capped.truncated);
}

TEST_CASE("pentagon minimal strings are triangulations") {
  auto pp = fx::simplex_onto(fx::pentagon());
  CellComplex gamma = chamber_complex(pp);
  auto t = enumerate_locally_coherent_strings(pp, gamma, 1000000);
  REQUIRE(!t.truncated);
  auto minimal = minimal_elements(t.items.size(), [&](std::size_t a, std::size_t b) {
    return string_leq(t.items[a], t.items[b]);
  });
  CHECK(minimal.size() == 5);
  Rational whole = 0;
  const auto pts = fx::pentagon();
  whole = twice_area(pts, L({0, 1, 2})) + twice_area(pts, L({0, 2, 3})) + twice_area(pts, L({0, 3, 4}));
  for (auto i : minimal) {
    CHECK(is_tight_string(pp, t.items[i]));
    Rational total = 0;
    int triangles = 0;
    for (LabelSet f : t.items[i].faces) {
      if (f.size() == 3) {
        total += twice_area(pts, f);
        ++triangles;
      }
    }
    CHECK(triangles == 3);
    CHECK(total == whole);
  }
  for (std::size_t i = 0; i < t.items.size(); ++i) {
    bool is_min = std::find(minimal.begin(), minimal.end(), i) != minimal.end();
    CHECK(is_tight_string(pp, t.items[i]) == is_min);
  }
  // Two different triangulations together repeat images.
  std::vector<LabelSet> both = t.items[minimal[0]].faces;
  both.insert(both.end(), t.items[minimal[1]].faces.begin(), t.items[minimal[1]].faces.end());
  CHECK(!is_locally_coherent_string(pp, FaceCollection::of(both)));
}

TEST_CASE("square costrings") {
  auto pp = fx::sq();
  CellComplex gamma = chamber_complex(pp);
  FiberFan gstar = fiber_fan(pp);
  ConeCollection top = coherent_costring(pp, gstar, gamma.cells.back());
  CHECK(top.cones == ConeCollection::of({ray({0, 1}), ray({0, -1}), Cone::zero(2)}).cones);
  CHECK(is_tight_costring(top, pp.projection().dual));
  Cell left = cell_of(pp, v({0}));
  ConeCollection low = coherent_costring(pp, gstar, left);
  CHECK(low.cones == transport(pp, FaceCollection::of({L({3}), L({0}), L({0, 3})})).cones);
  CHECK(!is_tight_costring(low, pp.projection().dual));
  Fan host = pp.normal_fan();
  for (const auto& c : gamma.cells) CHECK(is_locally_coherent_costring(coherent_costring(pp, gstar, c), host, pp.projection().dual));
  CHECK(transport(pp, top).faces == FaceCollection::of({L({2, 3}), L({0, 1}), L({0, 1, 2, 3})}).faces);
}

TEST_CASE("costrings on the quadrant") {
  Cone e1 = ray({1, 0}), e2 = ray({0, 1});
  Cone quad = Cone::from_generators({v({1, 0}), v({0, 1})}, {}, 2);
  Fan host({quad}, 2);
  Matrix px = Matrix::from_rows({v({1, 0})}, 2);
  CHECK(is_locally_coherent_costring(ConeCollection::of({quad, e2}), host, px));
  CHECK(!is_locally_coherent_costring(ConeCollection::of({e1, e2}), host, px));
  CHECK(!is_locally_coherent_costring(ConeCollection::of(host.cones()), host, px));
  CHECK_THROWS_AS(validate_costring(ConeCollection::of({ray({1, 1})}), host, px), Error);

  auto all = enumerate_locally_coherent_costrings(host, px, 100000);
  REQUIRE(all.items.size() == 2);
  CHECK(all.items[0] == ConeCollection::of({Cone::zero(2), e1}));
  CHECK(all.items[1] == ConeCollection::of({e2, quad}));

  Fan point({Cone::zero(2)}, 2);
  auto trivial = enumerate_locally_coherent_costrings(point, px, 100);
  REQUIRE(trivial.items.size() == 1);
  CHECK(trivial.items[0].cones.size() == 1);
}

TEST_CASE("virtual cells and cones") {
  auto pp = fx::sq();
  DualityData d = duality_data(pp);

  for (const auto& cc : d.costrings) CHECK(is_virtual_cell(pp, d, transport(pp, cc)));
  for (const auto& s : d.strings) CHECK(is_virtual_cone(pp, d, transport(pp, s)));
  CHECK(!is_virtual_cell(pp, d, FaceCollection{}));
  CHECK(!is_virtual_cone(pp, d, ConeCollection::of(pp.normal_fan().cones())));

  // Brute force over all collections of nonempty faces.
  std::vector<LabelSet> universe(pp.lattice().faces().begin() + 1, pp.lattice().faces().end());
  std::size_t meets = 0, virt = 0;
  for (unsigned mask = 1; mask < (1U << universe.size()); ++mask) {
    std::vector<LabelSet> faces;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (mask >> i & 1U) faces.push_back(universe[i]);
    }
    FaceCollection fc = FaceCollection::of(faces);
    bool m = meets_coherent_strings_once(fc, d.strings);
    bool vc = is_virtual_cell(pp, d, fc);
    CHECK((!vc || m));
    meets += m;
    virt += vc;
  }
  CHECK(virt == 3);
  CHECK(meets == 125);

  auto cells = enumerate_virtual_cells(pp, d, 100000);
  auto cones = enumerate_virtual_cones(pp, d, 100000);
  CHECK(cells.items.size() == 3);
  CHECK(cones.items.size() == 3);
  for (const auto& c : cells.items) CHECK(is_virtual_cell(pp, d, c));
  for (const auto& c : cones.items) CHECK(is_virtual_cone(pp, d, c));
}

TEST_CASE("strings and costrings match virtual cones and cells") {
  for (auto pp : {fx::sq(), fx::simplex_onto(fx::pentagon())}) {
    DualityData d = duality_data(pp);
    auto t = enumerate_locally_coherent_strings(pp, d.gamma, 1000000);
    auto ts = enumerate_locally_coherent_costrings(pp.normal_fan(), pp.projection().dual, 1000000);
    auto vcones = enumerate_virtual_cones(pp, d, 1000000);
    auto vcells = enumerate_virtual_cells(pp, d, 1000000);
    REQUIRE(!t.truncated);
    REQUIRE(!ts.truncated);
    std::vector<ConeCollection> moved;
    for (const auto& s : t.items) moved.push_back(transport(pp, s));
    std::sort(moved.begin(), moved.end());
    CHECK(moved == vcones.items);
    std::vector<FaceCollection> back;
    for (const auto& c : ts.items) back.push_back(transport(pp, c));
    std::sort(back.begin(), back.end());
    CHECK(back == vcells.items);
    for (const auto& s : d.strings) CHECK(std::find(t.items.begin(), t.items.end(), s) != t.items.end());
    for (const auto& c : d.costrings) CHECK(std::find(ts.items.begin(), ts.items.end(), c) != ts.items.end());
  }
}

TEST_CASE("transport round trip") {
  auto pp = fx::simplex_onto(fx::pentagon());
  CellComplex gamma = chamber_complex(pp);
  auto t = enumerate_locally_coherent_strings(pp, gamma, 1000000);
  for (const auto& s : t.items) CHECK(transport(pp, transport(pp, s)) == s);
}

TEST_CASE("anti-isomorphism checks catch corrupted maps") {
  auto leq = [](std::size_t a, std::size_t b) { return a <= b; };
  auto geq = [](std::size_t a, std::size_t b) { return a >= b; };
  PosetReport good = check_anti_isomorphism(3, leq, 3, geq, {0, 1, 2}, "identity");
  CHECK(good.order_reversing);
  CHECK(good.bijective);
  CHECK(good.counterexamples.empty());
  PosetReport bad = check_anti_isomorphism(3, leq, 3, geq, {1, 0, 2}, "swapped");
  CHECK(!bad.order_reversing);
  CHECK(!bad.counterexamples.empty());
  PosetReport clash = check_anti_isomorphism(2, leq, 2, geq, {0, 0}, "collapsed");
  CHECK(!clash.bijective);
}
