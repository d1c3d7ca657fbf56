#include "doctest.h"
#include "oracles.hpp"

#include "fiberfan/arrangement.hpp"
#include "fiberfan/error.hpp"
#include "fiberfan/fan.hpp"
#include "fiberfan/integer.hpp"
#include "fiberfan/lp.hpp"
#include "fiberfan/polytope.hpp"
#include "fiberfan/projection.hpp"

using namespace fiberfan;

namespace {

Vector v(std::initializer_list<long> xs) {
  Vector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Vector> square() { return {v({0, 0}), v({1, 0}), v({1, 1}), v({0, 1})}; }
std::vector<Vector> pentagon() { return {v({0, 0}), v({2, 0}), v({3, 2}), v({1, 4}), v({-1, 2})}; }

Cone ray(std::initializer_list<long> r) { return Cone::from_generators({v(r)}, {}, r.size()); }

}  // namespace

TEST_CASE("rationals parse and normalize") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(format_rational(parse_rational(" -4/2 ")) == "-2");
}

TEST_CASE("malformed rationals are rejected") {
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("primitive vectors") {
  Vector p = primitive({Rational(2, 3), Rational(-4, 3), 0});
  CHECK(p == v({1, -2, 0}));
  CHECK(primitive_oriented(v({0, -3, 6})) == v({0, 1, -2}));
  CHECK(is_zero(primitive(v({0, 0}))));
}

TEST_CASE("kernel and rank") {
  auto k = kernel_basis({v({1, 1, 1})}, 3);
  CHECK(k.size() == 2);
  for (const auto& x : k) CHECK(dot(v({1, 1, 1}), x) == 0);
  CHECK(rank_of({v({1, 2}), v({2, 4})}, 2) == 1);
  CHECK(affine_dimension({v({0, 0}), v({1, 1}), v({2, 2})}) == 1);
}

TEST_CASE("smith divisors agree with determinant gcds") {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  IntVector d = smith_divisors(m, 3);
  REQUIRE(d.size() == 3);
  std::vector<Vector> rows;
  for (const auto& r : m) rows.push_back(to_rationals(r));
  Rational det = oracle::det(rows);
  CHECK(Rational(d[0] * d[1] * d[2]) == abs(det));
  CHECK(d[0] == 2);
  CHECK(d[1] % d[0] == 0);
  CHECK(d[2] % d[1] == 0);
}

TEST_CASE("integer kernel is saturated") {
  IntMatrix k = integer_kernel({{0, 1}}, 2);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == IntVector{1, 0});
  IntMatrix k2 = integer_kernel({{2, 4}}, 2);
  REQUIRE(k2.size() == 1);
  CHECK(abs(k2[0][0]) == 2);
  CHECK(abs(k2[0][1]) == 1);
}

TEST_CASE("exact simplex") {
  LinearProgram lp(2);
  lp.nonnegative = {true, true};
  lp.objective = v({3, 2});
  lp.add(v({1, 1}), Relation::LessEqual, 4);
  lp.add(v({1, 3}), Relation::LessEqual, 6);
  lp.add(v({1, 0}), Relation::LessEqual, 3);
  LpResult r = solve(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 11);

  LinearProgram bad(1);
  bad.add(v({1}), Relation::GreaterEqual, 2);
  bad.add(v({1}), Relation::LessEqual, 1);
  CHECK(solve(bad).status == LpStatus::Infeasible);

  LinearProgram open(1);
  open.objective = v({1});
  open.add(v({1}), Relation::GreaterEqual, -5);
  CHECK(solve(open).status == LpStatus::Unbounded);

  LinearProgram eq(2);
  eq.objective = v({-1, -1});
  eq.add(v({1, -1}), Relation::Equal, -3);
  eq.add(v({1, 0}), Relation::GreaterEqual, 0);
  eq.add(v({0, 1}), Relation::GreaterEqual, 0);
  LpResult e = solve(eq);
  REQUIRE(e.status == LpStatus::Optimal);
  CHECK(e.value == -3);
}

TEST_CASE("projection pairs") {
  ProjectionPair sq = make_projection(Matrix::from_rows({v({1, 0})}, 2));
  REQUIRE(sq.kernel_basis.size() == 1);
  CHECK(sq.kernel_basis[0] == v({0, 1}));
  CHECK(sq.dual.apply(v({5, 7})) == v({7}));

  ProjectionPair id = make_projection(Matrix::identity(2));
  CHECK(id.kernel_basis.empty());

  ProjectionPair diag = make_projection(Matrix::from_rows({v({1, 1})}, 2));
  REQUIRE(diag.kernel_basis.size() == 1);
  CHECK(diag.kernel_basis[0] == v({1, -1}));
  CHECK(diag.dual.apply(v({4, 1})) == v({3}));
  // Covectors pulled back from W vanish on the kernel.
  for (const auto& w : {v({1}), v({-3})}) {
    CHECK(is_zero(diag.dual.apply(diag.forward.apply_transpose(w))));
  }

  CHECK_THROWS_AS(make_projection(Matrix::from_rows({v({1, 2}), v({2, 4})}, 2)), Error);
}

TEST_CASE("cones have canonical keys in both representations") {
  Cone h = Cone::from_constraints({v({1, 0}), v({0, 1})}, {}, 2);
  Cone g = Cone::from_generators({v({2, 0}), v({0, 3}), v({1, 1})}, {}, 2);
  CHECK(h == g);
  CHECK(h.rays().size() == 2);
  CHECK(h.dim() == 2);
  Cone half = Cone::from_constraints({v({0, 1})}, {}, 2);
  CHECK(half.lineality().size() == 1);
  CHECK(!half.strongly_convex());
  CHECK(half.faces().size() == 2);
  CHECK(Cone::zero(3).dim() == 0);
  CHECK(Cone::whole(3).dim() == 3);
  CHECK(h.faces().size() == 4);
  CHECK(h.in_relint(h.relint_point()));
}

TEST_CASE("cone operations") {
  Cone q1 = Cone::from_generators({v({1, 0}), v({0, 1})}, {}, 2);
  Cone q3 = Cone::from_generators({v({-1, 0}), v({0, -1})}, {}, 2);
  CHECK(intersect(q1, q3) == Cone::zero(2));
  CHECK(intersect(q1, q1) == q1);
  Matrix px = Matrix::from_rows({v({1, 0})}, 2);
  Cone im = image(q1, px);
  CHECK(im == ray({1}));
  CHECK(im.dim() == 1);
  Cone wide = Cone::from_generators({v({1, 1}), v({-1, 1})}, {}, 2);
  CHECK(!image(wide, px).strongly_convex());
  CHECK(is_face_of(ray({1, 0}), q1));
  CHECK(!is_face_of(ray({1, 1}), q1));
  CHECK(is_face_of(Cone::zero(2), q1));
  CHECK_THROWS_AS(intersect(q1, Cone::zero(3)), Error);
}

TEST_CASE("intersection is commutative and associative") {
  Cone a = Cone::from_generators({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})}, {}, 3);
  Cone b = Cone::from_generators({v({1, 1, 0}), v({0, 1, 1}), v({-1, 0, 1})}, {}, 3);
  Cone c = Cone::from_constraints({v({1, -1, 1})}, {}, 3);
  CHECK(intersect(a, b) == intersect(b, a));
  CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
}

TEST_CASE("polytope validation") {
  CHECK_THROWS_AS(Polytope::from_vertices({v({0, 0}), v({2, 0}), v({1, 0})}), Error);
  CHECK_THROWS_AS(Polytope::from_vertices({v({0, 0}), v({0, 0}), v({1, 1})}), Error);
  Polytope h = Polytope::hull({v({0, 0}), v({2, 0}), v({1, 0}), v({0, 2})});
  CHECK(h.size() == 3);
}

TEST_CASE("face lattices") {
  Polytope sq = Polytope::from_vertices(square());
  FaceLattice l(sq);
  CHECK(l.size() == 10);
  CHECK(l.is_face(LabelSet::of({2, 3})));
  CHECK(!l.is_face(LabelSet::of({0, 2})));

  FaceLattice tri(Polytope::from_vertices({v({0, 0}), v({1, 0}), v({0, 1})}));
  CHECK(tri.size() == 8);

  Polytope pent = Polytope::from_vertices(pentagon());
  FaceLattice lp(pent);
  auto brute = oracle::facets_by_brute_force(pentagon());
  CHECK(std::set<LabelSet>(lp.facets().begin(), lp.facets().end()) == brute);
  int vertices = 0, edges = 0;
  for (std::size_t i = 0; i < lp.size(); ++i) {
    vertices += lp.dim(i) == 0;
    edges += lp.dim(i) == 1;
  }
  CHECK(vertices == 5);
  CHECK(edges == 5);
}

TEST_CASE("face lattice of a 3-polytope matches brute-force facets") {
  std::vector<Vector> cube;
  for (int i = 0; i < 8; ++i) cube.push_back(v({i & 1, (i >> 1) & 1, (i >> 2) & 1}));
  Polytope p = Polytope::from_vertices(cube);
  FaceLattice l(p);
  CHECK(std::set<LabelSet>(l.facets().begin(), l.facets().end()) == oracle::facets_by_brute_force(cube));
  CHECK(l.size() == 28);
}

TEST_CASE("normal cones and fans") {
  Polytope sq = Polytope::from_vertices(square());
  FaceLattice l(sq);
  CHECK(normal_cone(sq, l, LabelSet::of({2, 3})) == ray({0, 1}));
  CHECK(normal_cone(sq, l, LabelSet::of({0})) ==
        Cone::from_generators({v({-1, 0}), v({0, -1})}, {}, 2));
  CHECK(normal_cone(sq, l, l.top()) == Cone::zero(2));
  CHECK_THROWS_AS(normal_cone(sq, l, LabelSet::of({0, 2})), Error);

  std::vector<Cone> cones;
  for (std::size_t i = 1; i < l.size(); ++i) {
    Cone c = normal_cone(sq, l, l.faces()[i]);
    CHECK(c.dim() + l.dim(i) == 2);
    cones.push_back(c);
  }
  Fan fan(cones, 2, false);
  CHECK(fan.size() == 9);
  CHECK(fan.maximal_cones().size() == 4);
  CHECK(fan.is_complete());
  CHECK(fan.is_face_to_face());
  CHECK(fan.closed_under_faces());
}

TEST_CASE("normal cone round trip") {
  Polytope p = Polytope::from_vertices(pentagon());
  FaceLattice l(p);
  for (std::size_t i = 1; i < l.size(); ++i) {
    Vector psi = normal_cone(p, l, l.faces()[i]).relint_point();
    Rational best;
    LabelSet argmax;
    for (std::size_t k = 0; k < p.size(); ++k) {
      Rational val = dot(psi, p.vertices()[k]);
      if (argmax.empty() || val > best) {
        best = val;
        argmax = LabelSet::of({static_cast<int>(k)});
      } else if (val == best) {
        argmax.insert(static_cast<int>(k));
      }
    }
    CHECK(argmax == l.faces()[i]);
  }
}

TEST_CASE("common refinement") {
  Fan halves({ray({1}), ray({-1})}, 1);
  Fan line({Cone::whole(1)}, 1);
  Fan r = common_refinement({halves, line});
  CHECK(r.size() == 3);
  CHECK(r == halves);

  Fan axes({Cone::from_constraints({v({0, 1})}, {}, 2), Cone::from_constraints({v({0, -1})}, {}, 2)}, 2);
  Fan diag({Cone::from_constraints({v({1, 1})}, {}, 2), Cone::from_constraints({v({-1, -1})}, {}, 2)}, 2);
  Fan both = common_refinement({axes, diag});
  CHECK(both.maximal_cones().size() == 4);
  CHECK(both.is_face_to_face());
  CHECK(refines(both, axes));
  CHECK(refines(both, diag));
  CHECK(!refines(axes, both));

  Fan partial({ray({1})}, 1);
  CHECK_THROWS_AS(common_refinement({partial, line}), Error);
}

TEST_CASE("arrangement faces of the plane") {
  auto faces = arrangement_faces(Cone::whole(2), {v({1, 0}), v({0, 1}), v({1, -1})});
  CHECK(faces.size() == 13);
  CHECK(union_covers({Cone::from_constraints({v({1, 0})}, {}, 2), Cone::from_constraints({v({-1, 0})}, {}, 2)},
                     Cone::whole(2)));
  CHECK(!union_covers({ray({1, 0})}, Cone::from_generators({v({1, 0}), v({0, 1})}, {}, 2)));
}
