#include <algorithm>
#include <set>

#include "fiberfan/error.hpp"
#include "geometry.hpp"

namespace fiberfan {

using detail::Lifted;

PointConfiguration PointConfiguration::of(std::vector<Vector> points) {
  if (points.empty()) raise(ErrorCode::TooFewPoints, "no points");
  PointConfiguration a;
  a.dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != a.dim) raise(ErrorCode::DimMismatch, "points of different dimensions");
    for (const auto& x : p) {
      if (x.get_den() != 1) raise(ErrorCode::DegenerateInput, "point coordinates must be integers");
    }
  }
  if (points.size() < a.dim + 1) raise(ErrorCode::TooFewPoints, "need at least dim + 1 points");
  if (points.size() > 64) raise(ErrorCode::DegenerateInput, "at most 64 points");
  if (affine_dimension(points) != static_cast<int>(a.dim)) {
    raise(ErrorCode::NotFullDimensional, "points lie in a proper affine subspace");
  }
  a.points = std::move(points);
  return a;
}

Triangulation Triangulation::of(std::vector<LabelSet> simplices) {
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  Triangulation t;
  for (LabelSet s : simplices) t.used = t.used | s;
  t.simplices = std::move(simplices);
  return t;
}

ProjectedPolytope simplex_projection(const PointConfiguration& a) {
  const std::size_t n = a.size() - 1, d = a.dim;
  std::vector<Vector> verts{Vector(n, Rational(0))};
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, Rational(0));
    e[i] = 1;
    verts.push_back(std::move(e));
  }
  Matrix m(d, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) m(k, i) = a.points[i + 1][k] - a.points[0][k];
  }
  return ProjectedPolytope(Polytope::from_vertices(verts), make_projection(m));
}

namespace {

// Interior point of conv(a) off every hyperplane spanned by the points.
Vector generic_point(const PointConfiguration& a, const Lifted& g, const std::vector<LabelSet>& simplices) {
  Vector c(a.dim, Rational(0));
  for (const auto& p : a.points) {
    for (std::size_t k = 0; k < a.dim; ++k) c[k] += p[k];
  }
  for (auto& x : c) x /= static_cast<long>(a.size());
  std::vector<Vector> normals;
  for (LabelSet s : simplices) {
    for (int v : s.labels()) {
      LabelSet f = s;
      f.erase(v);
      normals.push_back(g.normal(f));
    }
  }
  for (long t = 97;; t += 2) {
    Vector x = c;
    Rational step(1, t);
    for (std::size_t k = 0; k < a.dim; ++k) {
      x[k] += step;
      step /= 7;
    }
    Vector hx = homogenize(x);
    bool generic = std::none_of(normals.begin(), normals.end(), [&](const Vector& h) { return dot(h, hx) == 0; });
    if (!generic) continue;
    bool inside = std::any_of(simplices.begin(), simplices.end(), [&](LabelSet s) {
      Matrix m(a.dim + 1, a.dim + 1);
      auto sl = s.labels();
      for (std::size_t k = 0; k <= a.dim; ++k) {
        for (std::size_t i = 0; i < sl.size(); ++i) m(k, i) = g.lifted(static_cast<std::size_t>(sl[i]))[k];
      }
      Vector b = *solve_linear(m, hx);
      return std::all_of(b.begin(), b.end(), [](const Rational& r) { return r > 0; });
    });
    if (inside) return x;
  }
}

bool in_simplex(const Lifted& g, LabelSet s, const Vector& hx) {
  auto sl = s.labels();
  Matrix m(g.dim() + 1, sl.size());
  for (std::size_t k = 0; k <= g.dim(); ++k) {
    for (std::size_t i = 0; i < sl.size(); ++i) m(k, i) = g.lifted(static_cast<std::size_t>(sl[i]))[k];
  }
  Vector b = *solve_linear(m, hx);
  return std::all_of(b.begin(), b.end(), [](const Rational& r) { return r > 0; });
}

}  // namespace

Enumeration<Triangulation> enumerate_triangulations(const PointConfiguration& a, std::size_t cap, bool all_vertices) {
  Lifted g(a);
  const std::vector<LabelSet> simplices = g.simplices();
  const Vector x0 = homogenize(generic_point(a, g, simplices));
  const std::size_t n = a.size();

  Enumeration<Triangulation> result;
  std::vector<LabelSet> chosen;
  auto compatible = [&](LabelSet t) {
    return std::all_of(chosen.begin(), chosen.end(), [&](LabelSet s) { return g.proper(s, t); });
  };
  auto rec = [&](auto&& self) -> void {
    if (result.truncated) return;
    if (++result.nodes > cap) {
      result.truncated = true;
      return;
    }
    // Smallest interior facet with a simplex on one side only.
    std::optional<std::pair<LabelSet, std::size_t>> open;
    for (LabelSet s : chosen) {
      for (int v : s.labels()) {
        LabelSet f = s;
        f.erase(v);
        if (open && !(f < open->first)) continue;
        if (g.on_boundary(f)) continue;
        auto count = std::count_if(chosen.begin(), chosen.end(), [&](LabelSet t) { return f.subset_of(t); });
        if (count == 1) open = {f, static_cast<std::size_t>(v)};
      }
    }
    if (!open) {
      Triangulation t = Triangulation::of(chosen);
      if (!all_vertices || t.used == LabelSet::first(static_cast<int>(n))) result.items.push_back(std::move(t));
      return;
    }
    const auto [f, v] = *open;
    const int away = -g.side(f, v);
    for (std::size_t p = 0; p < n; ++p) {
      if (f.contains(static_cast<int>(p)) || g.side(f, p) != away) continue;
      LabelSet t = f;
      t.insert(static_cast<int>(p));
      if (!compatible(t)) continue;
      chosen.push_back(t);
      self(self);
      chosen.pop_back();
      if (result.truncated) return;
    }
  };
  for (LabelSet s : simplices) {
    if (!in_simplex(g, s, x0)) continue;
    chosen = {s};
    rec(rec);
    if (result.truncated) break;
  }
  return result;
}

void check_triangulation(const PointConfiguration& a, const Triangulation& t) {
  Lifted g(a);
  auto fail = [](const std::string& why) { raise(ErrorCode::InvalidTriangulation, why); };
  if (t.simplices.empty()) fail("no simplices");
  const LabelSet all = LabelSet::first(static_cast<int>(a.size()));
  for (LabelSet s : t.simplices) {
    if (!s.subset_of(all)) fail("simplex " + s.to_string() + " uses an unknown point");
    if (static_cast<std::size_t>(s.size()) != a.dim + 1 || !g.independent(s)) {
      fail("simplex " + s.to_string() + " is not full-dimensional");
    }
  }
  for (std::size_t i = 0; i < t.simplices.size(); ++i) {
    for (std::size_t j = i + 1; j < t.simplices.size(); ++j) {
      if (!g.proper(t.simplices[i], t.simplices[j])) {
        fail("simplices " + t.simplices[i].to_string() + " and " + t.simplices[j].to_string() + " overlap");
      }
    }
  }
  for (LabelSet s : t.simplices) {
    for (int v : s.labels()) {
      LabelSet f = s;
      f.erase(v);
      if (g.on_boundary(f)) continue;
      bool other_side = std::any_of(t.simplices.begin(), t.simplices.end(), [&](LabelSet u) {
        if (u == s || !f.subset_of(u)) return false;
        int w = u.minus(f).labels().front();
        return g.side(f, static_cast<std::size_t>(w)) == -g.side(f, static_cast<std::size_t>(v));
      });
      if (!other_side) fail("interior facet " + f.to_string() + " has a simplex on one side only");
    }
  }
}

FaceCollection as_string(const Triangulation& t) {
  std::set<LabelSet> faces;
  for (LabelSet s : t.simplices) {
    const std::uint64_t bits = s.bits();
    for (std::uint64_t sub = bits; sub != 0; sub = (sub - 1) & bits) faces.insert(LabelSet(sub));
  }
  return FaceCollection::of({faces.begin(), faces.end()}, Provenance::Candidate);
}

}  // namespace fiberfan
