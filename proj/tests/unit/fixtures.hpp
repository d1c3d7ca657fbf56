#pragma once

#include <initializer_list>
#include <vector>

#include "fiberfan/chamber.hpp"

namespace fx {

using fiberfan::Matrix;
using fiberfan::Vector;

inline Vector v(std::initializer_list<long> xs) {
  Vector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline std::vector<Vector> square() { return {v({0, 0}), v({1, 0}), v({1, 1}), v({0, 1})}; }
inline std::vector<Vector> pentagon() { return {v({0, 0}), v({2, 0}), v({3, 2}), v({1, 4}), v({-1, 2})}; }
inline std::vector<Vector> moae() {
  return {v({0, 0}), v({4, 0}), v({0, 4}), v({1, 1}), v({2, 1}), v({1, 2})};
}
// Convex n-gon with vertices on a parabola.
inline std::vector<Vector> parabola_gon(int n) {
  std::vector<Vector> pts;
  for (int i = 0; i < n; ++i) pts.push_back(v({i, static_cast<long>(i) * i}));
  return pts;
}

inline fiberfan::ProjectedPolytope sq() {
  return {fiberfan::Polytope::from_vertices(square()),
          fiberfan::make_projection(Matrix::from_rows({v({1, 0})}, 2))};
}

// Standard simplex conv{0, e_1, ..., e_n} mapped onto the configuration.
inline fiberfan::ProjectedPolytope simplex_onto(const std::vector<Vector>& pts) {
  const std::size_t n = pts.size() - 1, d = pts.front().size();
  std::vector<Vector> verts{Vector(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, 0);
    e[i] = 1;
    verts.push_back(e);
  }
  Matrix m(d, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) m(k, i) = pts[i + 1][k] - pts[0][k];
  }
  return {fiberfan::Polytope::from_vertices(verts), fiberfan::make_projection(m)};
}

}  // namespace fx
