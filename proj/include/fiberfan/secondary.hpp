#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fiberfan/chamber.hpp"
#include "fiberfan/graph.hpp"
#include "fiberfan/strings.hpp"
#include "fiberfan/toric.hpp"

namespace fiberfan {

/// Integer points a_0, ..., a_n in Z^dim; point i carries label i.
struct PointConfiguration {
  std::size_t dim = 0;
  std::vector<Vector> points;

  /// Throws TooFewPoints below dim + 1 points, NotFullDimensional if the points lie in a hyperplane.
  static PointConfiguration of(std::vector<Vector> points);
  std::size_t size() const { return points.size(); }
};

enum class Regularity { Unknown, Regular, NonRegular };

struct Triangulation {
  /// Maximal simplices, sorted.
  std::vector<LabelSet> simplices;
  LabelSet used;
  Regularity regularity = Regularity::Unknown;
  /// Heights certifying regularity.
  std::optional<Vector> heights;
  std::string witness;

  static Triangulation of(std::vector<LabelSet> simplices);
  bool operator==(const Triangulation& o) const { return simplices == o.simplices; }
  bool operator<(const Triangulation& o) const { return simplices < o.simplices; }
};

/// Standard simplex conv{0, e_1, ..., e_n} with vertex i sent to a_i - a_0.
ProjectedPolytope simplex_projection(const PointConfiguration& a);

/// All triangulations with vertices among the points, in discovery order of a deterministic search.
Enumeration<Triangulation> enumerate_triangulations(const PointConfiguration& a, std::size_t cap,
                                                    bool all_vertices = false);

/// Throws InvalidTriangulation unless t is a triangulation of conv(a).
void check_triangulation(const PointConfiguration& a, const Triangulation& t);

/// Fills regularity, heights and witness.
bool is_regular(const PointConfiguration& a, Triangulation& t);

/// Every nonempty face of every simplex, as faces of the standard simplex.
FaceCollection as_string(const Triangulation& t);

struct SecondaryReport {
  FiberFan fan;
  /// Triangulation read off each maximal cone of the fan, in maximal_cones() order.
  std::vector<Triangulation> cone_triangulations;
  std::size_t regular_count = 0;
  std::size_t triangulation_count = 0;
  bool bijective = false;
  std::vector<std::string> issues;
};

SecondaryReport secondary_fan(const PointConfiguration& a, std::size_t cap);

struct FlipReport {
  std::vector<Triangulation> triangulations;
  Graph flips;
  /// Indices of the regular triangulations.
  std::vector<std::size_t> regular;
  /// Flip graph restricted to regular nodes, reindexed along `regular`.
  Graph regular_flips;
  /// Wall adjacency of the secondary fan, reindexed along `regular`.
  Graph walls;
  bool walls_in_flips = false;
  bool walls_equal_flips = false;
};

/// The two triangulations differ by one bistellar flip on a circuit.
bool is_flip(const PointConfiguration& a, const Triangulation& s, const Triangulation& t);
FlipReport flip_graph(const PointConfiguration& a, std::size_t cap);

/// Cones over the simplices of t at height 1, completed by joining boundary faces with the ray -(c, 1)
/// through the centroid c of the points.
LatticeFan fan_of_triangulation(const PointConfiguration& a, const Triangulation& t);

}  // namespace fiberfan
