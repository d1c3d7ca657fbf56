#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fiberfan/secondary.hpp"
#include "fiberfan/toric.hpp"

namespace fiberfan {

using Json = nlohmann::json;

/// Parsed input file: a polytope with projection, a point configuration, or a lattice fan.
struct Input {
  std::string name;
  std::vector<Vector> vertices;
  std::optional<Matrix> matrix;
  std::optional<PointConfiguration> points;
  std::optional<LatticeFan> fan;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> cones;
  std::vector<std::string> cone_names;
  std::optional<IntMatrix> sublattice;

  bool is_polytope() const { return !vertices.empty(); }
  bool is_points() const { return points.has_value(); }
  bool is_fan() const { return fan.has_value(); }
  bool has_projection() const { return points.has_value() || (is_polytope() && matrix.has_value()); }
  Polytope polytope() const;
  /// Vertices with their matrix, or the standard simplex onto the points.
  ProjectedPolytope projected() const;
  /// Cone by name, or by comma-separated ray indices in brackets, e.g. "[0,1]".
  Cone cone(const std::string& ref) const;
};

Input parse_input(const std::string& path);
Input parse_input_text(const std::string& text, const std::string& source = "<input>");
Json input_to_json(const Input& in);

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(LabelSet s);
Json to_json(const Cone& c);
Json to_json(const Fan& f);
Json to_json(const FaceCollection& fc);
Json to_json(const ConeCollection& cc);
Json to_json(const Graph& g);
Json to_json(const Triangulation& t);

/// Two-space indented dump with a trailing newline; keys sorted.
std::string emit_json(const Json& report);
std::string emit_dot(const Graph& g, const std::string& name, const std::vector<std::string>& labels = {});

}  // namespace fiberfan
