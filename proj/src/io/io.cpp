#include <fstream>
#include <sstream>

#include "fiberfan/error.hpp"
#include "fiberfan/io.hpp"

namespace fiberfan {

namespace {

[[noreturn]] void schema(const std::string& source, const std::string& path, const std::string& what) {
  raise(ErrorCode::SchemaError, source + ": field " + path + ": " + what);
}

Rational rational_at(const Json& j, const std::string& source, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      raise(ErrorCode::ParseError, source + ": field " + path + ": " + e.what());
    }
  }
  if (j.is_number()) raise(ErrorCode::ParseError, source + ": field " + path + ": floats are not exact; use \"p/q\"");
  schema(source, path, "expected a rational");
}

std::vector<Vector> rows_at(const Json& j, const std::string& source, const std::string& path) {
  if (!j.is_array() || j.empty()) schema(source, path, "expected a nonempty array of vectors");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) schema(source, p, "expected an array");
    Vector v;
    for (std::size_t k = 0; k < j[i].size(); ++k) v.push_back(rational_at(j[i][k], source, p + "[" + std::to_string(k) + "]"));
    if (!out.empty() && v.size() != out.front().size()) schema(source, p, "length differs from the first row");
    out.push_back(std::move(v));
  }
  return out;
}

IntMatrix integer_rows_at(const Json& j, const std::string& source, const std::string& path) {
  IntMatrix out;
  auto rows = rows_at(j, source, path);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& x : rows[i]) {
      if (x.get_den() != 1) schema(source, path + "[" + std::to_string(i) + "]", "expected integers");
    }
    out.push_back(to_integers(rows[i]));
  }
  return out;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) line += text[i] == '\n';
  return line;
}

}  // namespace

Polytope Input::polytope() const {
  if (is_polytope()) return Polytope::from_vertices(vertices);
  if (points) return simplex_projection(*points).polytope();
  raise(ErrorCode::SchemaError, name + ": input has no polytope");
}

ProjectedPolytope Input::projected() const {
  if (points) return simplex_projection(*points);
  if (is_polytope() && matrix) return ProjectedPolytope(Polytope::from_vertices(vertices), make_projection(*matrix));
  raise(ErrorCode::SchemaError, name + ": input has no projection (needs \"vertices\" with \"matrix\", or \"points\")");
}

Cone Input::cone(const std::string& ref) const {
  if (!fan) raise(ErrorCode::SchemaError, name + ": cones can only be named in fan inputs");
  std::vector<std::size_t> idx;
  auto it = std::find(cone_names.begin(), cone_names.end(), ref);
  if (it != cone_names.end()) {
    idx = cones[static_cast<std::size_t>(it - cone_names.begin())];
  } else if (ref.size() >= 2 && ref.front() == '[' && ref.back() == ']') {
    std::stringstream ss(ref.substr(1, ref.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.find_first_not_of(" ") == std::string::npos) continue;
      try {
        idx.push_back(std::stoul(item));
      } catch (const std::exception&) {
        raise(ErrorCode::ParseError, "bad ray index \"" + item + "\" in " + ref);
      }
    }
  } else {
    raise(ErrorCode::SchemaError, name + ": unknown cone \"" + ref + "\"");
  }
  std::vector<Vector> gens;
  for (std::size_t i : idx) {
    if (i >= rays.size()) raise(ErrorCode::SchemaError, name + ": ray index out of range in " + ref);
    gens.push_back(to_rationals(rays[i]));
  }
  return Cone::from_generators(gens, {}, fan->rank);
}

Input parse_input_text(const std::string& text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    raise(ErrorCode::ParseError, source + ": line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) schema(source, "<root>", "expected an object");
  if (j.contains("schema") && j["schema"] != 1) schema(source, "schema", "unsupported version");
  Input in;
  in.name = j.value("name", source);
  const int kinds = j.contains("vertices") + j.contains("points") + j.contains("rays");
  if (kinds != 1) schema(source, "<root>", "exactly one of \"vertices\", \"points\", \"rays\" is required");

  if (j.contains("vertices")) {
    in.vertices = rows_at(j["vertices"], source, "vertices");
    if (j.contains("matrix")) {
      auto rows = rows_at(j["matrix"], source, "matrix");
      const std::size_t cols = rows.front().size();
      in.matrix = Matrix::from_rows(std::move(rows), cols);
    }
  } else if (j.contains("points")) {
    auto pts = rows_at(j["points"], source, "points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (const auto& x : pts[i]) {
        if (x.get_den() != 1) schema(source, "points[" + std::to_string(i) + "]", "expected integers");
      }
    }
    in.points = PointConfiguration::of(std::move(pts));
  } else {
    in.rays = integer_rows_at(j["rays"], source, "rays");
    const std::size_t rank = j.contains("rank") ? j["rank"].get<std::size_t>() : in.rays.front().size();
    if (!j.contains("cones") || !j["cones"].is_array()) schema(source, "cones", "expected an array of index lists");
    for (std::size_t i = 0; i < j["cones"].size(); ++i) {
      const Json& c = j["cones"][i];
      const std::string p = "cones[" + std::to_string(i) + "]";
      if (!c.is_array()) schema(source, p, "expected an array of ray indices");
      std::vector<std::size_t> idx;
      for (const auto& x : c) {
        if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0)) {
          schema(source, p, "ray indices must be nonnegative integers");
        }
        if (x.get<std::size_t>() >= in.rays.size()) schema(source, p, "ray index out of range");
        idx.push_back(x.get<std::size_t>());
      }
      in.cones.push_back(std::move(idx));
    }
    if (j.contains("names")) {
      if (!j["names"].is_array() || j["names"].size() != in.cones.size()) {
        schema(source, "names", "expected one name per cone");
      }
      for (const auto& n : j["names"]) in.cone_names.push_back(n.get<std::string>());
    }
    if (j.contains("sublattice")) in.sublattice = integer_rows_at(j["sublattice"], source, "sublattice");
    in.fan = LatticeFan::from_rays(rank, in.rays, in.cones);
  }
  return in;
}

Input parse_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) raise(ErrorCode::ParseError, path + ": cannot open file");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input_text(ss.str(), path);
}

Json to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(LabelSet s) { return s.labels(); }

Json to_json(const Cone& c) {
  Json rays = Json::array(), lin = Json::array();
  for (const auto& r : c.rays()) rays.push_back(to_json(r));
  for (const auto& l : c.lineality()) lin.push_back(to_json(l));
  return {{"dim", c.dim()}, {"rays", rays}, {"lineality", lin}};
}

Json to_json(const Fan& f) {
  Json a = Json::array();
  for (const auto& c : f.cones()) a.push_back(to_json(c));
  return a;
}

Json to_json(const FaceCollection& fc) {
  Json a = Json::array();
  for (LabelSet s : fc.faces) a.push_back(to_json(s));
  return a;
}

Json to_json(const ConeCollection& cc) {
  Json a = Json::array();
  for (const auto& c : cc.cones) a.push_back(to_json(c));
  return a;
}

Json to_json(const Graph& g) {
  Json e = Json::array();
  for (const auto& [a, b] : g.edges) e.push_back({a, b});
  return {{"nodes", g.nodes}, {"edges", e}};
}

Json to_json(const Triangulation& t) {
  Json s = Json::array();
  for (LabelSet x : t.simplices) s.push_back(to_json(x));
  Json j = {{"simplices", s}};
  switch (t.regularity) {
    case Regularity::Unknown: j["regularity"] = "unknown"; break;
    case Regularity::Regular: j["regularity"] = "regular"; break;
    case Regularity::NonRegular: j["regularity"] = "non-regular"; break;
  }
  if (t.heights) j["heights"] = to_json(*t.heights);
  if (!t.witness.empty()) j["witness"] = t.witness;
  return j;
}

Json input_to_json(const Input& in) {
  Json j = {{"schema", 1}, {"name", in.name}};
  auto rows = [](const std::vector<Vector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
  };
  if (in.is_polytope()) {
    j["vertices"] = rows(in.vertices);
    if (in.matrix) j["matrix"] = rows(in.matrix->row_vectors());
  } else if (in.points) {
    j["points"] = rows(in.points->points);
  } else if (in.fan) {
    std::vector<Vector> rs;
    for (const auto& r : in.rays) rs.push_back(to_rationals(r));
    j["rank"] = in.fan->rank;
    j["rays"] = rows(rs);
    j["cones"] = in.cones;
    if (!in.cone_names.empty()) j["names"] = in.cone_names;
    if (in.sublattice) {
      std::vector<Vector> sb;
      for (const auto& r : *in.sublattice) sb.push_back(to_rationals(r));
      j["sublattice"] = rows(sb);
    }
  }
  return j;
}

std::string emit_json(const Json& report) { return report.dump(2) + "\n"; }

std::string emit_dot(const Graph& g, const std::string& name, const std::vector<std::string>& labels) {
  std::string out = "graph \"" + name + "\" {\n";
  for (std::size_t i = 0; i < g.nodes; ++i) {
    out += "  n" + std::to_string(i);
    if (i < labels.size()) out += " [label=\"" + labels[i] + "\"]";
    out += ";\n";
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

}  // namespace fiberfan
