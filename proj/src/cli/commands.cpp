#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "fiberfan/commands.hpp"
#include "fiberfan/error.hpp"
#include "json_views.hpp"

namespace fiberfan {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

// Splits on `sep` outside brackets and parentheses.
std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

std::string strip_brackets(std::string s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '(' || s.front() == '[' || s.front() == '{')) s = s.substr(1, s.size() - 2);
  return s;
}

CommandResult reported(Json report) {
  CommandResult r;
  r.report = std::move(report);
  return r;
}

void require(const std::optional<std::string>& field, const char* flag, const std::string& command) {
  if (!field) raise(ErrorCode::SchemaError, command + " needs " + flag);
}

void require_projection(const Input& in, const std::string& command) {
  if (!in.has_projection()) raise(ErrorCode::SchemaError, command + " needs a projection input");
}

const LatticeFan& require_fan(const Input& in, const std::string& command) {
  if (!in.fan) raise(ErrorCode::SchemaError, command + " needs a fan input");
  return *in.fan;
}

const PointConfiguration& require_points(const Input& in, const std::string& command) {
  if (!in.points) raise(ErrorCode::SchemaError, command + " needs a point configuration");
  return *in.points;
}

std::vector<Cone> delta_cones(const Input& in, const Options& opt) {
  std::vector<Cone> out;
  for (const auto& ref : split_top(*opt.delta, ',')) out.push_back(in.cone(ref));
  return out;
}

SublatticeData sublattice_of(const Input& in, const Options& opt, const std::string& command) {
  const LatticeFan& fan = require_fan(in, command);
  if (opt.sublattice) return SublatticeData::from_kernel(parse_sublattice_option(*opt.sublattice), fan.rank);
  if (in.sublattice) return SublatticeData::from_kernel(*in.sublattice, fan.rank);
  raise(ErrorCode::SchemaError, command + " needs --sublattice or a \"sublattice\" field");
}

CommandResult cmd_faces(const Input& in) {
  Polytope p = in.polytope();
  FaceLattice lat(p);
  Json faces = Json::array();
  std::map<int, std::size_t> counts;
  for (std::size_t i = 1; i < lat.size(); ++i) {
    faces.push_back({{"dim", lat.dim(i)}, {"labels", to_json(lat.faces()[i])}});
    ++counts[lat.dim(i)];
  }
  Json f = Json::array();
  for (const auto& [d, n] : counts) f.push_back(n);
  return reported({{"dim", p.dim()}, {"vertices", rows_json(p.vertices())}, {"faces", faces}, {"f_vector", f}});
}

CommandResult cmd_normalfan(const Input& in) {
  Polytope p = in.polytope();
  FaceLattice lat(p);
  Json cones = Json::array();
  std::vector<Cone> all;
  for (std::size_t i = 1; i < lat.size(); ++i) {
    all.push_back(normal_cone(p, lat, lat.faces()[i]));
    cones.push_back({{"face", to_json(lat.faces()[i])}, {"cone", to_json(all.back())}});
  }
  return reported({{"cones", cones}, {"complete", Fan(all, p.ambient_dim()).is_complete()}});
}

CommandResult cmd_chambers(const Input& in) {
  require_projection(in, "chambers");
  ProjectedPolytope pp = in.projected();
  CellComplex gamma = chamber_complex(pp);
  CommandResult r;
  Graph hasse = hasse_diagram(gamma);
  Json cells = Json::array();
  for (const auto& c : gamma.cells) cells.push_back(cell_json(c));
  r.report = {{"cells", cells},
              {"chambers", gamma.chambers},
              {"hasse", to_json(hasse)},
              {"lexicographic", lexicographic_cells(gamma, pp.image())}};
  r.graph = hasse;
  for (std::size_t i = 0; i < gamma.cells.size(); ++i) {
    r.graph_labels.push_back("c" + std::to_string(i) + " dim " + std::to_string(gamma.cells[i].dim()));
  }
  return r;
}

CommandResult cmd_fiberfan(const Input& in) {
  require_projection(in, "fiberfan");
  ProjectedPolytope pp = in.projected();
  FiberFan ff = fiber_fan(pp);
  Json cones = Json::array();
  for (std::size_t i = 0; i < ff.fan.size(); ++i) {
    Json c = to_json(ff.fan.cones()[i]);
    c["witness"] = to_json(ff.witnesses[i]);
    cones.push_back(c);
  }
  CommandResult r;
  r.report = {{"kernel_dim", pp.kernel_dim()},
              {"cones", cones},
              {"maximal", ff.fan.maximal_cones().size()},
              {"complete", ff.fan.is_complete()}};
  r.graph = wall_graph(ff.fan);
  return r;
}

CommandResult cmd_string(const Input& in, const Options& opt) {
  require_projection(in, "string");
  require(opt.witness, "--witness", "string");
  ProjectedPolytope pp = in.projected();
  const Vector psi = parse_vector_option(*opt.witness);
  if (psi.size() != pp.kernel_dim()) raise(ErrorCode::DimMismatch, "witness must have kernel dimension");
  CellComplex gamma = chamber_complex(pp);
  FaceCollection s = coherent_string(pp, gamma, psi);
  return reported({{"witness", to_json(psi)},
           {"faces", to_json(s)},
           {"tight", is_tight_string(pp, s)},
           {"cone", to_json(cone_of(pp, psi))}});
}

CommandResult cmd_costring(const Input& in, const Options& opt) {
  require_projection(in, "costring");
  require(opt.point, "--point", "costring");
  ProjectedPolytope pp = in.projected();
  const Vector q = parse_vector_option(*opt.point);
  Cell c = cell_of(pp, q);
  FiberFan ff = fiber_fan(pp);
  ConeCollection cc = coherent_costring(pp, ff, c);
  return reported({{"point", to_json(q)},
           {"cell", cell_json(c)},
           {"cones", to_json(cc)},
           {"faces", to_json(transport(pp, cc))},
           {"tight", is_tight_costring(cc, pp.projection().dual)}});
}

CommandResult cmd_check_lcs(const Input& in, const Options& opt) {
  require_projection(in, "check-lcs");
  require(opt.faces, "--faces", "check-lcs");
  ProjectedPolytope pp = in.projected();
  FaceCollection fc = parse_faces_option(*opt.faces);
  for (LabelSet f : fc.faces) {
    if (!pp.lattice().is_face(f)) raise(ErrorCode::NotAFace, f.to_string() + " is not a face");
  }
  CheckReport rep = validate_string_subdivision(pp, fc);
  CommandResult r;
  r.ok = rep.ok;
  r.report = {{"faces", to_json(fc)}, {"locally_coherent", rep.ok}, {"violation", rep.violation}};
  if (rep.ok) r.report["tight"] = is_tight_string(pp, fc);
  return r;
}

CommandResult cmd_check_lcc(const Input& in, const Options& opt) {
  CommandResult r;
  CheckReport rep;
  Json cones;
  if (in.fan) {
    require(opt.delta, "--delta", "check-lcc");
    SublatticeData sub = sublattice_of(in, opt, "check-lcc");
    ConeCollection cc = ConeCollection::of(delta_cones(in, opt));
    rep = validate_costring(cc, in.fan->fan, sub.projection);
    cones = to_json(cc);
    if (rep.ok) r.report["tight"] = is_tight_costring(cc, sub.projection);
  } else {
    require_projection(in, "check-lcc");
    require(opt.faces, "--faces", "check-lcc");
    ProjectedPolytope pp = in.projected();
    FaceCollection fc = parse_faces_option(*opt.faces);
    for (LabelSet f : fc.faces) {
      if (!pp.lattice().is_face(f)) raise(ErrorCode::NotAFace, f.to_string() + " is not a face");
    }
    ConeCollection cc = transport(pp, fc);
    rep = validate_costring(cc, pp.normal_fan(), pp.projection().dual);
    cones = to_json(cc);
    if (rep.ok) r.report["tight"] = is_tight_costring(cc, pp.projection().dual);
  }
  r.ok = rep.ok;
  r.report["cones"] = cones;
  r.report["locally_coherent"] = rep.ok;
  r.report["violation"] = rep.violation;
  return r;
}

CommandResult cmd_check_virtual(const Input& in, const Options& opt, bool cells) {
  const std::string name = cells ? "check-vcell" : "check-vcone";
  require_projection(in, name);
  require(opt.faces, "--faces", name);
  ProjectedPolytope pp = in.projected();
  FaceCollection fc = parse_faces_option(*opt.faces);
  for (LabelSet f : fc.faces) {
    if (!pp.lattice().is_face(f)) raise(ErrorCode::NotAFace, f.to_string() + " is not a face");
  }
  DualityData data = duality_data(pp);
  CommandResult r;
  if (cells) {
    r.ok = is_virtual_cell(pp, data, fc);
    r.report = {{"faces", to_json(fc)},
                {"virtual_cell", r.ok},
                {"meets_coherent_strings_once", meets_coherent_strings_once(fc, data.strings)}};
  } else {
    ConeCollection cc = transport(pp, fc);
    r.ok = is_virtual_cone(pp, data, cc);
    r.report = {{"faces", to_json(fc)},
                {"cones", to_json(cc)},
                {"virtual_cone", r.ok},
                {"meets_coherent_costrings_once", meets_coherent_costrings_once(cc, data.costrings)}};
  }
  return r;
}

template <typename T>
void check_cap(const Enumeration<T>& e, std::size_t cap, const std::string& what) {
  if (e.truncated) raise(ErrorCode::CapExceeded, what + " enumeration exceeded the cap of " + std::to_string(cap));
}

CommandResult cmd_enumerate(const Input& in, const Options& opt) {
  Json items = Json::array();
  const std::string& kind = opt.kind;
  if (kind == "triangulations") {
    const PointConfiguration& a = require_points(in, "enumerate");
    auto e = enumerate_triangulations(a, opt.cap, opt.all_vertices);
    check_cap(e, opt.cap, kind);
    for (auto& t : e.items) {
      is_regular(a, t);
      items.push_back(to_json(t));
    }
  } else {
    require_projection(in, "enumerate");
    ProjectedPolytope pp = in.projected();
    if (kind == "strings") {
      auto e = enumerate_locally_coherent_strings(pp, chamber_complex(pp), opt.cap);
      check_cap(e, opt.cap, kind);
      for (const auto& s : e.items) items.push_back({{"faces", to_json(s)}, {"tight", is_tight_string(pp, s)}});
    } else if (kind == "costrings") {
      auto e = enumerate_locally_coherent_costrings(pp.normal_fan(), pp.projection().dual, opt.cap);
      check_cap(e, opt.cap, kind);
      for (const auto& c : e.items) {
        items.push_back({{"faces", to_json(transport(pp, c))}, {"tight", is_tight_costring(c, pp.projection().dual)}});
      }
    } else if (kind == "virtual-cells") {
      auto e = enumerate_virtual_cells(pp, duality_data(pp), opt.cap);
      check_cap(e, opt.cap, kind);
      for (const auto& c : e.items) items.push_back({{"faces", to_json(c)}});
    } else if (kind == "virtual-cones") {
      auto e = enumerate_virtual_cones(pp, duality_data(pp), opt.cap);
      check_cap(e, opt.cap, kind);
      for (const auto& c : e.items) items.push_back({{"faces", to_json(transport(pp, c))}});
    } else {
      raise(ErrorCode::SchemaError, "unknown --kind \"" + kind +
                                        "\" (strings, costrings, virtual-cells, virtual-cones, triangulations)");
    }
  }
  return reported({{"kind", kind}, {"count", items.size()}, {"items", items}});
}

CommandResult cmd_quotient(const Input& in, const Options& opt) {
  const LatticeFan& host = require_fan(in, "quotient");
  require(opt.delta, "--delta", "quotient");
  SublatticeData sub = sublattice_of(in, opt, "quotient");
  QuotientReport q = quotient_fan(host, delta_cones(in, opt), sub);
  CommandResult r;
  r.ok = q.valid_costring;
  r.report = {{"sublattice", sublattice_json(sub)}, {"quotient", quotient_json(q)}};
  return r;
}

CommandResult cmd_cox(const Input& in) {
  CoxData c = cox_construction(require_fan(in, "cox"));
  CommandResult r;
  r.ok = c.round_trip;
  r.report = cox_json(c);
  return r;
}

CommandResult cmd_projective(const Input& in) {
  ProjectivityResult p = is_projective_fan(require_fan(in, "projective"));
  CommandResult r;
  r.ok = p.projective;
  r.report = {{"projective", p.projective}, {"certificate", rows_json(p.certificate)}};
  return r;
}

CommandResult cmd_secondary(const Input& in, const Options& opt) {
  SecondaryReport s = secondary_fan(require_points(in, "secondary"), opt.cap);
  Json tris = Json::array();
  for (const auto& t : s.cone_triangulations) tris.push_back(to_json(t));
  Json cones = Json::array();
  for (const auto& c : s.fan.fan.maximal_cones()) cones.push_back(to_json(c));
  CommandResult r;
  r.ok = s.bijective;
  r.report = {{"maximal_cones", cones},
              {"cone_triangulations", tris},
              {"regular", s.regular_count},
              {"triangulations", s.triangulation_count},
              {"bijective", s.bijective},
              {"issues", s.issues}};
  r.graph = wall_graph(s.fan.fan);
  return r;
}

CommandResult cmd_flips(const Input& in, const Options& opt) {
  FlipReport f = flip_graph(require_points(in, "flips"), opt.cap);
  Json tris = Json::array();
  for (const auto& t : f.triangulations) tris.push_back(to_json(t));
  CommandResult r;
  r.ok = f.walls_in_flips;
  r.report = {{"triangulations", tris},
              {"flips", to_json(f.flips)},
              {"regular", f.regular},
              {"regular_flips", to_json(f.regular_flips)},
              {"walls", to_json(f.walls)},
              {"walls_in_flips", f.walls_in_flips},
              {"walls_equal_flips", f.walls_equal_flips}};
  r.graph = f.flips;
  for (std::size_t i = 0; i < f.triangulations.size(); ++i) {
    const bool reg = f.triangulations[i].regularity == Regularity::Regular;
    r.graph_labels.push_back("T" + std::to_string(i) + (reg ? "" : " non-regular"));
  }
  return r;
}

CommandResult cmd_signvectors(const Input& in) {
  const LatticeFan& fan = require_fan(in, "signvectors");
  SpanArrangement arr = span_arrangement(fan);
  auto gsv = generalized_sign_vectors(fan.fan, arr);
  std::vector<SignVector> entries;
  Json vectors = Json::array();
  for (const auto& g : gsv) {
    entries.push_back(g.entries);
    vectors.push_back({{"cone", to_json(g.source)}, {"signs", g.entries}});
  }
  ExtensionReport ext = canonical_extension(entries, arr);
  CommandResult r;
  r.ok = ext.matches_extended_fan && ext.axioms.ok;
  r.report = {{"normals", rows_json(arr.normals)},
              {"vectors", vectors},
              {"covectors", ext.covectors},
              {"matches_extended_fan", ext.matches_extended_fan},
              {"axioms", ext.axioms.ok},
              {"violation", ext.axioms.violation}};
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "faces",      "normalfan", "chambers",    "fiberfan", "string",    "costring",
      "check-lcs",  "check-lcc", "check-vcell", "check-vcone", "enumerate", "quotient",
      "cox",        "projective", "secondary",  "flips",    "signvectors", "verify-all"};
  return names;
}

CommandResult run_command(const std::string& command, const Input& in, const Options& opt) {
  CommandResult r;
  if (command == "faces") r = cmd_faces(in);
  else if (command == "normalfan") r = cmd_normalfan(in);
  else if (command == "chambers") r = cmd_chambers(in);
  else if (command == "fiberfan") r = cmd_fiberfan(in);
  else if (command == "string") r = cmd_string(in, opt);
  else if (command == "costring") r = cmd_costring(in, opt);
  else if (command == "check-lcs") r = cmd_check_lcs(in, opt);
  else if (command == "check-lcc") r = cmd_check_lcc(in, opt);
  else if (command == "check-vcell") r = cmd_check_virtual(in, opt, true);
  else if (command == "check-vcone") r = cmd_check_virtual(in, opt, false);
  else if (command == "enumerate") r = cmd_enumerate(in, opt);
  else if (command == "quotient") r = cmd_quotient(in, opt);
  else if (command == "cox") r = cmd_cox(in);
  else if (command == "projective") r = cmd_projective(in);
  else if (command == "secondary") r = cmd_secondary(in, opt);
  else if (command == "flips") r = cmd_flips(in, opt);
  else if (command == "signvectors") r = cmd_signvectors(in);
  else if (command == "verify-all") r = verify_all(in, opt);
  else raise(ErrorCode::SchemaError, "unknown command \"" + command + "\"");
  r.report = {{"schema", 1}, {"command", command}, {"input", in.name}, {"ok", r.ok}, {"result", r.report}};
  return r;
}

Vector parse_vector_option(const std::string& text) {
  Vector v;
  for (const auto& item : split_top(strip_brackets(text), ',')) {
    if (item.empty()) raise(ErrorCode::ParseError, "empty entry in \"" + text + "\"");
    v.push_back(parse_rational(item));
  }
  if (v.empty()) raise(ErrorCode::ParseError, "empty vector \"" + text + "\"");
  return v;
}

FaceCollection parse_faces_option(const std::string& text) {
  std::vector<LabelSet> faces;
  for (const auto& part : split_top(text, ';')) {
    std::string body = strip_brackets(part);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::stringstream ss(body);
    std::string tok;
    LabelSet f;
    while (ss >> tok) {
      if (!std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
        raise(ErrorCode::ParseError, "bad label \"" + tok + "\" in --faces");
      }
      const unsigned long label = std::stoul(tok);
      if (label >= 64) raise(ErrorCode::ParseError, "label " + tok + " out of range");
      f.insert(static_cast<int>(label));
    }
    if (f.empty()) raise(ErrorCode::ParseError, "empty face in --faces");
    faces.push_back(f);
  }
  if (faces.empty()) raise(ErrorCode::ParseError, "no faces given");
  return FaceCollection::of(std::move(faces));
}

IntMatrix parse_sublattice_option(const std::string& text) {
  IntMatrix out;
  for (const auto& part : split_top(text, ';')) {
    Vector v = parse_vector_option(part);
    if (!is_integral(v)) raise(ErrorCode::ParseError, "sublattice vectors must be integral");
    out.push_back(to_integers(v));
  }
  return out;
}

}  // namespace fiberfan
