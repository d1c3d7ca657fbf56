#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "fiberfan/commands.hpp"
#include "fiberfan/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fiberfan;
using fx::v;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::string fixture(const std::string& name) { return std::string(FIBERFAN_FIXTURE_DIR) + "/" + name + ".json"; }

template <typename T>
std::vector<T> sorted(std::vector<T> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

template <typename T>
std::size_t position(const std::vector<T>& xs, const T& x) {
  return static_cast<std::size_t>(std::find(xs.begin(), xs.end(), x) - xs.begin());
}

// Minimal elements by pairwise comparison.
std::set<std::size_t> minimal_by_pairs(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < n && minimal; ++j) {
      if (j != i && leq(j, i) && !leq(i, j)) minimal = false;
    }
    if (minimal) out.insert(i);
  }
  return out;
}

unsigned long catalan(unsigned long n) {
  // C(2n, n) / (n + 1)
  unsigned long c = 1;
  for (unsigned long k = 1; k <= n; ++k) c = c * (n + k) / k;
  return c / (n + 1);
}

// Every point off a triangle lifts strictly above the plane through the lifted triangle.
bool heights_certify(const std::vector<Vector>& pts, const Triangulation& t) {
  if (!t.heights || t.heights->size() != pts.size()) return false;
  const Vector& h = *t.heights;
  for (const LabelSet& s : t.simplices) {
    const auto ls = s.labels();
    if (ls.size() != 3) return false;
    auto row = [&](int p) {
      const auto i = static_cast<std::size_t>(ls[0]), j = static_cast<std::size_t>(p);
      return Vector{pts[j][0] - pts[i][0], pts[j][1] - pts[i][1], h[j] - h[i]};
    };
    const Vector a = row(ls[1]), b = row(ls[2]);
    const Rational base = oracle::det({Vector{a[0], a[1]}, Vector{b[0], b[1]}});
    for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
      if (s.contains(p)) continue;
      if (oracle::det({a, b, row(p)}) / base <= 0) return false;
    }
  }
  return true;
}

// Sign vectors of all integer points in a box, as an oracle for the covectors of a central arrangement.
std::set<SignVector> sampled_covectors(const std::vector<Vector>& normals, long radius) {
  std::set<SignVector> out;
  for (long x = -radius; x <= radius; ++x) {
    for (long y = -radius; y <= radius; ++y) {
      SignVector s;
      for (const auto& n : normals) {
        const int sign = sgn(n[0] * x + n[1] * y);
        s.push_back(sign > 0 ? '+' : sign < 0 ? '-' : '0');
      }
      out.insert(s);
    }
  }
  return out;
}

std::string run_process(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome sq_micro_suite() {
  Outcome o;
  ProjectedPolytope pp = parse_input(fixture("SQ")).projected();
  const DualityData data = duality_data(pp);
  o.expect(data.gamma.cells.size() == 3, "Gamma cells != 3");
  o.expect(data.gamma.chambers.size() == 1, "Gamma chambers != 1");
  const auto& gcones = data.gstar.fan.cones();
  o.expect(gcones.size() == 3, "Gamma* cones != 3");

  const auto t = sorted(enumerate_locally_coherent_strings(pp, data.gamma, 1000).items);
  const auto tcoh = sorted(data.strings);
  o.expect(t.size() == 3 && t == tcoh, "T != T_coh or |T| != 3");

  const auto ts = sorted(enumerate_locally_coherent_costrings(pp.normal_fan(), pp.projection().dual, 1000).items);
  const auto tscoh = sorted(data.costrings);

  std::vector<std::size_t> smap, cmap;
  for (const auto& s : data.strings) smap.push_back(position(tcoh, s));
  for (const auto& c : data.costrings) cmap.push_back(position(tscoh, c));
  PosetReport a = check_anti_isomorphism(
      gcones.size(), [&](std::size_t x, std::size_t y) { return gcones[y].contains(gcones[x]); }, tcoh.size(),
      [&](std::size_t x, std::size_t y) { return string_leq(tcoh[x], tcoh[y]); }, smap, "Gamma* -> T_coh");
  PosetReport b = check_anti_isomorphism(
      data.gamma.cells.size(), [&](std::size_t x, std::size_t y) { return data.gamma.leq(x, y); }, tscoh.size(),
      [&](std::size_t x, std::size_t y) { return costring_leq(tscoh[x], tscoh[y]); }, cmap, "Gamma -> T*_coh");
  o.expect(a.bijective && a.order_reversing, "anti-isomorphism (T_coh, Gamma*)");
  o.expect(b.bijective && b.order_reversing, "anti-isomorphism (T*_coh, Gamma)");

  const auto smin = minimal_by_pairs(t.size(), [&](std::size_t x, std::size_t y) { return string_leq(t[x], t[y]); });
  const auto cmin =
      minimal_by_pairs(ts.size(), [&](std::size_t x, std::size_t y) { return costring_leq(ts[x], ts[y]); });
  for (std::size_t i = 0; i < t.size(); ++i) {
    o.expect(is_tight_string(pp, t[i]) == smin.contains(i), "tight != minimal for a string");
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    o.expect(is_tight_costring(ts[i], pp.projection().dual) == cmin.contains(i), "tight != minimal for a costring");
  }
  return o;
}

Outcome catalan_counts(double limit) {
  Outcome o;
  for (int n = 4; n <= 7; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto pts = fx::parabola_gon(n);
    PointConfiguration a = PointConfiguration::of(pts);
    auto tris = enumerate_triangulations(a, 100000).items;
    const unsigned long expected = catalan(static_cast<unsigned long>(n - 2));
    const std::string tag = std::to_string(n) + "-gon: ";
    o.expect(tris.size() == expected, tag + std::to_string(tris.size()) + " triangulations");
    o.expect(sorted(tris).size() == tris.size(), tag + "repeated triangulation");
    for (auto& t : tris) {
      o.expect(is_regular(a, t), tag + "non-regular triangulation");
      o.expect(heights_certify(pts, t), tag + "heights do not certify");
    }
    SecondaryReport s = secondary_fan(a, 100000);
    const std::size_t maxi = s.fan.fan.maximal_cones().size();
    o.expect(maxi == expected, tag + std::to_string(maxi) + " secondary cones");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(secs < limit, tag + "over time");
  }
  return o;
}

Outcome moae_suite() {
  Outcome o;
  const PointConfiguration a = *parse_input(fixture("MOAE")).points;
  auto tris = enumerate_triangulations(a, 100000).items;
  std::size_t regular = 0;
  for (auto& t : tris) {
    const bool reg = is_regular(a, t);
    regular += reg;
    const bool projective = is_projective_fan(fan_of_triangulation(a, t)).projective;
    o.expect(reg == projective, "regularity and projectivity disagree");
  }
  o.expect(tris.size() > regular, "no non-regular triangulation");
  return o;
}

void duality_on(const std::string& name, Outcome& o) {
  ProjectedPolytope pp = parse_input(fixture(name)).projected();
  const DualityData data = duality_data(pp);
  const auto t = sorted(enumerate_locally_coherent_strings(pp, data.gamma, 100000).items);
  const auto ts = sorted(enumerate_locally_coherent_costrings(pp.normal_fan(), pp.projection().dual, 100000).items);
  const auto vcones = sorted(enumerate_virtual_cones(pp, data, 100000).items);
  const auto vcells = sorted(enumerate_virtual_cells(pp, data, 100000).items);
  for (const auto& c : vcones) o.expect(is_virtual_cone(pp, data, c), name + ": enumerated cone set fails the check");
  for (const auto& f : vcells) o.expect(is_virtual_cell(pp, data, f), name + ": enumerated face set fails the check");

  std::vector<ConeCollection> moved;
  std::vector<FaceCollection> back;
  std::vector<std::size_t> mc, mb;
  for (const auto& s : t) {
    moved.push_back(transport(pp, s));
    mc.push_back(position(vcones, moved.back()));
  }
  for (const auto& c : ts) {
    back.push_back(transport(pp, c));
    mb.push_back(position(vcells, back.back()));
  }
  o.expect(sorted(moved) == vcones, name + ": T does not map onto the virtual cones");
  o.expect(sorted(back) == vcells, name + ": T* does not map onto the virtual cells");
  PosetReport a = check_anti_isomorphism(
      t.size(), [&](std::size_t x, std::size_t y) { return string_leq(t[x], t[y]); }, vcones.size(),
      [&](std::size_t x, std::size_t y) { return virtual_cone_leq(data, vcones[x], vcones[y]); }, mc, "T");
  PosetReport b = check_anti_isomorphism(
      ts.size(), [&](std::size_t x, std::size_t y) { return costring_leq(ts[x], ts[y]); }, vcells.size(),
      [&](std::size_t x, std::size_t y) { return virtual_cell_leq(data, vcells[x], vcells[y]); }, mb, "T*");
  o.expect(a.bijective && b.bijective, name + ": transport is not bijective");
  o.expect(a.counterexamples.empty() && b.counterexamples.empty() && a.order_reversing && b.order_reversing,
           name + ": " + std::to_string(a.counterexamples.size() + b.counterexamples.size()) + " counterexamples");
}

Outcome duality_suite() {
  Outcome o;
  duality_on("SQ", o);
  duality_on("PENT", o);
  return o;
}

Outcome quotient_suite() {
  Outcome o;
  Input c2 = parse_input(fixture("C2FAN"));
  SublatticeData sub = SublatticeData::from_kernel(*c2.sublattice, 2);
  auto q = [&](std::vector<std::string> refs) {
    std::vector<Cone> cones;
    for (const auto& r : refs) cones.push_back(c2.cone(r));
    return quotient_fan(*c2.fan, cones, sub);
  };
  o.expect(q({"σ12", "σ2"}).valid_costring, "{σ12, σ2} rejected");
  o.expect(!q({"σ1", "σ2"}).valid_costring, "{σ1, σ2} accepted");
  o.expect(!q({"σ12", "σ1", "σ2", "σ0"}).valid_costring, "all faces accepted");

  const Fan half_line({Cone::from_generators({v({1})}, {}, 1)}, 1);
  QuotientReport g = q({"σ1", "σ0"});
  o.expect(g.categorical && g.geometric, "{σ1, 0} flags");
  o.expect(g.quotient_fan && g.quotient_fan->fan.cones() == half_line.cones(), "{σ1, 0} quotient fan");
  QuotientReport ng = q({"σ12", "σ2"});
  o.expect(ng.categorical && !ng.geometric, "{σ12, σ2} flags");
  o.expect(ng.quotient_fan && ng.quotient_fan->fan.cones() == half_line.cones(), "{σ12, σ2} quotient fan");

  LatticeFan wide = LatticeFan::from_rays(2, {{1, 1}, {-1, 1}}, {{0, 1}, {0}, {1}, {}});
  QuotientReport d = quotient_fan(wide, wide.fan.cones(), SublatticeData::from_kernel({{0, 1}}, 2));
  o.expect(d.degenerate, "full-line image not degenerate");

  for (const auto& [name, geometric] : {std::pair{"P2FAN", true}, std::pair{"CONESQ", false}}) {
    const LatticeFan fan = *parse_input(fixture(name)).fan;
    CoxData c = cox_construction(fan);
    QuotientReport back = quotient_fan(c.orthant, c.costring.cones, c.ambient);
    const bool same = back.quotient_fan && sorted(back.quotient_fan->fan.cones()) == sorted(fan.fan.cones());
    o.expect(same && c.round_trip, std::string(name) + ": Cox round trip");
    o.expect(c.geometric == geometric, std::string(name) + ": geometric flag");
  }
  CoxData p2 = cox_construction(*parse_input(fixture("P2FAN")).fan);
  o.expect(p2.ambient.ambient == 3 && p2.group.free_rank == 1 && p2.group.torsion.empty(), "P2FAN Cox group");
  return o;
}

void domination_on(const std::string& name, Outcome& o) {
  ProjectedPolytope pp = parse_input(fixture(name)).projected();
  FiberFan gstar = fiber_fan(pp);
  const Matrix& dual = pp.projection().dual;
  const auto ts = enumerate_locally_coherent_costrings(pp.normal_fan(), dual, 100000).items;
  o.expect(!ts.empty(), name + ": no costrings");
  for (const auto& cc : ts) {
    for (const auto& c : cc.cones) {
      // A fiber fan cone with a relative interior point in the image lies inside it.
      const Cone img = image(c, dual);
      std::vector<Cone> inside;
      for (const auto& g : gstar.fan.cones()) {
        if (img.contains(g)) inside.push_back(g);
      }
      bool covered = true;
      for (std::size_t i = 0; i < gstar.fan.size(); ++i) {
        const Cone& g = gstar.fan.cones()[i];
        if (!img.contains(gstar.witnesses[i])) continue;
        covered = covered && img.contains(g);
      }
      o.expect(covered && !inside.empty(), name + ": a fiber fan cone straddles an image cone");
    }
    std::vector<Cone> images;
    for (const auto& c : cc.cones) images.push_back(image(c, dual));
    o.expect(refines(gstar.fan, Fan(images, pp.kernel_dim())), name + ": refines() disagrees");
  }
}

Outcome domination_suite() {
  Outcome o;
  domination_on("SQ", o);
  domination_on("PENT", o);
  return o;
}

Outcome sign_vector_suite() {
  Outcome o;
  const LatticeFan p2 = *parse_input(fixture("P2FAN")).fan;
  SpanArrangement arr = span_arrangement(p2);
  const auto gsv = generalized_sign_vectors(p2.fan, arr);
  const Cone quadrant = Cone::from_generators({v({1, 0}), v({0, 1})}, {}, 2);
  const std::size_t diagonal = position(arr.normals, v({1, -1}));
  bool found = false;
  std::vector<SignVector> raw;
  for (const auto& g : gsv) {
    raw.push_back(g.entries);
    o.expect(g.entries.find_first_not_of('u') != SignVector::npos, "all-u sign vector");
    if (g.source == quadrant && diagonal < g.entries.size()) found = g.entries[diagonal] == 'u';
  }
  o.expect(arr.normals.size() == 3, "P2FAN span arrangement size");
  o.expect(found, "no u-entry for cone(e1, e2) against x = y");

  ExtensionReport ext = canonical_extension(raw, arr);
  const auto oracle = sampled_covectors(arr.normals, 3);
  o.expect(ext.matches_extended_fan, "extension does not match the extended fan");
  o.expect(std::set<SignVector>(ext.covectors.begin(), ext.covectors.end()) == oracle, "covectors differ from sampling");
  o.expect(ext.covectors.size() == 13, "covector count");
  o.expect(ext.axioms.ok, "covector axioms");
  o.expect(canonical_extension(ext.covectors, arr).covectors == ext.covectors, "extension not idempotent");
  return o;
}

Outcome determinism_suite() {
  Outcome o;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(FIBERFAN_FIXTURE_DIR)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  o.expect(!files.empty(), "no fixtures");
  for (const auto& f : files) {
    std::string reference;
    for (const char* jobs : {"1", "4", "1", "4"}) {
      int status = 0;
      const std::string cmd = std::string(FIBERFAN_CLI) + " verify-all '" + f.string() + "' --jobs " + jobs;
      const std::string out = run_process(cmd, status);
      o.expect(status == 0, f.stem().string() + ": verify-all failed with --jobs " + jobs);
      if (reference.empty()) reference = out;
      o.expect(!out.empty() && out == reference, f.stem().string() + ": report differs with --jobs " + jobs);
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "SQ micro-suite", 1, sq_micro_suite},
      {2, "Catalan counts", 4 * 60, [] { return catalan_counts(60); }},
      {3, "MOAE regular vs projective", 5 * 60, moae_suite},
      {4, "virtual duality on SQ and PENT", 5 * 60, duality_suite},
      {5, "quotient fans and Cox round trip", 1, quotient_suite},
      {6, "fiber fan domination", 2 * 60, domination_suite},
      {7, "sign vectors", 1, sign_vector_suite},
      {8, "determinism of verify-all", 0, determinism_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0) o.expect(secs < c.limit, "exceeded " + std::to_string(static_cast<int>(c.limit)) + " s");
    std::printf("%s %d %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs);
    for (const auto& n : o.notes) std::printf("  %s\n", n.c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
