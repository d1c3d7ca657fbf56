#include <algorithm>
#include <set>

#include "fiberfan/commands.hpp"
#include "fiberfan/error.hpp"
#include "fiberfan/parallel.hpp"
#include "json_views.hpp"

namespace fiberfan {

namespace {

struct Suite {
  std::string name;
  Json checks = Json::object();
  bool passed = true;

  void expect(const std::string& key, bool value) {
    checks[key] = value;
    passed = passed && value;
  }
  Json json() const { return {{"name", name}, {"passed", passed}, {"checks", checks}}; }
};

template <typename T>
std::vector<T> uncapped(Enumeration<T> e, std::size_t cap, const std::string& what) {
  if (e.truncated) raise(ErrorCode::CapExceeded, what + " exceeded the cap of " + std::to_string(cap));
  return std::move(e.items);
}

template <typename T>
std::vector<T> distinct(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <typename T>
std::size_t index_in(const std::vector<T>& sorted, const T& x) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

template <typename T>
bool contains_all(const std::vector<T>& sorted, const std::vector<T>& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](const T& x) { return std::binary_search(sorted.begin(), sorted.end(), x); });
}

Suite io_suite(const Input& in) {
  Suite s{"io-round-trip"};
  const Json first = input_to_json(in);
  const Json again = input_to_json(parse_input_text(emit_json(first), in.name));
  s.expect("reproduced", first == again);
  return s;
}

std::vector<Suite> projection_suites(const Input& in, const Options& opt, Json& summary) {
  ProjectedPolytope pp = in.projected();
  const DualityData data = duality_data(pp);
  const Matrix& dual = pp.projection().dual;
  const auto& gcones = data.gstar.fan.cones();
  std::vector<Suite> out;

  Suite cx{"chamber-complex"};
  cx.checks["cells"] = data.gamma.cells.size();
  cx.checks["chambers"] = data.gamma.chambers.size();
  cx.checks["hasse_edges"] = data.gamma.hasse_edge_count();
  cx.checks["fiber_fan_cones"] = gcones.size();
  cx.checks["fiber_fan_maximal"] = data.gstar.fan.maximal_cones().size();
  cx.expect("fiber_fan_complete", data.gstar.fan.is_complete());
  cx.expect("fiber_fan_face_to_face", data.gstar.fan.is_face_to_face());
  summary["cells"] = data.gamma.cells.size();
  summary["chambers"] = data.gamma.chambers.size();
  summary["fiber_fan_cones"] = gcones.size();
  out.push_back(cx);

  const auto t = distinct(uncapped(enumerate_locally_coherent_strings(pp, data.gamma, opt.cap), opt.cap,
                                   "string enumeration"));
  const auto ts = distinct(uncapped(enumerate_locally_coherent_costrings(pp.normal_fan(), dual, opt.cap), opt.cap,
                                    "costring enumeration"));
  const auto tcoh = distinct(data.strings);
  const auto tscoh = distinct(data.costrings);
  summary["strings"] = t.size();
  summary["costrings"] = ts.size();

  Suite st{"strings"};
  st.checks["locally_coherent"] = t.size();
  st.checks["coherent"] = tcoh.size();
  st.expect("coherent_are_locally_coherent", contains_all(t, tcoh));
  st.checks["all_coherent"] = t == tcoh;
  out.push_back(st);

  Suite cs{"costrings"};
  cs.checks["locally_coherent"] = ts.size();
  cs.checks["coherent"] = tscoh.size();
  cs.expect("coherent_are_locally_coherent", contains_all(ts, tscoh));
  cs.checks["all_coherent"] = ts == tscoh;
  out.push_back(cs);

  Suite ai{"anti-isomorphism"};
  {
    std::vector<std::size_t> to_string_map, to_costring_map;
    for (const auto& s : data.strings) to_string_map.push_back(index_in(tcoh, s));
    for (const auto& c : data.costrings) to_costring_map.push_back(index_in(tscoh, c));
    PosetReport a = check_anti_isomorphism(
        gcones.size(), [&](std::size_t x, std::size_t y) { return gcones[y].contains(gcones[x]); }, tcoh.size(),
        [&](std::size_t x, std::size_t y) { return string_leq(tcoh[x], tcoh[y]); }, to_string_map,
        "fiber fan -> coherent strings");
    PosetReport b = check_anti_isomorphism(
        data.gamma.cells.size(), [&](std::size_t x, std::size_t y) { return data.gamma.leq(x, y); }, tscoh.size(),
        [&](std::size_t x, std::size_t y) { return costring_leq(tscoh[x], tscoh[y]); }, to_costring_map,
        "cells -> coherent costrings");
    ai.checks["strings"] = poset_json(a);
    ai.checks["costrings"] = poset_json(b);
    ai.expect("strings_ok", a.bijective && a.order_reversing);
    ai.expect("costrings_ok", b.bijective && b.order_reversing);
  }
  out.push_back(ai);

  Suite tm{"tight-minimal"};
  {
    auto smin = minimal_elements(t.size(), [&](std::size_t x, std::size_t y) { return string_leq(t[x], t[y]); });
    auto cmin = minimal_elements(ts.size(), [&](std::size_t x, std::size_t y) { return costring_leq(ts[x], ts[y]); });
    std::vector<char> stight(t.size()), ctight(ts.size());
    parallel_for(t.size(), [&](std::size_t i) { stight[i] = is_tight_string(pp, t[i]); });
    parallel_for(ts.size(), [&](std::size_t i) { ctight[i] = is_tight_costring(ts[i], dual); });
    std::size_t sbad = 0, cbad = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      sbad += static_cast<bool>(stight[i]) != std::binary_search(smin.begin(), smin.end(), i);
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
      cbad += static_cast<bool>(ctight[i]) != std::binary_search(cmin.begin(), cmin.end(), i);
    }
    tm.checks["minimal_strings"] = smin.size();
    tm.checks["minimal_costrings"] = cmin.size();
    tm.checks["string_mismatches"] = sbad;
    tm.checks["costring_mismatches"] = cbad;
    tm.expect("strings_ok", sbad == 0);
    tm.expect("costrings_ok", cbad == 0);
  }
  out.push_back(tm);

  Suite vd{"virtual-duality"};
  {
    const auto vcones = uncapped(enumerate_virtual_cones(pp, data, opt.cap), opt.cap, "virtual cone enumeration");
    const auto vcells = uncapped(enumerate_virtual_cells(pp, data, opt.cap), opt.cap, "virtual cell enumeration");
    std::vector<ConeCollection> moved;
    for (const auto& s : t) moved.push_back(transport(pp, s));
    std::vector<FaceCollection> back;
    for (const auto& c : ts) back.push_back(transport(pp, c));
    std::vector<std::size_t> mc, mb;
    for (const auto& c : moved) mc.push_back(index_in(vcones, c));
    for (const auto& f : back) mb.push_back(index_in(vcells, f));
    PosetReport a = check_anti_isomorphism(
        t.size(), [&](std::size_t x, std::size_t y) { return string_leq(t[x], t[y]); }, vcones.size(),
        [&](std::size_t x, std::size_t y) { return virtual_cone_leq(data, vcones[x], vcones[y]); }, mc,
        "strings -> virtual cones");
    PosetReport b = check_anti_isomorphism(
        ts.size(), [&](std::size_t x, std::size_t y) { return costring_leq(ts[x], ts[y]); }, vcells.size(),
        [&](std::size_t x, std::size_t y) { return virtual_cell_leq(data, vcells[x], vcells[y]); }, mb,
        "costrings -> virtual cells");
    // The order by unions of members, for comparison.
    PosetReport ua = check_anti_isomorphism(
        t.size(), [&](std::size_t x, std::size_t y) { return string_leq(t[x], t[y]); }, vcones.size(),
        [&](std::size_t x, std::size_t y) { return costring_leq(vcones[x], vcones[y]); }, mc, "");
    PosetReport ub = check_anti_isomorphism(
        ts.size(), [&](std::size_t x, std::size_t y) { return costring_leq(ts[x], ts[y]); }, vcells.size(),
        [&](std::size_t x, std::size_t y) { return string_leq(vcells[x], vcells[y]); }, mb, "");
    vd.checks["union_order_counterexamples"] = ua.counterexamples.size() + ub.counterexamples.size();
    vd.checks["virtual_cones"] = vcones.size();
    vd.checks["virtual_cells"] = vcells.size();
    vd.checks["strings"] = poset_json(a);
    vd.checks["costrings"] = poset_json(b);
    vd.expect("strings_onto_virtual_cones", distinct(moved) == vcones && a.bijective);
    vd.expect("costrings_onto_virtual_cells", distinct(back) == vcells && b.bijective);
    vd.expect("order_reversing", a.order_reversing && b.order_reversing);
  }
  out.push_back(vd);

  Suite dom{"fiber-fan-domination"};
  {
    std::vector<char> ok(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
      std::vector<Cone> images;
      for (const auto& c : ts[i].cones) images.push_back(image(c, dual));
      ok[i] = refines(data.gstar.fan, Fan(images, pp.kernel_dim()));
    });
    const auto bad = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
    dom.checks["costrings"] = ts.size();
    dom.checks["failures"] = bad;
    dom.expect("refines", bad == 0);
  }
  out.push_back(dom);
  return out;
}

Integer catalan(std::size_t n) {
  Integer c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * Integer(2 * (2 * k + 1)) / Integer(k + 2);
  return c;
}

std::vector<Suite> point_suites(const Input& in, const Options& opt, Json& summary) {
  const PointConfiguration& a = *in.points;
  ProjectedPolytope pp = in.projected();
  std::vector<Suite> out;

  auto tris = uncapped(enumerate_triangulations(a, opt.cap), opt.cap, "triangulation enumeration");
  parallel_for(tris.size(), [&](std::size_t i) { is_regular(a, tris[i]); });
  const auto regular = static_cast<std::size_t>(std::count_if(
      tris.begin(), tris.end(), [](const Triangulation& t) { return t.regularity == Regularity::Regular; }));
  const bool convex = Polytope::hull(a.points).size() == a.size();
  summary["triangulations"] = tris.size();
  summary["regular_triangulations"] = regular;

  Suite tr{"triangulations"};
  tr.checks["count"] = tris.size();
  tr.checks["regular"] = regular;
  tr.checks["convex_position"] = convex;
  {
    bool valid = true;
    for (const auto& t : tris) {
      try {
        check_triangulation(a, t);
      } catch (const Error&) {
        valid = false;
      }
    }
    tr.expect("valid", valid);
    tr.expect("distinct", distinct(tris).size() == tris.size());
    tr.expect("certificates", std::all_of(tris.begin(), tris.end(), [](const Triangulation& t) {
      return t.regularity == Regularity::Regular ? t.heights.has_value() : !t.witness.empty();
    }));
  }
  if (convex && a.dim == 2) {
    tr.checks["catalan"] = catalan(a.size() - 2).get_str();
    tr.expect("catalan_count", Integer(static_cast<unsigned long>(tris.size())) == catalan(a.size() - 2));
    tr.expect("all_regular", regular == tris.size());
  }
  out.push_back(tr);

  Suite sf{"secondary-fan"};
  {
    SecondaryReport s = secondary_fan(a, opt.cap);
    const std::size_t maxi = s.fan.fan.maximal_cones().size();
    sf.checks["maximal_cones"] = maxi;
    sf.checks["issues"] = s.issues;
    sf.expect("bijective", s.bijective);
    sf.expect("maximal_equals_regular", maxi == regular);
    sf.expect("complete", s.fan.fan.is_complete());
    summary["secondary_maximal_cones"] = maxi;
  }
  out.push_back(sf);

  Suite pj{"regular-projective"};
  {
    std::vector<char> agree(tris.size());
    parallel_for(tris.size(), [&](std::size_t i) {
      LatticeFan f = fan_of_triangulation(a, tris[i]);
      agree[i] = f.complete() && is_projective_fan(f).projective == (tris[i].regularity == Regularity::Regular);
    });
    const auto bad = static_cast<std::size_t>(std::count(agree.begin(), agree.end(), 0));
    pj.checks["checked"] = tris.size();
    pj.checks["disagreements"] = bad;
    pj.expect("agree", bad == 0);
  }
  out.push_back(pj);

  Suite fl{"flips"};
  {
    FlipReport f = flip_graph(a, opt.cap);
    fl.checks["edges"] = f.flips.edges.size();
    fl.checks["regular_edges"] = f.regular_flips.edges.size();
    fl.checks["walls"] = f.walls.edges.size();
    fl.checks["connected"] = f.flips.connected();
    fl.expect("walls_in_flips", f.walls_in_flips);
    fl.expect("walls_equal_regular_flips", f.walls_equal_flips);
    if (convex) fl.expect("connected_in_convex_position", f.flips.connected());
    summary["flips"] = f.flips.edges.size();
  }
  out.push_back(fl);

  Suite as{"triangulations-as-strings"};
  {
    std::vector<char> lcs(tris.size()), tight(tris.size());
    parallel_for(tris.size(), [&](std::size_t i) {
      FaceCollection s = as_string(tris[i]);
      lcs[i] = is_locally_coherent_string(pp, s);
      tight[i] = is_tight_string(pp, s);
    });
    as.expect("locally_coherent", std::count(lcs.begin(), lcs.end(), 0) == 0);
    as.expect("tight", std::count(tight.begin(), tight.end(), 0) == 0);

    // Coherent strings of generic covectors are the regular triangulations.
    CellComplex gamma = chamber_complex(pp);
    FiberFan ff = fiber_fan(pp);
    std::set<std::vector<LabelSet>> from_fan, from_heights;
    for (std::size_t i = 0; i < ff.fan.size(); ++i) {
      if (ff.fan.cones()[i].dim() == static_cast<int>(pp.kernel_dim())) {
        from_fan.insert(coherent_string(pp, gamma, ff.witnesses[i]).faces);
      }
    }
    for (const auto& t : tris) {
      if (t.regularity == Regularity::Regular) from_heights.insert(as_string(t).faces);
    }
    as.expect("regular_are_coherent", from_fan == from_heights);
  }
  out.push_back(as);
  return out;
}

std::vector<Suite> fan_suites(const Input& in, const Options& opt, Json& summary) {
  const LatticeFan& fan = *in.fan;
  std::vector<Suite> out;
  summary["rays"] = fan.rays().size();
  summary["maximal_cones"] = fan.fan.maximal_cones().size();

  Suite cx{"cox"};
  {
    CoxData c = cox_construction(fan);
    const auto maxi = fan.fan.maximal_cones();
    const bool simplicial = std::all_of(maxi.begin(), maxi.end(), [](const Cone& m) {
      return static_cast<int>(m.rays().size()) == m.dim();
    });
    cx.checks["ambient_rank"] = c.ambient.ambient;
    cx.checks["free_rank"] = c.group.free_rank;
    cx.checks["torsion"] = to_json(to_rationals(c.group.torsion));
    cx.checks["geometric"] = c.geometric;
    cx.expect("round_trip", c.round_trip);
    cx.expect("geometric_iff_simplicial", c.geometric == simplicial);
  }
  out.push_back(cx);

  if (in.sublattice) {
    Suite q{"quotient"};
    SublatticeData sub = SublatticeData::from_kernel(*in.sublattice, fan.rank);
    const auto all = uncapped(enumerate_locally_coherent_costrings(fan.fan, sub.projection, opt.cap), opt.cap,
                               "costring enumeration");
    std::size_t categorical = 0, geometric = 0, degenerate = 0, bad = 0;
    for (const auto& cc : all) {
      QuotientReport r = quotient_fan(fan, cc.cones, sub);
      categorical += r.categorical;
      geometric += r.geometric;
      degenerate += r.degenerate;
      if (!r.valid_costring) ++bad;
      else if (!r.degenerate && r.geometric != is_tight_costring(cc, sub.projection)) ++bad;
    }
    q.checks["costrings"] = all.size();
    q.checks["categorical"] = categorical;
    q.checks["geometric"] = geometric;
    q.checks["degenerate"] = degenerate;
    q.expect("consistent", bad == 0);
    out.push_back(q);
  }

  if (fan.complete()) {
    Suite pj{"projective"};
    ProjectivityResult p = is_projective_fan(fan);
    pj.checks["projective"] = p.projective;
    if (p.projective) {
      // Functionals of adjacent maximal cones agree on their common rays.
      const auto maxi = fan.fan.maximal_cones();
      bool agree = p.certificate.size() == maxi.size();
      for (std::size_t s = 0; s < maxi.size() && agree; ++s) {
        for (std::size_t t = s + 1; t < maxi.size() && agree; ++t) {
          const Cone wall = intersect(maxi[s], maxi[t]);
          for (const auto& r : wall.rays()) {
            agree = agree && dot(p.certificate[s], r) == dot(p.certificate[t], r);
          }
        }
      }
      pj.expect("certificate_consistent", agree);
    }
    out.push_back(pj);

    Suite sv{"sign-vectors"};
    SpanArrangement arr = span_arrangement(fan);
    std::vector<SignVector> vs;
    for (const auto& g : generalized_sign_vectors(fan.fan, arr)) vs.push_back(g.entries);
    ExtensionReport ext = canonical_extension(vs, arr);
    ExtensionReport twice = canonical_extension(ext.covectors, arr);
    sv.checks["hyperplanes"] = arr.normals.size();
    sv.checks["covectors"] = ext.covectors.size();
    sv.checks["u_entries"] = std::count_if(vs.begin(), vs.end(), [](const SignVector& s) {
      return s.find('u') != std::string::npos;
    });
    sv.expect("matches_extended_fan", ext.matches_extended_fan);
    sv.expect("covector_axioms", ext.axioms.ok);
    sv.expect("idempotent", twice.covectors == ext.covectors);
    out.push_back(sv);
  }
  return out;
}

}  // namespace

CommandResult verify_all(const Input& in, const Options& opt) {
  Json summary = Json::object();
  std::vector<Suite> suites{io_suite(in)};
  auto append = [&](std::vector<Suite> more) { suites.insert(suites.end(), more.begin(), more.end()); };
  if (in.has_projection()) append(projection_suites(in, opt, summary));
  if (in.points) append(point_suites(in, opt, summary));
  if (in.fan) append(fan_suites(in, opt, summary));

  CommandResult r;
  Json list = Json::array();
  std::size_t failed = 0;
  for (const auto& s : suites) {
    list.push_back(s.json());
    failed += !s.passed;
  }
  summary["suites"] = suites.size();
  summary["failed"] = failed;
  r.ok = failed == 0;
  r.report = {{"suites", list}, {"summary", summary}};
  return r;
}

}  // namespace fiberfan
