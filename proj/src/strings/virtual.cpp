#include <algorithm>
#include <map>
#include <set>

#include "fiberfan/parallel.hpp"
#include "fiberfan/strings.hpp"

namespace fiberfan {

namespace {

template <typename T, typename Below>
std::optional<T> unique_extreme(const std::vector<T>& inter, const Below& below) {
  for (const auto& m : inter) {
    if (std::all_of(inter.begin(), inter.end(), [&](const T& x) { return below(m, x); })) return m;
  }
  return std::nullopt;
}

std::optional<LabelSet> minimal_common(const FaceCollection& fc, const FaceCollection& s) {
  std::vector<LabelSet> inter;
  std::set_intersection(fc.faces.begin(), fc.faces.end(), s.faces.begin(), s.faces.end(), std::back_inserter(inter));
  return unique_extreme(inter, [](LabelSet a, LabelSet b) { return a.subset_of(b); });
}

std::optional<Cone> maximal_common(const ConeCollection& cc, const ConeCollection& s) {
  std::vector<Cone> inter;
  std::set_intersection(cc.cones.begin(), cc.cones.end(), s.cones.begin(), s.cones.end(), std::back_inserter(inter));
  return unique_extreme(inter, [](const Cone& a, const Cone& b) { return a.contains(b); });
}

// Pairs (lower, upper) of gstar cones with lower a proper face of upper.
std::vector<std::pair<std::size_t, std::size_t>> cone_pairs(const Fan& fan) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& cs = fan.cones();
  for (std::size_t a = 0; a < cs.size(); ++a) {
    for (std::size_t b = 0; b < cs.size(); ++b) {
      if (a != b && is_face_of(cs[a], cs[b])) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

DualityData duality_data(const ProjectedPolytope& pp) {
  DualityData d{chamber_complex(pp), fiber_fan(pp), {}, {}};
  d.strings.resize(d.gstar.fan.cones().size());
  parallel_for(d.strings.size(), [&](std::size_t i) { d.strings[i] = coherent_string(pp, d.gamma, d.gstar.witnesses[i]); });
  d.costrings.resize(d.gamma.cells.size());
  parallel_for(d.costrings.size(), [&](std::size_t c) { d.costrings[c] = coherent_costring(pp, d.gstar, d.gamma.cells[c]); });
  return d;
}

bool meets_coherent_strings_once(const FaceCollection& fc, const std::vector<FaceCollection>& strings) {
  if (fc.faces.empty()) return false;
  return std::all_of(strings.begin(), strings.end(), [&](const FaceCollection& s) { return minimal_common(fc, s).has_value(); });
}

bool meets_coherent_costrings_once(const ConeCollection& cc, const std::vector<ConeCollection>& costrings) {
  if (cc.cones.empty()) return false;
  return std::all_of(costrings.begin(), costrings.end(),
                     [&](const ConeCollection& s) { return maximal_common(cc, s).has_value(); });
}

bool virtual_cell_leq(const DualityData& data, const FaceCollection& a, const FaceCollection& b) {
  return std::all_of(data.strings.begin(), data.strings.end(), [&](const FaceCollection& s) {
    auto x = minimal_common(a, s), y = minimal_common(b, s);
    return x && y && x->subset_of(*y);
  });
}

bool virtual_cone_leq(const DualityData& data, const ConeCollection& a, const ConeCollection& b) {
  return std::all_of(data.costrings.begin(), data.costrings.end(), [&](const ConeCollection& s) {
    auto x = maximal_common(a, s), y = maximal_common(b, s);
    return x && y && y->contains(*x);
  });
}

bool is_virtual_cell(const ProjectedPolytope& pp, const DualityData& data, const FaceCollection& fc) {
  if (!meets_coherent_strings_once(fc, data.strings)) return false;
  std::vector<LabelSet> chosen;
  for (const auto& s : data.strings) chosen.push_back(*minimal_common(fc, s));
  if (FaceCollection::of(chosen).faces != fc.faces) return false;
  for (const auto& [lo, hi] : cone_pairs(data.gstar.fan)) {
    const Vector q = pp.face_image(pp.face_index(chosen[hi])).centroid();
    if (!pp.face_image(pp.face_index(chosen[lo])).in_relint(q)) return false;
  }
  return true;
}

bool is_virtual_cone(const ProjectedPolytope& pp, const DualityData& data, const ConeCollection& cc) {
  if (!meets_coherent_costrings_once(cc, data.costrings)) return false;
  std::map<Cone, std::size_t> index;
  for (std::size_t i = 1; i < pp.lattice().size(); ++i) index.emplace(pp.normal(i), i);
  std::vector<std::size_t> chosen;
  std::vector<Cone> cones;
  for (const auto& s : data.costrings) {
    Cone m = *maximal_common(cc, s);
    chosen.push_back(index.at(m));
    cones.push_back(std::move(m));
  }
  if (ConeCollection::of(cones).cones != cc.cones) return false;
  const auto& cells = data.gamma.cells;
  for (std::size_t lo = 0; lo < cells.size(); ++lo) {
    for (std::size_t hi = 0; hi < cells.size(); ++hi) {
      if (lo == hi || !data.gamma.leq(lo, hi)) continue;
      const Vector w = pp.dual_image(chosen[hi]).relint_point();
      if (!pp.dual_image(chosen[lo]).in_relint(w)) return false;
    }
  }
  return true;
}

Enumeration<FaceCollection> enumerate_virtual_cells(const ProjectedPolytope& pp, const DualityData& data,
                                                    std::size_t cap) {
  const auto& cs = data.gstar.fan.cones();
  const std::size_t n = cs.size();
  std::vector<std::size_t> tops;
  for (std::size_t i = 0; i < n; ++i) {
    bool maximal = std::none_of(cs.begin(), cs.end(), [&](const Cone& o) { return o.dim() > cs[i].dim() && o.contains(cs[i]); });
    if (maximal) tops.push_back(i);
  }
  // For each maximal cone and each face of its string, the implied face on every cone below.
  std::vector<std::vector<std::vector<std::pair<std::size_t, LabelSet>>>> implied(tops.size());
  parallel_for(tops.size(), [&](std::size_t k) {
    const std::size_t t = tops[k];
    for (LabelSet f : data.strings[t].faces) {
      const Vector q = pp.face_image(pp.face_index(f)).centroid();
      std::vector<std::pair<std::size_t, LabelSet>> row;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != t && !cs[t].contains(cs[i])) continue;
        for (LabelSet g : data.strings[i].faces) {
          if (pp.face_image(pp.face_index(g)).in_relint(q)) {
            row.emplace_back(i, g);
            break;
          }
        }
      }
      implied[k].push_back(std::move(row));
    }
  });

  Enumeration<FaceCollection> result;
  std::set<std::vector<LabelSet>> found;
  std::vector<std::optional<LabelSet>> choice(n);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (result.truncated) return;
    if (++result.nodes > cap) {
      result.truncated = true;
      return;
    }
    if (depth == tops.size()) {
      std::vector<LabelSet> faces;
      for (const auto& c : choice) {
        if (c) faces.push_back(*c);
      }
      found.insert(FaceCollection::of(std::move(faces)).faces);
      return;
    }
    for (const auto& row : implied[depth]) {
      std::vector<std::size_t> touched;
      bool ok = true;
      for (const auto& [i, g] : row) {
        if (!choice[i]) {
          choice[i] = g;
          touched.push_back(i);
        } else if (*choice[i] != g) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
      for (auto i : touched) choice[i].reset();
      if (result.truncated) return;
    }
  };
  rec(rec, 0);

  std::vector<std::vector<LabelSet>> candidates(found.begin(), found.end());
  std::vector<char> valid(candidates.size(), 0);
  parallel_for(candidates.size(), [&](std::size_t i) {
    valid[i] = is_virtual_cell(pp, data, FaceCollection::of(candidates[i])) ? 1 : 0;
  });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (valid[i]) result.items.push_back(FaceCollection::of(candidates[i]));
  }
  return result;
}

Enumeration<ConeCollection> enumerate_virtual_cones(const ProjectedPolytope& pp, const DualityData& data,
                                                    std::size_t cap) {
  auto raw = string_selections(pp, data.gamma, cap);
  std::vector<ConeCollection> cands(raw.items.size());
  std::vector<char> valid(raw.items.size(), 0);
  parallel_for(raw.items.size(), [&](std::size_t i) {
    cands[i] = transport(pp, raw.items[i]);
    valid[i] = is_virtual_cone(pp, data, cands[i]) ? 1 : 0;
  });
  Enumeration<ConeCollection> result;
  result.truncated = raw.truncated;
  result.nodes = raw.nodes;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (valid[i]) result.items.push_back(ConeCollection::of(cands[i].cones));
  }
  std::sort(result.items.begin(), result.items.end());
  result.items.erase(std::unique(result.items.begin(), result.items.end()), result.items.end());
  return result;
}

}  // namespace fiberfan
