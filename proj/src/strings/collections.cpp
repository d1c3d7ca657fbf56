#include <algorithm>

#include "fiberfan/error.hpp"
#include "fiberfan/strings.hpp"

namespace fiberfan {

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Candidate: return "candidate";
    case Provenance::Coherent: return "coherent";
    case Provenance::LocallyCoherent: return "locally-coherent";
    case Provenance::Transported: return "transported";
  }
  return "candidate";
}

FaceCollection FaceCollection::of(std::vector<LabelSet> faces, Provenance p) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  FaceCollection fc;
  fc.faces = std::move(faces);
  fc.provenance = p;
  return fc;
}

ConeCollection ConeCollection::of(std::vector<Cone> cones, Provenance p) {
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  ConeCollection cc;
  cc.cones = std::move(cones);
  cc.provenance = p;
  return cc;
}

bool string_leq(const FaceCollection& a, const FaceCollection& b) {
  return std::all_of(a.faces.begin(), a.faces.end(), [&](LabelSet f) {
    return std::any_of(b.faces.begin(), b.faces.end(), [&](LabelSet g) { return f.subset_of(g); });
  });
}

bool costring_leq(const ConeCollection& a, const ConeCollection& b) {
  return std::all_of(a.cones.begin(), a.cones.end(), [&](const Cone& s) {
    return std::any_of(b.cones.begin(), b.cones.end(), [&](const Cone& t) { return t.contains(s); });
  });
}

ConeCollection transport(const ProjectedPolytope& pp, const FaceCollection& fc) {
  std::vector<Cone> cones;
  for (LabelSet f : fc.faces) cones.push_back(pp.normal(pp.face_index(f)));
  return ConeCollection::of(std::move(cones), Provenance::Transported);
}

FaceCollection transport(const ProjectedPolytope& pp, const ConeCollection& cc) {
  std::vector<LabelSet> faces;
  const auto& all = pp.lattice().faces();
  for (const auto& c : cc.cones) {
    std::size_t i = 1;
    while (i < all.size() && !(pp.normal(i) == c)) ++i;
    if (i == all.size()) raise(ErrorCode::ConeNotInHost, "cone " + c.key() + " is not a normal cone");
    faces.push_back(all[i]);
  }
  return FaceCollection::of(std::move(faces), Provenance::Transported);
}

std::vector<std::size_t> minimal_elements(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < n && minimal; ++j) {
      if (j != i && leq(j, i) && !leq(i, j)) minimal = false;
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

PosetReport check_anti_isomorphism(std::size_t na, const std::function<bool(std::size_t, std::size_t)>& leq_a,
                                   std::size_t nb, const std::function<bool(std::size_t, std::size_t)>& leq_b,
                                   const std::vector<std::size_t>& map, std::string name) {
  PosetReport r;
  r.elements = na;
  r.map = std::move(name);
  std::vector<int> hits(nb, 0);
  bool in_range = map.size() == na;
  for (std::size_t i = 0; i < map.size() && in_range; ++i) {
    if (map[i] >= nb) in_range = false;
    else ++hits[map[i]];
  }
  r.bijective = in_range && na == nb && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  if (!r.bijective) r.counterexamples.push_back("map is not a bijection");
  if (!in_range) {
    r.order_reversing = false;
    return r;
  }
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < na; ++y) {
      bool below = leq_a(x, y);
      if (below && x != y) ++r.relations;
      if (below != leq_b(map[y], map[x])) {
        r.order_reversing = false;
        r.counterexamples.push_back(std::to_string(x) + (below ? " <= " : " !<= ") + std::to_string(y) +
                                    " but images disagree");
      }
    }
  }
  return r;
}

}  // namespace fiberfan
