#include <algorithm>
#include <map>
#include <set>

#include "fiberfan/arrangement.hpp"
#include "fiberfan/error.hpp"
#include "fiberfan/parallel.hpp"
#include "fiberfan/strings.hpp"

namespace fiberfan {

namespace {

// pi (+) 1 acting on homogeneous coordinates.
Matrix homogeneous_projection(const ProjectionPair& pp) {
  Matrix m(pp.target_dim() + 1, pp.source_dim() + 1);
  for (std::size_t r = 0; r < pp.target_dim(); ++r) {
    for (std::size_t c = 0; c < pp.source_dim(); ++c) m(r, c) = pp.forward(r, c);
  }
  m(pp.target_dim(), pp.source_dim()) = 1;
  return m;
}

}  // namespace

FaceCollection coherent_string(const ProjectedPolytope& pp, const CellComplex& gamma, const Vector& psi) {
  std::vector<LabelSet> faces(gamma.cells.size());
  parallel_for(gamma.cells.size(),
               [&](std::size_t i) { faces[i] = minimal_face_over(pp, gamma.cells[i].interior, psi); });
  FaceCollection fc = FaceCollection::of(std::move(faces), Provenance::Coherent);
  fc.witness = psi;
  return fc;
}

CheckReport validate_string_subdivision(const ProjectedPolytope& pp, const FaceCollection& fc) {
  if (fc.faces.empty()) return CheckReport::fail("empty collection");
  std::vector<std::size_t> idx;
  for (LabelSet f : fc.faces) {
    auto i = pp.lattice().index_of(f);
    if (!i || f.empty()) return CheckReport::fail(f.to_string() + " is not a nonempty face");
    idx.push_back(*i);
  }
  const std::size_t n = idx.size();
  std::vector<const Cone*> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = &pp.face_image(idx[i]).homogeneous();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (*img[i] == *img[j]) {
        return CheckReport::fail("repeated image: " + fc.faces[i].to_string() + " and " + fc.faces[j].to_string());
      }
    }
  }
  std::vector<std::string> pair_failure(n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Cone meet = intersect(*img[i], *img[j]);
      if (!is_face_of(meet, *img[i]) || !is_face_of(meet, *img[j])) {
        pair_failure[i] = "images of " + fc.faces[i].to_string() + " and " + fc.faces[j].to_string() +
                          " do not meet in a common face";
        return;
      }
    }
  });
  for (const auto& f : pair_failure) {
    if (!f.empty()) return CheckReport::fail(f);
  }
  std::vector<Cone> pieces;
  for (auto* c : img) pieces.push_back(*c);
  if (!union_covers(pieces, pp.image().homogeneous())) return CheckReport::fail("images do not cover the image polytope");
  std::set<std::string> keys;
  for (auto* c : img) keys.insert(c->key());
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& f : img[i]->faces()) {
      if (f.dim() > 0 && !keys.count(f.key())) {
        return CheckReport::fail("a face of the image of " + fc.faces[i].to_string() + " is missing");
      }
    }
  }
  const Matrix lift = homogeneous_projection(pp.projection());
  const auto& verts = pp.polytope().vertices();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !img[j]->contains(*img[i])) continue;
      Cone upstairs = intersect(Polytope::hull(select(verts, fc.faces[j])).homogeneous(), preimage(*img[i], lift));
      if (!(upstairs == Polytope::hull(select(verts, fc.faces[i])).homogeneous())) {
        return CheckReport::fail("fiber condition fails for " + fc.faces[i].to_string() + " inside " +
                                 fc.faces[j].to_string());
      }
    }
  }
  return {};
}

bool is_locally_coherent_string(const ProjectedPolytope& pp, const FaceCollection& fc) {
  return validate_string_subdivision(pp, fc).ok;
}

bool is_tight_string(const ProjectedPolytope& pp, const FaceCollection& fc) {
  return std::all_of(fc.faces.begin(), fc.faces.end(), [&](LabelSet f) {
    std::size_t i = pp.face_index(f);
    return pp.face_image(i).dim() == pp.lattice().dim(i);
  });
}

Enumeration<FaceCollection> string_selections(const ProjectedPolytope& pp, const CellComplex& gamma, std::size_t cap) {
  const std::size_t nc = gamma.cells.size();
  struct Local {
    std::vector<Cone> cones;
    std::vector<LabelSet> faces;
  };
  std::vector<Local> local(nc);
  parallel_for(nc, [&](std::size_t c) {
    local[c].cones = fiber_normal_fan(pp, gamma, gamma.cells[c]).cones();
    for (const auto& cone : local[c].cones) {
      local[c].faces.push_back(minimal_face_over(pp, gamma.cells[c].interior, cone.relint_point()));
    }
  });

  // For each chamber and each cone of its fan, the induced cone index on every cell below.
  const auto& chambers = gamma.chambers;
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> implied(chambers.size());
  parallel_for(chambers.size(), [&](std::size_t k) {
    const std::size_t ch = chambers[k];
    for (const auto& tau : local[ch].cones) {
      const Vector w = tau.relint_point();
      std::vector<std::pair<std::size_t, std::size_t>> row;
      for (std::size_t c = 0; c < nc; ++c) {
        if (!gamma.leq(c, ch)) continue;
        std::size_t j = 0;
        while (!local[c].cones[j].contains(w)) ++j;
        row.emplace_back(c, j);
      }
      implied[k].push_back(std::move(row));
    }
  });

  Graph adj = chamber_adjacency(gamma);
  std::vector<std::size_t> order;
  if (!chambers.empty()) {
    std::vector<bool> seen(chambers.size(), false);
    for (std::size_t s = 0; s < chambers.size(); ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      order.push_back(s);
      for (std::size_t h = order.size() - 1; h < order.size(); ++h) {
        for (const auto& [a, b] : adj.edges) {
          std::size_t other = a == order[h] ? b : (b == order[h] ? a : SIZE_MAX);
          if (other != SIZE_MAX && !seen[other]) {
            seen[other] = true;
            order.push_back(other);
          }
        }
      }
    }
  }

  Enumeration<FaceCollection> result;
  std::set<std::vector<LabelSet>> found;
  std::vector<long> choice(nc, -1);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (result.truncated) return;
    if (++result.nodes > cap) {
      result.truncated = true;
      return;
    }
    if (depth == order.size()) {
      std::vector<LabelSet> faces;
      for (std::size_t c = 0; c < nc; ++c) faces.push_back(local[c].faces[static_cast<std::size_t>(choice[c])]);
      found.insert(FaceCollection::of(std::move(faces)).faces);
      return;
    }
    const std::size_t k = order[depth];
    for (const auto& row : implied[k]) {
      std::vector<std::size_t> touched;
      bool ok = true;
      for (const auto& [c, j] : row) {
        if (choice[c] == -1) {
          choice[c] = static_cast<long>(j);
          touched.push_back(c);
        } else if (choice[c] != static_cast<long>(j)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
      for (auto c : touched) choice[c] = -1;
      if (result.truncated) return;
    }
  };
  rec(rec, 0);

  for (const auto& faces : found) result.items.push_back(FaceCollection::of(faces));
  return result;
}

Enumeration<FaceCollection> enumerate_locally_coherent_strings(const ProjectedPolytope& pp, const CellComplex& gamma,
                                                               std::size_t cap) {
  auto raw = string_selections(pp, gamma, cap);
  std::vector<char> valid(raw.items.size(), 0);
  parallel_for(raw.items.size(), [&](std::size_t i) { valid[i] = is_locally_coherent_string(pp, raw.items[i]) ? 1 : 0; });
  Enumeration<FaceCollection> result;
  result.truncated = raw.truncated;
  result.nodes = raw.nodes;
  for (std::size_t i = 0; i < raw.items.size(); ++i) {
    if (valid[i]) result.items.push_back(FaceCollection::of(raw.items[i].faces, Provenance::LocallyCoherent));
  }
  return result;
}

}  // namespace fiberfan
