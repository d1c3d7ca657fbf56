#include <algorithm>
#include <map>
#include <set>

#include "fiberfan/arrangement.hpp"
#include "fiberfan/error.hpp"
#include "fiberfan/parallel.hpp"
#include "fiberfan/strings.hpp"

namespace fiberfan {

ConeCollection coherent_costring(const ProjectedPolytope& pp, const FiberFan& gstar, const Cell& c) {
  std::vector<Cone> cones(gstar.witnesses.size());
  parallel_for(cones.size(), [&](std::size_t i) {
    cones[i] = pp.normal(pp.face_index(minimal_face_over(pp, c.interior, gstar.witnesses[i])));
  });
  return ConeCollection::of(std::move(cones), Provenance::Coherent);
}

CheckReport validate_costring(const ConeCollection& cc, const Fan& host, const Matrix& map) {
  for (const auto& c : cc.cones) {
    if (!host.contains(c)) raise(ErrorCode::ConeNotInHost, "cone " + c.key() + " is not in the host fan");
  }
  if (cc.cones.empty()) return CheckReport::fail("empty collection");
  const std::size_t n = cc.cones.size();
  std::vector<Cone> img(n);
  parallel_for(n, [&](std::size_t i) { img[i] = image(cc.cones[i], map); });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (img[i] == img[j]) return CheckReport::fail("repeated image: " + cc.cones[i].key() + " and " + cc.cones[j].key());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Cone meet = intersect(img[i], img[j]);
      if (!is_face_of(meet, img[i]) || !is_face_of(meet, img[j])) {
        return CheckReport::fail("images of " + cc.cones[i].key() + " and " + cc.cones[j].key() +
                                 " do not meet in a common face");
      }
    }
  }
  for (const auto& m : host.maximal_cones()) {
    if (!union_covers(img, image(m, map))) return CheckReport::fail("images do not cover the projected support");
  }
  std::set<std::string> keys;
  for (const auto& c : img) keys.insert(c.key());
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& f : img[i].faces()) {
      if (!keys.count(f.key())) return CheckReport::fail("a face of the image of " + cc.cones[i].key() + " is missing");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Cone back = preimage(img[i], map);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !img[j].contains(img[i])) continue;
      if (!(intersect(back, cc.cones[j]) == cc.cones[i])) {
        return CheckReport::fail("lifting condition fails for " + cc.cones[i].key() + " inside " + cc.cones[j].key());
      }
    }
  }
  return {};
}

bool is_locally_coherent_costring(const ConeCollection& cc, const Fan& host, const Matrix& map) {
  return validate_costring(cc, host, map).ok;
}

bool is_tight_costring(const ConeCollection& cc, const Matrix& map) {
  return std::all_of(cc.cones.begin(), cc.cones.end(), [&](const Cone& c) { return image(c, map).dim() == c.dim(); });
}

Enumeration<ConeCollection> enumerate_locally_coherent_costrings(const Fan& host, const Matrix& map, std::size_t cap) {
  const auto& cones = host.cones();
  const std::size_t n = cones.size();
  std::vector<Cone> img(n), back(n);
  parallel_for(n, [&](std::size_t i) {
    img[i] = image(cones[i], map);
    back[i] = preimage(img[i], map);
  });
  std::vector<Cone> maximal_images;
  for (const auto& m : host.maximal_cones()) maximal_images.push_back(image(m, map));
  int top = -1;
  for (const auto& c : img) top = std::max(top, c.dim());
  std::vector<Cone> top_images;
  for (const auto& c : maximal_images) {
    if (c.dim() == top) top_images.push_back(c);
  }
  const bool pure = std::all_of(maximal_images.begin(), maximal_images.end(),
                                [&](const Cone& m) { return union_covers(top_images, m); });

  // Relative interior points of the top-dimensional cells cut out by all image hyperplanes.
  std::vector<Vector> test_points;
  if (pure) {
    std::vector<Vector> hyperplanes;
    for (const auto& c : img) {
      hyperplanes.insert(hyperplanes.end(), c.facets().begin(), c.facets().end());
      hyperplanes.insert(hyperplanes.end(), c.equations().begin(), c.equations().end());
    }
    std::set<Cone> chambers;
    for (const auto& m : top_images) {
      for (auto& c : arrangement_chambers(m, hyperplanes)) chambers.insert(std::move(c));
    }
    for (const auto& c : chambers) test_points.push_back(c.relint_point());
  }

  std::map<std::pair<std::size_t, std::size_t>, bool> meet_cache, lift_cache;
  auto face_to_face = [&](std::size_t a, std::size_t b) {
    const std::pair<std::size_t, std::size_t> key = std::minmax(a, b);
    auto it = meet_cache.find(key);
    if (it != meet_cache.end()) return it->second;
    Cone meet = intersect(img[a], img[b]);
    bool ok = is_face_of(meet, img[a]) && is_face_of(meet, img[b]);
    return meet_cache[key] = ok;
  };
  // Condition (2) for the ordered pair when img[a] lies in img[b].
  auto lifts = [&](std::size_t a, std::size_t b) {
    auto it = lift_cache.find({a, b});
    if (it != lift_cache.end()) return it->second;
    bool ok = !img[b].contains(img[a]) || intersect(back[a], cones[b]) == cones[a];
    return lift_cache[{a, b}] = ok;
  };

  std::vector<int> levels;
  for (const auto& c : img) levels.push_back(c.dim());
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  Enumeration<ConeCollection> result;
  std::set<std::vector<std::size_t>> found;
  std::vector<std::size_t> chosen;
  std::set<std::string> chosen_images;

  auto compatible = [&](std::size_t h) {
    if (chosen_images.count(img[h].key())) return false;
    for (std::size_t c : chosen) {
      if (!face_to_face(c, h) || !lifts(c, h) || !lifts(h, c)) return false;
    }
    return true;
  };
  auto covers = [&] {
    std::vector<Cone> pieces;
    for (std::size_t c : chosen) pieces.push_back(img[c]);
    return std::all_of(maximal_images.begin(), maximal_images.end(),
                       [&](const Cone& m) { return union_covers(pieces, m); });
  };
  auto push = [&](std::size_t h) {
    chosen.push_back(h);
    chosen_images.insert(img[h].key());
  };
  auto pop = [&] {
    chosen_images.erase(img[chosen.back()].key());
    chosen.pop_back();
  };

  // Level li handles images of dimension levels[li]: optional picks at the top (or anywhere when the support is
  // not pure), and one preimage for every face of a chosen image that has that dimension.
  auto level = [&](auto&& self, std::size_t li) -> void {
    if (result.truncated) return;
    if (li == levels.size()) {
      if (!pure && !covers()) return;
      std::vector<std::size_t> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      found.insert(sorted);
      return;
    }
    const int d = levels[li];
    std::vector<std::size_t> optional;
    if (li == 0 || !pure) {
      for (std::size_t h = 0; h < n; ++h) {
        if (img[h].dim() == d) optional.push_back(h);
      }
    }
    auto required_images = [&] {
      std::set<std::string> seen;
      std::vector<Cone> out;
      for (std::size_t c : chosen) {
        if (img[c].dim() <= d) continue;
        for (const auto& f : img[c].faces()) {
          if (f.dim() == d && !chosen_images.count(f.key()) && seen.insert(f.key()).second) out.push_back(f);
        }
      }
      return out;
    };
    auto fill = [&](auto&& fill_self, std::vector<Cone> todo, std::size_t k) -> void {
      if (result.truncated) return;
      if (++result.nodes > cap) {
        result.truncated = true;
        return;
      }
      if (k == todo.size()) {
        self(self, li + 1);
        return;
      }
      for (std::size_t h = 0; h < n; ++h) {
        if (!(img[h] == todo[k]) || !compatible(h)) continue;
        push(h);
        fill_self(fill_self, todo, k + 1);
        pop();
      }
    };
    auto pick = [&](auto&& pick_self, std::size_t k) -> void {
      if (result.truncated) return;
      if (++result.nodes > cap) {
        result.truncated = true;
        return;
      }
      if (k == optional.size()) {
        fill(fill, required_images(), 0);
        return;
      }
      pick_self(pick_self, k + 1);
      if (compatible(optional[k])) {
        push(optional[k]);
        pick_self(pick_self, k + 1);
        pop();
      }
    };
    // Pure supports: the top images tile, so branch on the images through the first uncovered test point.
    auto tile = [&](auto&& tile_self) -> void {
      if (result.truncated) return;
      if (++result.nodes > cap) {
        result.truncated = true;
        return;
      }
      auto open = std::find_if(test_points.begin(), test_points.end(), [&](const Vector& x) {
        return std::none_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return img[c].contains(x); });
      });
      if (open == test_points.end()) {
        fill(fill, required_images(), 0);
        return;
      }
      for (std::size_t h : optional) {
        if (!img[h].contains(*open) || !compatible(h)) continue;
        push(h);
        tile_self(tile_self);
        pop();
      }
    };
    if (li == 0 && pure) tile(tile);
    else pick(pick, 0);
  };
  level(level, 0);

  // Every condition of validate_costring was enforced while building the candidates.
  for (const auto& members : found) {
    std::vector<Cone> picked;
    for (std::size_t h : members) picked.push_back(cones[h]);
    result.items.push_back(ConeCollection::of(std::move(picked), Provenance::LocallyCoherent));
  }
  std::sort(result.items.begin(), result.items.end());
  return result;
}

}  // namespace fiberfan
