#include "fiberfan/fan.hpp"

#include <algorithm>
#include <set>

#include "fiberfan/arrangement.hpp"
#include "fiberfan/error.hpp"
#include "fiberfan/parallel.hpp"

namespace fiberfan {

namespace {

void sort_unique(std::vector<Cone>& cones) {
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
}

std::vector<Cone> with_faces(const std::vector<Cone>& cones) {
  std::vector<std::vector<Cone>> parts(cones.size());
  parallel_for(cones.size(), [&](std::size_t i) { parts[i] = cones[i].faces(); });
  std::vector<Cone> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  sort_unique(out);
  return out;
}

}  // namespace

Fan::Fan(std::vector<Cone> cones, std::size_t ambient, bool close_under_faces) : ambient_(ambient) {
  for (const auto& c : cones) {
    if (c.ambient_dim() != ambient) raise(ErrorCode::DimMismatch, "fan member in the wrong space");
  }
  cones_ = close_under_faces ? with_faces(cones) : std::move(cones);
  sort_unique(cones_);
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cones_.size() && maximal; ++j) {
      if (i != j && cones_[j].dim() > cones_[i].dim() && cones_[j].contains(cones_[i])) maximal = false;
    }
    if (maximal) out.push_back(cones_[i]);
  }
  return out;
}

std::optional<std::size_t> Fan::find(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
  if (it == cones_.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - cones_.begin());
}

bool Fan::is_face_to_face() const {
  std::vector<char> ok(cones_.size(), 1);
  parallel_for(cones_.size(), [&](std::size_t i) {
    for (std::size_t j = i + 1; j < cones_.size(); ++j) {
      Cone meet = intersect(cones_[i], cones_[j]);
      if (!is_face_of(meet, cones_[i]) || !is_face_of(meet, cones_[j])) {
        ok[i] = 0;
        return;
      }
    }
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool Fan::is_complete() const {
  if (ambient_ == 0) return !cones_.empty();
  return union_covers(maximal_cones(), Cone::whole(ambient_));
}

bool Fan::closed_under_faces() const {
  for (const auto& c : cones_) {
    for (const auto& f : c.faces()) {
      if (!contains(f)) return false;
    }
  }
  return true;
}

std::optional<std::size_t> Fan::minimal_cone_containing(const Vector& x) const {
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    if (cones_[i].contains(x)) return i;
  }
  return std::nullopt;
}

bool refines(const Fan& fine, const Fan& coarse) {
  if (fine.ambient_dim() != coarse.ambient_dim()) raise(ErrorCode::DimMismatch, "refines: ambient dimensions differ");
  for (const auto& t : fine.cones()) {
    bool inside = std::any_of(coarse.cones().begin(), coarse.cones().end(),
                              [&](const Cone& s) { return s.contains(t); });
    if (!inside) return false;
  }
  for (const auto& s : coarse.cones()) {
    std::vector<Cone> pieces;
    for (const auto& t : fine.cones()) {
      if (s.contains(t)) pieces.push_back(t);
    }
    if (!union_covers(pieces, s)) return false;
  }
  return true;
}

Fan common_refinement(const std::vector<Fan>& parts) {
  if (parts.empty()) raise(ErrorCode::SupportMismatch, "common refinement of no fans");
  const std::size_t d = parts.front().ambient_dim();
  for (const auto& p : parts) {
    if (p.ambient_dim() != d) raise(ErrorCode::DimMismatch, "common refinement: ambient dimensions differ");
  }
  const std::vector<Cone> reference = parts.front().maximal_cones();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const std::vector<Cone> other = parts[k].maximal_cones();
    for (const auto& c : reference) {
      if (!union_covers(other, c)) raise(ErrorCode::SupportMismatch, "fans have different supports");
    }
    for (const auto& c : other) {
      if (!union_covers(reference, c)) raise(ErrorCode::SupportMismatch, "fans have different supports");
    }
  }
  std::vector<Cone> current = with_faces(parts.front().cones());
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const std::vector<Cone> next = with_faces(parts[k].cones());
    std::vector<Cone> products(current.size() * next.size());
    parallel_for(current.size(), [&](std::size_t i) {
      for (std::size_t j = 0; j < next.size(); ++j) products[i * next.size() + j] = intersect(current[i], next[j]);
    });
    sort_unique(products);
    current = std::move(products);
  }
  return Fan(std::move(current), d, false);
}

}  // namespace fiberfan
