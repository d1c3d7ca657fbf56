#include "geometry.hpp"

#include "fiberfan/lp.hpp"

namespace fiberfan::detail {

Lifted::Lifted(const PointConfiguration& a) : d_(a.dim) {
  for (const auto& p : a.points) pts_.push_back(homogenize(p));
}

bool Lifted::independent(LabelSet s) const {
  std::vector<Vector> rows;
  for (int i : s.labels()) rows.push_back(pts_[static_cast<std::size_t>(i)]);
  return rank_of(rows, d_ + 1) == rows.size();
}

Vector Lifted::normal(LabelSet f) const {
  std::vector<Vector> rows;
  for (int i : f.labels()) rows.push_back(pts_[static_cast<std::size_t>(i)]);
  return kernel_basis(rows, d_ + 1).front();
}

int Lifted::side(LabelSet f, std::size_t p) const { return sgn(dot(normal(f), pts_[p])); }

bool Lifted::on_boundary(LabelSet f) const {
  const Vector h = normal(f);
  bool pos = false, neg = false;
  for (const auto& p : pts_) {
    int s = sgn(dot(h, p));
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  return !(pos && neg);
}

bool Lifted::proper(LabelSet s, LabelSet t) const {
  const std::pair<std::uint64_t, std::uint64_t> key{std::min(s.bits(), t.bits()), std::max(s.bits(), t.bits())};
  {
    std::lock_guard lock(mu_);
    auto it = proper_cache_.find(key);
    if (it != proper_cache_.end()) return it->second;
  }
  const auto sl = s.labels(), tl = t.labels();
  const std::size_t nv = sl.size() + tl.size();
  LinearProgram lp(nv);
  for (std::size_t v = 0; v < nv; ++v) lp.nonnegative[v] = true;
  for (std::size_t k = 0; k <= d_; ++k) {
    Vector row(nv, Rational(0));
    for (std::size_t i = 0; i < sl.size(); ++i) row[i] = pts_[static_cast<std::size_t>(sl[i])][k];
    for (std::size_t j = 0; j < tl.size(); ++j) row[sl.size() + j] = -pts_[static_cast<std::size_t>(tl[j])][k];
    lp.add(std::move(row), Relation::Equal, 0);
  }
  Vector mass(nv, Rational(0));
  for (std::size_t i = 0; i < sl.size(); ++i) mass[i] = 1;
  lp.add(mass, Relation::Equal, 1);
  for (std::size_t i = 0; i < sl.size(); ++i) {
    if (!t.contains(sl[i])) lp.objective[i] = 1;
  }
  LpResult r = solve(lp);
  bool ok = r.status != LpStatus::Optimal || r.value == 0;
  std::lock_guard lock(mu_);
  proper_cache_[key] = ok;
  return ok;
}

Vector Lifted::barycentric(LabelSet s, std::size_t p) const {
  const auto sl = s.labels();
  Matrix m(d_ + 1, sl.size());
  for (std::size_t k = 0; k <= d_; ++k) {
    for (std::size_t i = 0; i < sl.size(); ++i) m(k, i) = pts_[static_cast<std::size_t>(sl[i])][k];
  }
  return *solve_linear(m, pts_[p]);
}

std::vector<LabelSet> Lifted::simplices() const {
  std::vector<LabelSet> out;
  const std::size_t n = pts_.size();
  auto rec = [&](auto&& self, std::size_t start, LabelSet cur) -> void {
    if (static_cast<std::size_t>(cur.size()) == d_ + 1) {
      if (independent(cur)) out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      LabelSet next = cur;
      next.insert(static_cast<int>(i));
      self(self, i + 1, next);
    }
  };
  rec(rec, 0, LabelSet());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fiberfan::detail
