#include "fiberfan/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "fiberfan/error.hpp"

namespace fiberfan {

namespace {

class Bits {
 public:
  void set(std::size_t i) {
    if (words_.size() <= i / 64) words_.resize(i / 64 + 1, 0);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.words_.resize(std::min(words_.size(), o.words_.size()));
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  bool superset_of(const Bits& o) const {
    for (std::size_t i = 0; i < o.words_.size(); ++i) {
      std::uint64_t mine = i < words_.size() ? words_[i] : 0;
      if ((o.words_[i] & ~mine) != 0) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  Vector v;
  Bits zero;
};

Vector combine(const Rational& s, const Vector& a, const Rational& t, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i] - t * b[i];
  return out;
}

void check_lengths(const std::vector<Vector>& vs, std::size_t ambient) {
  for (const auto& v : vs) {
    if (v.size() != ambient) raise(ErrorCode::DimMismatch, "vector " + format_vector(v) + " has wrong length");
  }
}

std::vector<Vector> sorted_unique(std::vector<Vector> vs) {
  std::sort(vs.begin(), vs.end(), [](const Vector& a, const Vector& b) { return compare(a, b) < 0; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace

Generators double_description(const std::vector<Vector>& ineqs, const std::vector<Vector>& eqs,
                              std::size_t ambient) {
  check_lengths(ineqs, ambient);
  check_lengths(eqs, ambient);
  std::vector<Vector> lin;
  for (std::size_t i = 0; i < ambient; ++i) lin.push_back(unit(ambient, i));
  std::vector<Ray> rays;
  std::size_t dim = ambient;

  for (const auto& e : eqs) {
    std::size_t pick = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (sgn(dot(e, lin[i])) != 0) {
        pick = i;
        break;
      }
    }
    if (pick == lin.size()) continue;
    Vector l0 = lin[pick];
    Rational s0 = dot(e, l0);
    lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(pick));
    for (auto& l : lin) l = primitive_oriented(combine(s0, l, dot(e, l), l0));
    --dim;
  }

  for (std::size_t k = 0; k < ineqs.size(); ++k) {
    const Vector& a = ineqs[k];
    std::size_t pick = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (sgn(dot(a, lin[i])) != 0) {
        pick = i;
        break;
      }
    }
    if (pick != lin.size()) {
      Vector l0 = lin[pick];
      Rational s0 = dot(a, l0);
      if (sgn(s0) < 0) {
        l0 = negated(l0);
        s0 = -s0;
      }
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(pick));
      for (auto& l : lin) l = primitive_oriented(combine(s0, l, dot(a, l), l0));
      for (auto& r : rays) {
        r.v = primitive(combine(s0, r.v, dot(a, r.v), l0));
        r.zero.set(k);
      }
      Ray fresh{primitive(l0), {}};
      for (std::size_t j = 0; j < k; ++j) fresh.zero.set(j);
      rays.push_back(std::move(fresh));
      continue;
    }
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      int s = sgn(val[i]);
      if (s > 0) pos.push_back(i);
      if (s < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (sgn(val[i]) == 0) rays[i].zero.set(k);
      }
      continue;
    }
    const std::size_t pointed = dim - lin.size();
    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        Bits common = rays[p].zero & rays[n].zero;
        if (pointed >= 2 && common.count() + 2 < pointed) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != n && rays[r].zero.superset_of(common)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{primitive(combine(val[p], rays[n].v, val[n], rays[p].v)), common};
        fresh.zero.set(k);
        next.push_back(std::move(fresh));
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      int s = sgn(val[i]);
      if (s > 0) next.push_back(std::move(rays[i]));
      if (s == 0) {
        rays[i].zero.set(k);
        next.push_back(std::move(rays[i]));
      }
    }
    rays = std::move(next);
  }

  Generators g;
  for (auto& r : rays) g.rays.push_back(std::move(r.v));
  g.lineality = std::move(lin);
  return g;
}

Cone Cone::from_constraints(const std::vector<Vector>& ineqs, const std::vector<Vector>& eqs,
                            std::size_t ambient) {
  Generators primal = double_description(ineqs, eqs, ambient);
  Generators dual = double_description(primal.rays, primal.lineality, ambient);
  Cone c;
  c.ambient_ = ambient;
  c.rays_ = std::move(primal.rays);
  c.lineality_ = std::move(primal.lineality);
  c.facets_ = std::move(dual.rays);
  c.equations_ = std::move(dual.lineality);
  c.canonicalize();
  return c;
}

Cone Cone::from_generators(const std::vector<Vector>& rays, const std::vector<Vector>& lineality,
                           std::size_t ambient) {
  Generators dual = double_description(rays, lineality, ambient);
  Generators primal = double_description(dual.rays, dual.lineality, ambient);
  Cone c;
  c.ambient_ = ambient;
  c.rays_ = std::move(primal.rays);
  c.lineality_ = std::move(primal.lineality);
  c.facets_ = std::move(dual.rays);
  c.equations_ = std::move(dual.lineality);
  c.canonicalize();
  return c;
}

Cone Cone::zero(std::size_t ambient) {
  std::vector<Vector> eqs;
  for (std::size_t i = 0; i < ambient; ++i) eqs.push_back(unit(ambient, i));
  return from_constraints({}, eqs, ambient);
}

Cone Cone::whole(std::size_t ambient) { return from_constraints({}, {}, ambient); }

void Cone::canonicalize() {
  Echelon lin = reduced_echelon(lineality_, ambient_);
  lineality_ = lin.rows;
  for (auto& r : rays_) r = primitive(lin.reduce(r));
  rays_ = sorted_unique(std::move(rays_));
  Echelon eq = reduced_echelon(equations_, ambient_);
  equations_ = eq.rows;
  for (auto& f : facets_) f = primitive(eq.reduce(f));
  facets_ = sorted_unique(std::move(facets_));
  key_ = std::to_string(ambient_) + "|";
  for (const auto& r : rays_) key_ += format_vector(r);
  key_ += "|";
  for (const auto& l : lineality_) key_ += format_vector(l);
}

bool Cone::contains(const Vector& x) const {
  if (x.size() != ambient_) raise(ErrorCode::DimMismatch, "point has wrong length");
  for (const auto& e : equations_) {
    if (sgn(dot(e, x)) != 0) return false;
  }
  for (const auto& f : facets_) {
    if (sgn(dot(f, x)) < 0) return false;
  }
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.ambient_ != ambient_) raise(ErrorCode::DimMismatch, "cones live in different spaces");
  for (const auto& r : other.rays_) {
    if (!contains(r)) return false;
  }
  for (const auto& l : other.lineality_) {
    if (!contains(l) || !contains(negated(l))) return false;
  }
  return true;
}

bool Cone::in_relint(const Vector& x) const {
  if (!contains(x)) return false;
  for (const auto& f : facets_) {
    if (sgn(dot(f, x)) == 0) return false;
  }
  return true;
}

Vector Cone::relint_point() const {
  Vector p = zeros(ambient_);
  for (const auto& r : rays_) p = add(p, r);
  return p;
}

Cone Cone::face_containing(const Vector& x) const {
  if (!contains(x)) raise(ErrorCode::NotAFace, "point " + format_vector(x) + " is not in the cone");
  std::vector<Vector> tight = equations_;
  std::vector<Vector> rest;
  for (const auto& f : facets_) {
    if (sgn(dot(f, x)) == 0) tight.push_back(f);
    else rest.push_back(f);
  }
  if (tight.size() == equations_.size()) return *this;
  return from_constraints(rest, tight, ambient_);
}

std::vector<Cone> Cone::faces() const {
  using RaySet = std::vector<bool>;
  std::set<RaySet> seen;
  std::vector<RaySet> queue{RaySet(rays_.size(), true)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const RaySet current = queue[head];
    for (const auto& f : facets_) {
      RaySet next(rays_.size(), false);
      bool shrinks = false;
      for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (!current[i]) continue;
        if (sgn(dot(f, rays_[i])) == 0) next[i] = true;
        else shrinks = true;
      }
      if (shrinks && seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Cone> out;
  out.reserve(queue.size());
  for (const auto& set : queue) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (set[i]) gens.push_back(rays_[i]);
    }
    out.push_back(set == queue.front() ? *this : from_generators(gens, lineality_, ambient_));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::strong_ordering Cone::operator<=>(const Cone& other) const {
  if (auto c = dim() <=> other.dim(); c != 0) return c;
  return key_ <=> other.key_;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) raise(ErrorCode::DimMismatch, "intersect: ambient dimensions differ");
  std::vector<Vector> ineqs = a.facets();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  std::vector<Vector> eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return Cone::from_constraints(ineqs, eqs, a.ambient_dim());
}

Cone image(const Cone& c, const Matrix& m) {
  if (m.cols() != c.ambient_dim()) raise(ErrorCode::DimMismatch, "image: matrix does not match cone");
  std::vector<Vector> rays, lin;
  for (const auto& r : c.rays()) rays.push_back(m.apply(r));
  for (const auto& l : c.lineality()) lin.push_back(m.apply(l));
  return Cone::from_generators(rays, lin, m.rows());
}

Cone preimage(const Cone& c, const Matrix& m) {
  if (m.rows() != c.ambient_dim()) raise(ErrorCode::DimMismatch, "preimage: matrix does not match cone");
  std::vector<Vector> ineqs, eqs;
  for (const auto& f : c.facets()) ineqs.push_back(m.apply_transpose(f));
  for (const auto& e : c.equations()) eqs.push_back(m.apply_transpose(e));
  return Cone::from_constraints(ineqs, eqs, m.cols());
}

bool is_face_of(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) raise(ErrorCode::DimMismatch, "is_face_of: ambient dimensions differ");
  if (!b.contains(a)) return false;
  return b.face_containing(a.relint_point()) == a;
}

}  // namespace fiberfan
