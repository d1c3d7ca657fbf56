#include <algorithm>
#include <set>

#include "fiberfan/error.hpp"
#include "fiberfan/toric.hpp"

namespace fiberfan {

namespace {

char compose(char x, char y) { return x == '0' ? y : x; }

char negate(char x) { return x == '+' ? '-' : (x == '-' ? '+' : x); }

}  // namespace

SpanArrangement span_arrangement(const LatticeFan& fan) {
  if (!fan.complete()) raise(ErrorCode::NotComplete, "fan is not complete");
  const std::size_t n = fan.rank;
  std::set<Vector> normals;
  for (const auto& c : fan.fan.cones()) {
    if (c.dim() + 1 != static_cast<int>(n)) continue;
    std::vector<Vector> gens = c.rays();
    gens.insert(gens.end(), c.lineality().begin(), c.lineality().end());
    normals.insert(primitive_oriented(kernel_basis(gens, n).front()));
  }
  SpanArrangement arr;
  arr.normals.assign(normals.begin(), normals.end());
  std::vector<Fan> parts{fan.fan};
  for (const auto& h : arr.normals) {
    Vector neg = h;
    for (auto& x : neg) x = -x;
    parts.emplace_back(std::vector<Cone>{Cone::from_constraints({h}, {}, n), Cone::from_constraints({neg}, {}, n)}, n);
  }
  arr.extended = common_refinement(parts);
  return arr;
}

SignVector sign_vector(const Cone& c, const std::vector<Vector>& normals) {
  SignVector out;
  for (const auto& h : normals) {
    if (h.size() != c.ambient_dim()) raise(ErrorCode::ArrangementMismatch, "hyperplane and cone dimensions differ");
    bool pos = false, neg = false;
    for (const auto& r : c.rays()) {
      Rational d = dot(h, r);
      pos = pos || d > 0;
      neg = neg || d < 0;
    }
    for (const auto& l : c.lineality()) {
      if (dot(h, l) != 0) pos = neg = true;
    }
    out.push_back(pos && neg ? 'u' : (pos ? '+' : (neg ? '-' : '0')));
  }
  return out;
}

std::vector<GeneralizedSignVector> generalized_sign_vectors(const Fan& fan, const SpanArrangement& arr) {
  if (fan.ambient_dim() != arr.extended.ambient_dim()) {
    raise(ErrorCode::ArrangementMismatch, "arrangement belongs to another space");
  }
  std::vector<GeneralizedSignVector> out;
  for (const auto& c : fan.cones()) out.push_back({sign_vector(c, arr.normals), c});
  return out;
}

ExtensionReport canonical_extension(const std::vector<SignVector>& vectors, const SpanArrangement& arr) {
  std::set<SignVector> realized;
  for (const auto& c : arr.extended.cones()) realized.insert(sign_vector(c, arr.normals));
  std::set<SignVector> out;
  for (const auto& v : vectors) {
    if (v.size() != arr.normals.size() || v.find_first_not_of("+0-u") != SignVector::npos) {
      raise(ErrorCode::ArrangementMismatch, "sign vector \"" + v + "\" does not fit the arrangement");
    }
    if (v.find_first_not_of('u') == SignVector::npos && !v.empty()) {
      raise(ErrorCode::ArrangementMismatch, "all-u sign vector");
    }
    std::vector<SignVector> partial{""};
    for (char e : v) {
      std::vector<SignVector> next;
      for (const auto& p : partial) {
        if (e == 'u') {
          for (char s : {'+', '0', '-'}) next.push_back(p + s);
        } else {
          next.push_back(p + e);
        }
      }
      partial = std::move(next);
    }
    for (const auto& p : partial) {
      if (realized.count(p)) out.insert(p);
    }
  }
  ExtensionReport rep;
  rep.covectors.assign(out.begin(), out.end());
  rep.matches_extended_fan = out == realized;
  rep.axioms = covector_axioms(rep.covectors);
  return rep;
}

CheckReport covector_axioms(const std::vector<SignVector>& vectors) {
  std::set<SignVector> v(vectors.begin(), vectors.end());
  if (v.empty()) return CheckReport::fail("empty set");
  const std::size_t len = v.begin()->size();
  if (!v.count(SignVector(len, '0'))) return CheckReport::fail("zero vector missing");
  for (const auto& x : v) {
    SignVector neg;
    for (char e : x) neg.push_back(negate(e));
    if (!v.count(neg)) return CheckReport::fail("negation of " + x + " missing");
    for (const auto& y : v) {
      SignVector xy;
      std::vector<std::size_t> sep;
      for (std::size_t i = 0; i < len; ++i) {
        xy.push_back(compose(x[i], y[i]));
        if (x[i] != '0' && y[i] == negate(x[i])) sep.push_back(i);
      }
      if (!v.count(xy)) return CheckReport::fail("composition " + x + " o " + y + " missing");
      for (std::size_t e : sep) {
        bool found = std::any_of(v.begin(), v.end(), [&](const SignVector& z) {
          if (z[e] != '0') return false;
          for (std::size_t f = 0; f < len; ++f) {
            if (std::find(sep.begin(), sep.end(), f) == sep.end() && z[f] != xy[f]) return false;
          }
          return true;
        });
        if (!found) return CheckReport::fail("elimination fails for " + x + ", " + y);
      }
    }
  }
  return CheckReport{true, {}};
}

}  // namespace fiberfan
