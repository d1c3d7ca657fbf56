#include "fiberfan/rational.hpp"

#include <cctype>

#include "fiberfan/error.hpp"

namespace fiberfan {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    raise(ErrorCode::ParseError, "malformed rational \"" + std::string(text) + "\"");
  }
  Integer d = parse_integer(den);
  if (d == 0) raise(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

std::string format_vector(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) raise(ErrorCode::DimMismatch, "dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) raise(ErrorCode::DimMismatch, "vector sum of different lengths");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) raise(ErrorCode::DimMismatch, "vector difference of different lengths");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scaled(const Vector& v, const Rational& s) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

Vector negated(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit(std::size_t n, std::size_t i) {
  Vector v = zeros(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector primitive(const Vector& v) {
  Integer den_lcm = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  Integer num_gcd = 0;
  std::vector<Integer> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    ints[i] = v[i].get_num() * (den_lcm / v[i].get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints[i].get_mpz_t());
  }
  Vector out(v.size(), Rational(0));
  if (num_gcd == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (ints[i] != 0) out[i] = Rational(ints[i] / num_gcd);
  }
  return out;
}

Vector primitive_oriented(const Vector& v) {
  Vector p = primitive(v);
  for (const auto& x : p) {
    if (sgn(x) > 0) return p;
    if (sgn(x) < 0) return negated(p);
  }
  return p;
}

bool is_integral(const Vector& v) {
  for (const auto& x : v) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

int sign(const Rational& r) { return sgn(r); }

std::strong_ordering compare(const Vector& a, const Vector& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

}  // namespace fiberfan
