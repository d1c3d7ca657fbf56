#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fiberfan {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Parses "p/q" or a plain integer. Rejects zero denominators and junk.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);
std::string format_vector(const Vector& v);

Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Rational& s);
Vector negated(const Vector& v);
Vector zeros(std::size_t n);
Vector unit(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// Positive rational multiple of v with coprime integer entries. Zero stays zero.
Vector primitive(const Vector& v);
/// primitive(v), then negated if needed so the first nonzero entry is positive.
Vector primitive_oriented(const Vector& v);
bool is_integral(const Vector& v);

int sign(const Rational& r);
std::strong_ordering compare(const Vector& a, const Vector& b);

}  // namespace fiberfan
