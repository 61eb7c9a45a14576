#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgon {

using Integer = mpz_class;
/// GMP rationals are kept canonical: gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;

/// Parses "p/q", "p" or a finite decimal such as "-1.25". Throws Schema.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

int sign(const Rational& r);
int sign(const Integer& z);

/// Least common multiple of the denominators.
Integer common_denominator(std::span<const Rational> values);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray (positive multiple).
std::vector<Integer> primitive_integer_vector(std::span<const Rational> values);

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
std::vector<Integer> make_primitive(std::vector<Integer> v);

/// Multiplies by -1 if the first nonzero entry is negative.
void normalize_sign(std::vector<Integer>& v);

Integer sup_norm(std::span<const Integer> v);

/// True if r is the square of a rational; the root (>= 0) is stored in *root.
bool is_rational_square(const Rational& r, Rational* root = nullptr);

}  // namespace sgon
