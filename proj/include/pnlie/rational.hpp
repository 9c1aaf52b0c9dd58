#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace pnlie {

/// Exact scalar of the whole library. Arbitrary-precision fraction kept in
/// canonical form: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Coordinate vector / covector over Rational.
using Vec = std::vector<Rational>;

/// Builds num/den in canonical form. Throws ParseError on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" with an optional leading minus on p only.
/// Rejects signs on q, q == 0, whitespace and anything non-numeric.
Rational parse_rational(const std::string& s);

/// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rational_str(const Rational& r);

// Vec helpers.
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& a);
Rational vec_max_abs(const Vec& a);

}  // namespace pnlie
