#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "gwc/errors.hpp"

namespace gwc {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational numbers. boost keeps the invariants (denominator > 0,
/// fraction reduced); everything here is exact, there is no rounding path.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline int sign_of(const Integer& n) { return n.sign(); }
inline int sign_of(const Rational& q) { return q.sign(); }

Rational rat_pow(const Rational& base, long exp);

/// Parses "p" or "p/q" with optional sign; q > 0 after normalization.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

Integer gcd_int(Integer a, Integer b);

/// Squarefree part of n (same sign as n); n must be nonzero.
/// This is the canonical square-class representative of n in Q*.
Integer squarefree_part(Integer n);

/// Distinct prime divisors of |n|, ascending. n must be nonzero.
std::vector<Integer> prime_factors(Integer n);

Integer mod_pow(Integer base, Integer exp, const Integer& mod);

/// Legendre symbol (a|p) for an odd prime p; 0 when p divides a.
int legendre_symbol(Integer a, const Integer& p);

}  // namespace gwc
