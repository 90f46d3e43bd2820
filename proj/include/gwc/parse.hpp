#pragma once

#include <string>

#include "gwc/multipoly.hpp"
#include "gwc/ratfunc.hpp"

namespace gwc {

/// Parses "x^3 - y^2" style polynomials over Q. Variables: x, y, z, w or
/// x0..x9 (x == x0, y == x1, ...). `^` for powers, `*` optional between
/// factors, parentheses allowed, division only by constants. The variable
/// count is the largest index used plus one, but at least min_vars.
PolyQ parse_poly(const std::string& text, int min_vars = 0);

/// Univariate polynomial in x.
UPoly parse_upoly_x(const std::string& text);

/// Univariate polynomial in the number-field generator `a`.
UPoly parse_upoly_gen(const std::string& text);

/// Element of Q(t); full +,-,*,/ expression syntax in t.
RationalFunction parse_ratfunc(const std::string& text);

}  // namespace gwc
