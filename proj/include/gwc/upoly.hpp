#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwc/rational.hpp"

namespace gwc {

/// Dense univariate polynomial over Q, coefficients ascending.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly variable() { return UPoly({Rational(0), Rational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
  }
  Rational lc() const { return is_zero() ? Rational(0) : c_.back(); }
  bool is_monic() const { return !is_zero() && c_.back() == 1; }
  bool has_integer_coeffs() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const Rational& s) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UPoly, UPoly> divrem(const UPoly& divisor) const;

  /// t-adic valuation: largest m with t^m dividing this. Undefined on 0.
  int valuation() const;

  std::string str(const std::string& var) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd.
UPoly upoly_gcd(UPoly a, UPoly b);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
struct UPolyXgcd {
  UPoly g, s, t;
};
UPolyXgcd upoly_xgcd(const UPoly& a, const UPoly& b);

}  // namespace gwc
