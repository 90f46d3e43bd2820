#pragma once

#include <string>

#include "gwc/upoly.hpp"

namespace gwc {

/// Element of Q(t): num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(UPoly::constant(Rational(1))) {}
  RationalFunction(UPoly num, UPoly den);
  static RationalFunction constant(const Rational& c) {
    return RationalFunction(UPoly::constant(c), UPoly::constant(Rational(1)));
  }
  static RationalFunction t() {
    return RationalFunction(UPoly::variable(), UPoly::constant(Rational(1)));
  }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  std::string str() const;

 private:
  UPoly num_, den_;
};

/// f = t^order * u with u(0) = unit_value != 0.
struct SplitResult {
  long order;
  Rational unit_value;
};

/// t-adic valuation and the unit value at t = 0. Errors on the zero function.
SplitResult ratfun_split(const RationalFunction& f);

}  // namespace gwc
