#pragma once

#include <string>

#include "gwc/numberfield.hpp"
#include "gwc/rational.hpp"

namespace gwc {

/// Field operations the generic layers need, specialized per coefficient
/// type. zero/one take a sample element so number-field constants can be
/// built without a global field context.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero(const Rational&) { return Rational(0); }
  static Rational one(const Rational&) { return Rational(1); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational inverse(const Rational& x) {
    if (x.is_zero()) fail(Errc::ZeroDivision, "inverse of 0");
    return Rational(1) / x;
  }
  static std::string str(const Rational& x) { return to_string(x); }
};

template <>
struct FieldTraits<NFElem> {
  static NFElem zero(const NFElem& sample) {
    return NFElem::from_rational(sample.field(), Rational(0));
  }
  static NFElem one(const NFElem& sample) {
    return NFElem::from_rational(sample.field(), Rational(1));
  }
  static bool is_zero(const NFElem& x) { return x.is_zero(); }
  static NFElem inverse(const NFElem& x) { return x.inverse(); }
  static std::string str(const NFElem& x) { return "(" + x.str() + ")"; }
};

}  // namespace gwc
