#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gwc/upoly.hpp"

namespace gwc {

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

/// Q[alpha]/(m(alpha)) for a monic integer polynomial m. Elements are
/// power-basis coordinate vectors 1, alpha, ..., alpha^{d-1}.
///
/// Irreducibility of m is checked exactly for degree <= 4 (rational roots,
/// plus a quadratic-factor search in degree 4); degree >= 5 inputs are
/// accepted with irreducibility_verified() == false.
class NumberField {
 public:
  /// Coefficients ascending, constant first, leading coefficient 1.
  static NumberFieldPtr make(const std::vector<Integer>& min_poly);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<Integer>& min_poly() const { return min_poly_; }
  const UPoly& min_poly_q() const { return min_poly_q_; }
  bool irreducibility_verified() const { return irreducibility_verified_; }
  bool is_rational() const { return degree() == 1; }

  bool same_field(const NumberField& o) const { return min_poly_ == o.min_poly_; }

  std::string str() const;

 private:
  NumberField(std::vector<Integer> mp, bool verified);
  std::vector<Integer> min_poly_;
  UPoly min_poly_q_;
  bool irreducibility_verified_;
};

/// The field Q presented as Q[x]/(x).
NumberFieldPtr rational_field();

class NFElem {
 public:
  NFElem(NumberFieldPtr field, std::vector<Rational> coords);
  static NFElem from_rational(const NumberFieldPtr& field, const Rational& q);
  static NFElem generator(const NumberFieldPtr& field);
  /// Reduces an arbitrary polynomial in the generator.
  static NFElem from_upoly(const NumberFieldPtr& field, const UPoly& p);

  const NumberFieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator-() const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator/(const NFElem& o) const;
  NFElem operator*(const Rational& s) const;
  bool operator==(const NFElem& o) const;

  NFElem inverse() const;

  std::string str() const;  // generator printed as "a"

 private:
  void check_same_field(const NFElem& o) const;
  NumberFieldPtr field_;
  std::vector<Rational> coords_;
};

/// Trace of multiplication-by-e on the field as a Q-vector space.
Rational nf_trace(const NFElem& e);

/// Traces of the power basis products: gram[i][j] = Tr(beta_i * beta_j).
/// This is the Gram matrix of the trace form of the field.
std::vector<std::vector<Rational>> trace_form_gram(const NumberFieldPtr& field);

/// Gram of the scaled trace form (x, y) -> Tr(a * x * y).
std::vector<std::vector<Rational>> scaled_trace_form_gram(const NFElem& a);

}  // namespace gwc
