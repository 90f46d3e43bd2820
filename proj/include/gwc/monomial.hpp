#pragma once

#include <string>
#include <vector>

#include "gwc/errors.hpp"

namespace gwc {

/// Exponent vector; length is fixed by the ambient ring.
using Monomial = std::vector<int>;

long total_degree(const Monomial& m);
long weighted_degree(const Monomial& m, const std::vector<long>& weights);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_is_one(const Monomial& m);

enum class OrderKind { Degrevlex, Lex, WeightedDegrevlex };

class MonomialOrder {
 public:
  MonomialOrder() : kind_(OrderKind::Degrevlex) {}
  explicit MonomialOrder(OrderKind kind) : kind_(kind) {}
  static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::Degrevlex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
  static MonomialOrder weighted_degrevlex(std::vector<long> weights);

  OrderKind kind() const { return kind_; }
  bool greater(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return greater(b, a); }

 private:
  OrderKind kind_;
  std::vector<long> weights_;
};

std::string mono_str(const Monomial& m, int nvars);
std::string var_name(int index, int nvars);

}  // namespace gwc
