#include "gwc/monomial.hpp"

namespace gwc {

long total_degree(const Monomial& m) {
  long d = 0;
  for (int e : m) d += e;
  return d;
}

long weighted_degree(const Monomial& m, const std::vector<long>& weights) {
  long d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += weights[i] * m[i];
  return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial out(b);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= a[i];
  return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool mono_is_one(const Monomial& m) {
  for (int e : m)
    if (e != 0) return false;
  return true;
}

MonomialOrder MonomialOrder::weighted_degrevlex(std::vector<long> weights) {
  MonomialOrder o(OrderKind::WeightedDegrevlex);
  o.weights_ = std::move(weights);
  return o;
}

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::Lex: {
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
      return false;
    }
    case OrderKind::Degrevlex: {
      long da = total_degree(a), db = total_degree(b);
      if (da != db) return da > db;
      for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    }
    case OrderKind::WeightedDegrevlex: {
      long da = weighted_degree(a, weights_), db = weighted_degree(b, weights_);
      if (da != db) return da > db;
      long ta = total_degree(a), tb = total_degree(b);
      if (ta != tb) return ta > tb;
      for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    }
  }
  return false;
}

std::string var_name(int index, int nvars) {
  static const char* named[] = {"x", "y", "z", "w"};
  if (nvars <= 4) return named[index];
  return "x" + std::to_string(index);
}

std::string mono_str(const Monomial& m, int nvars) {
  if (mono_is_one(m)) return "1";
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(static_cast<int>(i), nvars);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace gwc
