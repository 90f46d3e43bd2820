#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwc/fieldtraits.hpp"
#include "gwc/monomial.hpp"

namespace gwc {

/// Exact multivariate polynomial with coefficients in K (Q or a number
/// field). Terms are kept in a map under a structural key order; monomial
/// orders are applied externally, so one polynomial value can be used under
/// any order.
template <class K>
class MultiPoly {
 public:
  using Terms = std::map<Monomial, K>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly zero(int nvars) { return MultiPoly(nvars); }

  static MultiPoly constant(int nvars, const K& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(int nvars, int index, const K& one) {
    if (index < 0 || index >= nvars) fail(Errc::IndexOutOfRange, "variable index");
    Monomial m(nvars, 0);
    m[index] = 1;
    MultiPoly p(nvars);
    p.add_term(m, one);
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const K& c) {
    if (FieldTraits<K>::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (FieldTraits<K>::is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check_ring(o);
    MultiPoly out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

  MultiPoly operator*(const MultiPoly& o) const {
    check_ring(o);
    MultiPoly out(nvars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
  }

  MultiPoly scaled(const K& s) const {
    MultiPoly out(nvars_);
    if (FieldTraits<K>::is_zero(s)) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
  }

  /// c * x^m * this
  MultiPoly times_term(const K& c, const Monomial& m) const {
    MultiPoly out(nvars_);
    if (FieldTraits<K>::is_zero(c)) return out;
    for (const auto& [mm, cc] : terms_) out.add_term(mono_mul(mm, m), cc * c);
    return out;
  }

  MultiPoly derivative(int var) const {
    if (var < 0 || var >= nvars_) fail(Errc::IndexOutOfRange, "derivative variable index");
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial mm(m);
      int e = mm[var];
      mm[var] -= 1;
      out.add_term(mm, c * Rational(e));
    }
    return out;
  }

  std::pair<Monomial, K> leading_term(const MonomialOrder& order) const {
    if (is_zero()) fail(Errc::Internal, "leading term of 0");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  K coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (terms_.empty()) fail(Errc::Internal, "coeff lookup on zero polynomial without sample");
      return FieldTraits<K>::zero(terms_.begin()->second);
    }
    return it->second;
  }

  bool has_term(const Monomial& m) const { return terms_.count(m) != 0; }

  long total_deg() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  /// Degree e when every monomial has weighted degree e; empty otherwise.
  std::optional<long> weighted_homogeneous_degree(const std::vector<long>& weights) const {
    for (long w : weights)
      if (w <= 0) fail(Errc::Precondition, "weights must be strictly positive");
    if (is_zero()) return std::nullopt;
    std::optional<long> e;
    for (const auto& [m, c] : terms_) {
      long d = weighted_degree(m, weights);
      if (!e) {
        e = d;
      } else if (*e != d) {
        return std::nullopt;
      }
    }
    return e;
  }

  /// Sum of terms of weighted degree exactly e.
  MultiPoly graded_part(const std::vector<long>& weights, long e) const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_)
      if (weighted_degree(m, weights) == e) out.terms_.emplace(m, c);
    return out;
  }

  MultiPoly monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    auto [lm, lc] = leading_term(order);
    return scaled(FieldTraits<K>::inverse(lc));
  }

  /// Same polynomial in a ring with more variables.
  MultiPoly extended(int nvars) const {
    if (nvars < nvars_) fail(Errc::RingMismatch, "cannot shrink variable count");
    MultiPoly out(nvars);
    for (const auto& [m, c] : terms_) {
      Monomial mm(m);
      mm.resize(nvars, 0);
      out.terms_.emplace(std::move(mm), c);
    }
    return out;
  }

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  std::string str() const {
    if (is_zero()) return "0";
    // print descending by degrevlex for readability
    MonomialOrder ord = MonomialOrder::degrevlex();
    std::vector<const std::pair<const Monomial, K>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
      return ord.greater(a->first, b->first);
    });
    std::string out;
    for (auto* t : ts) {
      std::string cs = FieldTraits<K>::str(t->second);
      bool neg = !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (mono_is_one(t->first)) {
        out += mag;
      } else {
        if (mag != "1") out += mag + "*";
        out += mono_str(t->first, nvars_);
      }
    }
    return out;
  }

 private:
  void check_ring(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) fail(Errc::RingMismatch, "polynomials from different rings");
  }
  int nvars_;
  Terms terms_;
};

using PolyQ = MultiPoly<Rational>;

}  // namespace gwc
