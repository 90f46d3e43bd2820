#include "gwc/gw.hpp"

#include <algorithm>
#include <set>

namespace gwc {

GWClass GWClass::unit(const Rational& a) {
  GWClass g;
  g.add_unit(a);
  return g;
}

GWClass& GWClass::add_unit(const Rational& a, long long mult) {
  if (mult == 0) return *this;
  Integer key = square_class_reduce(a);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

GWClass& GWClass::add(const GWClass& o) {
  for (const auto& [a, m] : o.terms_) add_unit(Rational(a), m);
  return *this;
}

long long GWClass::rank() const {
  long long r = 0;
  for (const auto& [a, m] : terms_) r += m;
  return r;
}

long long GWClass::signature() const {
  long long s = 0;
  for (const auto& [a, m] : terms_) s += (a > 0 ? m : -m);
  return s;
}

GWClass GWClass::operator+(const GWClass& o) const {
  GWClass g = *this;
  g.add(o);
  return g;
}

GWClass GWClass::operator-() const {
  GWClass g;
  for (const auto& [a, m] : terms_) g.terms_.emplace(a, -m);
  return g;
}

GWClass GWClass::operator-(const GWClass& o) const { return *this + (-o); }

GWClass GWClass::operator*(const GWClass& o) const {
  GWClass g;
  for (const auto& [a, ma] : terms_)
    for (const auto& [b, mb] : o.terms_) g.add_unit(Rational(a * b), ma * mb);
  return g;
}

GWClass GWClass::scaled(long long k) const {
  GWClass g;
  if (k == 0) return g;
  for (const auto& [a, m] : terms_) g.terms_.emplace(a, m * k);
  return g;
}

std::string GWClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [a, m] : terms_) {
    long long mag = m < 0 ? -m : m;
    if (out.empty()) {
      if (m < 0) out += "-";
    } else {
      out += m < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += "⟨" + a.str() + "⟩";
  }
  return out;
}

GWClass hyperbolic(long long m) {
  GWClass g;
  g.add_unit(Rational(1), m);
  g.add_unit(Rational(-1), m);
  return g;
}

GWClass gw_pow(const GWClass& g, long n) {
  if (n < 0) fail(Errc::Precondition, "negative power of a GW class");
  GWClass out = GWClass::unit(Rational(1));
  for (long i = 0; i < n; ++i) out = out * g;
  return out;
}

Integer square_class_reduce(const Rational& a) {
  if (a.is_zero()) fail(Errc::ZeroEntry, "square class of 0");
  return squarefree_part(numerator(a) * denominator(a));
}

namespace {

// x mod 2 of (u-1)/2 for odd u
int eps2(const Integer& u) {
  Integer r = ((u - 1) / 2) % 2;
  return static_cast<int>(r < 0 ? r + 2 : r);
}

// x mod 2 of (u^2-1)/8 for odd u
int omega2(const Integer& u) {
  Integer r = ((u * u - 1) / 8) % 2;
  return static_cast<int>(r < 0 ? r + 2 : r);
}

}  // namespace

int hilbert_symbol_infinity(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) fail(Errc::ZeroEntry, "Hilbert symbol of 0");
  return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p) {
  if (a.is_zero() || b.is_zero()) fail(Errc::ZeroEntry, "Hilbert symbol of 0");
  if (p < 2) fail(Errc::Precondition, "place must be a prime");
  Integer A = square_class_reduce(a);
  Integer B = square_class_reduce(b);
  // squarefree, so the p-valuation is 0 or 1
  int alpha = (A % p == 0) ? 1 : 0;
  int beta = (B % p == 0) ? 1 : 0;
  Integer u = alpha ? A / p : A;
  Integer v = beta ? B / p : B;
  if (p == 2) {
    int expo = eps2(u) * eps2(v) + alpha * omega2(v) + beta * omega2(u);
    return expo % 2 == 0 ? 1 : -1;
  }
  int sym = 1;
  if (alpha && beta) {
    // (-1)^{(p-1)/2}
    if (((p - 1) / 2) % 2 != 0) sym = -sym;
  }
  if (beta) sym *= legendre_symbol(u, p);
  if (alpha) sym *= legendre_symbol(v, p);
  return sym;
}

namespace {

// Non-virtual representative: g = POS - k*h with POS an honest form.
// Uses -<a> = <-a> - h in GW.
struct PositivePart {
  std::vector<Integer> entries;
  long long padding = 0;
};

PositivePart positive_representative(const GWClass& g) {
  PositivePart out;
  for (const auto& [a, m] : g.terms()) {
    if (m > 0) {
      for (long long i = 0; i < m; ++i) out.entries.push_back(a);
    } else if (m < 0) {
      Integer neg = squarefree_part(-a);
      for (long long i = 0; i < -m; ++i) out.entries.push_back(neg);
      out.padding += -m;
    }
  }
  return out;
}

std::set<Integer> relevant_primes(const std::vector<Integer>& entries) {
  std::set<Integer> primes{Integer(2)};
  for (const Integer& a : entries)
    for (const Integer& p : prime_factors(a)) primes.insert(p);
  return primes;
}

int hasse_at(const std::vector<Integer>& entries, const Integer& p) {
  int eps = 1;
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j)
      eps *= hilbert_symbol(Rational(entries[i]), Rational(entries[j]), p);
  return eps;
}

int hasse_at_infinity(const std::vector<Integer>& entries) {
  long long neg = 0;
  for (const Integer& a : entries)
    if (a < 0) ++neg;
  // (-1,-1) for each pair of negative entries
  return (neg * (neg - 1) / 2) % 2 == 0 ? 1 : -1;
}

void pad_with_h(std::vector<Integer>& entries, long long k) {
  for (long long i = 0; i < k; ++i) {
    entries.push_back(Integer(1));
    entries.push_back(Integer(-1));
  }
}

}  // namespace

InvariantProfile invariant_profile(const GWClass& g) {
  InvariantProfile prof;
  prof.rank = g.rank();
  prof.signature = g.signature();
  Integer disc(1);
  for (const auto& [a, m] : g.terms())
    if (m % 2 != 0) disc *= a;  // a^{-1} ~ a mod squares
  prof.discriminant = g.is_zero() ? Integer(1) : squarefree_part(disc);

  PositivePart pos = positive_representative(g);
  prof.padding = pos.padding;
  for (const Integer& p : relevant_primes(pos.entries))
    prof.hasse[p] = hasse_at(pos.entries, p);
  if (prof.hasse.find(Integer(2)) == prof.hasse.end()) prof.hasse[Integer(2)] = 1;
  prof.hasse_infinity = hasse_at_infinity(pos.entries);
  return prof;
}

std::string InvariantProfile::str() const {
  std::string out = "rank " + std::to_string(rank) + ", signature " +
                    std::to_string(signature) + ", disc " + discriminant.str() +
                    ", hasse {";
  bool first = true;
  for (const auto& [p, e] : hasse) {
    if (!first) out += ", ";
    first = false;
    out += p.str() + ": " + (e > 0 ? "+1" : "-1");
  }
  out += ", inf: " + std::string(hasse_infinity > 0 ? "+1" : "-1") + "}";
  if (padding > 0) out += " (padded by " + std::to_string(padding) + "h)";
  return out;
}

bool profile_equal(const InvariantProfile& a, const InvariantProfile& b) {
  if (a.rank != b.rank || a.signature != b.signature) return false;
  if (a.discriminant != b.discriminant) return false;
  if (a.hasse_infinity != b.hasse_infinity) return false;
  std::set<Integer> primes;
  for (const auto& [p, e] : a.hasse) primes.insert(p);
  for (const auto& [p, e] : b.hasse) primes.insert(p);
  for (const Integer& p : primes) {
    auto ia = a.hasse.find(p);
    auto ib = b.hasse.find(p);
    int ea = ia == a.hasse.end() ? 1 : ia->second;
    int eb = ib == b.hasse.end() ? 1 : ib->second;
    if (ea != eb) return false;
  }
  return true;
}

bool gw_equal(const GWClass& g1, const GWClass& g2) {
  if (g1.rank() != g2.rank()) return false;
  if (g1.signature() != g2.signature()) return false;

  PositivePart p1 = positive_representative(g1);
  PositivePart p2 = positive_representative(g2);
  // g1 = P1 - k1 h, g2 = P2 - k2 h; equality iff P1 + k2 h and P2 + k1 h are
  // isometric, which rank/signature/disc/Hasse decide over Q.
  pad_with_h(p1.entries, p2.padding);
  pad_with_h(p2.entries, p1.padding);
  if (p1.entries.size() != p2.entries.size())
    fail(Errc::Internal, "padded ranks diverge despite equal virtual ranks");

  Integer d1(1), d2(1);
  for (const Integer& a : p1.entries) d1 *= a;
  for (const Integer& a : p2.entries) d2 *= a;
  if ((p1.entries.empty() ? Integer(1) : squarefree_part(d1)) !=
      (p2.entries.empty() ? Integer(1) : squarefree_part(d2)))
    return false;

  std::set<Integer> places = relevant_primes(p1.entries);
  for (const Integer& p : relevant_primes(p2.entries)) places.insert(p);
  for (const Integer& p : places)
    if (hasse_at(p1.entries, p) != hasse_at(p2.entries, p)) return false;
  return true;
}

bool is_witt_zero(const GWClass& g) {
  long long r = g.rank();
  if (r % 2 != 0) return false;
  return gw_equal(g, hyperbolic(r / 2));
}

DiagonalForm diagonalize(const QuadraticForm& q) {
  return DiagonalForm{diagonalize_sym<Rational>(q.m)};
}

DiagonalForm diagonalize_with_pivots(
    const QuadraticForm& q,
    const std::function<size_t(const std::vector<size_t>&)>& pick_pivot) {
  return DiagonalForm{diagonalize_sym<Rational>(q.m, pick_pivot)};
}

GWClass gw_from_diagonal(const DiagonalForm& d) {
  GWClass g;
  for (const auto& a : d.entries) {
    if (a.is_zero()) fail(Errc::ZeroEntry, "zero entry in a diagonal form");
    g.add_unit(a);
  }
  return g;
}

GWClass gw_from_matrix(const QuadraticForm& q) { return gw_from_diagonal(diagonalize(q)); }

NfDiagClass& NfDiagClass::add_unit(const NFElem& a, long long mult) {
  if (!field_->same_field(*a.field()))
    fail(Errc::FieldMismatch, "entry from a different number field");
  if (a.is_zero()) fail(Errc::ZeroEntry, "zero entry in a diagonal class");
  if (mult == 0) return *this;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].first == a) {
      terms_[i].second += mult;
      if (terms_[i].second == 0) terms_.erase(terms_.begin() + static_cast<long>(i));
      return *this;
    }
  }
  terms_.emplace_back(a, mult);
  return *this;
}

NfDiagClass& NfDiagClass::add_rational_unit(const Rational& a, long long mult) {
  return add_unit(NFElem::from_rational(field_, a), mult);
}

NfDiagClass& NfDiagClass::add(const NfDiagClass& o) {
  if (!field_->same_field(*o.field_)) fail(Errc::FieldMismatch, "class field mismatch");
  for (const auto& [e, m] : o.terms_) add_unit(e, m);
  return *this;
}

NfDiagClass NfDiagClass::operator-() const {
  NfDiagClass out(field_);
  for (const auto& [e, m] : terms_) out.terms_.emplace_back(e, -m);
  return out;
}

NfDiagClass NfDiagClass::times_unit(const NFElem& u) const {
  NfDiagClass out(field_);
  for (const auto& [e, m] : terms_) out.add_unit(e * u, m);
  return out;
}

long long NfDiagClass::rank() const {
  long long r = 0;
  for (const auto& [e, m] : terms_) r += m;
  return r;
}

std::string NfDiagClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, m] : terms_) {
    long long mag = m < 0 ? -m : m;
    if (out.empty()) {
      if (m < 0) out += "-";
    } else {
      out += m < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += "⟨" + e.str() + "⟩";
  }
  return out;
}

GWClass transfer_scharlau(const NumberFieldPtr& field, const std::vector<NFElem>& entries) {
  GWClass out;
  for (const NFElem& a : entries) {
    if (!field->same_field(*a.field()))
      fail(Errc::FieldMismatch, "entry does not live in the stated field");
    if (a.is_zero()) fail(Errc::ZeroEntry, "zero entry in a diagonal form");
    QuadraticForm gram{scaled_trace_form_gram(a)};
    std::vector<Rational> diag;
    try {
      diag = diagonalize_sym<Rational>(gram.m);
    } catch (const GwcError& e) {
      if (e.code() == Errc::Degenerate)
        fail(Errc::DegenerateTraceForm, "trace form is degenerate; extension not separable?");
      throw;
    }
    for (const auto& d : diag) out.add_unit(d);
  }
  return out;
}

GWClass transfer_scharlau(const NfDiagClass& cls) {
  GWClass out;
  for (const auto& [e, m] : cls.terms()) {
    GWClass one = transfer_scharlau(cls.field(), {e});
    out.add(one.scaled(m));
  }
  return out;
}

GWClass nfdiag_to_gw(const NfDiagClass& cls) {
  if (cls.field()->degree() != 1)
    fail(Errc::UnsupportedField, "class does not live over Q");
  GWClass out;
  for (const auto& [e, m] : cls.terms()) out.add_unit(e.coords()[0], m);
  return out;
}

GWClass specialize_sp_t(const std::vector<RationalFunction>& entries) {
  GWClass out;
  for (const auto& f : entries) {
    if (f.is_zero()) fail(Errc::ZeroEntry, "zero entry in a diagonal form over Q(t)");
    // <t^m u> -> <u(0)>; the power of t contributes <t>^m = <1>^m
    out.add_unit(ratfun_split(f).unit_value);
  }
  return out;
}

}  // namespace gwc
