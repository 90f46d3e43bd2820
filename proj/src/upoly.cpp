#include "gwc/upoly.hpp"

namespace gwc {

bool UPoly::has_integer_coeffs() const {
  for (const auto& c : c_)
    if (denominator(c) != 1) return false;
  return true;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return UPoly(std::move(out));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  std::vector<Rational> out(c_);
  for (auto& c : out) c = -c;
  return UPoly(std::move(out));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(out));
}

UPoly UPoly::operator*(const Rational& s) const {
  if (s.is_zero()) return UPoly();
  std::vector<Rational> out(c_);
  for (auto& c : out) c *= s;
  return UPoly(std::move(out));
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / lc());
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& divisor) const {
  if (divisor.is_zero()) fail(Errc::ZeroDivision, "polynomial division by zero");
  UPoly rem = *this;
  int dd = divisor.degree();
  if (rem.degree() < dd) return {UPoly(), rem};
  std::vector<Rational> q(rem.degree() - dd + 1, Rational(0));
  Rational inv_lc = Rational(1) / divisor.lc();
  while (!rem.is_zero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    Rational factor = rem.lc() * inv_lc;
    q[shift] = factor;
    std::vector<Rational> sub(shift + dd + 1, Rational(0));
    for (int i = 0; i <= dd; ++i) sub[i + shift] = divisor.coeff(i) * factor;
    rem = rem - UPoly(std::move(sub));
  }
  return {UPoly(std::move(q)), rem};
}

int UPoly::valuation() const {
  if (is_zero()) fail(Errc::ZeroFunction, "valuation of 0");
  int v = 0;
  while (c_[v].is_zero()) ++v;
  return v;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    Rational a = abs(c);
    if (i == 0) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divrem(b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

UPolyXgcd upoly_xgcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(Rational(1)), s1;
  UPoly t0, t1 = UPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = r1;
    r1 = r;
    UPoly s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    UPoly t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = Rational(1) / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace gwc
