#include "gwc/numberfield.hpp"

#include <algorithm>

namespace gwc {

namespace {

std::vector<Integer> divisors_of(const Integer& n) {
  std::vector<Integer> out;
  Integer a = abs(n);
  for (Integer d(1); d * d <= a; ++d) {
    if (a % d != 0) continue;
    out.push_back(d);
    if (d * d != a) out.push_back(a / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_rational_root(const UPoly& p) {
  // Monic with integer coefficients, so rational roots are integer divisors
  // of the constant term.
  if (p.coeff(0).is_zero()) return true;
  for (const Integer& d : divisors_of(numerator(p.coeff(0)))) {
    if (p.eval(Rational(d)).is_zero()) return true;
    if (p.eval(Rational(-d)).is_zero()) return true;
  }
  return false;
}

// (x^2+ax+b)(x^2+cx+d) factorization search for a monic integer quartic.
bool has_quadratic_factor(const UPoly& p) {
  Integer c3 = numerator(p.coeff(3));
  Integer c2 = numerator(p.coeff(2));
  Integer c1 = numerator(p.coeff(1));
  Integer c0 = numerator(p.coeff(0));
  if (c0.is_zero()) return true;
  std::vector<Integer> divs = divisors_of(c0);
  std::vector<Integer> signed_divs;
  for (const Integer& d : divs) {
    signed_divs.push_back(d);
    signed_divs.push_back(-d);
  }
  for (const Integer& b : signed_divs) {
    if (c0 % b != 0) continue;
    Integer d = c0 / b;
    // a + c = c3, a*c = c2 - b - d, a*d + b*c = c1
    Integer s = c3;
    Integer prod = c2 - b - d;
    Integer disc = s * s - 4 * prod;
    if (disc < 0) continue;
    Integer r = sqrt(disc);
    if (r * r != disc) continue;
    for (int pick = 0; pick < 2; ++pick) {
      Integer num = pick == 0 ? Integer(s + r) : Integer(s - r);
      if (num % 2 != 0) continue;
      Integer a = num / 2;
      Integer c = s - a;
      if (a * d + b * c == c1) return true;
    }
  }
  return false;
}

}  // namespace

NumberField::NumberField(std::vector<Integer> mp, bool verified)
    : min_poly_(std::move(mp)), irreducibility_verified_(verified) {
  std::vector<Rational> qc;
  qc.reserve(min_poly_.size());
  for (const Integer& c : min_poly_) qc.emplace_back(c);
  min_poly_q_ = UPoly(std::move(qc));
}

NumberFieldPtr NumberField::make(const std::vector<Integer>& min_poly) {
  if (min_poly.size() < 2) fail(Errc::NotMonic, "minimal polynomial must have degree >= 1");
  if (min_poly.back() != 1) fail(Errc::NotMonic, "minimal polynomial must be monic");
  int deg = static_cast<int>(min_poly.size()) - 1;
  std::vector<Rational> qc;
  for (const Integer& c : min_poly) qc.emplace_back(c);
  UPoly p(std::move(qc));
  bool verified = true;
  if (deg >= 2) {
    if (has_rational_root(p)) fail(Errc::Reducible, "minimal polynomial has a rational root");
    if (deg == 4 && has_quadratic_factor(p))
      fail(Errc::Reducible, "minimal polynomial splits into two quadratics");
    if (deg >= 5) verified = false;  // accepted with a warning flag
  }
  return NumberFieldPtr(new NumberField(min_poly, verified));
}

std::string NumberField::str() const { return min_poly_q_.str("a"); }

NumberFieldPtr rational_field() {
  static NumberFieldPtr q = NumberField::make({Integer(0), Integer(1)});
  return q;
}

NFElem::NFElem(NumberFieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_->degree())
    fail(Errc::Internal, "coordinate vector length does not match field degree");
}

NFElem NFElem::from_rational(const NumberFieldPtr& field, const Rational& q) {
  std::vector<Rational> c(field->degree(), Rational(0));
  c[0] = q;
  return NFElem(field, std::move(c));
}

NFElem NFElem::generator(const NumberFieldPtr& field) {
  return from_upoly(field, UPoly::variable());
}

NFElem NFElem::from_upoly(const NumberFieldPtr& field, const UPoly& p) {
  UPoly r = p.divrem(field->min_poly_q()).second;
  std::vector<Rational> c(field->degree(), Rational(0));
  for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeff(i);
  return NFElem(field, std::move(c));
}

bool NFElem::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool NFElem::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

Rational NFElem::rational_value() const {
  if (!is_rational()) fail(Errc::Internal, "element is not rational");
  return coords_[0];
}

void NFElem::check_same_field(const NFElem& o) const {
  if (!field_->same_field(*o.field_))
    fail(Errc::FieldMismatch, "operands live in different number fields");
}

NFElem NFElem::operator+(const NFElem& o) const {
  check_same_field(o);
  std::vector<Rational> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return NFElem(field_, std::move(c));
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x = -x;
  return NFElem(field_, std::move(c));
}

NFElem NFElem::operator*(const NFElem& o) const {
  check_same_field(o);
  UPoly a{std::vector<Rational>(coords_)};
  UPoly b{std::vector<Rational>(o.coords_)};
  return from_upoly(field_, a * b);
}

NFElem NFElem::operator*(const Rational& s) const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x *= s;
  return NFElem(field_, std::move(c));
}

NFElem NFElem::inverse() const {
  if (is_zero()) fail(Errc::ZeroDivision, "inverse of 0");
  UPoly a{std::vector<Rational>(coords_)};
  auto x = upoly_xgcd(a, field_->min_poly_q());
  if (x.g.degree() != 0)
    fail(Errc::Reducible, "element is a zero divisor; modulus is reducible");
  // s*a = g mod m with g = 1 after normalization in upoly_xgcd
  return from_upoly(field_, x.s);
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

bool NFElem::operator==(const NFElem& o) const {
  return field_->same_field(*o.field_) && coords_ == o.coords_;
}

std::string NFElem::str() const {
  UPoly p{std::vector<Rational>(coords_)};
  return p.str("a");
}

Rational nf_trace(const NFElem& e) {
  const auto& field = e.field();
  int d = field->degree();
  // trace of the multiplication matrix: sum over i of the beta_i-coordinate
  // of e * beta_i
  Rational tr(0);
  UPoly ep{std::vector<Rational>(e.coords())};
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> basis(d, Rational(0));
    basis[static_cast<size_t>(i)] = Rational(1);
    UPoly prod = ep * UPoly(std::move(basis));
    UPoly red = prod.divrem(field->min_poly_q()).second;
    tr += red.coeff(i);
  }
  return tr;
}

std::vector<std::vector<Rational>> trace_form_gram(const NumberFieldPtr& field) {
  int d = field->degree();
  std::vector<Rational> tr_pow;  // Tr(alpha^k), k = 0 .. 2d-2
  NFElem pw = NFElem::from_rational(field, Rational(1));
  NFElem gen = NFElem::generator(field);
  for (int k = 0; k <= 2 * d - 2; ++k) {
    tr_pow.push_back(nf_trace(pw));
    pw = pw * gen;
  }
  std::vector<std::vector<Rational>> gram(d, std::vector<Rational>(d, Rational(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram[i][j] = tr_pow[i + j];
  return gram;
}

std::vector<std::vector<Rational>> scaled_trace_form_gram(const NFElem& a) {
  const auto& field = a.field();
  int d = field->degree();
  std::vector<std::vector<Rational>> gram(d, std::vector<Rational>(d, Rational(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      std::vector<Rational> bi(d, Rational(0)), bj(d, Rational(0));
      bi[static_cast<size_t>(i)] = Rational(1);
      bj[static_cast<size_t>(j)] = Rational(1);
      NFElem prod = a * NFElem(field, std::move(bi)) * NFElem(field, std::move(bj));
      Rational t = nf_trace(prod);
      gram[i][j] = t;
      gram[j][i] = t;
    }
  }
  return gram;
}

}  // namespace gwc
