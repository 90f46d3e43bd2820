#include "gwc/ratfunc.hpp"

namespace gwc {

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) fail(Errc::ZeroDivision, "zero denominator");
  UPoly g = upoly_gcd(num, den);
  if (g.degree() > 0) {
    num = num.divrem(g).first;
    den = den.divrem(g).first;
  }
  Rational lc = den.lc();
  num_ = num * (Rational(1) / lc);
  den_ = den * (Rational(1) / lc);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) fail(Errc::ZeroDivision, "division by the zero function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

std::string RationalFunction::str() const {
  if (den_.degree() == 0) return num_.str("t");
  return "(" + num_.str("t") + ")/(" + den_.str("t") + ")";
}

SplitResult ratfun_split(const RationalFunction& f) {
  if (f.is_zero()) fail(Errc::ZeroFunction, "cannot split the zero function");
  int vn = f.num().valuation();
  int vd = f.den().valuation();
  // strip t^v from both and evaluate at 0
  auto shift_down = [](const UPoly& p, int v) {
    std::vector<Rational> c(p.coeffs().begin() + v, p.coeffs().end());
    return UPoly(std::move(c));
  };
  Rational u0 = shift_down(f.num(), vn).coeff(0) / shift_down(f.den(), vd).coeff(0);
  return SplitResult{vn - vd, u0};
}

}  // namespace gwc
