#include <doctest.h>

#include <random>

#include "gwc/numberfield.hpp"
#include "gwc/parse.hpp"
#include "gwc/ratfunc.hpp"

using namespace gwc;

namespace {

Rational rand_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 12);
  return Rational(num(rng), den(rng));
}

// independent oracle: trace of the companion matrix of the minimal
// polynomial equals the trace of multiplication by the generator
Rational companion_trace(const std::vector<Integer>& min_poly) {
  size_t d = min_poly.size() - 1;
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d, Rational(0)));
  for (size_t i = 0; i + 1 < d; ++i) m[i + 1][i] = Rational(1);
  for (size_t i = 0; i < d; ++i) m[i][d - 1] = Rational(-min_poly[i]);
  Rational tr(0);
  for (size_t i = 0; i < d; ++i) tr += m[i][i];
  return tr;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  std::mt19937 rng(7001);
  for (int i = 0; i < 200; ++i) {
    Rational a = rand_rational(rng);
    Rational b = rand_rational(rng);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("14") == Rational(14));
  CHECK_THROWS_AS(parse_rational("1/0"), GwcError);
}

TEST_CASE("square-free and prime helpers") {
  CHECK(squarefree_part(Integer(18)) == 2);
  CHECK(squarefree_part(Integer(-6)) == -6);
  CHECK(squarefree_part(Integer(1)) == 1);
  CHECK(squarefree_part(Integer(360)) == 10);
  auto pf = prime_factors(Integer(360));
  CHECK(pf == std::vector<Integer>{Integer(2), Integer(3), Integer(5)});
  CHECK(legendre_symbol(Integer(2), Integer(5)) == -1);
  CHECK(legendre_symbol(Integer(4), Integer(5)) == 1);
}

TEST_CASE("number field construction") {
  auto gauss = NumberField::make({Integer(1), Integer(0), Integer(1)});  // x^2 + 1
  CHECK(gauss->degree() == 2);
  CHECK(gauss->irreducibility_verified());

  auto trivial = NumberField::make({Integer(-1), Integer(1)});  // x - 1
  CHECK(trivial->degree() == 1);

  CHECK_THROWS_AS(NumberField::make({Integer(-1), Integer(0), Integer(1)}), GwcError);  // x^2-1
  CHECK_THROWS_AS(NumberField::make({Integer(1), Integer(0), Integer(2)}), GwcError);   // 2x^2+1
  CHECK_THROWS_AS(NumberField::make({Integer(1)}), GwcError);  // degree 0

  // quartic splitting into two integer quadratics
  CHECK_THROWS_AS(
      NumberField::make({Integer(4), Integer(0), Integer(0), Integer(0), Integer(1)}),
      GwcError);  // x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
  CHECK_THROWS_AS(
      NumberField::make({Integer(1), Integer(0), Integer(2), Integer(0), Integer(1)}),
      GwcError);  // (x^2+1)^2
  auto zeta8 = NumberField::make({Integer(1), Integer(0), Integer(0), Integer(0), Integer(1)});
  CHECK(zeta8->degree() == 4);  // x^4 + 1 is irreducible

  // degree >= 5 is accepted with the warning flag
  auto quintic = NumberField::make(
      {Integer(-1), Integer(-1), Integer(0), Integer(0), Integer(0), Integer(1)});
  CHECK_FALSE(quintic->irreducibility_verified());
}

TEST_CASE("number field arithmetic and traces") {
  auto gauss = NumberField::make({Integer(1), Integer(0), Integer(1)});
  NFElem i = NFElem::generator(gauss);
  NFElem one = NFElem::from_rational(gauss, Rational(1));
  CHECK((i * i) == NFElem::from_rational(gauss, Rational(-1)));
  CHECK((one / i) == -i);

  // frozen values from the companion-matrix oracle
  CHECK(companion_trace({Integer(1), Integer(0), Integer(1)}) == 0);
  CHECK(nf_trace(one) == 2);
  CHECK(nf_trace(i) == companion_trace({Integer(1), Integer(0), Integer(1)}));

  auto cbrt2 = NumberField::make({Integer(-2), Integer(0), Integer(0), Integer(1)});
  NFElem g = NFElem::generator(cbrt2);
  CHECK(companion_trace({Integer(-2), Integer(0), Integer(0), Integer(1)}) == 0);
  CHECK(nf_trace(g) == 0);
  CHECK(nf_trace(g * g * g) == 6);  // trace of the constant 2

  // Q-linearity on random elements
  std::mt19937 rng(7002);
  for (int k = 0; k < 40; ++k) {
    std::vector<Rational> ca{rand_rational(rng), rand_rational(rng), rand_rational(rng)};
    std::vector<Rational> cb{rand_rational(rng), rand_rational(rng), rand_rational(rng)};
    NFElem a(cbrt2, ca), b(cbrt2, cb);
    Rational q = rand_rational(rng);
    CHECK(nf_trace(a * q + b) == q * nf_trace(a) + nf_trace(b));
  }
}

TEST_CASE("rational function split") {
  RationalFunction t = RationalFunction::t();
  auto s = ratfun_split(t * t);
  CHECK(s.order == 2);
  CHECK(s.unit_value == 1);

  // (3t + t^2) / (1 + t): strip t, evaluate (3 + t)/(1 + t) at 0
  RationalFunction f = parse_ratfunc("(3t + t^2)/(1 + t)");
  s = ratfun_split(f);
  CHECK(s.order == 1);
  CHECK(s.unit_value == 3);

  s = ratfun_split(RationalFunction::constant(Rational(5)));
  CHECK(s.order == 0);
  CHECK(s.unit_value == 5);

  CHECK_THROWS_AS(ratfun_split(RationalFunction()), GwcError);

  // split respects multiplication
  std::mt19937 rng(7003);
  auto rand_rf = [&]() {
    std::uniform_int_distribution<int> ord(0, 3);
    UPoly num({Rational(0)});
    while (num.is_zero())
      num = UPoly({rand_rational(rng), rand_rational(rng), rand_rational(rng)});
    UPoly den({Rational(1), rand_rational(rng)});
    int m = ord(rng);
    std::vector<Rational> shift(static_cast<size_t>(m) + 1, Rational(0));
    shift.back() = Rational(1);
    return RationalFunction(num * UPoly(std::move(shift)), den);
  };
  for (int k = 0; k < 60; ++k) {
    RationalFunction a = rand_rf(), b = rand_rf();
    auto sa = ratfun_split(a), sb = ratfun_split(b), sab = ratfun_split(a * b);
    CHECK(sab.order == sa.order + sb.order);
    CHECK(sab.unit_value == sa.unit_value * sb.unit_value);
  }
}

TEST_CASE("rational function normalization") {
  RationalFunction f = parse_ratfunc("(2t^2 + 2t)/(4t + 4)");  // = t/2
  CHECK(f.num() == UPoly({Rational(0), Rational(1, 2)}));
  CHECK(f.den() == UPoly::constant(Rational(1)));
  CHECK_THROWS_AS(parse_ratfunc("1/(t - t)"), GwcError);
}
