#include <doctest.h>

#include <random>

#include "gwc/conductor.hpp"
#include "gwc/parse.hpp"

using namespace gwc;

namespace {

GWClass diag(std::initializer_list<int> entries) {
  GWClass g;
  for (int e : entries) g.add_unit(Rational(e));
  return g;
}

SingularPoint make_point(const std::string& name, const std::string& poly,
                         std::vector<long> weights, long degree,
                         std::vector<NumberFieldPtr> branches = {}) {
  SingularPoint p;
  p.name = name;
  p.residue_field = rational_field();
  p.local_poly = parse_poly(poly);
  p.weights = std::move(weights);
  p.degree = degree;
  p.branches = std::move(branches);
  return p;
}

NumberFieldPtr gauss_field() {
  return NumberField::make({Integer(1), Integer(0), Integer(1)});
}

SingularPoint cusp_point() {
  return make_point("cusp", "x^3 - y^2", {2, 3}, 6, {rational_field()});
}

SingularPoint split_node_point() {
  return make_point("node", "y^2 - x^2 - x^3", {1, 1}, 2,
                    {rational_field(), rational_field()});
}

DegenerationScenario cusp_cubic() {
  DegenerationScenario s;
  s.relative_dim = 1;
  s.points = {cusp_point()};
  GlobalData g;
  g.kind = GlobalData::Kind::PlaneCurve;
  g.degree = 3;
  s.global = g;
  return s;
}

DegenerationScenario node_cubic() {
  DegenerationScenario s;
  s.relative_dim = 1;
  s.points = {split_node_point()};
  GlobalData g;
  g.kind = GlobalData::Kind::PlaneCurve;
  g.degree = 3;
  s.global = g;
  return s;
}

}  // namespace

TEST_CASE("chi_c of points") {
  CHECK(chi_c_points({rational_field()}) == diag({1}));
  CHECK(chi_c_points({rational_field(), rational_field()}) == diag({1, 1}));
  GWClass g = chi_c_points({gauss_field()});
  CHECK(g == diag({2, -2}));
  CHECK(gw_equal(g, hyperbolic(1)));
}

TEST_CASE("chi_c of smooth proper curves") {
  CHECK(chi_c_smooth_proper_curve(0) == hyperbolic(1));
  CHECK(chi_c_smooth_proper_curve(1).is_zero());
  CHECK(chi_c_smooth_proper_curve(2) == hyperbolic(-1));
  CHECK_THROWS_AS(chi_c_smooth_proper_curve(-1), GwcError);
}

TEST_CASE("strata euler characteristic") {
  StrataDatum one;
  one.open_strata = {{"D1", diag({1})}};
  CHECK(ais_strata_chi(one) == diag({1}));

  CHECK(ais_strata_chi(StrataDatum{}).is_zero());

  // two components with one intersection: a + b - (<-1> - <1>) c
  std::mt19937 rng(7050);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int k = 0; k < 20; ++k) {
    auto rand_cls = [&]() {
      GWClass g;
      for (int i = 0; i < 3; ++i) {
        int v = e(rng);
        if (v != 0) g.add_unit(Rational(v));
      }
      return g;
    };
    GWClass a = rand_cls(), b = rand_cls(), c = rand_cls();
    StrataDatum s;
    s.open_strata = {{"D1o", a}, {"D2o", b}};
    s.double_intersections = {{"D12", c}};
    GWClass gm = diag({-1}) - diag({1});
    CHECK(ais_strata_chi(s) == a + b - gm * c);
    // purity consistency: the G_m factor equals <-1> - <1> as classes
    CHECK(gm * c == GWClass::unit(Rational(-1)) * c - c);
  }

  StrataDatum dup;
  dup.open_strata = {{"D", diag({1})}, {"D", diag({1})}};
  CHECK_THROWS_AS(ais_strata_chi(dup), GwcError);
}

TEST_CASE("milnor local terms") {
  // cusp over Q: <36> - <1> - <6> mu^q = -h
  GWClass cusp = milnor_local_term(cusp_point(), 1);
  CHECK(gw_equal(cusp, -hyperbolic(1)));
  CHECK(cusp.rank() == -2);

  // split node: <2> - <1> - <2><-1>
  GWClass node = milnor_local_term(make_point("n", "x^2 - y^2", {1, 1}, 2), 1);
  CHECK(node == diag({2}) - diag({1}) - diag({-2}));

  // A1 threefold point, n = 2: <2> - <1> + <1><8> = 2<2> - <1>
  GWClass a1 = milnor_local_term(make_point("a1", "x^2 + y^2 + z^2", {1, 1, 1}, 2), 2);
  CHECK(a1 == diag({2, 2}) - diag({1}));
}

TEST_CASE("milnor local term validation") {
  SingularPoint p = cusp_point();
  p.supplied_mu = 3;
  CHECK_THROWS_AS(milnor_local_term(p, 1), GwcError);  // MuMismatch

  SingularPoint bad = make_point("bad", "x^2*y", {1, 1}, 3);
  CHECK_THROWS_AS(milnor_local_term(bad, 1), GwcError);  // cone not isolated
}

TEST_CASE("conductor rhs is additive over points") {
  DegenerationScenario s;
  s.relative_dim = 1;
  s.points = {cusp_point(), split_node_point()};
  GWClass total = conductor_rhs(s);
  CHECK(total == milnor_local_term(s.points[0], 1) + milnor_local_term(s.points[1], 1));

  DegenerationScenario empty;
  empty.relative_dim = 1;
  CHECK(conductor_rhs(empty).is_zero());
}

TEST_CASE("delta closed form examples") {
  // node F = T0 T1: <2> - <1> - <2><-1>
  GWClass node = nfdiag_to_gw(delta_t_closed_form(make_point("n", "x*y", {1, 1}, 2), 1));
  CHECK(node == diag({2}) - diag({1}) - diag({-2}));

  GWClass cusp = nfdiag_to_gw(delta_t_closed_form(cusp_point(), 1));
  CHECK(gw_equal(cusp, -hyperbolic(1)));

  GWClass quadric =
      nfdiag_to_gw(delta_t_closed_form(make_point("q", "x^2 + y^2", {1, 1}, 2), 1));
  CHECK(gw_equal(quadric, -diag({1})));
}

TEST_CASE("delta strata evaluation") {
  // T0 T1: conic cover has genus 0, V(F) is two rational points
  GWClass node = delta_t_strata_homog(parse_poly("x*y"), 2, {parse_upoly_x("x")});
  CHECK(node == hyperbolic(1) - diag({-1}) * diag({1, 1}) - diag({1}));
  CHECK(gw_equal(node, -diag({-1})));

  // T0^2 + T1^2: V(F) is the Gaussian point
  GWClass quad = delta_t_strata_homog(parse_poly("x^2 + y^2"), 2, {parse_upoly_x("x^2+1")});
  CHECK(gw_equal(quad, -diag({1})));

  // error paths
  CHECK_THROWS_AS(delta_t_strata_homog(parse_poly("x^2*y^2"), 4, {parse_upoly_x("x^2")}),
                  GwcError);  // not squarefree
  CHECK_THROWS_AS(delta_t_strata_homog(parse_poly("x*y"), 2, {parse_upoly_x("x+1")}),
                  GwcError);  // product mismatch
  CHECK_THROWS_AS(delta_t_strata_homog(parse_poly("x^4 - y^4"), 4,
                                       {parse_upoly_x("x^2-1"), parse_upoly_x("x^2+1")}),
                  GwcError);  // x^2 - 1 is reducible
  CHECK_THROWS_AS(delta_t_strata_homog(parse_poly("x*y"), 2, {}), GwcError);
}

TEST_CASE("delta consistency between the two routes") {
  struct Case {
    const char* F;
    long e;
    std::vector<const char*> factors;
  };
  std::vector<Case> corpus = {
      {"x*y", 2, {"x"}},
      {"x^2 + y^2", 2, {"x^2+1"}},
      {"x^2 - 2y^2", 2, {"x^2-2"}},
      {"x^3 + y^3", 3, {"x+1", "x^2-x+1"}},
      {"x^3 + x*y^2", 3, {"x", "x^2+1"}},
      {"x^3 - x*y^2", 3, {"x", "x-1", "x+1"}},
  };
  for (const auto& c : corpus) {
    std::vector<UPoly> fs;
    for (const char* f : c.factors) fs.push_back(parse_upoly_x(f));
    GWClass strata = delta_t_strata_homog(parse_poly(c.F), c.e, fs);
    std::vector<long> w(2, 1);
    GWClass closed = nfdiag_to_gw(delta_t_closed_form(make_point("p", c.F, w, c.e), 1));
    CHECK_MESSAGE(gw_equal(strata, closed), "Delta mismatch for F = ", c.F);
  }
}

TEST_CASE("jung-milnor delta") {
  CHECK(jung_milnor_delta(2, 1) == 1);  // cusp
  CHECK(jung_milnor_delta(1, 2) == 1);  // node
  CHECK(jung_milnor_delta(0, 1) == 0);  // smooth
  CHECK(jung_milnor_delta(3, 2) == 2);  // tacnode
  CHECK_THROWS_AS(jung_milnor_delta(2, 2), GwcError);
  CHECK_THROWS_AS(jung_milnor_delta(0, 0), GwcError);
}

TEST_CASE("plane curve genus") {
  CHECK(plane_curve_genus(3, {1}) == 0);
  CHECK(plane_curve_genus(3, {}) == 1);
  CHECK(plane_curve_genus(4, {1, 1, 1}) == 0);
  CHECK_THROWS_AS(plane_curve_genus(3, {2}), GwcError);
  CHECK_THROWS_AS(plane_curve_genus(0, {}), GwcError);
}

TEST_CASE("cuspidal cubic curve check") {
  CurveCheckReport rep = curve_formula_check(cusp_cubic());
  CHECK(rep.g_generic == 1);
  CHECK(rep.g_normalization == 0);
  CHECK(rep.vs_curve.equal);
  CHECK(rep.vs_normalization.equal);
  CHECK(gw_equal(rep.vs_normalization.lhs, -hyperbolic(1)));
  CHECK(gw_equal(rep.vs_normalization.rhs, -hyperbolic(1)));
  CHECK(rep.vs_curve.rank_lhs == -2);
  CHECK(rep.vs_curve.milnor_rank_ok);
  CHECK(rep.witt_vanishing);
}

TEST_CASE("nodal cubic curve check") {
  CurveCheckReport rep = curve_formula_check(node_cubic());
  CHECK(rep.vs_curve.equal);
  CHECK(rep.vs_normalization.equal);
  CHECK(rep.vs_normalization.rhs == diag({2}) - diag({-2}) - diag({1, 1}));
  CHECK(gw_equal(rep.vs_normalization.rhs, -hyperbolic(1)));
  CHECK(rep.vs_curve.rank_lhs == -1);
  CHECK(rep.vs_curve.milnor_rank_ok);
  CHECK(rep.witt_vanishing);
}

TEST_CASE("smooth family curve check") {
  DegenerationScenario s;
  s.relative_dim = 1;
  GlobalData g;
  g.kind = GlobalData::Kind::PlaneCurve;
  g.degree = 3;
  s.global = g;
  CurveCheckReport rep = curve_formula_check(s);
  CHECK(rep.vs_curve.lhs.is_zero());
  CHECK(rep.vs_curve.rhs.is_zero());
  CHECK(rep.vs_curve.equal);
  CHECK(rep.vs_normalization.equal);
  CHECK(rep.witt_vanishing);
}

TEST_CASE("curve check consistency bookkeeping") {
  // RHS(i) - RHS(ii) = sum_p Tr( sum_q Tr<1> - <1> ) exactly
  for (auto scenario : {cusp_cubic(), node_cubic()}) {
    CurveCheckReport rep = curve_formula_check(scenario);
    GWClass lhs_diff = rep.vs_curve.rhs - rep.vs_normalization.rhs;
    GWClass expected;
    for (const auto& p : scenario.points) {
      NfDiagClass branch(p.residue_field);
      for (const auto& br : p.branches) {
        if (br->degree() == 1) {
          branch.add_rational_unit(Rational(1));
        } else {
          QuadraticForm gram{trace_form_gram(br)};
          for (const Rational& d : diagonalize(gram).entries)
            branch.add_rational_unit(d);
        }
      }
      branch.add_rational_unit(Rational(1), -1);
      expected.add(transfer_scharlau(branch));
    }
    CHECK(lhs_diff == expected);
  }
}

TEST_CASE("curve check error surfacing") {
  // cusp with two branches: mu + r - 1 = 3 is odd
  DegenerationScenario s = cusp_cubic();
  s.points[0].branches = {rational_field(), rational_field()};
  CHECK_THROWS_AS(curve_formula_check(s), GwcError);

  DegenerationScenario no_branches = cusp_cubic();
  no_branches.points[0].branches.clear();
  CHECK_THROWS_AS(curve_formula_check(no_branches), GwcError);

  DegenerationScenario no_global = cusp_cubic();
  no_global.global.reset();
  CHECK_THROWS_AS(curve_formula_check(no_global), GwcError);

  DegenerationScenario wrong_dim = cusp_cubic();
  wrong_dim.relative_dim = 2;
  CHECK_THROWS_AS(curve_formula_check(wrong_dim), GwcError);
}

TEST_CASE("conductor check on curves") {
  CheckReport rep = conductor_check(cusp_cubic());
  CHECK(rep.has_lhs);
  CHECK(rep.equal);
  CHECK(gw_equal(rep.lhs, -hyperbolic(1)));
  CHECK(rep.rank_lhs == -2);
  CHECK(rep.milnor_rank_expected == -2);
  CHECK(rep.milnor_rank_ok);
}

TEST_CASE("conductor check refuses to invent an lhs") {
  DegenerationScenario s;
  s.relative_dim = 2;
  s.points = {make_point("a1", "x^2 + y^2 + z^2", {1, 1, 1}, 2)};
  CheckReport rep = conductor_check(s);
  CHECK_FALSE(rep.has_lhs);
  CHECK(rep.rhs == diag({2, 2}) - diag({1}));
  CHECK(rep.rank_rhs == 1);
  CHECK(rep.milnor_rank_expected == 1);
  CHECK(rep.milnor_rank_ok);
}

TEST_CASE("curve check with genus data instead of a plane-curve degree") {
  DegenerationScenario s = cusp_cubic();
  GlobalData g;
  g.kind = GlobalData::Kind::GenusData;
  g.g_generic = 1;
  g.g_normalization = 0;
  s.global = g;
  CurveCheckReport rep = curve_formula_check(s);
  CHECK(rep.vs_curve.equal);
  CHECK(rep.vs_normalization.equal);
  CHECK(rep.witt_vanishing);
}

TEST_CASE("conductor falls back to rhs-only without branch data") {
  DegenerationScenario s = cusp_cubic();
  s.points[0].branches.clear();
  CheckReport rep = conductor_check(s);
  CHECK_FALSE(rep.has_lhs);
  CHECK(gw_equal(rep.rhs, -hyperbolic(1)));
}

TEST_CASE("rhs rank matches the classical milnor count across the corpus") {
  for (auto scenario : {cusp_cubic(), node_cubic()}) {
    CheckReport rep = conductor_check(scenario);
    CHECK(rep.rank_rhs == rep.milnor_rank_expected);
  }
}

TEST_CASE("conductor check with explicit chi data") {
  // conic degenerating to two lines: sp chi(X_eta) = h, chi(X_sigma) = 2h - <1>
  DegenerationScenario s;
  s.relative_dim = 1;
  s.points = {make_point("node", "x*y", {1, 1}, 2)};
  GlobalData g;
  g.kind = GlobalData::Kind::Explicit;
  g.chi_eta = {RationalFunction::t(),
               -(RationalFunction::t())};  // sp -> <1> + <-1>
  g.has_chi_eta = true;
  g.chi_sigma = hyperbolic(2) - diag({1});
  g.has_chi_sigma = true;
  s.global = g;
  CheckReport rep = conductor_check(s);
  CHECK(rep.has_lhs);
  CHECK(rep.equal);
  CHECK(rep.lhs == diag({1}) - hyperbolic(1));
  CHECK(rep.milnor_rank_ok);
}

TEST_CASE("conductor check accepts explicit chi data in higher dimension") {
  DegenerationScenario s;
  s.relative_dim = 2;
  s.points = {make_point("a1", "x^2 + y^2 + z^2", {1, 1, 1}, 2)};
  GlobalData g;
  g.kind = GlobalData::Kind::Explicit;
  // supplied classes with sp chi_eta - chi_sigma = 2<2> - <1>
  g.chi_eta = {RationalFunction::constant(Rational(2)) * RationalFunction::t(),
               RationalFunction::constant(Rational(2)),
               RationalFunction::constant(Rational(-1))};
  g.has_chi_eta = true;
  g.chi_sigma = hyperbolic(1);
  g.has_chi_sigma = true;
  s.global = g;
  CheckReport rep = conductor_check(s);
  CHECK(rep.has_lhs);
  CHECK(rep.equal);
  CHECK(rep.milnor_rank_ok);
}

TEST_CASE("nearby cycles strata for homogeneous points") {
  // no singular points: chi_open passes through
  DegenerationScenario empty;
  empty.relative_dim = 1;
  GWClass c = diag({1, -1, 2});
  CHECK(nearby_chi_homog(empty, c) == c);

  // nodal cubic: chi(Psi) = chi_open + h - <-1> * 2<1>, and this equals
  // sp chi_c(C_eta) = 0 for the actual degeneration
  DegenerationScenario s = node_cubic();
  s.points[0].factors = {parse_upoly_x("x-1"), parse_upoly_x("x+1")};
  CurveCheckReport curve = curve_formula_check(s);
  GWClass chi_curve = chi_c_smooth_proper_curve(curve.g_normalization) -
                      (diag({1, 1}) - diag({1}));  // chi(C) via cut-and-paste
  GWClass chi_open = chi_curve - diag({1});        // remove the node
  GWClass nearby = nearby_chi_homog(s, chi_open);
  CHECK(nearby == chi_open + hyperbolic(1) - diag({-1}) * diag({1, 1}));
  CHECK(gw_equal(nearby, GWClass()));  // sp chi of a genus-1 generic fibre

  // weighted points are not routed through the homogeneous formula
  DegenerationScenario weighted = cusp_cubic();
  weighted.points[0].factors = {parse_upoly_x("x")};
  CHECK_THROWS_AS(nearby_chi_homog(weighted, GWClass()), GwcError);
}

TEST_CASE("factor field construction") {
  auto f1 = field_of_factor(parse_upoly_x("x^2+1"));
  CHECK(f1->degree() == 2);
  // non-monic factors are transformed, not rejected: 2x^2 - 1 ~ x^2 - 2
  auto f2 = field_of_factor(parse_upoly_x("2x^2 - 1"));
  CHECK(f2->degree() == 2);
  CHECK(f2->min_poly() == std::vector<Integer>{Integer(-2), Integer(0), Integer(1)});
  // negative leading coefficients keep the same field
  auto f3 = field_of_factor(parse_upoly_x("-x^2 - 1"));
  CHECK(f3->min_poly() == std::vector<Integer>{Integer(1), Integer(0), Integer(1)});
  CHECK_THROWS_AS(field_of_factor(parse_upoly_x("x^2 - 1")), GwcError);
  CHECK_THROWS_AS(field_of_factor(parse_upoly_x("5")), GwcError);
}
