#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwc/gw.hpp"
#include "gwc/local_algebra.hpp"

namespace gwc {

/// One singular point of the special fibre. The local polynomial has
/// rational coefficients and is read inside the residue field; branch
/// residue fields are given by integer-coefficient minimal polynomials over
/// k(p) (irreducibility over k(p) beyond the degree <= 4 checks is the
/// caller's responsibility).
struct SingularPoint {
  std::string name;
  NumberFieldPtr residue_field;
  PolyQ local_poly = PolyQ::zero(0);
  std::vector<long> weights;  // a_*, one per variable
  long degree = 0;            // e
  std::vector<NumberFieldPtr> branches;
  std::optional<long> supplied_mu;
  std::vector<UPoly> factors;  // irreducible factors of F(x, 1), optional
};

struct GlobalData {
  enum class Kind { PlaneCurve, GenusData, Explicit };
  Kind kind = Kind::PlaneCurve;
  long degree = 0;                          // plane_curve
  long g_generic = 0, g_normalization = 0;  // genus_data
  std::vector<RationalFunction> chi_eta;    // diagonal entries over Q(t)
  bool has_chi_eta = false;
  GWClass chi_sigma;
  bool has_chi_sigma = false;
};

struct DegenerationScenario {
  int relative_dim = 1;  // n
  std::vector<SingularPoint> points;
  std::optional<GlobalData> global;
};

struct StrataDatum {
  std::vector<std::pair<std::string, GWClass>> open_strata;
  std::vector<std::pair<std::string, GWClass>> double_intersections;
};

struct CheckReport {
  GWClass lhs, rhs;
  bool has_lhs = true;
  bool equal = false;
  long long rank_lhs = 0, rank_rhs = 0;
  bool witt_zero_rhs = false;
  std::vector<std::pair<std::string, GWClass>> per_point_terms;
  long long milnor_rank_expected = 0;  // (-1)^n sum [k(p):Q] mu_p
  bool milnor_rank_ok = false;
};

struct PointSummary {
  std::string name;
  long mu = 0;
  long branch_count = 0;  // r_p, counted with residue degrees
  long delta = 0;
  long residue_degree = 1;
};

struct CurveCheckReport {
  CheckReport vs_curve;          // against chi_c of the curve itself
  CheckReport vs_normalization;  // against chi_c of the normalization
  GWClass witt_sum;         // sum Tr(<a0 a1 e> - <e> mu^q - sum_q Tr<1>)
  bool witt_vanishing = false;
  long g_generic = 0, g_normalization = 0;
  std::vector<PointSummary> points;
};

/// chi_c of a disjoint union of closed points with the given residue fields.
GWClass chi_c_points(const std::vector<NumberFieldPtr>& fields);

/// (1 - g) * h; the compactly supported Euler characteristic of a smooth
/// proper geometrically connected curve of genus g.
GWClass chi_c_smooth_proper_curve(long genus);

/// sum chi(open strata) - (<-1> - <1>) * sum chi(double intersections).
GWClass ais_strata_chi(const StrataDatum& s);

/// Local data derived from a singular point after validation.
struct PointLocalData {
  PolyQ leading = PolyQ::zero(0);     // F
  long mu = 0;
  std::vector<Rational> muq_diag;     // diagonalized Scheja-Storch form of F
  long branch_degree_sum = 0;         // r_p
  Rational weight_product;            // prod_j a_j
};

PointLocalData analyze_point(const SingularPoint& p, int n);

/// Tr_{k(p)/Q}( <prod a_j * e> - <1> + (-<e>)^n * mu^q ).
GWClass milnor_local_term(const SingularPoint& p, int n);

/// Sum of the local terms over all singular points.
GWClass conductor_rhs(const DegenerationScenario& s);

/// <prod a_j * e> - <1> + (-<e>)^n * mu^q, not transferred.
NfDiagClass delta_t_closed_form(const SingularPoint& p, int n);

/// Strata evaluation of Delta_t for a squarefree homogeneous binary F of
/// degree e: chi_c(V(F - T2^e)) - <-1> * chi_c(V(F)) - <1>, with the curve
/// genus (e-1)(e-2)/2 after a smoothness certificate and the points of V(F)
/// read off a supplied, verified irreducible factorization of F(x, 1).
GWClass delta_t_strata_homog(const PolyQ& F, long e, const std::vector<UPoly>& factors);

/// chi_c of nearby cycles for n = 1 scenarios whose points are homogeneous:
/// chi_open + sum_i Tr chi_c(V(F_i - T2^e_i)) - <-1> sum_i Tr chi_c(V(F_i)).
GWClass nearby_chi_homog(const DegenerationScenario& s, const GWClass& chi_open);

/// delta = (mu + r - 1) / 2.
long jung_milnor_delta(long mu, long r);

/// (d-1)(d-2)/2 - sum(deltas).
long plane_curve_genus(long d, const std::vector<long>& deltas);

CurveCheckReport curve_formula_check(const DegenerationScenario& s);

CheckReport conductor_check(const DegenerationScenario& s);

/// Monic integer minimal polynomial of a root of g (as a field), i.e. the
/// transform sending g to the minimal polynomial of lc(g) * theta.
NumberFieldPtr field_of_factor(const UPoly& g);

}  // namespace gwc
