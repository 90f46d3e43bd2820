#include "gwc/conductor.hpp"

#include <set>

namespace gwc {

namespace {

GWClass gm_class() {  // chi_c(G_m) = <-1> - <1>
  GWClass g;
  g.add_unit(Rational(-1));
  g.add_unit(Rational(1), -1);
  return g;
}

/// Diagonal entries of the trace form of k(p)[x]/(m) over k(p); rational
/// because the minimal polynomial has rational coefficients.
std::vector<Rational> relative_trace_form_diag(const NumberFieldPtr& branch) {
  if (branch->degree() == 1) return {Rational(1)};
  QuadraticForm gram{trace_form_gram(branch)};
  return diagonalize_sym<Rational>(gram.m);
}

/// sum over branches of Tr_{k(q)/k(p)}<1>, as a class over k(p).
NfDiagClass branch_points_class(const NumberFieldPtr& kp,
                                const std::vector<NumberFieldPtr>& branches) {
  NfDiagClass cls(kp);
  for (const auto& br : branches)
    for (const Rational& d : relative_trace_form_diag(br)) cls.add_rational_unit(d);
  return cls;
}

long long expected_milnor_rank(int n, const std::vector<std::pair<long, long>>& mu_deg) {
  long long total = 0;
  for (const auto& [mu, deg] : mu_deg) total += static_cast<long long>(mu) * deg;
  return n % 2 == 0 ? total : -total;
}

}  // namespace

GWClass chi_c_points(const std::vector<NumberFieldPtr>& fields) {
  GWClass out;
  for (const auto& f : fields)
    out.add(transfer_scharlau(f, {NFElem::from_rational(f, Rational(1))}));
  return out;
}

GWClass chi_c_smooth_proper_curve(long genus) {
  if (genus < 0) fail(Errc::NegativeGenus, "genus must be non-negative");
  return hyperbolic(1 - genus);
}

GWClass ais_strata_chi(const StrataDatum& s) {
  std::set<std::string> labels;
  for (const auto& [l, c] : s.open_strata)
    if (!labels.insert(l).second) fail(Errc::Precondition, "duplicate stratum label " + l);
  for (const auto& [l, c] : s.double_intersections)
    if (!labels.insert(l).second) fail(Errc::Precondition, "duplicate stratum label " + l);

  GWClass open_sum, inter_sum;
  for (const auto& [l, c] : s.open_strata) open_sum.add(c);
  for (const auto& [l, c] : s.double_intersections) inter_sum.add(c);
  return open_sum - gm_class() * inter_sum;
}

PointLocalData analyze_point(const SingularPoint& p, int n) {
  int nvars = n + 1;
  if (p.local_poly.nvars() > nvars)
    fail(Errc::ValidationFailed,
         "point " + p.name + ": local polynomial uses more than n+1 variables");
  PolyQ f = p.local_poly.nvars() == nvars ? p.local_poly : p.local_poly.extended(nvars);

  std::vector<long> weights = p.weights;
  if (weights.empty()) weights.assign(static_cast<size_t>(nvars), 1);
  if (static_cast<int>(weights.size()) != nvars)
    fail(Errc::ValidationFailed, "point " + p.name + ": weight vector has wrong length");

  LooksLikeReport rep = check_looks_like(f, weights, p.degree);
  if (!rep.pass())
    fail(Errc::ValidationFailed,
         "point " + p.name + " fails validation:\n" + rep.describe(nvars));

  JacobianRing<Rational> jr = jacobian_ring(rep.leading_part);
  long mu = jr.milnor_number();
  if (p.supplied_mu && *p.supplied_mu != mu)
    fail(Errc::MuMismatch, "point " + p.name + ": supplied mu " +
                               std::to_string(*p.supplied_mu) + " but computed " +
                               std::to_string(mu));

  Matrix<Rational> gram = scheja_storch_form(jr).gram;
  std::vector<Rational> diag = diagonalize_sym<Rational>(gram);

  PointLocalData out;
  out.leading = rep.leading_part;
  out.mu = mu;
  out.muq_diag = std::move(diag);
  out.branch_degree_sum = 0;
  for (const auto& br : p.branches) out.branch_degree_sum += br->degree();
  out.weight_product = Rational(1);
  for (long a : weights) out.weight_product *= Rational(a);
  return out;
}

namespace {

NfDiagClass closed_form_from_data(const SingularPoint& p, int n, const PointLocalData& data) {
  NfDiagClass cls(p.residue_field);
  cls.add_rational_unit(data.weight_product * Rational(p.degree));
  cls.add_rational_unit(Rational(1), -1);
  // (-<e>)^n * mu^q
  long long sign = n % 2 == 0 ? 1 : -1;
  Rational en = rat_pow(Rational(p.degree), n);
  for (const Rational& d : data.muq_diag) cls.add_rational_unit(en * d, sign);
  return cls;
}

}  // namespace

GWClass milnor_local_term(const SingularPoint& p, int n) {
  PointLocalData data = analyze_point(p, n);
  return transfer_scharlau(closed_form_from_data(p, n, data));
}

GWClass conductor_rhs(const DegenerationScenario& s) {
  GWClass out;
  for (const auto& p : s.points) out.add(milnor_local_term(p, s.relative_dim));
  return out;
}

NfDiagClass delta_t_closed_form(const SingularPoint& p, int n) {
  PointLocalData data = analyze_point(p, n);
  return closed_form_from_data(p, n, data);
}

NumberFieldPtr field_of_factor(const UPoly& g) {
  if (g.degree() < 1) fail(Errc::FactorizationInvalid, "constant factor");
  // clear denominators, then make monic-integer via y = lc * x
  Integer lcm_den(1);
  for (const Rational& c : g.coeffs()) {
    Integer d = denominator(c);
    lcm_den = lcm_den / gcd_int(lcm_den, d) * d;
  }
  UPoly h = g * Rational(lcm_den);
  Integer content(0);
  for (const Rational& c : h.coeffs()) content = gcd_int(content, numerator(c));
  if (content > 1) h = h * Rational(Integer(1), content);

  int d = h.degree();
  Integer lead = numerator(h.lc());
  // minimal polynomial of lead * theta: lead^{d-1} h(y / lead), monic by
  // construction whatever the sign of the leading coefficient
  std::vector<Integer> mp(static_cast<size_t>(d) + 1);
  mp[static_cast<size_t>(d)] = 1;
  Integer scale(1);  // lead^{d-1-k}
  for (int k = d - 1; k >= 0; --k) {
    mp[static_cast<size_t>(k)] = numerator(h.coeff(k)) * scale;
    scale *= lead;
  }
  try {
    return NumberField::make(mp);
  } catch (const GwcError& e) {
    if (e.code() == Errc::Reducible)
      fail(Errc::FactorizationInvalid, "factor " + g.str("x") + " is reducible");
    throw;
  }
}

namespace {

struct BinaryFormData {
  UPoly dehomogenized;      // F(x, 1)
  bool divisible_by_t1 = false;
};

BinaryFormData prepare_binary_form(const PolyQ& F_in, long e) {
  PolyQ F = F_in.nvars() == 2 ? F_in : F_in.extended(2);
  if (F.nvars() != 2) fail(Errc::Precondition, "F must be a binary form");
  auto deg = F.weighted_homogeneous_degree({1, 1});
  if (!deg || *deg != e)
    fail(Errc::Precondition, "F is not homogeneous of degree " + std::to_string(e));
  if (e < 2) fail(Errc::Precondition, "degree must be at least 2");

  int t1_mult = e;
  for (const auto& [m, c] : F.terms()) t1_mult = std::min(t1_mult, m[1]);
  if (t1_mult >= 2) fail(Errc::NotSquarefree, "T1^2 divides F");

  std::vector<Rational> coeffs(static_cast<size_t>(e) + 1, Rational(0));
  for (const auto& [m, c] : F.terms()) coeffs[static_cast<size_t>(m[0])] = c;
  UPoly f(std::move(coeffs));
  UPoly g = upoly_gcd(f, f.derivative());
  if (g.degree() > 0) fail(Errc::NotSquarefree, "F has a repeated factor");

  return BinaryFormData{f, t1_mult == 1};
}

void certify_cone_smoothness(const PolyQ& F, long e) {
  // V(F - T2^e) in P^2 is smooth iff the affine cone of F(x,y) - z^e has an
  // isolated singularity at the origin
  PolyQ G = F.extended(3);
  Monomial ze(3, 0);
  ze[2] = static_cast<int>(e);
  PolyQ zpow(3);
  zpow.add_term(ze, Rational(1));
  try {
    jacobian_ring(G - zpow);
  } catch (const GwcError&) {
    fail(Errc::SmoothnessCheckFailed, "V(F - T2^e) is not smooth");
  }
}

std::vector<NumberFieldPtr> verified_factor_fields(const UPoly& dehomog, bool add_t1_point,
                                                   const std::vector<UPoly>& factors) {
  if (dehomog.degree() > 0 && factors.empty())
    fail(Errc::FactorizationInvalid, "a factorization of F(x,1) is required");
  UPoly prod = UPoly::constant(Rational(1));
  for (const auto& g : factors) prod = prod * g;
  if (prod.degree() != dehomog.degree())
    fail(Errc::FactorizationInvalid, "factor degrees do not sum to deg F(x,1)");
  UPoly scaled = prod * (dehomog.lc() / prod.lc());
  if (!(scaled == dehomog))
    fail(Errc::FactorizationInvalid, "product of the factors is not F(x,1)");

  std::vector<NumberFieldPtr> fields;
  for (const auto& g : factors) fields.push_back(field_of_factor(g));
  if (add_t1_point) fields.push_back(rational_field());
  return fields;
}

}  // namespace

GWClass delta_t_strata_homog(const PolyQ& F, long e, const std::vector<UPoly>& factors) {
  BinaryFormData bf = prepare_binary_form(F, e);
  certify_cone_smoothness(F.nvars() == 2 ? F : F.extended(2), e);
  std::vector<NumberFieldPtr> fields =
      verified_factor_fields(bf.dehomogenized, bf.divisible_by_t1, factors);

  long cover_genus = (e - 1) * (e - 2) / 2;
  GWClass out = chi_c_smooth_proper_curve(cover_genus);
  out.add((GWClass::unit(Rational(-1)) * chi_c_points(fields)).scaled(-1));
  out.add_unit(Rational(1), -1);
  return out;
}

GWClass nearby_chi_homog(const DegenerationScenario& s, const GWClass& chi_open) {
  if (s.relative_dim != 1)
    fail(Errc::Precondition, "nearby-cycle strata evaluation is implemented for n = 1");
  GWClass acc = chi_open;
  for (const auto& p : s.points) {
    for (long a : p.weights)
      if (a != 1)
        fail(Errc::Precondition,
             "point " + p.name +
                 ": weighted points need user-supplied cover data; only the "
                 "homogeneous route is automatic");
    PointLocalData data = analyze_point(p, 1);
    PolyQ F = data.leading;
    BinaryFormData bf = prepare_binary_form(F, p.degree);
    certify_cone_smoothness(F, p.degree);
    std::vector<NumberFieldPtr> fields =
        verified_factor_fields(bf.dehomogenized, bf.divisible_by_t1, p.factors);

    long cover_genus = (p.degree - 1) * (p.degree - 2) / 2;
    NfDiagClass curve_cls(p.residue_field);
    curve_cls.add_rational_unit(Rational(1), 1 - cover_genus);
    curve_cls.add_rational_unit(Rational(-1), 1 - cover_genus);
    acc.add(transfer_scharlau(curve_cls));

    NfDiagClass pts(p.residue_field);
    for (const auto& fld : fields)
      for (const Rational& d : relative_trace_form_diag(fld)) pts.add_rational_unit(d);
    acc.add((GWClass::unit(Rational(-1)) * transfer_scharlau(pts)).scaled(-1));
  }
  return acc;
}

long jung_milnor_delta(long mu, long r) {
  long num = mu + r - 1;
  if (num < 0 || num % 2 != 0)
    fail(Errc::ParityViolation, "mu + r - 1 = " + std::to_string(num) +
                                    " is not a non-negative even number");
  return num / 2;
}

long plane_curve_genus(long d, const std::vector<long>& deltas) {
  if (d < 1) fail(Errc::Precondition, "degree must be positive");
  long g = (d - 1) * (d - 2) / 2;
  for (long dl : deltas) g -= dl;
  if (g < 0) fail(Errc::NegativeGenus, "delta invariants exceed the arithmetic genus");
  return g;
}

namespace {

struct CurveSides {
  GWClass rhs_i, rhs_ii;
  GWClass branch_transfer_total;  // sum_p Tr(sum_q Tr<1>)
  GWClass point_unit_total;       // sum_p Tr<1>
  std::vector<std::pair<std::string, GWClass>> per_point_i, per_point_ii;
  std::vector<PointSummary> summaries;
  std::vector<long> scaled_deltas;
  std::vector<std::pair<long, long>> mu_deg;
};

CurveSides curve_local_sides(const DegenerationScenario& s) {
  CurveSides out;
  for (const auto& p : s.points) {
    if (p.branches.empty())
      fail(Errc::InconsistentGlobalData,
           "point " + p.name + " carries no branch data");
    PointLocalData data = analyze_point(p, 1);
    long r = data.branch_degree_sum;
    long delta = jung_milnor_delta(data.mu, r);
    long res_deg = p.residue_field->degree();

    NfDiagClass term_i = closed_form_from_data(p, 1, data);
    NfDiagClass branch_cls = branch_points_class(p.residue_field, p.branches);
    NfDiagClass term_ii = term_i;
    term_ii.add_rational_unit(Rational(1), 1);  // drop the -<1>
    term_ii.add(-branch_cls);

    GWClass t_i = transfer_scharlau(term_i);
    GWClass t_ii = transfer_scharlau(term_ii);
    out.rhs_i.add(t_i);
    out.rhs_ii.add(t_ii);
    out.per_point_i.emplace_back(p.name, t_i);
    out.per_point_ii.emplace_back(p.name, t_ii);
    out.branch_transfer_total.add(transfer_scharlau(branch_cls));
    out.point_unit_total.add(transfer_scharlau(
        p.residue_field, {NFElem::from_rational(p.residue_field, Rational(1))}));
    out.summaries.push_back(PointSummary{p.name, data.mu, r, delta, res_deg});
    out.scaled_deltas.push_back(delta * res_deg);
    out.mu_deg.emplace_back(data.mu, res_deg);
  }
  return out;
}

struct CurveGlobal {
  long g_generic = 0, g_normalization = 0;
  GWClass sp_chi_eta;
};

CurveGlobal curve_global_sides(const DegenerationScenario& s, const CurveSides& local) {
  if (!s.global) fail(Errc::InconsistentGlobalData, "scenario carries no global data");
  const GlobalData& g = *s.global;
  CurveGlobal out;
  switch (g.kind) {
    case GlobalData::Kind::PlaneCurve: {
      out.g_generic = (g.degree - 1) * (g.degree - 2) / 2;
      out.g_normalization = plane_curve_genus(g.degree, local.scaled_deltas);
      break;
    }
    case GlobalData::Kind::GenusData: {
      if (g.g_generic < 0 || g.g_normalization < 0)
        fail(Errc::NegativeGenus, "genus data must be non-negative");
      out.g_generic = g.g_generic;
      out.g_normalization = g.g_normalization;
      break;
    }
    case GlobalData::Kind::Explicit:
      fail(Errc::InconsistentGlobalData,
           "curve check needs plane_curve or genus_data global data");
  }
  out.sp_chi_eta = g.has_chi_eta ? specialize_sp_t(g.chi_eta)
                                 : chi_c_smooth_proper_curve(out.g_generic);
  return out;
}

}  // namespace

CurveCheckReport curve_formula_check(const DegenerationScenario& s) {
  if (s.relative_dim != 1)
    fail(Errc::Precondition, "curve formula checks require relative dimension 1");
  CurveSides local = curve_local_sides(s);
  CurveGlobal global = curve_global_sides(s, local);

  GWClass chi_tilde = chi_c_smooth_proper_curve(global.g_normalization);
  // cut-and-paste: chi(C) = chi(C~) - sum_p Tr( sum_q Tr<1> - <1> )
  GWClass chi_curve =
      chi_tilde - (local.branch_transfer_total - local.point_unit_total);

  CurveCheckReport rep;
  rep.g_generic = global.g_generic;
  rep.g_normalization = global.g_normalization;
  rep.points = local.summaries;

  long long expected = expected_milnor_rank(1, local.mu_deg);

  rep.vs_curve.lhs = global.sp_chi_eta - chi_curve;
  rep.vs_curve.rhs = local.rhs_i;
  rep.vs_curve.per_point_terms = local.per_point_i;
  rep.vs_curve.rank_lhs = rep.vs_curve.lhs.rank();
  rep.vs_curve.rank_rhs = rep.vs_curve.rhs.rank();
  rep.vs_curve.equal = gw_equal(rep.vs_curve.lhs, rep.vs_curve.rhs);
  rep.vs_curve.witt_zero_rhs = is_witt_zero(rep.vs_curve.rhs);
  rep.vs_curve.milnor_rank_expected = expected;
  rep.vs_curve.milnor_rank_ok = rep.vs_curve.rank_lhs == expected;

  rep.vs_normalization.lhs = global.sp_chi_eta - chi_tilde;
  rep.vs_normalization.rhs = local.rhs_ii;
  rep.vs_normalization.per_point_terms = local.per_point_ii;
  rep.vs_normalization.rank_lhs = rep.vs_normalization.lhs.rank();
  rep.vs_normalization.rank_rhs = rep.vs_normalization.rhs.rank();
  rep.vs_normalization.equal = gw_equal(rep.vs_normalization.lhs, rep.vs_normalization.rhs);
  rep.vs_normalization.witt_zero_rhs = is_witt_zero(rep.vs_normalization.rhs);
  rep.vs_normalization.milnor_rank_expected = expected;
  rep.vs_normalization.milnor_rank_ok = rep.vs_curve.rank_lhs == expected;

  rep.witt_sum = local.rhs_ii;
  rep.witt_vanishing = is_witt_zero(rep.witt_sum);
  return rep;
}

CheckReport conductor_check(const DegenerationScenario& s) {
  CheckReport rep;
  std::vector<std::pair<long, long>> mu_deg;
  for (const auto& p : s.points) {
    PointLocalData data = analyze_point(p, s.relative_dim);
    GWClass term = transfer_scharlau(closed_form_from_data(p, s.relative_dim, data));
    rep.rhs.add(term);
    rep.per_point_terms.emplace_back(p.name, term);
    mu_deg.emplace_back(data.mu, p.residue_field->degree());
  }
  rep.rank_rhs = rep.rhs.rank();
  rep.milnor_rank_expected = expected_milnor_rank(s.relative_dim, mu_deg);
  rep.witt_zero_rhs = is_witt_zero(rep.rhs);

  rep.has_lhs = false;
  if (s.global) {
    const GlobalData& g = *s.global;
    if (g.kind == GlobalData::Kind::Explicit) {
      if (g.has_chi_eta && g.has_chi_sigma) {
        rep.lhs = specialize_sp_t(g.chi_eta) - g.chi_sigma;
        rep.has_lhs = true;
      }
    } else if (s.relative_dim == 1) {
      bool branches_ok = true;
      for (const auto& p : s.points)
        if (p.branches.empty()) branches_ok = false;
      if (branches_ok) {
        CurveCheckReport curve = curve_formula_check(s);
        rep.lhs = curve.vs_curve.lhs;
        rep.has_lhs = true;
      }
    }
  }
  if (rep.has_lhs) {
    rep.rank_lhs = rep.lhs.rank();
    rep.equal = gw_equal(rep.lhs, rep.rhs);
    rep.milnor_rank_ok = rep.rank_lhs == rep.milnor_rank_expected;
  } else {
    rep.milnor_rank_ok = rep.rank_rhs == rep.milnor_rank_expected;
  }
  return rep;
}

}  // namespace gwc
