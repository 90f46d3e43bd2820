#include "gwc/scenario.hpp"

#include <fstream>
#include <set>

#include "gwc/parse.hpp"

namespace gwc {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& context) {
  if (!obj.is_object()) fail(Errc::SchemaError, context + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (allowed.find(it.key()) == allowed.end())
      fail(Errc::SchemaError, "unknown field '" + it.key() + "' in " + context);
}

long get_long(const json& j, const std::string& context) {
  if (!j.is_number_integer()) fail(Errc::SchemaError, context + " must be an integer");
  return j.get<long>();
}

std::vector<Integer> coeff_list(const json& j, const std::string& context) {
  if (!j.is_array() || j.empty())
    fail(Errc::SchemaError, context + " must be a non-empty coefficient list");
  std::vector<Integer> out;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      out.emplace_back(c.get<long long>());
    } else if (c.is_string()) {
      out.emplace_back(Integer(c.get<std::string>()));
    } else {
      fail(Errc::SchemaError, context + " entries must be integers");
    }
  }
  return out;
}

NumberFieldPtr field_from_minpoly(const json& j, const std::string& context) {
  return NumberField::make(coeff_list(j, context));
}

SingularPoint parse_point(const json& j, size_t index) {
  std::string ctx = "points[" + std::to_string(index) + "]";
  check_keys(j, {"name", "residue_field_minpoly", "poly", "weights", "degree",
                 "branches", "mu", "factors"},
             ctx);
  SingularPoint p;
  p.name = j.contains("name") ? j.at("name").get<std::string>()
                              : "p" + std::to_string(index);
  p.residue_field = j.contains("residue_field_minpoly")
                        ? field_from_minpoly(j.at("residue_field_minpoly"),
                                             ctx + ".residue_field_minpoly")
                        : rational_field();
  if (!j.contains("poly")) fail(Errc::SchemaError, ctx + " is missing 'poly'");
  p.local_poly = parse_poly(j.at("poly").get<std::string>());
  if (j.contains("weights")) {
    if (!j.at("weights").is_array()) fail(Errc::SchemaError, ctx + ".weights must be a list");
    for (const auto& w : j.at("weights"))
      p.weights.push_back(get_long(w, ctx + ".weights entry"));
  }
  if (!j.contains("degree")) fail(Errc::SchemaError, ctx + " is missing 'degree'");
  p.degree = get_long(j.at("degree"), ctx + ".degree");
  if (j.contains("branches")) {
    if (!j.at("branches").is_array())
      fail(Errc::SchemaError, ctx + ".branches must be a list of coefficient lists");
    size_t bi = 0;
    for (const auto& b : j.at("branches"))
      p.branches.push_back(
          field_from_minpoly(b, ctx + ".branches[" + std::to_string(bi++) + "]"));
  }
  if (j.contains("mu")) p.supplied_mu = get_long(j.at("mu"), ctx + ".mu");
  if (j.contains("factors")) {
    if (!j.at("factors").is_array())
      fail(Errc::SchemaError, ctx + ".factors must be a list of polynomial strings");
    for (const auto& f : j.at("factors"))
      p.factors.push_back(parse_upoly_x(f.get<std::string>()));
  }
  return p;
}

GlobalData parse_global(const json& j) {
  check_keys(j, {"kind", "degree", "g_generic", "g_normalization", "chi_eta", "chi_sigma"},
             "global");
  GlobalData g;
  if (!j.contains("kind")) fail(Errc::SchemaError, "global is missing 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "plane_curve") {
    g.kind = GlobalData::Kind::PlaneCurve;
    if (!j.contains("degree")) fail(Errc::SchemaError, "plane_curve needs 'degree'");
    g.degree = get_long(j.at("degree"), "global.degree");
  } else if (kind == "genus_data") {
    g.kind = GlobalData::Kind::GenusData;
    if (!j.contains("g_generic") || !j.contains("g_normalization"))
      fail(Errc::SchemaError, "genus_data needs 'g_generic' and 'g_normalization'");
    g.g_generic = get_long(j.at("g_generic"), "global.g_generic");
    g.g_normalization = get_long(j.at("g_normalization"), "global.g_normalization");
  } else if (kind == "explicit") {
    g.kind = GlobalData::Kind::Explicit;
  } else {
    fail(Errc::SchemaError, "unknown global kind '" + kind + "'");
  }
  if (j.contains("chi_eta")) {
    if (!j.at("chi_eta").is_array())
      fail(Errc::SchemaError, "chi_eta must be a list of rational-function strings");
    for (const auto& e : j.at("chi_eta"))
      g.chi_eta.push_back(parse_ratfunc(e.get<std::string>()));
    g.has_chi_eta = true;
  }
  if (j.contains("chi_sigma")) {
    g.chi_sigma = gw_from_json(j.at("chi_sigma"));
    g.has_chi_sigma = true;
  }
  return g;
}

}  // namespace

DegenerationScenario parse_scenario(const json& doc) {
  check_keys(doc, {"version", "relative_dim", "field", "points", "global"}, "scenario");
  if (doc.contains("version") && doc.at("version").get<std::string>() != "1")
    fail(Errc::SchemaError, "unsupported scenario version");
  if (doc.contains("field") && doc.at("field").get<std::string>() != "Q")
    fail(Errc::SchemaError, "only the base field Q is supported");
  DegenerationScenario s;
  if (!doc.contains("relative_dim"))
    fail(Errc::SchemaError, "scenario is missing 'relative_dim'");
  long n = get_long(doc.at("relative_dim"), "relative_dim");
  if (n < 1) fail(Errc::SchemaError, "relative_dim must be at least 1");
  s.relative_dim = static_cast<int>(n);
  if (doc.contains("points")) {
    if (!doc.at("points").is_array()) fail(Errc::SchemaError, "points must be a list");
    size_t i = 0;
    for (const auto& p : doc.at("points")) s.points.push_back(parse_point(p, i++));
  }
  if (doc.contains("global")) {
    s.global = parse_global(doc.at("global"));
    if (s.global->kind != GlobalData::Kind::Explicit && s.relative_dim != 1)
      fail(Errc::SchemaError,
           "plane_curve and genus_data global data require relative_dim 1");
  }
  return s;
}

DegenerationScenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::SchemaError, "cannot open scenario file " + path);
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    fail(Errc::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

nlohmann::json gw_to_json(const GWClass& g) {
  json terms = json::array();
  for (const auto& [a, m] : g.terms()) {
    json t;
    if (a >= std::numeric_limits<long long>::min() &&
        a <= std::numeric_limits<long long>::max()) {
      t["entry"] = static_cast<long long>(a);
    } else {
      t["entry"] = a.str();
    }
    t["multiplicity"] = m;
    terms.push_back(t);
  }
  return terms;
}

GWClass gw_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(Errc::SchemaError, "GW class must be a list of terms");
  GWClass g;
  for (const auto& t : j) {
    check_keys(t, {"entry", "multiplicity"}, "GW term");
    if (!t.contains("entry") || !t.contains("multiplicity"))
      fail(Errc::SchemaError, "GW term needs 'entry' and 'multiplicity'");
    Integer entry;
    if (t.at("entry").is_number_integer()) {
      entry = Integer(t.at("entry").get<long long>());
    } else if (t.at("entry").is_string()) {
      entry = Integer(t.at("entry").get<std::string>());
    } else {
      fail(Errc::SchemaError, "GW entry must be an integer");
    }
    if (entry.is_zero()) fail(Errc::SchemaError, "GW entry must be nonzero");
    long long mult = t.at("multiplicity").get<long long>();
    g.add_unit(Rational(entry), mult);
  }
  return g;
}

nlohmann::json profile_to_json(const InvariantProfile& p) {
  json out;
  out["rank"] = p.rank;
  out["signature"] = p.signature;
  out["discriminant"] = p.discriminant.str();
  json hasse = json::object();
  for (const auto& [prime, eps] : p.hasse) hasse[prime.str()] = eps;
  out["hasse"] = hasse;
  out["hasse_infinity"] = p.hasse_infinity;
  out["padding"] = p.padding;
  return out;
}

nlohmann::json check_report_to_json(const CheckReport& r) {
  json out;
  if (r.has_lhs) {
    out["lhs"] = gw_to_json(r.lhs);
    out["rank_lhs"] = r.rank_lhs;
    out["equal"] = r.equal;
  } else {
    out["lhs"] = nullptr;
  }
  out["rhs"] = gw_to_json(r.rhs);
  out["rank_rhs"] = r.rank_rhs;
  out["witt_zero_rhs"] = r.witt_zero_rhs;
  out["milnor_rank_expected"] = r.milnor_rank_expected;
  out["milnor_rank_ok"] = r.milnor_rank_ok;
  json pts = json::array();
  for (const auto& [name, cls] : r.per_point_terms) {
    json p;
    p["point"] = name;
    p["term"] = gw_to_json(cls);
    pts.push_back(p);
  }
  out["per_point_terms"] = pts;
  return out;
}

nlohmann::json curve_report_to_json(const CurveCheckReport& r) {
  json out;
  out["vs_curve"] = check_report_to_json(r.vs_curve);
  out["vs_normalization"] = check_report_to_json(r.vs_normalization);
  out["witt_sum"] = gw_to_json(r.witt_sum);
  out["witt_vanishing"] = r.witt_vanishing;
  out["g_generic"] = r.g_generic;
  out["g_normalization"] = r.g_normalization;
  json pts = json::array();
  for (const auto& p : r.points) {
    json pj;
    pj["name"] = p.name;
    pj["mu"] = p.mu;
    pj["branches"] = p.branch_count;
    pj["delta"] = p.delta;
    pj["residue_degree"] = p.residue_degree;
    pts.push_back(pj);
  }
  out["points"] = pts;
  return out;
}

}  // namespace gwc
