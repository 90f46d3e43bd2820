#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwc/parse.hpp"
#include "gwc/scenario.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::string order = "degrevlex";
  bool timing = false;
};

gwc::MonomialOrder pick_order(const Options& opt) {
  if (opt.order == "lex") return gwc::MonomialOrder::lex();
  if (opt.order == "degrevlex") return gwc::MonomialOrder::degrevlex();
  gwc::fail(gwc::Errc::ParseError, "unknown order '" + opt.order + "'");
}

// FNV-1a over the raw inputs; keeps reports reproducible and comparable.
std::string digest(const std::vector<std::string>& inputs) {
  unsigned long long h = 1469598103934665603ull;
  for (const auto& s : inputs)
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return std::string(buf);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) gwc::fail(gwc::Errc::SchemaError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const json& payload, const std::string& text) {
  if (opt.format == "json") {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<gwc::Rational> parse_diag_entries(const std::string& s) {
  std::vector<gwc::Rational> out;
  for (const auto& piece : split_list(s, ','))
    out.push_back(gwc::parse_rational(piece));
  return out;
}

gwc::GWClass diag_class(const std::string& s) {
  gwc::GWClass g;
  for (const auto& a : parse_diag_entries(s)) {
    if (a.is_zero()) gwc::fail(gwc::Errc::ZeroEntry, "zero diagonal entry");
    g.add_unit(a);
  }
  return g;
}

std::vector<gwc::Integer> parse_minpoly(const std::string& s) {
  std::vector<gwc::Integer> out;
  for (const auto& piece : split_list(s, ',')) {
    try {
      out.emplace_back(gwc::Integer(piece));
    } catch (const std::exception&) {
      gwc::fail(gwc::Errc::ParseError, "bad integer '" + piece + "' in minpoly");
    }
  }
  return out;
}

std::string render_check_report(const gwc::CheckReport& r, const std::string& title,
                                bool show_milnor_line = true) {
  std::string out = title + ":\n";
  if (r.has_lhs) {
    out += "  lhs = " + r.lhs.str() + "   (rank " + std::to_string(r.rank_lhs) + ")\n";
  } else {
    out += "  lhs = (not derivable from the supplied global data)\n";
  }
  out += "  rhs = " + r.rhs.str() + "   (rank " + std::to_string(r.rank_rhs) + ")\n";
  for (const auto& [name, term] : r.per_point_terms)
    out += "    term[" + name + "] = " + term.str() + "\n";
  if (r.has_lhs) out += std::string("  equal = ") + (r.equal ? "true" : "false") + "\n";
  if (show_milnor_line)
    out += "  milnor rank check: " + std::to_string(r.has_lhs ? r.rank_lhs : r.rank_rhs) +
           " expected " + std::to_string(r.milnor_rank_expected) +
           (r.milnor_rank_ok ? " (ok)" : " (FAIL)") + "\n";
  return out;
}

int run_milnor(const Options& opt, const std::string& poly_text) {
  gwc::PolyQ f = gwc::parse_poly(poly_text);
  auto jr = gwc::jacobian_ring(f, pick_order(opt));
  json payload;
  payload["command"] = "milnor";
  payload["digest"] = digest({poly_text, opt.order});
  payload["mu"] = jr.milnor_number();
  json basis = json::array();
  for (const auto& m : jr.basis) basis.push_back(gwc::mono_str(m, f.nvars()));
  payload["basis"] = basis;
  json gens = json::array();
  for (const auto& g : jr.jacobian_gb.gens) gens.push_back(g.str());
  payload["groebner_basis"] = gens;

  std::string text = "mu = " + std::to_string(jr.milnor_number()) + "\nbasis:";
  for (const auto& m : jr.basis) text += " " + gwc::mono_str(m, f.nvars());
  text += "\ngroebner basis:\n";
  for (const auto& g : jr.jacobian_gb.gens) text += "  " + g.str() + "\n";
  emit(opt, payload, text);
  return 0;
}

int run_ss_form(const Options& opt, const std::string& poly_text) {
  gwc::PolyQ f = gwc::parse_poly(poly_text);
  auto jr = gwc::jacobian_ring(f, pick_order(opt));
  auto form = gwc::scheja_storch_form(jr);
  gwc::QuadraticForm q{form.gram};
  gwc::DiagonalForm d = gwc::diagonalize(q);
  gwc::GWClass cls = gwc::gw_from_diagonal(d);
  gwc::InvariantProfile prof = gwc::invariant_profile(cls);

  json payload;
  payload["command"] = "ss-form";
  payload["digest"] = digest({poly_text, opt.order});
  payload["mu"] = jr.milnor_number();
  json gram = json::array();
  for (const auto& row : form.gram) {
    json r = json::array();
    for (const auto& e : row) r.push_back(gwc::to_string(e));
    gram.push_back(r);
  }
  payload["gram"] = gram;
  json diag = json::array();
  for (const auto& e : d.entries) diag.push_back(gwc::to_string(e));
  payload["diagonal"] = diag;
  payload["class"] = gwc::gw_to_json(cls);
  payload["profile"] = gwc::profile_to_json(prof);

  std::string text = "mu = " + std::to_string(jr.milnor_number()) + "\ngram:\n";
  for (const auto& row : form.gram) {
    text += "  [";
    for (size_t i = 0; i < row.size(); ++i)
      text += (i ? ", " : "") + gwc::to_string(row[i]);
    text += "]\n";
  }
  text += "diagonal:";
  for (const auto& e : d.entries) text += " " + gwc::to_string(e);
  text += "\nclass = " + cls.str() + "\n";
  text += "profile: " + prof.str() + "\n";
  emit(opt, payload, text);
  return 0;
}

int run_gw_invariants(const Options& opt, const std::string& entries) {
  gwc::GWClass g = diag_class(entries);
  gwc::InvariantProfile prof = gwc::invariant_profile(g);
  json payload;
  payload["command"] = "gw invariants";
  payload["digest"] = digest({entries});
  payload["class"] = gwc::gw_to_json(g);
  payload["profile"] = gwc::profile_to_json(prof);
  emit(opt, payload, "class = " + g.str() + "\nprofile: " + prof.str() + "\n");
  return 0;
}

int run_gw_equal(const Options& opt, const std::string& e1, const std::string& e2) {
  gwc::GWClass g1 = diag_class(e1);
  gwc::GWClass g2 = diag_class(e2);
  bool eq = gwc::gw_equal(g1, g2);
  json payload;
  payload["command"] = "gw equal";
  payload["digest"] = digest({e1, e2});
  payload["lhs"] = gwc::gw_to_json(g1);
  payload["rhs"] = gwc::gw_to_json(g2);
  payload["equal"] = eq;
  emit(opt, payload, std::string(eq ? "true" : "false") + "\n");
  return eq ? 0 : 1;
}

int run_gw_transfer(const Options& opt, const std::string& minpoly,
                    const std::string& entries) {
  auto field = gwc::NumberField::make(parse_minpoly(minpoly));
  std::vector<gwc::NFElem> diag;
  for (const auto& piece : split_list(entries, ','))
    diag.push_back(gwc::NFElem::from_upoly(field, gwc::parse_upoly_gen(piece)));
  gwc::GWClass out = gwc::transfer_scharlau(field, diag);
  json payload;
  payload["command"] = "gw transfer";
  payload["digest"] = digest({minpoly, entries});
  payload["class"] = gwc::gw_to_json(out);
  payload["profile"] = gwc::profile_to_json(gwc::invariant_profile(out));
  std::string warn =
      field->irreducibility_verified() ? "" : "note: irreducibility not verified (degree >= 5)\n";
  emit(opt, payload, warn + "transfer = " + out.str() + "\n");
  return 0;
}

int run_gw_specialize(const Options& opt, const std::string& entries) {
  std::vector<gwc::RationalFunction> diag;
  for (const auto& piece : split_list(entries, ','))
    diag.push_back(gwc::parse_ratfunc(piece));
  gwc::GWClass out = gwc::specialize_sp_t(diag);
  json payload;
  payload["command"] = "gw specialize";
  payload["digest"] = digest({entries});
  payload["class"] = gwc::gw_to_json(out);
  emit(opt, payload, "sp_t = " + out.str() + "\n");
  return 0;
}

int run_delta(const Options& opt, const std::string& poly_text, const std::string& weights,
              long degree, int n, const std::string& factors) {
  gwc::SingularPoint p;
  p.name = "p";
  p.residue_field = gwc::rational_field();
  p.local_poly = gwc::parse_poly(poly_text);
  if (!weights.empty()) {
    for (const auto& piece : split_list(weights, ',')) {
      try {
        p.weights.push_back(std::stol(piece));
      } catch (const std::exception&) {
        gwc::fail(gwc::Errc::ParseError, "bad weight '" + piece + "'");
      }
    }
  }
  p.degree = degree;

  gwc::NfDiagClass closed_nf = gwc::delta_t_closed_form(p, n);
  gwc::GWClass closed = gwc::nfdiag_to_gw(closed_nf);

  json payload;
  payload["command"] = "delta";
  payload["digest"] = digest({poly_text, weights, std::to_string(degree),
                              std::to_string(n), factors});
  payload["closed_form"] = gwc::gw_to_json(closed);
  payload["profile"] = gwc::profile_to_json(gwc::invariant_profile(closed));
  std::string text = "closed form = " + closed.str() + "\n";

  int rc = 0;
  if (!factors.empty()) {
    bool homogeneous = true;
    for (long a : p.weights)
      if (a != 1) homogeneous = false;
    if (n != 1 || !homogeneous)
      gwc::fail(gwc::Errc::Precondition,
                "the strata route needs n = 1 and a homogeneous F");
    std::vector<gwc::UPoly> fs;
    for (const auto& piece : split_list(factors, ','))
      fs.push_back(gwc::parse_upoly_x(piece));
    gwc::GWClass strata = gwc::delta_t_strata_homog(p.local_poly, degree, fs);
    bool eq = gwc::gw_equal(strata, closed);
    payload["strata"] = gwc::gw_to_json(strata);
    payload["equal"] = eq;
    text += "strata form = " + strata.str() + "\n";
    text += std::string("equal = ") + (eq ? "true" : "false") + "\n";
    rc = eq ? 0 : 1;
  }
  emit(opt, payload, text);
  return rc;
}

int run_curve_check(const Options& opt, const std::string& path) {
  std::string raw = read_file(path);
  gwc::DegenerationScenario s = gwc::load_scenario_file(path);
  gwc::CurveCheckReport rep = gwc::curve_formula_check(s);

  json payload = gwc::curve_report_to_json(rep);
  payload["command"] = "curve-check";
  payload["digest"] = digest({raw});

  std::string text;
  text += "g_generic = " + std::to_string(rep.g_generic) +
          ", g_normalization = " + std::to_string(rep.g_normalization) + "\n";
  for (const auto& p : rep.points)
    text += "point " + p.name + ": mu = " + std::to_string(p.mu) + ", r = " +
            std::to_string(p.branch_count) + ", delta = " + std::to_string(p.delta) + "\n";
  text += render_check_report(rep.vs_curve, "variant vs curve");
  text += render_check_report(rep.vs_normalization, "variant vs normalization",
                              /*show_milnor_line=*/false);
  text += "witt sum of local terms = " + rep.witt_sum.str() + "\n";
  text += std::string("witt vanishing = ") + (rep.witt_vanishing ? "true" : "false") + "\n";
  emit(opt, payload, text);
  return rep.vs_curve.equal && rep.vs_normalization.equal ? 0 : 1;
}

int run_conductor(const Options& opt, const std::string& path) {
  std::string raw = read_file(path);
  gwc::DegenerationScenario s = gwc::load_scenario_file(path);
  gwc::CheckReport rep = gwc::conductor_check(s);

  json payload = gwc::check_report_to_json(rep);
  payload["command"] = "conductor";
  payload["digest"] = digest({raw});
  std::string text = render_check_report(rep, "conductor formula");
  if (!rep.has_lhs)
    text += "note: rhs-only report; supply explicit chi data or curve global data "
            "for a two-sided check\n";
  emit(opt, payload, text);
  if (!rep.has_lhs) return 0;
  return rep.equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Grothendieck-Witt refinements of Milnor numbers and "
               "conductor-formula checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--order", opt.order, "monomial order")
      ->check(CLI::IsMember({"degrevlex", "lex"}));
  app.add_flag("--timing", opt.timing, "append elapsed time to text output");

  std::string poly, entries1, entries2, minpoly, scenario_path, weights, factors;
  long degree = 0;
  int rel_dim = 1;

  auto* milnor = app.add_subcommand("milnor", "Milnor number and Jacobian-ring basis");
  milnor->add_option("poly", poly, "polynomial over Q")->required();

  auto* ss = app.add_subcommand("ss-form", "Scheja-Storch bilinear form and its class");
  ss->add_option("poly", poly, "polynomial over Q")->required();

  auto* gw = app.add_subcommand("gw", "Grothendieck-Witt arithmetic over Q");
  gw->require_subcommand(1);
  auto* gw_inv = gw->add_subcommand("invariants", "rank/signature/disc/Hasse profile");
  gw_inv->add_option("entries", entries1, "diagonal entries, comma separated")->required();
  auto* gw_eq = gw->add_subcommand("equal", "decide equality in GW(Q)");
  gw_eq->add_option("lhs", entries1, "diagonal entries")->required();
  gw_eq->add_option("rhs", entries2, "diagonal entries")->required();
  auto* gw_tr = gw->add_subcommand("transfer", "Scharlau transfer to GW(Q)");
  gw_tr->add_option("--minpoly", minpoly, "integer coefficients, constant first")->required();
  gw_tr->add_option("entries", entries1, "diagonal entries, polynomials in a")->required();
  auto* gw_sp = gw->add_subcommand("specialize", "sp_t: GW(Q(t)) -> GW(Q)");
  gw_sp->add_option("entries", entries1, "diagonal entries, rational functions in t")
      ->required();

  auto* delta = app.add_subcommand("delta", "Delta_t of a (weighted) homogeneous form");
  delta->add_option("poly", poly, "defining polynomial F over Q")->required();
  delta->add_option("--weights", weights, "weights a_*, comma separated (default all 1)");
  delta->add_option("--degree", degree, "weighted degree e")->required();
  delta->add_option("-n,--relative-dim", rel_dim, "relative dimension (default 1)");
  delta->add_option("--factors", factors,
                    "irreducible factors of F(x,1), comma separated; triggers the "
                    "strata evaluation and a consistency verdict");

  auto* curve = app.add_subcommand("curve-check", "curve formula check on a scenario file");
  curve->add_option("scenario", scenario_path, "scenario JSON file")->required();

  auto* cond = app.add_subcommand("conductor", "conductor formula check on a scenario file");
  cond->add_option("scenario", scenario_path, "scenario JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (milnor->parsed()) rc = run_milnor(opt, poly);
    else if (ss->parsed()) rc = run_ss_form(opt, poly);
    else if (gw->parsed()) {
      if (gw_inv->parsed()) rc = run_gw_invariants(opt, entries1);
      else if (gw_eq->parsed()) rc = run_gw_equal(opt, entries1, entries2);
      else if (gw_tr->parsed()) rc = run_gw_transfer(opt, minpoly, entries1);
      else if (gw_sp->parsed()) rc = run_gw_specialize(opt, entries1);
    } else if (delta->parsed()) {
      rc = run_delta(opt, poly, weights, degree, rel_dim, factors);
    } else if (curve->parsed()) {
      rc = run_curve_check(opt, scenario_path);
    } else if (cond->parsed()) {
      rc = run_conductor(opt, scenario_path);
    }
  } catch (const gwc::GwcError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gwc::errc_is_internal(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  if (opt.timing && opt.format == "text") {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cout << "elapsed: " << ms << " ms\n";
  }
  return rc;
}
