#include "gwc/local_algebra.hpp"

namespace gwc {

std::string LooksLikeReport::describe(int nvars) const {
  std::string out;
  out += "leading_part: " + leading_part.str() + "\n";
  out += std::string("weighted_homogeneous_leading: ") +
         (is_weighted_homogeneous_leading ? "yes" : "no") + "\n";
  if (!higher_terms.empty()) {
    out += "higher_terms:";
    for (const auto& m : higher_terms) out += " " + mono_str(m, nvars);
    out += "\n";
  }
  out += std::string("divisibility: ") + (divisibility ? "yes" : "no") + "\n";
  out += std::string("isolated_cone: ") + (isolated_cone ? "yes" : "no") + "\n";
  out += std::string("vertex_condition: ") + (vertex_condition ? "yes" : "no") + "\n";
  out += "quotient_smoothness: unverified\n";
  return out;
}

LooksLikeReport check_looks_like(const PolyQ& f, const std::vector<long>& weights, long e) {
  int n = f.nvars();
  if (static_cast<int>(weights.size()) != n)
    fail(Errc::Precondition, "weight vector length must equal the variable count");
  for (long w : weights)
    if (w <= 0) fail(Errc::Precondition, "weights must be strictly positive");
  for (size_t i = 0; i < weights.size(); ++i)
    for (size_t j = i + 1; j < weights.size(); ++j)
      if (gcd_int(Integer(weights[i]), Integer(weights[j])) != 1)
        fail(Errc::Precondition, "weights must be pairwise coprime");
  if (e < 1) fail(Errc::Precondition, "weighted degree must be positive");

  LooksLikeReport rep;
  rep.leading_part = f.graded_part(weights, e);
  rep.leading_nonzero = !rep.leading_part.is_zero();

  rep.is_weighted_homogeneous_leading = true;
  for (const auto& [m, c] : f.terms()) {
    long d = weighted_degree(m, weights);
    if (d < e) rep.is_weighted_homogeneous_leading = false;
    if (d > e) rep.higher_terms.push_back(m);
  }

  rep.divisibility = true;
  for (long w : weights)
    if (e % w != 0) rep.divisibility = false;

  rep.isolated_cone = false;
  if (rep.leading_nonzero) {
    try {
      jacobian_ring(rep.leading_part);
      rep.isolated_cone = true;
    } catch (const GwcError&) {
      rep.isolated_cone = false;
    }
  }

  rep.vertex_condition = true;
  for (int i = 0; i < n; ++i) {
    if (weights[i] <= 1) continue;
    if (e % weights[i] != 0) {
      rep.vertex_condition = false;
      continue;
    }
    Monomial pure(n, 0);
    pure[i] = static_cast<int>(e / weights[i]);
    if (!rep.leading_part.has_term(pure)) rep.vertex_condition = false;
  }
  return rep;
}

}  // namespace gwc
