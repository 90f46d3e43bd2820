#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "gwc/multipoly.hpp"

namespace gwc {

template <class K>
using Matrix = std::vector<std::vector<K>>;

/// Reduced Groebner basis: generators monic, no term of any generator
/// divisible by the leading monomial of another, sorted by leading monomial.
template <class K>
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<MultiPoly<K>> gens;
};

/// Full remainder of p modulo G: no term of the result is divisible by any
/// leading monomial of G, and p - result lies in the ideal.
template <class K>
MultiPoly<K> normal_form(const MultiPoly<K>& p, const GroebnerBasis<K>& G) {
  std::vector<std::pair<Monomial, K>> lts;
  lts.reserve(G.gens.size());
  for (const auto& g : G.gens) lts.push_back(g.leading_term(G.order));

  MultiPoly<K> work = p;
  MultiPoly<K> result(p.nvars());
  while (!work.is_zero()) {
    auto [lm, lc] = work.leading_term(G.order);
    bool reduced = false;
    for (size_t i = 0; i < lts.size(); ++i) {
      if (!mono_divides(lts[i].first, lm)) continue;
      K factor = lc * FieldTraits<K>::inverse(lts[i].second);
      work = work - G.gens[i].times_term(factor, mono_div(lm, lts[i].first));
      reduced = true;
      break;
    }
    if (!reduced) {
      result.add_term(lm, lc);
      MultiPoly<K> t(p.nvars());
      t.add_term(lm, lc);
      work = work - t;
    }
  }
  return result;
}

namespace detail {

template <class K>
MultiPoly<K> s_polynomial(const MultiPoly<K>& f, const MultiPoly<K>& g,
                          const MonomialOrder& order) {
  auto [lmf, lcf] = f.leading_term(order);
  auto [lmg, lcg] = g.leading_term(order);
  Monomial l = mono_lcm(lmf, lmg);
  return f.times_term(FieldTraits<K>::inverse(lcf), mono_div(l, lmf)) -
         g.times_term(FieldTraits<K>::inverse(lcg), mono_div(l, lmg));
}

}  // namespace detail

/// Buchberger with the normal selection strategy (smallest lcm degree first,
/// ties broken by the order), followed by reduction to the unique reduced
/// basis.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<MultiPoly<K>>& generators,
                            const MonomialOrder& order) {
  std::vector<MultiPoly<K>> basis;
  for (const auto& g : generators)
    if (!g.is_zero()) basis.push_back(g.monic(order));
  if (basis.empty()) fail(Errc::ZeroIdeal, "all generators are zero");

  GroebnerBasis<K> gb{order, basis};
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  auto lcm_of = [&](const std::pair<size_t, size_t>& pr) {
    return mono_lcm(gb.gens[pr.first].leading_term(order).first,
                    gb.gens[pr.second].leading_term(order).first);
  };

  while (!pairs.empty()) {
    size_t best = 0;
    Monomial best_lcm = lcm_of(pairs[0]);
    for (size_t k = 1; k < pairs.size(); ++k) {
      Monomial l = lcm_of(pairs[k]);
      long dl = total_degree(l), db = total_degree(best_lcm);
      if (dl < db || (dl == db && order.less(l, best_lcm))) {
        best = k;
        best_lcm = l;
      }
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));

    Monomial lmi = gb.gens[i].leading_term(order).first;
    Monomial lmj = gb.gens[j].leading_term(order).first;
    if (mono_mul(lmi, lmj) == best_lcm) continue;  // coprime leading monomials

    MultiPoly<K> r = normal_form(detail::s_polynomial(gb.gens[i], gb.gens[j], order), gb);
    if (r.is_zero()) continue;
    gb.gens.push_back(r.monic(order));
    for (size_t k = 0; k + 1 < gb.gens.size(); ++k) pairs.emplace_back(k, gb.gens.size() - 1);
  }

  // drop generators whose leading monomial is divisible by another's
  std::vector<MultiPoly<K>> minimal;
  for (size_t i = 0; i < gb.gens.size(); ++i) {
    Monomial lmi = gb.gens[i].leading_term(order).first;
    bool redundant = false;
    for (size_t j = 0; j < gb.gens.size(); ++j) {
      if (i == j) continue;
      Monomial lmj = gb.gens[j].leading_term(order).first;
      if (lmj == lmi ? j < i : mono_divides(lmj, lmi)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(gb.gens[i]);
  }

  // tail-reduce each against the others
  GroebnerBasis<K> out{order, minimal};
  for (size_t i = 0; i < out.gens.size(); ++i) {
    GroebnerBasis<K> others{order, {}};
    for (size_t j = 0; j < out.gens.size(); ++j)
      if (j != i) others.gens.push_back(out.gens[j]);
    if (!others.gens.empty())
      out.gens[i] = normal_form(out.gens[i], others).monic(order);
  }
  std::sort(out.gens.begin(), out.gens.end(),
            [&](const MultiPoly<K>& a, const MultiPoly<K>& b) {
              return order.less(a.leading_term(order).first, b.leading_term(order).first);
            });
  return out;
}

/// All monomials outside the leading-monomial staircase, ascending in the
/// basis order. Errors unless some pure power of every variable appears
/// among the leading monomials.
template <class K>
std::vector<Monomial> standard_monomials(const GroebnerBasis<K>& G) {
  int n = G.gens.at(0).nvars();
  std::vector<Monomial> lms;
  for (const auto& g : G.gens) {
    lms.push_back(g.leading_term(G.order).first);
    if (mono_is_one(lms.back())) return {};  // unit ideal, zero ring
  }
  std::vector<int> bound(n, -1);
  for (const auto& lm : lms) {
    int nz = -1;
    bool pure = true;
    for (int v = 0; v < n; ++v) {
      if (lm[v] == 0) continue;
      if (nz >= 0) {
        pure = false;
        break;
      }
      nz = v;
    }
    if (pure && nz >= 0 && (bound[nz] < 0 || lm[nz] < bound[nz])) bound[nz] = lm[nz];
  }
  for (int v = 0; v < n; ++v)
    if (bound[v] < 0)
      fail(Errc::NotZeroDimensional,
           "no pure power of " + var_name(v, n) + " among the leading monomials");

  std::vector<Monomial> out;
  Monomial m(n, 0);
  while (true) {
    bool divisible = false;
    for (const auto& lm : lms)
      if (mono_divides(lm, m)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(m);
    int v = 0;
    while (v < n) {
      if (++m[v] < bound[v]) break;
      m[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return G.order.less(a, b);
  });
  return out;
}

/// Matrix of multiplication by g on the standard-monomial basis;
/// column j holds the coordinates of normal_form(g * basis[j]).
template <class K>
Matrix<K> mult_matrix(const GroebnerBasis<K>& G, const std::vector<Monomial>& basis,
                      const MultiPoly<K>& g) {
  size_t mu = basis.size();
  std::map<Monomial, size_t> index;
  for (size_t i = 0; i < mu; ++i) index[basis[i]] = i;
  K one = FieldTraits<K>::one(G.gens.at(0).leading_term(G.order).second);
  Matrix<K> M(mu, std::vector<K>(mu, FieldTraits<K>::zero(one)));
  for (size_t j = 0; j < mu; ++j) {
    MultiPoly<K> col = normal_form(g.times_term(one, basis[j]), G);
    for (const auto& [m, c] : col.terms()) {
      auto it = index.find(m);
      if (it == index.end())
        fail(Errc::Internal, "normal form escaped the standard-monomial basis");
      M[it->second][j] = c;
    }
  }
  return M;
}

/// True iff some power of every variable lies in the ideal, i.e. every
/// multiplication-by-variable matrix is nilpotent. Requires a
/// zero-dimensional quotient.
template <class K>
bool supported_at_origin(const GroebnerBasis<K>& G) {
  std::vector<Monomial> basis = standard_monomials(G);  // throws if not 0-dim
  size_t mu = basis.size();
  int n = G.gens.at(0).nvars();
  K one = FieldTraits<K>::one(G.gens.at(0).leading_term(G.order).second);
  for (int v = 0; v < n; ++v) {
    Monomial pw(n, 0);
    pw[v] = static_cast<int>(mu);
    MultiPoly<K> p(n);
    p.add_term(pw, one);
    if (!normal_form(p, G).is_zero()) return false;
  }
  return true;
}

}  // namespace gwc
