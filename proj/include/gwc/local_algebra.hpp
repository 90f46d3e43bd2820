#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gwc/groebner.hpp"

namespace gwc {

/// The quotient by the ideal of partial derivatives at the origin, together
/// with its standard-monomial basis. Only inputs whose global Jacobian ideal
/// is zero-dimensional and supported at the origin are accepted; then the
/// global quotient equals the local one and its dimension is the Milnor
/// number.
template <class K>
struct JacobianRing {
  MultiPoly<K> f;
  std::vector<MultiPoly<K>> partials;
  GroebnerBasis<K> jacobian_gb;
  std::vector<Monomial> basis;       // ascending in the order
  std::vector<Matrix<K>> mult_matrices;  // one per variable

  long milnor_number() const { return static_cast<long>(basis.size()); }
};

template <class K>
JacobianRing<K> jacobian_ring(const MultiPoly<K>& f,
                              const MonomialOrder& order = MonomialOrder::degrevlex()) {
  int n = f.nvars();
  if (f.is_zero()) fail(Errc::NotIsolated, "zero polynomial");
  Monomial one_m(n, 0);
  if (f.has_term(one_m))
    fail(Errc::NotAtOrigin, "nonzero constant term: the fibre misses the origin");
  for (int v = 0; v < n; ++v) {
    Monomial lin(n, 0);
    lin[v] = 1;
    if (f.has_term(lin))
      fail(Errc::SmoothPoint, "nonzero linear part: the origin is a smooth point");
  }

  std::vector<MultiPoly<K>> partials;
  bool all_zero = true;
  for (int v = 0; v < n; ++v) {
    partials.push_back(f.derivative(v));
    if (!partials.back().is_zero()) all_zero = false;
  }
  if (all_zero) fail(Errc::NotIsolated, "all partial derivatives vanish");

  GroebnerBasis<K> gb = buchberger(partials, order);
  std::vector<Monomial> basis;
  try {
    basis = standard_monomials(gb);
  } catch (const GwcError& e) {
    if (e.code() == Errc::NotZeroDimensional)
      fail(Errc::NotIsolated, "Jacobian ideal is not zero-dimensional");
    throw;
  }
  if (basis.empty()) fail(Errc::SmoothPoint, "Jacobian ideal is the whole ring");
  if (!supported_at_origin(gb))
    fail(Errc::NotAtOrigin, "Jacobian ideal has critical points away from the origin");

  JacobianRing<K> r{f, std::move(partials), std::move(gb), std::move(basis), {}};
  K one = FieldTraits<K>::one(r.jacobian_gb.gens.at(0).leading_term(order).second);
  for (int v = 0; v < n; ++v)
    r.mult_matrices.push_back(
        mult_matrix(r.jacobian_gb, r.basis, MultiPoly<K>::variable(n, v, one)));
  return r;
}

/// Writes df/ds_i = sum_j A[i][j] * s_j. The canonical rule sends each
/// monomial to the column of its smallest-index variable with positive
/// exponent; a callback can override the column choice (used to probe
/// independence of the resulting class).
template <class K>
std::vector<std::vector<MultiPoly<K>>> decompose_partials(
    const JacobianRing<K>& r,
    const std::function<int(const Monomial&, const std::vector<int>&)>& pick = {}) {
  int n = r.f.nvars();
  std::vector<std::vector<MultiPoly<K>>> A(
      n, std::vector<MultiPoly<K>>(n, MultiPoly<K>::zero(n)));
  for (int i = 0; i < n; ++i) {
    for (const auto& [m, c] : r.partials[i].terms()) {
      std::vector<int> candidates;
      for (int v = 0; v < n; ++v)
        if (m[v] > 0) candidates.push_back(v);
      if (candidates.empty())
        fail(Errc::ConstantTermPresent,
             "partial derivative has a constant term; f is not in m^2");
      int j = pick ? pick(m, candidates) : candidates.front();
      Monomial mm(m);
      mm[j] -= 1;
      A[i][j].add_term(mm, c);
    }
  }
  return A;
}

namespace detail {

template <class K>
MultiPoly<K> poly_det(const std::vector<std::vector<MultiPoly<K>>>& A) {
  size_t n = A.size();
  if (n == 1) return A[0][0];
  int nv = A[0][0].nvars();
  MultiPoly<K> det(nv);
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<MultiPoly<K>>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly<K>> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(A[r][c]);
      minor.push_back(std::move(row));
    }
    MultiPoly<K> term = A[0][j] * poly_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace detail

/// Coordinates of the image of det(A) in the standard-monomial basis.
template <class K>
std::vector<K> scheja_storch_element(const JacobianRing<K>& r,
                                     const std::vector<std::vector<MultiPoly<K>>>& A) {
  MultiPoly<K> det = detail::poly_det(A);
  MultiPoly<K> nf = normal_form(det, r.jacobian_gb);
  if (nf.is_zero())
    fail(Errc::ZeroElement, "determinant reduces to zero in the Jacobian ring");
  K one = FieldTraits<K>::one(r.jacobian_gb.gens.at(0).leading_term(r.jacobian_gb.order).second);
  std::vector<K> coords(r.basis.size(), FieldTraits<K>::zero(one));
  std::map<Monomial, size_t> index;
  for (size_t i = 0; i < r.basis.size(); ++i) index[r.basis[i]] = i;
  for (const auto& [m, c] : nf.terms()) {
    auto it = index.find(m);
    if (it == index.end()) fail(Errc::Internal, "element escaped the basis");
    coords[it->second] = c;
  }
  return coords;
}

template <class K>
struct SchejaStorchForm {
  std::vector<K> ss_element;   // e in basis coordinates
  std::vector<K> functional;   // phi as a covector on the basis
  Matrix<K> gram;              // B(m_i, m_j) = phi(m_i * m_j)
};

/// Gram matrix for an arbitrary functional phi with phi(e) = 1.
template <class K>
Matrix<K> gram_for_functional(const JacobianRing<K>& r, const std::vector<K>& phi) {
  size_t mu = r.basis.size();
  int n = r.f.nvars();
  K one = FieldTraits<K>::one(phi.at(0));
  std::map<Monomial, size_t> index;
  for (size_t i = 0; i < mu; ++i) index[r.basis[i]] = i;
  Matrix<K> gram(mu, std::vector<K>(mu, FieldTraits<K>::zero(one)));
  for (size_t i = 0; i < mu; ++i) {
    for (size_t j = i; j < mu; ++j) {
      MultiPoly<K> prod(n);
      prod.add_term(mono_mul(r.basis[i], r.basis[j]), one);
      MultiPoly<K> nf = normal_form(prod, r.jacobian_gb);
      K val = FieldTraits<K>::zero(one);
      for (const auto& [m, c] : nf.terms()) {
        auto it = index.find(m);
        if (it == index.end()) fail(Errc::Internal, "product escaped the basis");
        val = val + c * phi[it->second];
      }
      gram[i][j] = val;
      gram[j][i] = val;
    }
  }
  return gram;
}

/// The canonical functional: dual to the order-largest basis monomial
/// carrying a nonzero coefficient of e, scaled so phi(e) = 1.
template <class K>
std::vector<K> canonical_functional(const std::vector<K>& e_coords) {
  size_t mu = e_coords.size();
  size_t pivot = mu;
  for (size_t i = mu; i-- > 0;) {
    if (!FieldTraits<K>::is_zero(e_coords[i])) {
      pivot = i;
      break;
    }
  }
  if (pivot == mu) fail(Errc::ZeroElement, "zero element has no dual functional");
  K one = FieldTraits<K>::one(e_coords[pivot]);
  std::vector<K> phi(mu, FieldTraits<K>::zero(one));
  phi[pivot] = FieldTraits<K>::inverse(e_coords[pivot]);
  return phi;
}

template <class K>
SchejaStorchForm<K> scheja_storch_form(const JacobianRing<K>& r) {
  auto A = decompose_partials(r);
  auto e = scheja_storch_element(r, A);
  auto phi = canonical_functional(e);
  return SchejaStorchForm<K>{e, phi, gram_for_functional(r, phi)};
}

/// Gram matrix of the bilinear form whose class is the quadratic Milnor
/// number of f at the origin.
template <class K>
Matrix<K> milnor_form(const MultiPoly<K>& f,
                      const MonomialOrder& order = MonomialOrder::degrevlex()) {
  JacobianRing<K> r = jacobian_ring(f, order);
  return scheja_storch_form(r).gram;
}

/// Validation report for a local equation against weighted-homogeneous data.
struct LooksLikeReport {
  PolyQ leading_part = PolyQ::zero(0);  // terms of weighted degree e
  bool leading_nonzero = false;
  bool is_weighted_homogeneous_leading = false;  // no terms of degree < e
  std::vector<Monomial> higher_terms;   // degree > e, allowed
  bool divisibility = false;            // each a_i divides e
  bool isolated_cone = false;           // Jacobian of F zero-dim, at origin
  bool vertex_condition = false;        // F(v_i) != 0 whenever a_i > 1
  bool quotient_smoothness_verified = false;  // not checkable here; always false
  bool pass() const {
    return leading_nonzero && is_weighted_homogeneous_leading && divisibility &&
           isolated_cone && vertex_condition;
  }
  std::string describe(int nvars) const;
};

/// Checks that f agrees with a weighted-homogeneous polynomial of degree e
/// modulo higher-order terms and that the cone it defines has an isolated
/// singularity at the origin. Weights must be strictly positive and pairwise
/// coprime.
LooksLikeReport check_looks_like(const PolyQ& f, const std::vector<long>& weights, long e);

}  // namespace gwc
