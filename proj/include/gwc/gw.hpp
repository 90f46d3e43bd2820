#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gwc/fieldtraits.hpp"
#include "gwc/ratfunc.hpp"

namespace gwc {

/// Symmetric Gram matrix over Q. Constructed instances are expected to be
/// nondegenerate; diagonalize rejects the rest.
struct QuadraticForm {
  std::vector<std::vector<Rational>> m;
  size_t dim() const { return m.size(); }
};

struct DiagonalForm {
  std::vector<Rational> entries;
};

/// Element of GW(Q): a finite formal Z-combination of square classes <a>,
/// keyed by the squarefree representative. Multiplicities may be negative.
class GWClass {
 public:
  GWClass() = default;
  static GWClass unit(const Rational& a);  // <a>

  const std::map<Integer, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long rank() const;
  long long signature() const;

  GWClass& add(const GWClass& o);
  GWClass& add_unit(const Rational& a, long long mult = 1);

  GWClass operator+(const GWClass& o) const;
  GWClass operator-(const GWClass& o) const;
  GWClass operator-() const;
  GWClass operator*(const GWClass& o) const;
  GWClass scaled(long long k) const;
  bool operator==(const GWClass& o) const { return terms_ == o.terms_; }

  std::string str() const;  // unicode <a> notation

 private:
  std::map<Integer, long long> terms_;
};

GWClass hyperbolic(long long m);  // m * (<1> + <-1>)
GWClass gw_pow(const GWClass& g, long n);

/// The unique squarefree integer in the square class of a nonzero rational.
Integer square_class_reduce(const Rational& a);

/// Hilbert symbol at a finite prime p (p = 2 included) or, with
/// hilbert_symbol_infinity, at the real place.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p);
int hilbert_symbol_infinity(const Rational& a, const Rational& b);

/// rank / signature / discriminant / Hasse-Witt data classifying the class
/// over Q. Hasse invariants use the convention eps = prod_{i<j} (a_i,a_j)_v
/// and are computed on the non-virtual representative obtained by replacing
/// -<a> with <-a> - h; `padding` records how many h were subtracted.
struct InvariantProfile {
  long long rank = 0;
  long long signature = 0;
  Integer discriminant = 1;          // squarefree, with sign
  long long padding = 0;
  std::map<Integer, int> hasse;      // prime -> +-1, includes 2
  int hasse_infinity = 1;
  std::string str() const;
};

InvariantProfile invariant_profile(const GWClass& g);

/// Mathematical equality of profiles: Hasse maps are compared over the union
/// of their prime sets, with +1 understood at absent primes.
bool profile_equal(const InvariantProfile& a, const InvariantProfile& b);

/// Exact equality in GW(Q), decided through rank, signature, discriminant
/// and Hasse invariants at every relevant place after identical hyperbolic
/// padding. Completeness of this invariant set is the Hasse-Minkowski
/// classification of forms over Q.
bool gw_equal(const GWClass& g1, const GWClass& g2);

/// True iff the class is a multiple of h, i.e. vanishes in the Witt ring.
bool is_witt_zero(const GWClass& g);

/// Symmetric Gaussian diagonalization over any coefficient field; throws
/// Degenerate when the determinant vanishes. When every remaining diagonal
/// entry is zero, the smallest (i, j) with B(x_i, x_j) != 0 is used via
/// x_i <- x_i + x_j. `pick_pivot`, when given, overrides the diagonal pivot
/// choice among the equally valid candidates.
template <class K>
std::vector<K> diagonalize_sym(
    std::vector<std::vector<K>> m,
    const std::function<size_t(const std::vector<size_t>&)>& pick_pivot = {}) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(Errc::Internal, "Gram matrix is not square");
  std::vector<K> diag;
  if (n == 0) return diag;

  for (size_t k = 0; k < n; ++k) {
    std::vector<size_t> candidates;
    for (size_t i = k; i < n; ++i)
      if (!FieldTraits<K>::is_zero(m[i][i])) candidates.push_back(i);
    if (candidates.empty()) {
      // all remaining diagonal entries vanish
      size_t pi = n, pj = n;
      for (size_t i = k; i < n && pi == n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (!FieldTraits<K>::is_zero(m[i][j])) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) fail(Errc::Degenerate, "matrix is degenerate");
      // x_i <- x_i + x_j makes B(x_i, x_i) = 2 B(x_i, x_j) nonzero
      for (size_t c = 0; c < n; ++c) m[pi][c] = m[pi][c] + m[pj][c];
      for (size_t r = 0; r < n; ++r) m[r][pi] = m[r][pi] + m[r][pj];
      candidates.push_back(pi);
    }
    size_t pivot = pick_pivot ? candidates[pick_pivot(candidates) % candidates.size()]
                              : candidates.front();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      for (size_t r = 0; r < n; ++r) std::swap(m[r][pivot], m[r][k]);
    }
    K inv = FieldTraits<K>::inverse(m[k][k]);
    for (size_t i = k + 1; i < n; ++i) {
      if (FieldTraits<K>::is_zero(m[i][k])) continue;
      K factor = m[i][k] * inv;
      for (size_t c = 0; c < n; ++c) m[i][c] = m[i][c] - factor * m[k][c];
      for (size_t r = 0; r < n; ++r) m[r][i] = m[r][i] - factor * m[r][k];
    }
    diag.push_back(m[k][k]);
  }
  return diag;
}

DiagonalForm diagonalize(const QuadraticForm& q);
DiagonalForm diagonalize_with_pivots(
    const QuadraticForm& q,
    const std::function<size_t(const std::vector<size_t>&)>& pick_pivot);

GWClass gw_from_diagonal(const DiagonalForm& d);
GWClass gw_from_matrix(const QuadraticForm& q);

/// Formal Z-combination of <a> with a in a number field; the carrier for
/// classes over residue fields before transfer. No square-class reduction
/// beyond exact element merging is attempted over number fields.
class NfDiagClass {
 public:
  explicit NfDiagClass(NumberFieldPtr field) : field_(std::move(field)) {}
  const NumberFieldPtr& field() const { return field_; }
  const std::vector<std::pair<NFElem, long long>>& terms() const { return terms_; }

  NfDiagClass& add_unit(const NFElem& a, long long mult = 1);
  NfDiagClass& add_rational_unit(const Rational& a, long long mult = 1);
  NfDiagClass& add(const NfDiagClass& o);
  NfDiagClass operator-() const;
  /// multiply every term by <u>
  NfDiagClass times_unit(const NFElem& u) const;

  long long rank() const;
  std::string str() const;

 private:
  NumberFieldPtr field_;
  std::vector<std::pair<NFElem, long long>> terms_;
};

/// Scharlau transfer of a diagonal form along k2/Q: each entry <a> becomes
/// the class of the Q-bilinear form (x, y) -> Tr(a x y) on the power basis.
GWClass transfer_scharlau(const NumberFieldPtr& field, const std::vector<NFElem>& entries);
GWClass transfer_scharlau(const NfDiagClass& cls);

/// Reads a class over a degree-1 field as a class over Q.
GWClass nfdiag_to_gw(const NfDiagClass& cls);

/// sp_t on a diagonal form over Q(t): <t^m u> maps to <u(0)> entrywise.
GWClass specialize_sp_t(const std::vector<RationalFunction>& entries);

}  // namespace gwc
