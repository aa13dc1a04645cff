#ifndef CHEVLIE_CHEVALLEY_HPP
#define CHEVLIE_CHEVALLEY_HPP

#include <map>
#include <vector>

#include "chevlie/field.hpp"
#include "chevlie/matrix.hpp"
#include "chevlie/rootsystem.hpp"

namespace chevlie {

/// Integer-level Chevalley data for one simple type: the full bracket
/// table of the Z-form, the normalized invariant form, and coroots.
///
/// Signs follow the extraspecial-pair convention: for each non-simple
/// positive root the pair (alpha, gamma - alpha) with alpha minimal in
/// the (height, lex) root order gets a positive constant; everything
/// else is propagated through Jacobi identities.  All divisions in the
/// propagation are exact and asserted.
class StructureTable {
public:
  static const StructureTable& of(SimpleType t);

  const RootSystem& roots() const { return rs_; }
  int dim() const { return dim_; }
  int num_positive() const { return npos_; }
  int rank() const { return rs_.rank(); }

  // Basis indexing: [0,N) e_alpha, [N,2N) e_{-alpha}, [2N,2N+l) h_1..h_l.
  int epos(int i) const { return i; }
  int eneg(int i) const { return npos_ + i; }
  int hindex(int k) const { return 2 * npos_ + k; }
  bool is_h(int idx) const { return idx >= 2 * npos_; }
  bool is_pos_root(int idx) const { return idx < npos_; }

  struct Term {
    int index;
    long long coeff;
  };
  using SparseCol = std::vector<Term>;

  /// [basis_a, basis_b] as a sparse integer vector.
  const SparseCol& bracket(int a, int b) const { return ad_[a][b]; }
  /// All columns of ad(basis_a).
  const std::vector<SparseCol>& ad_columns(int a) const { return ad_[a]; }

  /// Structure constant N_{alpha,beta} for two root vectors (signed
  /// indices); zero when alpha+beta is not a root.
  long long structure_constant(int a, int b) const;

  /// Coefficients of the coroot of positive root i over h_1..h_l.
  const std::vector<long long>& coroot(int i) const { return coroots_[i]; }

  /// Unnormalized Killing trace form on basis vectors.
  long long killing_raw(int a, int b) const;
  /// Normalized invariant form: Killing divided by the content of its
  /// integer Gram matrix.
  long long kappa(int a, int b) const;
  long long killing_content() const { return content_; }

private:
  explicit StructureTable(SimpleType t);

  const RootSystem& rs_;
  int npos_, dim_;
  std::vector<std::vector<SparseCol>> ad_; // ad_[a][b] = [basis_a, basis_b]
  std::vector<std::vector<long long>> coroots_;
  std::vector<long long> killing_epair_; // K(e_alpha, e_{-alpha}) per positive root
  std::vector<std::vector<long long>> killing_hblock_;
  long long content_ = 1;
};

/// Sparse element of the algebra: basis index -> nonzero coefficient.
template <class F>
struct LieElement {
  std::map<int, typename F::Elem> coeff;

  bool is_zero() const { return coeff.empty(); }

  void set(const F& f, int idx, typename F::Elem v) {
    if (f.is_zero(v))
      coeff.erase(idx);
    else
      coeff[idx] = std::move(v);
  }
};

/// The Chevalley algebra of a simple type over Q or GF(p): the integer
/// table reduced into the field.
template <class F>
class ChevalleyAlgebra {
public:
  ChevalleyAlgebra(SimpleType t, F field)
      : st_(StructureTable::of(t)), field_(std::move(field)) {}

  const StructureTable& table() const { return st_; }
  const RootSystem& roots() const { return st_.roots(); }
  const F& field() const { return field_; }
  int dim() const { return st_.dim(); }

  LieElement<F> basis_element(int idx) const {
    LieElement<F> x;
    x.set(field_, idx, field_.one());
    return x;
  }

  /// Sum of root vectors e_alpha with coefficient one.
  LieElement<F> element_from_roots(const std::vector<RootVec>& roots) const {
    LieElement<F> x;
    for (const RootVec& r : roots) {
      auto idx = st_.roots().signed_index(r);
      if (!idx) throw ValidationError("element_from_roots: not a root: " + format_root(r));
      x.set(field_, *idx, field_.add(value_or_zero(x, *idx), field_.one()));
    }
    return x;
  }

  LieElement<F> from_coords(const std::vector<typename F::Elem>& v) const {
    LieElement<F> x;
    for (int i = 0; i < dim(); ++i)
      if (!field_.is_zero(v[i])) x.coeff[i] = v[i];
    return x;
  }

  LieElement<F> bracket(const LieElement<F>& x, const LieElement<F>& y) const {
    std::map<int, typename F::Elem> acc;
    for (const auto& [a, xa] : x.coeff)
      for (const auto& [b, yb] : y.coeff) {
        const typename F::Elem xy = field_.mul(xa, yb);
        if (field_.is_zero(xy)) continue;
        for (const StructureTable::Term& t : st_.bracket(a, b)) {
          auto it = acc.find(t.index);
          typename F::Elem add = field_.mul(xy, field_.from_int(t.coeff));
          if (it == acc.end())
            acc.emplace(t.index, std::move(add));
          else
            it->second = field_.add(it->second, add);
        }
      }
    LieElement<F> out;
    for (auto& [i, v] : acc)
      if (!field_.is_zero(v)) out.coeff.emplace(i, std::move(v));
    return out;
  }

  Matrix<F> ad_matrix(const LieElement<F>& x) const {
    Matrix<F> m(dim(), dim());
    for (const auto& [a, xa] : x.coeff)
      for (int b = 0; b < dim(); ++b)
        for (const StructureTable::Term& t : st_.bracket(a, b))
          m(t.index, b) =
              field_.add(m(t.index, b), field_.mul(xa, field_.from_int(t.coeff)));
    return m;
  }

  struct CentralizerResult {
    std::size_t dimension;
    std::vector<std::vector<typename F::Elem>> basis;
  };

  /// Kernel of ad(x): dimension and a deterministic basis.
  CentralizerResult centralizer(const LieElement<F>& x) const {
    auto basis = nullspace(field_, ad_matrix(x));
    return {basis.size(), std::move(basis)};
  }

  /// Gram matrix of the normalized invariant form over the field.
  Matrix<F> killing_gram() const {
    Matrix<F> m(dim(), dim());
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < dim(); ++b) {
        long long v = st_.kappa(a, b);
        if (v != 0) m(a, b) = field_.from_int(v);
      }
    return m;
  }

  bool is_nilpotent_ad(const LieElement<F>& x) const {
    Matrix<F> p = ad_matrix(x);
    if (p.is_zero(field_)) return true;
    std::size_t e = 1;
    while (e < static_cast<std::size_t>(dim())) {
      p = mul(field_, p, p);
      e *= 2;
      if (p.is_zero(field_)) return true;
    }
    return false;
  }

  enum class PPowerStatus { ok, ambiguous };
  struct PPowerResult {
    PPowerStatus status;
    LieElement<F> value;
  };

  /// Solves ad(y) = (ad e)^p for y, optionally restricting y to the span
  /// of the given basis indices (e.g. one graded component).  The result
  /// is unique iff no central element lies in the allowed span.
  PPowerResult p_power(const LieElement<F>& e) const {
    std::vector<int> all(dim());
    for (int i = 0; i < dim(); ++i) all[i] = i;
    return p_power(e, all);
  }

  PPowerResult p_power(const LieElement<F>& e, const std::vector<int>& span) const {
    const unsigned p = field_.characteristic();
    if (p == 0) throw ValidationError("p_power requires a prime field");
    if (!is_nilpotent_ad(e)) throw ValidationError("p_power requires a nilpotent element");
    Matrix<F> target = ad_matrix(e);
    Matrix<F> acc = target;
    for (unsigned i = 1; i < p; ++i) acc = mul(field_, acc, target);
    // Equations: for every matrix position (r,c) touched by a candidate
    // column or by the target, sum_k y_k [b_k, e_c]_r = acc(r,c).
    std::map<std::pair<int, int>, std::size_t> row_of;
    std::vector<std::vector<typename F::Elem>> rows;
    std::vector<typename F::Elem> rhs;
    auto row_index = [&](int r, int c) {
      auto key = std::make_pair(r, c);
      auto it = row_of.find(key);
      if (it != row_of.end()) return it->second;
      std::size_t idx = rows.size();
      row_of.emplace(key, idx);
      rows.emplace_back(span.size(), field_.zero());
      rhs.push_back(acc(r, c));
      return idx;
    };
    for (std::size_t k = 0; k < span.size(); ++k) {
      const auto& cols = st_.ad_columns(span[k]);
      for (int c = 0; c < dim(); ++c)
        for (const StructureTable::Term& t : cols[c]) {
          std::size_t ri = row_index(t.index, c);
          rows[ri][k] = field_.add(rows[ri][k], field_.from_int(t.coeff));
        }
    }
    for (int r = 0; r < dim(); ++r)
      for (int c = 0; c < dim(); ++c)
        if (!field_.is_zero(acc(r, c))) row_index(r, c);
    Matrix<F> a(rows.size(), span.size());
    std::vector<typename F::Elem> b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < span.size(); ++j) a(i, j) = rows[i][j];
      b[i] = rhs[i];
    }
    AffineSolution<F> sol = solve_affine(field_, a, b);
    if (!sol.consistent)
      throw Error("p_power: no solution to ad(y) = (ad e)^p; the restricted structure is broken");
    PPowerResult out;
    out.status = sol.kernel.empty() ? PPowerStatus::ok : PPowerStatus::ambiguous;
    for (std::size_t j = 0; j < span.size(); ++j)
      if (!field_.is_zero(sol.particular[j])) out.value.coeff[span[j]] = sol.particular[j];
    return out;
  }

private:
  typename F::Elem value_or_zero(const LieElement<F>& x, int idx) const {
    auto it = x.coeff.find(idx);
    return it == x.coeff.end() ? field_.zero() : it->second;
  }

  const StructureTable& st_;
  F field_;
};

using RationalAlgebra = ChevalleyAlgebra<Rationals>;
using ModularAlgebra = ChevalleyAlgebra<PrimeField>;

} // namespace chevlie

#endif
