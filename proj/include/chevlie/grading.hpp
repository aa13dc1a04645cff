#ifndef CHEVLIE_GRADING_HPP
#define CHEVLIE_GRADING_HPP

#include <map>
#include <vector>

#include "chevlie/chevalley.hpp"
#include "chevlie/rootsystem.hpp"

namespace chevlie {

/// Z-grading of a Chevalley algebra induced by a cocharacter: e_alpha
/// sits in degree pairing(tau, alpha), the Cartan in degree 0.
struct Grading {
  Cocharacter tau;
  std::vector<long long> index_degree;            // degree per basis index
  std::map<long long, std::vector<int>> buckets;  // degree -> basis indices

  long long degree_of(int idx) const { return index_degree[idx]; }
  std::size_t bucket_dim(long long d) const {
    auto it = buckets.find(d);
    return it == buckets.end() ? 0 : it->second.size();
  }
  const std::vector<int>* bucket(long long d) const {
    auto it = buckets.find(d);
    return it == buckets.end() ? nullptr : &it->second;
  }
};

/// Builds the grading; field-independent.
Grading grade(const RootSystem& rs, const Cocharacter& tau);

template <class F>
bool is_homogeneous(const LieElement<F>& x, const Grading& g, long long degree) {
  for (const auto& [idx, v] : x.coeff)
    if (g.degree_of(idx) != degree) return false;
  return true;
}

namespace detail {

template <class F>
void require_degree2(const ChevalleyAlgebra<F>&, const LieElement<F>& e, const Grading& g) {
  if (!is_homogeneous(e, g, 2))
    throw NotHomogeneousError("graded operation requires an element homogeneous of degree 2");
}

} // namespace detail

/// Matrix of ad(e) restricted to g(tau,j) -> g(tau,j+2), in bucket bases.
template <class F>
Matrix<F> restricted_ad_block(const ChevalleyAlgebra<F>& alg, const LieElement<F>& e,
                              const Grading& g, long long j) {
  detail::require_degree2(alg, e, g);
  const F& f = alg.field();
  const std::vector<int>* src = g.bucket(j);
  const std::vector<int>* dst = g.bucket(j + 2);
  const std::size_t nsrc = src ? src->size() : 0;
  const std::size_t ndst = dst ? dst->size() : 0;
  Matrix<F> m(ndst, nsrc);
  if (!src || !dst) return m;
  std::map<int, std::size_t> dst_pos;
  for (std::size_t i = 0; i < dst->size(); ++i) dst_pos[(*dst)[i]] = i;
  const StructureTable& st = alg.table();
  for (std::size_t c = 0; c < src->size(); ++c) {
    for (const auto& [a, va] : e.coeff)
      for (const StructureTable::Term& t : st.bracket(a, (*src)[c])) {
        auto it = dst_pos.find(t.index);
        if (it == dst_pos.end())
          throw Error("internal: bracket left the expected graded component");
        m(it->second, c) = f.add(m(it->second, c), f.mul(va, f.from_int(t.coeff)));
      }
  }
  return m;
}

/// dim [e, g(tau,j)] inside g(tau,j+2).
template <class F>
std::size_t bracket_image_dim(const ChevalleyAlgebra<F>& alg, const LieElement<F>& e,
                              const Grading& g, long long j) {
  return rank(alg.field(), restricted_ad_block(alg, e, g, j));
}

/// Kernel dimension of ad(e) on each graded component.  The values sum
/// to the full centralizer dimension.
template <class F>
std::map<long long, std::size_t> graded_centralizer_dims(const ChevalleyAlgebra<F>& alg,
                                                         const LieElement<F>& e,
                                                         const Grading& g) {
  detail::require_degree2(alg, e, g);
  std::map<long long, std::size_t> out;
  for (const auto& [deg, bucket] : g.buckets) {
    std::size_t r = bracket_image_dim(alg, e, g, deg);
    out[deg] = bucket.size() - r;
  }
  return out;
}

/// Whether the normalized invariant form pairs g(tau,i) and g(tau,-i)
/// perfectly: equal dimensions and full-rank Gram block.  i = 0 is
/// rejected (the form may have a radical in degree zero).
template <class F>
bool pairing_perfect(const ChevalleyAlgebra<F>& alg, const Grading& g, long long i) {
  if (i == 0) throw ValidationError("pairing_perfect: degree 0 is not allowed");
  const std::vector<int>* up = g.bucket(i);
  const std::vector<int>* dn = g.bucket(-i);
  std::size_t du = up ? up->size() : 0;
  std::size_t dd = dn ? dn->size() : 0;
  if (du != dd) return false;
  if (du == 0) return true;
  const F& f = alg.field();
  const StructureTable& st = alg.table();
  Matrix<F> gram(du, dd);
  for (std::size_t r = 0; r < du; ++r)
    for (std::size_t c = 0; c < dd; ++c) {
      long long v = st.kappa((*up)[r], (*dn)[c]);
      if (v != 0) gram(r, c) = f.from_int(v);
    }
  return rank(f, gram) == du;
}

struct DualityCheck {
  bool holds;
  long long codim_image; // dim g(tau,2) - dim [e, g(tau,0)]
  long long kernel_neg2; // dim of the degree -2 graded centralizer
};

/// Linear-algebra self-check: under a perfect (2,-2) pairing, the
/// codimension of [e, g(0)] in g(2) must equal dim g_e(-2).
template <class F>
DualityCheck duality_identity_check(const ChevalleyAlgebra<F>& alg, const LieElement<F>& e,
                                    const Grading& g) {
  detail::require_degree2(alg, e, g);
  if (!pairing_perfect(alg, g, 2))
    throw ValidationError("duality_identity_check requires a perfect (2,-2) pairing");
  long long d2 = static_cast<long long>(g.bucket_dim(2));
  long long img = static_cast<long long>(bracket_image_dim(alg, e, g, 0));
  long long neg2 = static_cast<long long>(g.bucket_dim(-2)) -
                   static_cast<long long>(bracket_image_dim(alg, e, g, -2));
  return {d2 - img == neg2, d2 - img, neg2};
}

/// Integer affine family of cocharacters.
struct CocharacterFamily {
  bool consistent = false;
  std::vector<long long> particular;            // canonical representative
  std::vector<std::vector<long long>> lattice;  // canonical basis of the solution lattice

  std::size_t dof() const { return lattice.size(); }
};

/// All integer tuples tau with pairing(tau, alpha) = target for each
/// support root, intersected with the fixed partial assignment
/// (index, value) pairs; indexes are 1-based.
CocharacterFamily solve_grading_constraints(const RootSystem& rs,
                                            const std::vector<RootVec>& supports,
                                            long long target,
                                            const std::vector<std::pair<int, long long>>& fixed);

/// Pretty parametric form, e.g. "(r, -2-2r, r, 4)".
std::string format_family(const CocharacterFamily& fam);

} // namespace chevlie

#endif
