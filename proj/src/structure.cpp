#include "chevlie/chevalley.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace chevlie {

namespace {

long long exact_div(long long a, long long b) {
  if (b == 0 || a % b != 0) throw Error("internal: inexact division in structure table");
  return a / b;
}

} // namespace

StructureTable::StructureTable(SimpleType t) : rs_(RootSystem::of(t)) {
  const int l = rs_.rank();
  const int N = static_cast<int>(rs_.num_positive());
  npos_ = N;
  dim_ = 2 * N + l;
  const auto& pos = rs_.positive_roots();

  auto pidx = [&](const RootVec& v) -> int {
    auto i = rs_.signed_index(v);
    return (i && *i < N) ? *i : -1;
  };

  std::vector<int> simple_pos(l);
  for (int k = 0; k < l; ++k) {
    RootVec v(l, 0);
    v[k] = 1;
    simple_pos[k] = *rs_.signed_index(v);
  }

  auto chain_down = [&](const RootVec& alpha, const RootVec& beta) {
    int m = 0;
    RootVec v = beta;
    for (;;) {
      bool zero = true;
      for (int i = 0; i < l; ++i) {
        v[i] -= alpha[i];
        if (v[i] != 0) zero = false;
      }
      if (zero || !rs_.contains(v)) break;
      ++m;
    }
    return m;
  };

  // Sign determination.  posN[s][j] = N_{alpha_s, pos_j} for simple s;
  // mixedM[j][s] = N_{pos_j, -alpha_s} whenever pos_j - alpha_s is a
  // positive root.  Extraspecial pairs (the lex-minimal simple
  // predecessor of each positive root) are pinned to +(chain+1); the
  // rest follows from Jacobi identities on (e_xi, e_eta, e_{-alpha_s}).
  std::vector<std::vector<long long>> posN(l, std::vector<long long>(N, 0));
  std::vector<std::vector<long long>> mixedM(N, std::vector<long long>(l, 0));
  std::vector<std::pair<int, int>> extra(N, {-1, -1}); // (simple s, pos index of gamma-alpha_s)

  for (int g = 0; g < N; ++g) {
    const RootVec& gamma = pos[g];
    if (rs_.height(gamma) < 2) continue;
    std::vector<int> cands, cand_pos;
    for (int k = 0; k < l; ++k) {
      if (gamma[k] == 0) continue;
      RootVec v = gamma;
      v[k] -= 1;
      int j = pidx(v);
      if (j >= 0) {
        cands.push_back(k);
        cand_pos.push_back(j);
      }
    }
    if (cands.empty()) throw Error("internal: positive root without simple predecessor");
    // Lex-minimal simple root = the one with the largest index.
    std::size_t ci = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
      if (cands[i] > cands[ci]) ci = i;
    const int s = cands[ci];
    const int b0 = cand_pos[ci];
    extra[g] = {s, b0};
    RootVec alpha_s(l, 0);
    alpha_s[s] = 1;
    posN[s][b0] = chain_down(alpha_s, pos[b0]) + 1;

    auto fill_mixed = [&](int k, int bk) {
      // N_{gamma, -alpha_k} from the Jacobi identity on (e_k, e_{gamma-k}, e_{-k}).
      RootVec alpha_k(l, 0);
      alpha_k[k] = 1;
      long long term = rs_.pair_coroot(pos[bk], alpha_k);
      RootVec bm = pos[bk];
      bm[k] -= 1;
      int bkm = pidx(bm);
      if (bkm >= 0) term += mixedM[bk][k] * posN[k][bkm];
      mixedM[g][k] = exact_div(term, posN[k][bk]);
      if (mixedM[g][k] == 0) throw Error("internal: vanishing mixed constant");
    };
    fill_mixed(s, b0);

    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (i == ci) continue;
      const int j = cands[i];
      const int bj = cand_pos[i];
      if (rs_.height(gamma) == 2) {
        posN[j][bj] = -posN[s][b0];
      } else {
        RootVec em = pos[bj];
        em[s] -= 1;
        int bjm = pidx(em);
        if (bjm < 0) throw Error("internal: sign propagation has no usable chain");
        posN[j][bj] = exact_div(mixedM[bj][s] * posN[j][bjm], mixedM[g][s]);
      }
      if (posN[j][bj] == 0) throw Error("internal: vanishing structure constant");
      RootVec alpha_j(l, 0);
      alpha_j[j] = 1;
      long long expect = chain_down(alpha_j, pos[bj]) + 1;
      if (posN[j][bj] != expect && posN[j][bj] != -expect)
        throw Error("internal: structure constant magnitude violates the chain rule");
      fill_mixed(j, bj);
    }
  }

  // Generator ad matrices.
  ad_.assign(dim_, std::vector<SparseCol>(dim_));
  auto pair_simple = [&](const RootVec& beta, int k) {
    long long v = 0;
    for (int i = 0; i < l; ++i) v += static_cast<long long>(beta[i]) * rs_.cartan(i, k);
    return v;
  };

  for (int k = 0; k < l; ++k) {
    auto& adh = ad_[hindex(k)];
    for (int j = 0; j < N; ++j) {
      long long w = pair_simple(pos[j], k);
      if (w != 0) {
        adh[epos(j)].push_back({epos(j), w});
        adh[eneg(j)].push_back({eneg(j), -w});
      }
    }
  }

  for (int s = 0; s < l; ++s) {
    const int P = simple_pos[s];
    RootVec alpha_s(l, 0);
    alpha_s[s] = 1;
    auto& adp = ad_[epos(P)];
    auto& adm = ad_[eneg(P)];
    for (int j = 0; j < N; ++j) {
      // [e_s, e_j] and [e_{-s}, e_{-j}]
      RootVec sum = pos[j];
      sum[s] += 1;
      int q = pidx(sum);
      if (q >= 0 && posN[s][j] != 0) {
        adp[epos(j)].push_back({epos(q), posN[s][j]});
        adm[eneg(j)].push_back({eneg(q), -posN[s][j]});
      }
      // [e_s, e_{-j}] and [e_{-s}, e_j]
      if (j == P) {
        adp[eneg(j)].push_back({hindex(s), 1});
        adm[epos(j)].push_back({hindex(s), -1});
      } else {
        RootVec diff = pos[j];
        diff[s] -= 1;
        int m = pidx(diff);
        if (m >= 0 && mixedM[j][s] != 0) {
          adp[eneg(j)].push_back({eneg(m), mixedM[j][s]});
          adm[epos(j)].push_back({epos(m), -mixedM[j][s]});
        }
      }
    }
    for (int k = 0; k < l; ++k) {
      int c = rs_.cartan(s, k);
      if (c != 0) {
        adp[hindex(k)].push_back({epos(P), -c});
        adm[hindex(k)].push_back({eneg(P), c});
      }
    }
  }

  // Remaining ad matrices by commutator induction along extraspecial pairs.
  std::vector<long long> dense(dim_, 0);
  auto commutator_div = [&](const std::vector<SparseCol>& a, const std::vector<SparseCol>& b,
                            long long divisor, std::vector<SparseCol>& out) {
    for (int c = 0; c < dim_; ++c) {
      std::vector<int> touched;
      auto apply = [&](const std::vector<SparseCol>& first,
                       const std::vector<SparseCol>& second, long long sign) {
        for (const Term& t1 : second[c])
          for (const Term& t2 : first[t1.index]) {
            if (dense[t2.index] == 0) touched.push_back(t2.index);
            dense[t2.index] += sign * t1.coeff * t2.coeff;
          }
      };
      apply(a, b, +1);
      apply(b, a, -1);
      SparseCol col;
      std::sort(touched.begin(), touched.end());
      for (int idx : touched) {
        if (dense[idx] != 0) col.push_back({idx, exact_div(dense[idx], divisor)});
        dense[idx] = 0;
      }
      out[c] = std::move(col);
    }
  };

  for (int g = 0; g < N; ++g) {
    if (extra[g].first < 0) continue; // simple root: generator already built
    const auto [s, b0] = extra[g];
    const long long n0 = posN[s][b0];
    commutator_div(ad_[epos(simple_pos[s])], ad_[epos(b0)], n0, ad_[epos(g)]);
    commutator_div(ad_[eneg(simple_pos[s])], ad_[eneg(b0)], -n0, ad_[eneg(g)]);
  }

  // Coroots, and the [e, e_{-alpha}] = h_alpha sanity check.
  coroots_.resize(N);
  for (int g = 0; g < N; ++g) {
    coroots_[g] = rs_.coroot_coeffs(pos[g]);
    const SparseCol& col = ad_[epos(g)][eneg(g)];
    std::vector<long long> seen(l, 0);
    for (const Term& term : col) {
      if (!is_h(term.index)) throw Error("internal: [e,f] has a non-Cartan component");
      seen[term.index - 2 * N] = term.coeff;
    }
    for (int k = 0; k < l; ++k)
      if (seen[k] != coroots_[g][k])
        throw Error("internal: [e, e_{-alpha}] differs from the coroot of alpha");
  }

  // Killing form on the weight-compatible pairs; everything else vanishes
  // because ad(x)ad(y) shifts weights unless wt(x)+wt(y)=0.
  auto trace_pair = [&](int a, int b) {
    long long tr = 0;
    for (int c = 0; c < dim_; ++c)
      for (const Term& t1 : ad_[b][c])
        for (const Term& t2 : ad_[a][t1.index])
          if (t2.index == c) tr += t1.coeff * t2.coeff;
    return tr;
  };
  killing_epair_.resize(N);
  long long content = 0;
  for (int i = 0; i < N; ++i) {
    killing_epair_[i] = trace_pair(epos(i), eneg(i));
    content = std::gcd(content, killing_epair_[i]);
  }
  killing_hblock_.assign(l, std::vector<long long>(l, 0));
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) {
      killing_hblock_[a][b] = trace_pair(hindex(a), hindex(b));
      content = std::gcd(content, killing_hblock_[a][b]);
    }
  content_ = content == 0 ? 1 : content;
}

long long StructureTable::structure_constant(int a, int b) const {
  const RootVec& ra = rs_.signed_root(a);
  const RootVec& rb = rs_.signed_root(b);
  RootVec sum(ra.size());
  for (std::size_t i = 0; i < ra.size(); ++i) sum[i] = ra[i] + rb[i];
  auto idx = rs_.signed_index(sum);
  if (!idx) return 0;
  for (const Term& t : ad_[a][b])
    if (t.index == *idx) return t.coeff;
  return 0;
}

long long StructureTable::killing_raw(int a, int b) const {
  if (is_h(a) && is_h(b)) return killing_hblock_[a - 2 * npos_][b - 2 * npos_];
  if (is_h(a) || is_h(b)) return 0;
  int pa = a < npos_ ? a : a - npos_;
  int pb = b < npos_ ? b : b - npos_;
  if (pa != pb) return 0;
  bool aneg = a >= npos_, bneg = b >= npos_;
  if (aneg == bneg) return 0;
  return killing_epair_[pa];
}

long long StructureTable::kappa(int a, int b) const {
  return killing_raw(a, b) / content_;
}

const StructureTable& StructureTable::of(SimpleType t) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<StructureTable>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<char>(t.family), t.rank);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::unique_ptr<StructureTable>(new StructureTable(t))).first;
  return *it->second;
}

} // namespace chevlie
