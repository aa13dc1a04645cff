#include "chevlie/grading.hpp"

#include <algorithm>
#include <sstream>

namespace chevlie {

Grading grade(const RootSystem& rs, const Cocharacter& tau) {
  if (static_cast<int>(tau.weights.size()) != rs.rank())
    throw ValidationError("grade: cocharacter length != rank");
  const int n = static_cast<int>(rs.num_positive());
  const int l = rs.rank();
  Grading g;
  g.tau = tau;
  g.index_degree.assign(2 * n + l, 0);
  for (int i = 0; i < n; ++i) {
    long long d = pairing(tau, rs.positive_roots()[i]);
    g.index_degree[i] = d;
    g.index_degree[n + i] = -d;
  }
  for (std::size_t idx = 0; idx < g.index_degree.size(); ++idx)
    g.buckets[g.index_degree[idx]].push_back(static_cast<int>(idx));
  return g;
}

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Row-style Hermite normal form of a full-row-rank-or-not integer basis:
// positive pivots, entries above each pivot reduced into [0, pivot).
void row_hnf(std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) return;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    // gcd elimination below row r in column c
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 &&
            (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        long long q = rows[i][c] / rows[r][c];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (std::size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      long long q = floor_div(rows[i][c], rows[r][c]);
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r); // drop zero rows
}

} // namespace

CocharacterFamily solve_grading_constraints(const RootSystem& rs,
                                            const std::vector<RootVec>& supports,
                                            long long target,
                                            const std::vector<std::pair<int, long long>>& fixed) {
  const int n = rs.rank();
  std::vector<std::vector<long long>> a;
  std::vector<long long> b;
  for (const RootVec& root : supports) {
    if (!rs.contains(root))
      throw ValidationError("solve_grading_constraints: support is not a root: " +
                            format_root(root));
    std::vector<long long> row(n);
    for (int i = 0; i < n; ++i) row[i] = root[i];
    a.push_back(std::move(row));
    b.push_back(target);
  }
  for (auto [idx, val] : fixed) {
    if (idx < 1 || idx > n)
      throw ValidationError("solve_grading_constraints: fixed index out of range");
    std::vector<long long> row(n, 0);
    row[idx - 1] = 1;
    a.push_back(std::move(row));
    b.push_back(val);
  }
  const std::size_t m = a.size();

  // Column-style Hermite reduction A*U = H with U unimodular.
  std::vector<std::vector<long long>> h = a;
  std::vector<std::vector<long long>> u(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  auto col_sub = [&](std::size_t dst, std::size_t src, long long q) {
    for (std::size_t r = 0; r < m; ++r) h[r][dst] -= q * h[r][src];
    for (int r = 0; r < n; ++r) u[r][dst] -= q * u[r][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(h[r][x], h[r][y]);
    for (int r = 0; r < n; ++r) std::swap(u[r][x], u[r][y]);
  };
  auto col_neg = [&](std::size_t x) {
    for (std::size_t r = 0; r < m; ++r) h[r][x] = -h[r][x];
    for (int r = 0; r < n; ++r) u[r][x] = -u[r][x];
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
  std::size_t c = 0;
  for (std::size_t r = 0; r < m && c < static_cast<std::size_t>(n); ++r) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = c; j < static_cast<std::size_t>(n); ++j)
        if (h[r][j] != 0 && (best == static_cast<std::size_t>(n) ||
                             std::llabs(h[r][j]) < std::llabs(h[r][best])))
          best = j;
      if (best == static_cast<std::size_t>(n)) break; // row has no pivot
      col_swap(c, best);
      bool clean = true;
      for (std::size_t j = c + 1; j < static_cast<std::size_t>(n); ++j) {
        if (h[r][j] == 0) continue;
        col_sub(j, c, h[r][j] / h[r][c]);
        if (h[r][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[r][c] != 0) {
      if (h[r][c] < 0) col_neg(c);
      pivots.emplace_back(r, c);
      ++c;
    }
  }

  CocharacterFamily fam;
  // Forward substitution for an integral particular solution in y-coords.
  std::vector<long long> y(n, 0);
  for (auto [pr, pc] : pivots) {
    long long resid = b[pr];
    for (std::size_t j = 0; j < pc; ++j) resid -= h[pr][j] * y[j];
    if (resid % h[pr][pc] != 0) return fam; // no integral solution
    y[pc] = resid / h[pr][pc];
  }
  // Every remaining equation must be satisfied.
  for (std::size_t r = 0; r < m; ++r) {
    long long resid = b[r];
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) resid -= h[r][j] * y[j];
    if (resid != 0) return fam;
  }
  fam.consistent = true;
  fam.particular.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
      fam.particular[i] += u[i][j] * y[j];
  for (std::size_t j = c; j < static_cast<std::size_t>(n); ++j) {
    std::vector<long long> v(n);
    for (int i = 0; i < n; ++i) v[i] = u[i][j];
    fam.lattice.push_back(std::move(v));
  }
  row_hnf(fam.lattice);
  // Canonical representative: reduce the particular solution modulo the
  // lattice at each HNF pivot.
  for (const auto& row : fam.lattice) {
    std::size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) ++pc;
    if (pc == row.size()) continue;
    long long q = floor_div(fam.particular[pc], row[pc]);
    if (q != 0)
      for (int i = 0; i < n; ++i) fam.particular[i] -= q * row[i];
  }
  return fam;
}

std::string format_family(const CocharacterFamily& fam) {
  if (!fam.consistent) return "inconsistent";
  static const char* names = "rstuvw";
  const std::size_t n = fam.particular.size();
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) os << ", ";
    bool emitted = false;
    if (fam.particular[i] != 0) {
      os << fam.particular[i];
      emitted = true;
    }
    for (std::size_t k = 0; k < fam.lattice.size(); ++k) {
      long long coef = fam.lattice[k][i];
      if (coef == 0) continue;
      char var = k < 6 ? names[k] : '?';
      if (coef == 1)
        os << (emitted ? "+" : "");
      else if (coef == -1)
        os << "-";
      else {
        if (coef > 0 && emitted) os << "+";
        os << coef;
      }
      os << var;
      emitted = true;
    }
    if (!emitted) os << 0;
  }
  os << ")";
  return os.str();
}

} // namespace chevlie
