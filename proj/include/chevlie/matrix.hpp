#ifndef CHEVLIE_MATRIX_HPP
#define CHEVLIE_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "chevlie/errors.hpp"
#include "chevlie/field.hpp"

namespace chevlie {

/// Dense matrix over an exact field F (Rationals or PrimeField).
/// Immutable in practice: the elimination routines work on copies.
template <class F>
class Matrix {
public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const F& f, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero(const F& f) const {
    for (const Elem& e : data_)
      if (!f.is_zero(e)) return false;
    return true;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

template <class F>
Matrix<F> mul(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
  Matrix<F> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& bkj = b(k, j);
        if (!f.is_zero(bkj)) c(i, j) = f.add(c(i, j), f.mul(aik, bkj));
      }
    }
  return c;
}

namespace detail {

// Clears denominators row by row so the fraction-free elimination below
// runs on integral entries.  No-op over GF(p).
inline void integerize_rows(const Rationals&, Matrix<Rationals>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    if (l == 1) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= l;
  }
}

inline void integerize_rows(const PrimeField&, Matrix<PrimeField>&) {}

} // namespace detail

template <class F>
struct Echelon {
  Matrix<F> m;                                        // row echelon form
  std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col), increasing
};

/// Fraction-free (Bareiss) row echelon form with deterministic pivoting:
/// the pivot is the first row with a nonzero entry in column order.
/// Over the rationals every intermediate entry stays integral once the
/// rows have been scaled to integers, which keeps 248x248 eliminations
/// from blowing up into huge fractions.
template <class F>
Echelon<F> echelon(const F& f, Matrix<F> m) {
  detail::integerize_rows(f, m);
  Echelon<F> out;
  const std::size_t rows = m.rows(), cols = m.cols();
  typename F::Elem prev = f.one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && f.is_zero(m(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(piv, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (f.is_zero(m(i, c))) {
        // Still rescale the trailing entries to keep the Bareiss invariant.
        for (std::size_t j = c + 1; j < cols; ++j)
          m(i, j) = f.div(f.mul(m(r, c), m(i, j)), prev);
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = f.div(f.sub(f.mul(m(r, c), m(i, j)), f.mul(m(i, c), m(r, j))), prev);
      m(i, c) = f.zero();
    }
    prev = m(r, c);
    out.pivots.emplace_back(r, c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

/// Exact row rank.
template <class F>
std::size_t rank(const F& f, const Matrix<F>& m) {
  return echelon(f, m).pivots.size();
}

namespace detail {

// Back-substitution on an echelon form: kernel vector with unit value in
// free column `free_col`, zeros in the other free columns.
template <class F>
std::vector<typename F::Elem> kernel_vector(const F& f, const Echelon<F>& e,
                                            std::size_t ncols, std::size_t free_col) {
  std::vector<typename F::Elem> x(ncols, f.zero());
  x[free_col] = f.one();
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    auto [pr, pc] = e.pivots[k];
    if (pc >= ncols) continue;
    typename F::Elem acc = f.zero();
    for (std::size_t j = pc + 1; j < ncols; ++j)
      if (!f.is_zero(x[j])) acc = f.add(acc, f.mul(e.m(pr, j), x[j]));
    x[pc] = f.div(f.neg(acc), e.m(pr, pc));
  }
  return x;
}

} // namespace detail

/// Deterministic basis of the right kernel { x : Mx = 0 }.
/// Size equals cols - rank.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(const F& f, const Matrix<F>& m) {
  Echelon<F> e = echelon(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto [r, c] : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) basis.push_back(detail::kernel_vector(f, e, m.cols(), c));
  return basis;
}

template <class F>
struct AffineSolution {
  bool consistent = false;
  std::vector<typename F::Elem> particular;              // one solution of Ax = b
  std::vector<std::vector<typename F::Elem>> kernel;     // basis of ker A
};

/// Complete description of { x : Ax = b }, or consistent=false.
template <class F>
AffineSolution<F> solve_affine(const F& f, const Matrix<F>& a,
                               const std::vector<typename F::Elem>& b) {
  if (a.rows() != b.size()) throw Error("solve_affine: rhs length mismatch");
  const std::size_t n = a.cols();
  Matrix<F> aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  Echelon<F> e = echelon(f, aug);
  AffineSolution<F> out;
  std::vector<bool> is_pivot(n, false);
  for (auto [r, c] : e.pivots) {
    if (c == n) return out; // pivot in the rhs column: inconsistent
    is_pivot[c] = true;
  }
  out.consistent = true;
  // Particular solution: free variables zero, pivots by back-substitution.
  out.particular.assign(n, f.zero());
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    auto [pr, pc] = e.pivots[k];
    typename F::Elem acc = e.m(pr, n);
    for (std::size_t j = pc + 1; j < n; ++j)
      if (!f.is_zero(out.particular[j]))
        acc = f.sub(acc, f.mul(e.m(pr, j), out.particular[j]));
    out.particular[pc] = f.div(acc, e.m(pr, pc));
  }
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) out.kernel.push_back(detail::kernel_vector(f, e, n, c));
  return out;
}

/// Jordan block sizes of a nilpotent matrix, from ranks of powers:
/// #blocks of size >= k equals rank(M^(k-1)) - rank(M^k).
/// The partition is weakly decreasing and sums to the dimension.
template <class F>
std::vector<std::size_t> nilpotent_jordan_partition(const F& f, const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw Error("jordan partition requires a square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> ranks{n}; // ranks[k] = rank(M^k)
  Matrix<F> power = m;
  std::size_t k = 1;
  while (!power.is_zero(f)) {
    if (k > n) throw NotNilpotentError("matrix is not nilpotent");
    ranks.push_back(rank(f, power));
    power = mul(f, power, m);
    ++k;
  }
  ranks.push_back(0); // rank(M^d) = 0 at the nilpotency index d
  const std::size_t d = ranks.size() - 1;
  auto blocks_ge = [&](std::size_t j) -> std::size_t {
    return j <= d ? ranks[j - 1] - ranks[j] : 0;
  };
  std::vector<std::size_t> partition;
  for (std::size_t j = d; j >= 1; --j) {
    std::size_t exactly = blocks_ge(j) - blocks_ge(j + 1);
    partition.insert(partition.end(), exactly, j);
  }
  return partition;
}

} // namespace chevlie

#endif
