#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chevlie/matrix.hpp"

using namespace chevlie;

namespace {

template <class F>
Matrix<F> from_ints(const F& f, std::vector<std::vector<long long>> rows) {
  Matrix<F> m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = f.from_int(rows[i][j]);
  return m;
}

} // namespace

TEST_CASE("rank of zero and identity") {
  Rationals q;
  PrimeField f2(2);
  CHECK(rank(q, Matrix<Rationals>(5, 5)) == 0);
  CHECK(rank(f2, Matrix<PrimeField>(5, 5)) == 0);
  CHECK(rank(q, Matrix<Rationals>::identity(q, 7)) == 7);
  CHECK(rank(f2, Matrix<PrimeField>::identity(f2, 7)) == 7);
}

TEST_CASE("reduce-then-eliminate differs from eliminate-then-reduce") {
  // The 1x1 matrix [p] has rank 1 over Q but rank 0 over GF(p).
  Rationals q;
  PrimeField f5(5);
  auto mq = from_ints(q, {{5}});
  auto mp = from_ints(f5, {{5}});
  CHECK(rank(q, mq) == 1);
  CHECK(rank(f5, mp) == 0);
}

TEST_CASE("nullspace sizes and membership") {
  Rationals q;
  auto id = Matrix<Rationals>::identity(q, 4);
  CHECK(nullspace(q, id).empty());

  Matrix<Rationals> zero(3, 3);
  auto basis = nullspace(q, zero);
  REQUIRE(basis.size() == 3);
  // standard basis
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(basis[i][j] == (i == j ? 1 : 0));

  auto m = from_ints(q, {{1, 2, 3}, {2, 4, 6}});
  auto ker = nullspace(q, m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    mpq_class acc = v[0] * 1 + v[1] * 2 + v[2] * 3;
    CHECK(acc == 0);
  }
}

TEST_CASE("rank + nullity = cols (random over GF(p) and Q)") {
  std::mt19937 rng(12345);
  for (unsigned p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
      Matrix<PrimeField> m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rng() % p);
      CHECK(rank(f, m) + nullspace(f, m).size() == c);
    }
  }
  Rationals q;
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t r = 1 + rng() % 10, c = 1 + rng() % 10;
    Matrix<Rationals> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = q.from_int(static_cast<long long>(rng() % 19) - 9);
    CHECK(rank(q, m) + nullspace(q, m).size() == c);
  }
}

TEST_CASE("rank over GF(p) matches integer rank when p is large/lucky") {
  // For random small integer matrices over GF(p), eliminating over the
  // field agrees with reducing the rational rank only when no pivot
  // collapses; the witness matrix [p] (above) shows they can differ.
  std::mt19937 rng(777);
  for (unsigned p : {2u, 3u, 5u}) {
    PrimeField f(p);
    Rationals q;
    for (int trial = 0; trial < 8; ++trial) {
      std::size_t n = 1 + rng() % 8;
      Matrix<PrimeField> mp(n, n);
      Matrix<Rationals> mq(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          long long v = static_cast<long long>(rng() % (2 * p)) - static_cast<long long>(p);
          mp(i, j) = f.from_int(v);
          mq(i, j) = q.from_int(v);
        }
      CHECK(rank(f, mp) <= rank(q, mq));
    }
  }
}

TEST_CASE("solve_affine") {
  Rationals q;
  SUBCASE("identity system") {
    auto a = Matrix<Rationals>::identity(q, 3);
    std::vector<mpq_class> b = {q.from_int(4), q.from_int(-1), q.from_int(7)};
    auto sol = solve_affine(q, a, b);
    REQUIRE(sol.consistent);
    CHECK(sol.kernel.empty());
    CHECK(sol.particular == b);
  }
  SUBCASE("inconsistent overdetermined") {
    auto a = from_ints(q, {{1}, {1}});
    std::vector<mpq_class> b = {q.from_int(0), q.from_int(1)};
    auto sol = solve_affine(q, a, b);
    CHECK(!sol.consistent);
  }
  SUBCASE("underdetermined") {
    auto a = from_ints(q, {{1, 1, 0}, {0, 1, 1}});
    std::vector<mpq_class> b = {q.from_int(3), q.from_int(5)};
    auto sol = solve_affine(q, a, b);
    REQUIRE(sol.consistent);
    CHECK(sol.kernel.size() == 1);
    // verify A * particular = b
    CHECK(sol.particular[0] + sol.particular[1] == 3);
    CHECK(sol.particular[1] + sol.particular[2] == 5);
  }
}

TEST_CASE("jordan partition basics") {
  Rationals q;
  SUBCASE("zero matrix") {
    Matrix<Rationals> z(6, 6);
    auto parts = nilpotent_jordan_partition(q, z);
    CHECK(parts == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  }
  SUBCASE("single block of size 4") {
    Matrix<Rationals> m(4, 4);
    for (int i = 0; i < 3; ++i) m(i, i + 1) = q.from_int(1);
    auto parts = nilpotent_jordan_partition(q, m);
    CHECK(parts == std::vector<std::size_t>{4});
  }
  SUBCASE("blocks 3+2+1 over GF(2)") {
    PrimeField f(2);
    Matrix<PrimeField> m(6, 6);
    m(0, 1) = 1;
    m(1, 2) = 1; // block of 3 on {0,1,2}
    m(3, 4) = 1; // block of 2 on {3,4}
    auto parts = nilpotent_jordan_partition(f, m);
    CHECK(parts == std::vector<std::size_t>{3, 2, 1});
  }
  SUBCASE("not nilpotent") {
    auto m = Matrix<Rationals>::identity(q, 3);
    CHECK_THROWS_AS(nilpotent_jordan_partition(q, m), NotNilpotentError);
  }
  SUBCASE("partition properties on random nilpotent upper-triangular") {
    std::mt19937 rng(99);
    PrimeField f(3);
    for (int trial = 0; trial < 6; ++trial) {
      std::size_t n = 2 + rng() % 10;
      Matrix<PrimeField> m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m(i, j) = f.from_int(rng() % 3);
      auto parts = nilpotent_jordan_partition(f, m);
      std::size_t total = 0;
      for (std::size_t k = 0; k + 1 < parts.size(); ++k) CHECK(parts[k] >= parts[k + 1]);
      for (std::size_t p : parts) total += p;
      CHECK(total == n);
      CHECK(parts.size() == nullspace(f, m).size()); // #parts = nullity
    }
  }
}
