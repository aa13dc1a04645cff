#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chevlie/chevalley.hpp"

using namespace chevlie;

namespace {

// Full Jacobi scan over the integer table: [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0.
bool jacobi_holds(const StructureTable& st) {
  const int dim = st.dim();
  std::vector<long long> acc(dim, 0);
  auto add_nested = [&](int x, int y, int z, int sign) {
    // sign * [x, [y, z]]
    for (const StructureTable::Term& t : st.bracket(y, z))
      for (const StructureTable::Term& u : st.bracket(x, t.index))
        acc[u.index] += sign * t.coeff * u.coeff;
  };
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b)
      for (int c = b; c < dim; ++c) {
        add_nested(a, b, c, 1);
        add_nested(b, c, a, 1);
        add_nested(c, a, b, 1);
        for (long long v : acc)
          if (v != 0) return false;
        // acc already zero; nothing to reset
      }
  return true;
}

} // namespace

TEST_CASE("antisymmetry of the bracket table") {
  for (const char* name : {"A2", "B2", "G2", "C3", "F4"}) {
    const StructureTable& st = StructureTable::of(SimpleType::parse(name));
    for (int a = 0; a < st.dim(); ++a)
      for (int b = 0; b < st.dim(); ++b) {
        std::map<int, long long> ab, ba;
        for (const auto& t : st.bracket(a, b)) ab[t.index] = t.coeff;
        for (const auto& t : st.bracket(b, a)) ba[t.index] = -t.coeff;
        CHECK(ab == ba);
      }
  }
}

TEST_CASE("Jacobi identity holds over Z (full scan, small types)") {
  for (const char* name : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(name);
    CHECK(jacobi_holds(StructureTable::of(SimpleType::parse(name))));
  }
}

TEST_CASE("chain rule magnitudes |N| = p+1") {
  for (const char* name : {"A3", "B3", "C3", "G2", "F4"}) {
    const StructureTable& st = StructureTable::of(SimpleType::parse(name));
    const RootSystem& rs = st.roots();
    const int nroots = static_cast<int>(rs.num_roots());
    for (int a = 0; a < nroots; ++a)
      for (int b = 0; b < nroots; ++b) {
        RootVec sum = rs.signed_root(a);
        const RootVec& rb = rs.signed_root(b);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += rb[i];
        long long n = st.structure_constant(a, b);
        if (!rs.contains(sum)) {
          CHECK(n == 0);
          continue;
        }
        // p = max { k : b - k*a in Sigma }
        int p = 0;
        RootVec v = rs.signed_root(b);
        const RootVec& ra = rs.signed_root(a);
        for (;;) {
          bool zero = true;
          for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] -= ra[i];
            if (v[i] != 0) zero = false;
          }
          if (zero || !rs.contains(v)) break;
          ++p;
        }
        CHECK_MESSAGE(std::abs(n) == p + 1, name << " pair " << a << "," << b);
      }
  }
}

TEST_CASE("simply-laced constants are 0 or +-1; G2 reaches 3") {
  const StructureTable& a3 = StructureTable::of(SimpleType::parse("A3"));
  const RootSystem& rs = a3.roots();
  for (int a = 0; a < static_cast<int>(rs.num_roots()); ++a)
    for (int b = 0; b < static_cast<int>(rs.num_roots()); ++b)
      CHECK(std::abs(a3.structure_constant(a, b)) <= 1);
  const StructureTable& g2 = StructureTable::of(SimpleType::parse("G2"));
  long long maxn = 0;
  for (int a = 0; a < static_cast<int>(g2.roots().num_roots()); ++a)
    for (int b = 0; b < static_cast<int>(g2.roots().num_roots()); ++b)
      maxn = std::max(maxn, std::abs(g2.structure_constant(a, b)));
  CHECK(maxn == 3);
}

TEST_CASE("algebra dimensions") {
  ChevalleyAlgebra<PrimeField> e8(SimpleType::parse("E8"), PrimeField(2));
  CHECK(e8.dim() == 248);
  ChevalleyAlgebra<Rationals> f4(SimpleType::parse("F4"), Rationals());
  CHECK(f4.dim() == 52);
}

TEST_CASE("bracket axioms on elements") {
  ChevalleyAlgebra<Rationals> alg(SimpleType::parse("B3"), Rationals());
  const Rationals& q = alg.field();
  std::mt19937 rng(7);
  auto random_element = [&]() {
    LieElement<Rationals> x;
    for (int i = 0; i < alg.dim(); ++i)
      if (rng() % 3 == 0) x.set(q, i, q.from_int(static_cast<long long>(rng() % 7) - 3));
    return x;
  };
  for (int t = 0; t < 5; ++t) {
    auto x = random_element();
    CHECK(alg.bracket(x, x).is_zero());
  }
}

TEST_CASE("[e_alpha, e_{-alpha}] = h_alpha") {
  const StructureTable& st = StructureTable::of(SimpleType::parse("F4"));
  // verified internally at construction; spot-check via the table here
  for (int i = 0; i < st.num_positive(); ++i) {
    const auto& col = st.bracket(st.epos(i), st.eneg(i));
    CHECK(!col.empty());
    for (const auto& t : col) CHECK(st.is_h(t.index));
  }
}

TEST_CASE("ad matrix of Cartan elements is diagonal; ad(0) is zero") {
  ChevalleyAlgebra<Rationals> alg(SimpleType::parse("A3"), Rationals());
  const Rationals& q = alg.field();
  LieElement<Rationals> zero;
  CHECK(alg.ad_matrix(zero).is_zero(q));
  for (int k = 0; k < alg.roots().rank(); ++k) {
    auto h = alg.basis_element(alg.table().hindex(k));
    auto m = alg.ad_matrix(h);
    for (int r = 0; r < alg.dim(); ++r)
      for (int c = 0; c < alg.dim(); ++c)
        if (r != c) CHECK(q.is_zero(m(r, c)));
  }
}

TEST_CASE("centralizer of zero is the whole algebra") {
  ChevalleyAlgebra<PrimeField> alg(SimpleType::parse("G2"), PrimeField(3));
  LieElement<PrimeField> zero;
  CHECK(alg.centralizer(zero).dimension == 14);
}

TEST_CASE("killing form: weights, invariance, normalization") {
  for (const char* name : {"A2", "G2", "F4", "B3"}) {
    const StructureTable& st = StructureTable::of(SimpleType::parse(name));
    const int dim = st.dim();
    // invariance kappa([x,y],z) = kappa(x,[y,z]) on all basis triples
    for (int x = 0; x < dim; ++x)
      for (int y = 0; y < dim; ++y)
        for (int z = 0; z < dim; ++z) {
          long long lhs = 0, rhs = 0;
          for (const auto& t : st.bracket(x, y)) lhs += t.coeff * st.kappa(t.index, z);
          for (const auto& t : st.bracket(y, z)) rhs += t.coeff * st.kappa(x, t.index);
          CHECK(lhs == rhs);
        }
    // content normalization makes the Gram matrix primitive
    long long g = 0;
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) g = std::gcd(g, st.kappa(a, b));
    CHECK(g == 1);
  }
}

TEST_CASE("p_power on sl2") {
  ChevalleyAlgebra<PrimeField> alg(SimpleType::parse("A1"), PrimeField(2));
  auto e = alg.basis_element(0); // e_alpha
  auto r = alg.p_power(e);
  // (ad e)^2 = 0 on sl2 in char 2, and the center of sl2 over GF(2) is <h>,
  // so the solution is ambiguous without a span restriction.
  bool ambiguous = r.status == ChevalleyAlgebra<PrimeField>::PPowerStatus::ambiguous;
  CHECK(ambiguous);
  // restricted to the root part the solution is unique and zero
  auto r2 = alg.p_power(e, {0, 1});
  CHECK(r2.status == ChevalleyAlgebra<PrimeField>::PPowerStatus::ok);
  CHECK(r2.value.is_zero());
  // zero element
  LieElement<PrimeField> z;
  auto rz = alg.p_power(z, {0, 1});
  CHECK(rz.value.is_zero());
}

TEST_CASE("ad(p_power(e)) = (ad e)^p on a modular algebra") {
  ChevalleyAlgebra<PrimeField> alg(SimpleType::parse("B3"), PrimeField(2));
  const PrimeField& f = alg.field();
  // e = sum of simple root vectors (regular nilpotent)
  std::vector<RootVec> simples;
  for (int i = 0; i < alg.roots().rank(); ++i) {
    RootVec v(alg.roots().rank(), 0);
    v[i] = 1;
    simples.push_back(v);
  }
  auto e = alg.element_from_roots(simples);
  auto res = alg.p_power(e);
  if (res.status == ChevalleyAlgebra<PrimeField>::PPowerStatus::ok) {
    auto lhs = alg.ad_matrix(res.value);
    auto ade = alg.ad_matrix(e);
    auto rhs = mul(f, ade, ade);
    for (int r = 0; r < alg.dim(); ++r)
      for (int c = 0; c < alg.dim(); ++c) CHECK(f.eq(lhs(r, c), rhs(r, c)));
  }
}
