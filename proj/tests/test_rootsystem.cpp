#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "chevlie/rootsystem.hpp"

using namespace chevlie;

TEST_CASE("positive root counts") {
  std::map<std::string, std::size_t> expect = {
      {"A1", 1},  {"A2", 3},  {"A5", 15}, {"B2", 4},  {"B3", 9},   {"C3", 9},
      {"C4", 16}, {"D4", 12}, {"D5", 20}, {"E6", 36}, {"E7", 63},  {"E8", 120},
      {"F4", 24}, {"G2", 6},  {"B6", 36}, {"D7", 42},
  };
  for (const auto& [name, count] : expect) {
    const RootSystem& rs = RootSystem::of(SimpleType::parse(name));
    CHECK_MESSAGE(rs.num_positive() == count, name);
  }
}

TEST_CASE("highest roots") {
  CHECK(RootSystem::of(SimpleType::parse("E6")).highest_root() ==
        RootVec{1, 2, 2, 3, 2, 1});
  CHECK(RootSystem::of(SimpleType::parse("E8")).highest_root() ==
        RootVec{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(RootSystem::of(SimpleType::parse("F4")).highest_root() == RootVec{2, 3, 4, 2});
  CHECK(RootSystem::of(SimpleType::parse("G2")).highest_root() == RootVec{3, 2});
}

TEST_CASE("is_root") {
  const RootSystem& e6 = RootSystem::of(SimpleType::parse("E6"));
  CHECK(e6.contains({1, 2, 2, 3, 2, 1}));
  CHECK(!e6.contains({0, 0, 0, 0, 0, 0}));
  // beta + beta' with beta = a3+a4+a5+a6, beta' = a1+a3+a4+a5
  CHECK(!e6.contains({1, 0, 2, 2, 2, 1}));
}

TEST_CASE("reflection closure") {
  for (const char* name : {"G2", "F4", "B3", "C3", "D4", "E6"}) {
    const RootSystem& rs = RootSystem::of(SimpleType::parse(name));
    std::vector<RootVec> all;
    for (std::size_t i = 0; i < rs.num_roots(); ++i) all.push_back(rs.signed_root(i));
    for (const RootVec& a : all)
      for (const RootVec& b : all) CHECK(rs.contains(rs.reflect(b, a)));
  }
}

TEST_CASE("sum and difference membership, paper pairs in E6") {
  const RootSystem& e6 = RootSystem::of(SimpleType::parse("E6"));
  auto r = [&](std::string_view s) { return parse_root_label(e6, s); };
  // beta, beta'
  auto bb = e6.sum_and_difference_in_sigma(r("3456"), r("1345"));
  CHECK(bb == std::pair<bool, bool>{false, false});
  // gamma, gamma'
  auto gg = e6.sum_and_difference_in_sigma(r("3456"), r("2456"));
  CHECK(gg == std::pair<bool, bool>{false, false});
  // delta = (1,1,2,2,1,1), delta' = (1,1,1,2,2,1)
  auto dd = e6.sum_and_difference_in_sigma(r("123^24^256"), r("1234^25^26"));
  CHECK(dd == std::pair<bool, bool>{false, false});
  // alpha with itself in a simply-laced system
  auto aa = e6.sum_and_difference_in_sigma(r("1"), r("1"));
  CHECK(aa == std::pair<bool, bool>{false, false});
}

TEST_CASE("digit labels") {
  const RootSystem& e7 = RootSystem::of(SimpleType::parse("E7"));
  CHECK(parse_root_label(e7, "234^25") == RootVec{0, 1, 1, 2, 1, 0, 0});
  CHECK(parse_root_label(e7, "123^24^25") == RootVec{1, 1, 2, 2, 1, 0, 0});
  CHECK(parse_root_label(e7, "56") == RootVec{0, 0, 0, 0, 1, 1, 0});
  const RootSystem& f4 = RootSystem::of(SimpleType::parse("F4"));
  CHECK(parse_root_label(f4, "2342") == RootVec{2, 3, 4, 2});
  CHECK(parse_root_label(f4, "0121") == RootVec{0, 1, 2, 1});
  CHECK(parse_root_label(f4, "234") == RootVec{0, 1, 1, 1});
  CHECK(parse_root_label(f4, "4") == RootVec{0, 0, 0, 1});
  const RootSystem& g2 = RootSystem::of(SimpleType::parse("G2"));
  CHECK(parse_root_label(g2, "21") == RootVec{2, 1});
  CHECK(parse_root_label(g2, "32") == RootVec{3, 2});
  CHECK_THROWS_AS(parse_root_label(e7, "999"), ParseError);
  CHECK_THROWS_AS(parse_root_label(e7, "11"), ValidationError); // 2*alpha_1
}

TEST_CASE("pairing") {
  const RootSystem& e6 = RootSystem::of(SimpleType::parse("E6"));
  Cocharacter tau{{2, -3, 2, 2, -4, 2}};
  // highest root against the A3A1-style tuple: 14 + 2(r+s) with r=-3,s=-4
  CHECK(pairing(tau, e6.highest_root()) == 0);
  Cocharacter zero{{0, 0, 0, 0, 0, 0}};
  for (const RootVec& v : e6.positive_roots()) CHECK(pairing(zero, v) == 0);
  const RootSystem& g2 = RootSystem::of(SimpleType::parse("G2"));
  Cocharacter t2{{2, -2}};
  CHECK(pairing(t2, RootVec{0, 1}) == -2);
}

TEST_CASE("dominant conjugates: E6 tables") {
  const RootSystem& e6 = RootSystem::of(SimpleType::parse("E6"));
  auto dom = [&](std::vector<long long> w) {
    return dominant_conjugate(e6, Cocharacter{std::move(w)}).dominant.weights;
  };
  using V = std::vector<long long>;
  // First family: (2, r, 2, 2, -7-r, 2)
  CHECK(dom({2, -7, 2, 2, 0, 2}) == V{0, 1, 1, 0, 1, 2});
  CHECK(dom({2, -6, 2, 2, -1, 2}) == V{1, 1, 0, 0, 1, 2});
  CHECK(dom({2, -5, 2, 2, -2, 2}) == V{1, 0, 0, 1, 0, 2});
  CHECK(dom({2, -4, 2, 2, -3, 2}) == V{1, 1, 0, 0, 1, 1});
  CHECK(dom({2, -3, 2, 2, -4, 2}) == V{0, 1, 1, 0, 1, 0});
  CHECK(dom({2, -2, 2, 2, -5, 2}) == V{1, 1, 1, 0, 0, 1});
  CHECK(dom({2, -1, 2, 2, -6, 2}) == V{2, 0, 0, 1, 0, 1});
  // Second family: (2,2,2,2,2,r).  The r=-14 entry is pinned to the
  // W-invariant-verified value; see the multiset check below.
  CHECK(dom({2, 2, 2, 2, 2, -14}) == V{2, 0, 2, 2, 0, 2});
  CHECK(dom({2, 2, 2, 2, 2, -13}) == V{2, 1, 2, 1, 1, 1});
  CHECK(dom({2, 2, 2, 2, 2, -12}) == V{2, 2, 2, 0, 2, 0});
  CHECK(dom({2, 2, 2, 2, 2, -11}) == V{2, 2, 1, 1, 1, 1});
  CHECK(dom({2, 2, 2, 2, 2, -10}) == V{2, 2, 0, 2, 0, 2});
  CHECK(dom({2, 2, 2, 2, 2, -9}) == V{1, 2, 1, 1, 1, 2});
  CHECK(dom({2, 2, 2, 2, 2, -8}) == V{0, 2, 2, 0, 2, 2});
  CHECK(dom({2, 2, 2, 2, 2, -7}) == V{1, 1, 1, 1, 2, 2});
  CHECK(dom({2, 2, 2, 2, 2, -6}) == V{2, 0, 0, 2, 2, 2});
}

TEST_CASE("dominant conjugates: E8 cases") {
  const RootSystem& e8 = RootSystem::of(SimpleType::parse("E8"));
  auto dom = [&](std::vector<long long> w) {
    return dominant_conjugate(e8, Cocharacter{std::move(w)}).dominant.weights;
  };
  using V = std::vector<long long>;
  CHECK(dom({2, -4, -4, 10, -4, -4, 10, -4}) == V{2, 0, 0, 2, 0, 0, 2, 2});
  CHECK(dom({0, 2, 2, -2, 2, 0, 0, 2}) == V{0, 0, 0, 2, 0, 0, 0, 2});
}

TEST_CASE("dominant conjugate invariants") {
  const RootSystem& e6 = RootSystem::of(SimpleType::parse("E6"));
  Cocharacter tau{{2, 2, 2, 2, 2, -14}};
  auto res = dominant_conjugate(e6, tau);
  // idempotence
  auto again = dominant_conjugate(e6, res.dominant);
  CHECK(again.word.empty());
  CHECK(again.dominant == res.dominant);
  // the pairing multiset over all roots is W-invariant
  std::multiset<long long> before, after;
  for (std::size_t i = 0; i < e6.num_roots(); ++i) {
    before.insert(pairing(tau, e6.signed_root(i)));
    after.insert(pairing(res.dominant, e6.signed_root(i)));
  }
  CHECK(before == after);
}

TEST_CASE("canonical listing golden for G2") {
  const RootSystem& g2 = RootSystem::of(SimpleType::parse("G2"));
  CHECK(g2.canonical_listing() ==
        "# type=G2 rank=2 positive=6\n"
        "0 1\n1 0\n1 1\n2 1\n3 1\n3 2\n"
        "0 -1\n-1 0\n-1 -1\n-2 -1\n-3 -1\n-3 -2\n");
}
