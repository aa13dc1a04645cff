#include "chevlie/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "chevlie/chevalley.hpp"
#include "chevlie/grading.hpp"
#include "chevlie/matrix.hpp"
#include "chevlie/textio.hpp"

#ifndef CHEVLIE_DEFAULT_DATA_DIR
#define CHEVLIE_DEFAULT_DATA_DIR "data"
#endif

namespace chevlie {

CharConstraint CharConstraint::parse(std::string_view s) {
  CharConstraint c;
  if (s == "any") {
    c.kind = Kind::any;
    return c;
  }
  bool neq = false;
  std::string_view rest;
  if (s.rfind("p!=", 0) == 0) {
    neq = true;
    rest = s.substr(3);
  } else if (s.rfind("p=", 0) == 0) {
    rest = s.substr(2);
  } else {
    throw ParseError("bad characteristic constraint '" + std::string(s) + "'");
  }
  unsigned p = 0;
  for (char ch : rest) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("bad characteristic constraint '" + std::string(s) + "'");
    p = p * 10 + (ch - '0');
  }
  if (!is_prime(p))
    throw ValidationError("characteristic constraint must name a prime: '" + std::string(s) +
                          "'");
  c.kind = neq ? Kind::neq : Kind::eq;
  c.p = p;
  return c;
}

std::string CharConstraint::str() const {
  switch (kind) {
    case Kind::any: return "any";
    case Kind::eq: return "p=" + std::to_string(p);
    case Kind::neq: return "p!=" + std::to_string(p);
  }
  return "any";
}

std::string default_data_dir() {
  if (const char* env = std::getenv("CHEVLIE_DATA_DIR"); env && *env) return env;
  return CHEVLIE_DEFAULT_DATA_DIR;
}

namespace {

std::vector<int> parse_weights(const std::string& s, int rank, const std::string& where) {
  std::vector<long long> t = parse_int_tuple(s);
  if (static_cast<int>(t.size()) != rank)
    throw ValidationError(where + ": weights length != rank");
  std::vector<int> w(t.begin(), t.end());
  return w;
}

} // namespace

Catalog Catalog::load(const std::string& dir) {
  Catalog cat;
  cat.dir_ = dir;
  const std::string diag_path = dir + "/dynkin_diagrams.txt";
  const std::string orbit_path = dir + "/orbits.txt";
  const std::string manifest_path = dir + "/MANIFEST.sha256";

  // Manifest check (strict when the manifest ships).
  {
    std::string manifest;
    try {
      manifest = read_file(manifest_path);
    } catch (const Error&) {
      manifest.clear();
    }
    if (!manifest.empty()) {
      std::istringstream is(manifest);
      std::string hash, name;
      while (is >> hash >> name) {
        std::string body = read_file(dir + "/" + name);
        if (sha256_hex(body) != hash)
          throw ValidationError("data manifest mismatch for " + name);
      }
    }
  }

  // Diagram tables.
  std::map<std::string, std::size_t> declared_counts;
  std::map<std::string, std::set<std::vector<int>>> seen_weights;
  for (const Block& b : parse_blocks(read_file(diag_path), diag_path)) {
    if (b.name == "table") {
      declared_counts[b.get("type")] = std::stoul(b.get("count"));
      continue;
    }
    if (b.name != "diagram")
      throw ParseError(diag_path + ":" + std::to_string(b.line) + ": unexpected block [" +
                       b.name + "]");
    SimpleType t = SimpleType::parse(b.get("type"));
    WeightedDynkinDiagram d;
    d.type = t;
    d.label = b.get("label");
    d.weights = parse_weights(b.get("weights"), t.rank,
                              diag_path + ":" + std::to_string(b.line));
    for (int w : d.weights)
      if (w < 0 || w > 2)
        throw ValidationError(diag_path + ":" + std::to_string(b.line) +
                              ": diagram weights must lie in {0,1,2}");
    if (!seen_weights[t.name()].insert(d.weights).second)
      throw ValidationError(diag_path + ":" + std::to_string(b.line) +
                            ": duplicate diagram weights for " + t.name());
    auto it = std::find_if(cat.tables_.begin(), cat.tables_.end(),
                           [&](const auto& p) { return p.first == t; });
    if (it == cat.tables_.end()) {
      cat.tables_.push_back({t, {}});
      it = std::prev(cat.tables_.end());
    }
    it->second.push_back(std::move(d));
  }
  for (const auto& [name, count] : declared_counts) {
    SimpleType t = SimpleType::parse(name);
    auto it = std::find_if(cat.tables_.begin(), cat.tables_.end(),
                           [&](const auto& p) { return p.first == t; });
    std::size_t have = it == cat.tables_.end() ? 0 : it->second.size();
    if (have != count)
      throw ValidationError(diag_path + ": " + name + " table has " + std::to_string(have) +
                            " entries, header declares " + std::to_string(count));
  }

  // Orbit records.
  std::set<std::string> orbit_keys;
  for (const Block& b : parse_blocks(read_file(orbit_path), orbit_path)) {
    if (b.name != "orbit")
      throw ParseError(orbit_path + ":" + std::to_string(b.line) + ": unexpected block [" +
                       b.name + "]");
    const std::string where = orbit_path + ":" + std::to_string(b.line);
    OrbitRecord rec;
    rec.type = SimpleType::parse(b.get("type"));
    rec.label = b.get("label");
    rec.chars = CharConstraint::parse(b.get("char"));
    rec.note = b.get_or("note", "");
    if (!orbit_keys.insert(rec.type.name() + "/" + rec.label + "/" + rec.chars.str()).second)
      throw ValidationError(where + ": duplicate orbit label " + rec.label);
    const RootSystem& rs = RootSystem::of(rec.type);
    std::istringstream roots_in(b.get("roots"));
    std::string tok;
    while (std::getline(roots_in, tok, ',')) {
      std::size_t a = tok.find_first_not_of(" \t");
      std::size_t z = tok.find_last_not_of(" \t");
      if (a == std::string::npos) continue;
      tok = tok.substr(a, z - a + 1);
      rec.root_labels.push_back(tok);
      try {
        rec.roots.push_back(parse_root_label(rs, tok));
      } catch (const Error& e) {
        throw ValidationError(where + ": bad root '" + tok + "': " + e.what());
      }
    }
    if (rec.roots.empty()) throw ValidationError(where + ": orbit record without roots");
    if (b.has("tau")) {
      Cocharacter tau{parse_int_tuple(b.get("tau"))};
      if (static_cast<int>(tau.weights.size()) != rec.type.rank)
        throw ValidationError(where + ": tau length != rank");
      for (const RootVec& r : rec.roots)
        if (pairing(tau, r) != 2)
          throw ValidationError(where + ": representative is not homogeneous of degree 2 "
                                        "under the stated cocharacter");
      rec.tau = std::move(tau);
    }
    if (b.has("dim_group_centralizer"))
      rec.dim_group_centralizer = std::stoi(b.get("dim_group_centralizer"));
    if (b.has("dim_lie_centralizer"))
      rec.dim_lie_centralizer = std::stoi(b.get("dim_lie_centralizer"));
    if (rec.dim_group_centralizer && rec.dim_lie_centralizer &&
        *rec.dim_lie_centralizer < *rec.dim_group_centralizer)
      throw ValidationError(where + ": Lie centralizer dimension below the group one");
    cat.orbits_.push_back(std::move(rec));
  }
  return cat;
}

const std::vector<WeightedDynkinDiagram>& Catalog::diagrams(SimpleType t) const {
  for (const auto& [type, table] : tables_)
    if (type == t) return table;
  throw ValidationError("no diagram table for type " + t.name());
}

std::optional<std::string> Catalog::lookup_wdd(SimpleType t, const Cocharacter& tau) const {
  if (static_cast<int>(tau.weights.size()) != t.rank)
    throw ValidationError("lookup_wdd: tuple length != rank");
  for (long long w : tau.weights)
    if (w < 0)
      throw ValidationError("lookup_wdd requires a dominant tuple; "
                            "pass through dominant_conjugate first");
  for (const WeightedDynkinDiagram& d : diagrams(t)) {
    bool same = true;
    for (int i = 0; i < t.rank; ++i)
      if (d.weights[i] != tau.weights[i]) {
        same = false;
        break;
      }
    if (same) return d.label;
  }
  return std::nullopt;
}

const OrbitRecord* Catalog::find_orbit(SimpleType t, const std::string& label,
                                       unsigned p) const {
  for (const OrbitRecord& r : orbits_)
    if (r.type == t && r.label == label && r.chars.allows(p)) return &r;
  return nullptr;
}

bool Catalog::wdd_char0_consistency(const WeightedDynkinDiagram& d, std::uint64_t seed,
                                    int samples) const {
  const unsigned big_prime = 101;
  ChevalleyAlgebra<PrimeField> alg(d.type, PrimeField(big_prime));
  Grading g = grade(alg.roots(), d.cocharacter());
  const std::vector<int>* bucket2 = g.bucket(2);
  const std::size_t expected = g.bucket_dim(0) + g.bucket_dim(1);
  if (!bucket2) {
    LieElement<PrimeField> zero;
    return alg.centralizer(zero).dimension == expected;
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < samples; ++trial) {
    LieElement<PrimeField> e;
    for (int idx : *bucket2)
      e.set(alg.field(), idx, alg.field().from_int(static_cast<long long>(rng() % big_prime)));
    if (alg.centralizer(e).dimension == expected) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Table generation.

namespace {

struct Component {
  std::vector<int> nodes;           // 0-based simple root indices in the ambient system
  std::vector<RootVec> pos_roots;   // positive roots supported on the nodes
  std::string type_name;            // "A3", "B2", "~A2", "E7", ...
  char family = 'A';
};

// Abstract type of a connected sub-diagram, with short-root types in
// F4/G2 marked by a leading '~'.
void classify_component(const RootSystem& rs, Component& c) {
  const int n = static_cast<int>(c.nodes.size());
  auto adj = [&](int a, int b) { return rs.cartan(c.nodes[a], c.nodes[b]) != 0 && a != b; };
  auto bond = [&](int a, int b) {
    return rs.cartan(c.nodes[a], c.nodes[b]) * rs.cartan(c.nodes[b], c.nodes[a]);
  };
  std::vector<int> deg(n, 0);
  int double_edges = 0, triple_edges = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj(a, b)) {
        ++deg[a];
        ++deg[b];
        if (bond(a, b) == 2) ++double_edges;
        if (bond(a, b) == 3) ++triple_edges;
      }
  int branch = -1;
  for (int a = 0; a < n; ++a)
    if (deg[a] == 3) branch = a;

  RootVec probe(rs.rank(), 0);
  probe[c.nodes[0]] = 1;
  bool all_short = true, all_long = true;
  for (int a = 0; a < n; ++a) {
    RootVec v(rs.rank(), 0);
    v[c.nodes[a]] = 1;
    (rs.is_long(v) ? all_short : all_long) = false;
  }

  std::string name;
  if (triple_edges) {
    name = "G2";
    c.family = 'G';
  } else if (double_edges) {
    // B if the short root is a leaf of the double edge chain end, C if long end;
    // distinguish by counting short simple roots: B_n has 1, C_n has n-1.
    int shorts = 0;
    for (int a = 0; a < n; ++a) {
      RootVec v(rs.rank(), 0);
      v[c.nodes[a]] = 1;
      if (!rs.is_long(v)) ++shorts;
    }
    if (n == 2) {
      name = "B2";
      c.family = 'B';
    } else if (shorts == 1) {
      name = "B" + std::to_string(n);
      c.family = 'B';
    } else {
      name = "C" + std::to_string(n);
      c.family = 'C';
    }
  } else if (branch >= 0) {
    // arms from the branch node
    std::vector<int> arms;
    for (int a = 0; a < n; ++a)
      if (adj(branch, a)) {
        int len = 1, prev = branch, cur = a;
        for (;;) {
          int next = -1;
          for (int x = 0; x < n; ++x)
            if (x != prev && adj(cur, x)) next = x;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) {
      name = "D" + std::to_string(n);
      c.family = 'D';
    } else {
      name = "E" + std::to_string(n);
      c.family = 'E';
    }
  } else {
    name = "A" + std::to_string(n);
    c.family = 'A';
    if (all_short && (rs.type().family == Family::F || rs.type().family == Family::G))
      name = "~" + name;
  }
  (void)all_long;
  c.type_name = name;
}

// Suffix sequence for the distinguished orbits of one component type,
// ordered by decreasing orbit dimension (regular first).
std::vector<std::string> suffix_list(const std::string& type_name, std::size_t count) {
  if (type_name == "E8") {
    return {"", "(a1)", "(a2)", "(a3)", "(a4)", "(b4)", "(a5)", "(b5)", "(a6)", "(b6)", "(a7)"};
  }
  if (type_name == "E7") return {"", "(a1)", "(a2)", "(a3)", "(a4)", "(a5)"};
  if (type_name == "E6") return {"", "(a1)", "(a3)"};
  if (type_name == "F4") return {"", "(a1)", "(a2)", "(a3)"};
  if (type_name == "G2") return {"", "(a1)"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(i == 0 ? "" : "(a" + std::to_string(i) + ")");
  return out;
}

struct ComponentOrbit {
  std::string label;                 // e.g. "D7(a1)"
  std::vector<mpq_class> h_coeffs;   // characteristic over the component coroots
  long long centralizer_dim;         // within the component algebra
};

// All distinguished parabolic gradings of the component: {0,2}-weights
// with dim l(0) = dim l(2).
std::vector<ComponentOrbit> component_orbits(const RootSystem& rs, const Component& c) {
  const int n = static_cast<int>(c.nodes.size());
  std::vector<std::pair<std::vector<int>, long long>> found; // (weights, d0)
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = (mask >> i & 1) ? 2 : 0;
    long long deg0 = 0, deg2 = 0;
    for (const RootVec& r : c.pos_roots) {
      long long d = 0;
      for (int i = 0; i < n; ++i) d += static_cast<long long>(w[i]) * r[c.nodes[i]];
      if (d == 0) ++deg0;
      else if (d == 2) ++deg2;
    }
    long long d0 = n + 2 * deg0;
    if (d0 == deg2) found.push_back({std::move(w), d0});
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second; // orbit dim descending
    return a.first > b.first;                             // regular (all 2s) first
  });
  auto suffixes = suffix_list(c.type_name, found.size());
  if (suffixes.size() != found.size())
    throw Error("internal: unexpected number of distinguished parabolics for " + c.type_name);

  Rationals q;
  std::vector<ComponentOrbit> out;
  for (std::size_t k = 0; k < found.size(); ++k) {
    // Solve <beta_j, h> = w_j for h in the span of the component coroots.
    Matrix<Rationals> a(n, n);
    std::vector<mpq_class> b(n);
    for (int j = 0; j < n; ++j) {
      for (int m = 0; m < n; ++m)
        a(j, m) = q.from_int(rs.cartan(c.nodes[j], c.nodes[m]));
      b[j] = q.from_int(found[k].first[j]);
    }
    auto sol = solve_affine(q, a, b);
    if (!sol.consistent || !sol.kernel.empty())
      throw Error("internal: singular Cartan block in table generation");
    out.push_back({c.type_name + suffixes[k], std::move(sol.particular), found[k].second});
  }
  return out;
}

} // namespace

std::vector<WeightedDynkinDiagram> generate_dynkin_table(SimpleType t) {
  const RootSystem& rs = RootSystem::of(t);
  const int l = rs.rank();
  Rationals q;

  struct Entry {
    std::vector<int> weights;
    std::string label;
    long long orbit_dim;
  };
  std::map<std::vector<int>, Entry> by_weights;

  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    // Split the subset into connected components.
    std::vector<int> nodes;
    for (int i = 0; i < l; ++i)
      if (mask >> i & 1) nodes.push_back(i);
    std::vector<Component> comps;
    std::vector<bool> used(nodes.size(), false);
    for (std::size_t s = 0; s < nodes.size(); ++s) {
      if (used[s]) continue;
      Component c;
      std::vector<std::size_t> stack{s};
      used[s] = true;
      while (!stack.empty()) {
        std::size_t cur = stack.back();
        stack.pop_back();
        c.nodes.push_back(nodes[cur]);
        for (std::size_t o = 0; o < nodes.size(); ++o)
          if (!used[o] && rs.cartan(nodes[cur], nodes[o]) != 0) {
            used[o] = true;
            stack.push_back(o);
          }
      }
      std::sort(c.nodes.begin(), c.nodes.end());
      for (const RootVec& r : rs.positive_roots()) {
        bool inside = true;
        for (int i = 0; i < l && inside; ++i)
          if (r[i] != 0 && std::find(c.nodes.begin(), c.nodes.end(), i) == c.nodes.end())
            inside = false;
        if (inside) c.pos_roots.push_back(r);
      }
      classify_component(rs, c);
      comps.push_back(std::move(c));
    }

    // Cartesian product of per-component distinguished orbits.
    std::vector<std::vector<ComponentOrbit>> menu;
    for (const Component& c : comps) menu.push_back(component_orbits(rs, c));
    std::vector<std::size_t> pick(menu.size(), 0);
    for (;;) {
      // Assemble the characteristic and its weights on all simple roots.
      std::vector<mpq_class> a(l, mpq_class(0));
      std::vector<std::string> labels;
      for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const ComponentOrbit& co = menu[ci][pick[ci]];
        labels.push_back(co.label);
        for (std::size_t m = 0; m < comps[ci].nodes.size(); ++m)
          for (int i = 0; i < l; ++i)
            a[i] += co.h_coeffs[m] * rs.cartan(i, comps[ci].nodes[m]);
      }
      Cocharacter tuple;
      tuple.weights.resize(l);
      bool integral = true;
      for (int i = 0; i < l; ++i) {
        if (a[i].get_den() != 1) {
          integral = false;
          break;
        }
        tuple.weights[i] = a[i].get_num().get_si();
      }
      if (!integral)
        throw Error("internal: non-integral characteristic in table generation");
      auto dom = dominant_conjugate(rs, tuple).dominant;
      std::vector<int> w(dom.weights.begin(), dom.weights.end());
      for (int v : w)
        if (v < 0 || v > 2) throw Error("internal: characteristic outside {0,1,2}");
      // Label: component labels sorted rank-major, long types before
      // short (~) types on ties.
      auto rank_of = [](const std::string& s) {
        std::size_t i = 0;
        while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        int r = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          r = r * 10 + (s[i++] - '0');
        return r;
      };
      std::sort(labels.begin(), labels.end(),
                [&](const std::string& x, const std::string& y) {
                  int rx = rank_of(x), ry = rank_of(y);
                  if (rx != ry) return rx > ry;
                  return x < y;
                });
      std::string label;
      for (const std::string& s : labels) label += s;
      if (label.empty()) label = "0";

      Grading g = grade(rs, dom);
      long long orbit_dim =
          rs.num_roots() + l - static_cast<long long>(g.bucket_dim(0) + g.bucket_dim(1));
      auto it = by_weights.find(w);
      if (it == by_weights.end()) {
        by_weights.emplace(w, Entry{w, label, orbit_dim});
      }
      // Same weights from a conjugate Levi: keep the first label.

      // Advance the product iterator.
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == menu[j].size()) {
        pick[j] = 0;
        ++j;
      }
      if (j == pick.size()) break;
    }
  }

  // Disambiguate duplicate labels (non-conjugate subsystems of the same
  // abstract type) with primes, ordered by weight tuple.
  std::map<std::string, int> label_count;
  std::vector<Entry> entries;
  for (auto& [w, e] : by_weights) entries.push_back(e);
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.orbit_dim != b.orbit_dim) return a.orbit_dim < b.orbit_dim;
    return a.weights < b.weights;
  });
  for (Entry& e : entries) ++label_count[e.label];
  std::map<std::string, int> seen;
  std::vector<WeightedDynkinDiagram> out;
  for (Entry& e : entries) {
    std::string label = e.label;
    if (label_count[label] > 1) {
      int k = seen[label]++;
      label += std::string(k + 1, '\'');
    }
    out.push_back({t, e.weights, label});
  }
  return out;
}

} // namespace chevlie
