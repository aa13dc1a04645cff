#include "chevlie/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace chevlie {

SimpleType SimpleType::parse(std::string_view s) {
  if (s.size() < 2) throw ParseError("bad simple type '" + std::string(s) + "'");
  char fam = static_cast<char>(std::toupper(s[0]));
  if (fam < 'A' || fam > 'G')
    throw ParseError("bad simple type family '" + std::string(s) + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("bad simple type rank in '" + std::string(s) + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  SimpleType t{static_cast<Family>(fam), rank};
  // Validity per family.
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw ValidationError("invalid simple type " + std::string(s));
  return t;
}

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

long long pairing(const Cocharacter& tau, const RootVec& alpha) {
  if (tau.weights.size() != alpha.size())
    throw Error("pairing: cocharacter/root length mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) s += tau.weights[i] * alpha[i];
  return s;
}

namespace {

// Cartan pairings C[i][j] = <alpha_i, alpha_j^vee> and a scaled integer
// Gram matrix (alpha_i, alpha_j), Bourbaki numbering.
void build_cartan(SimpleType t, std::vector<std::vector<int>>& cartan,
                  std::vector<std::vector<long long>>& gram) {
  const int l = t.rank;
  std::vector<std::pair<int, int>> edges; // simply-laced part, 0-based
  // Scaled norms per node; simply-laced entries use 2.
  std::vector<long long> norm(l, 2);
  // Off-diagonal Gram entries default to -(norm min)/... set explicitly below.
  std::map<std::pair<int, int>, long long> off;

  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(0, l - 1);
      for (auto [a, b] : edges) off[{a, b}] = -1;
      break;
    case Family::B: // alpha_l short
      chain(0, l - 1);
      for (long long& n : norm) n = 4;
      norm[l - 1] = 2;
      for (auto [a, b] : edges) off[{a, b}] = -2;
      break;
    case Family::C: // alpha_l long
      chain(0, l - 1);
      norm[l - 1] = 4;
      for (auto [a, b] : edges) off[{a, b}] = -1;
      off[{l - 2, l - 1}] = -2;
      break;
    case Family::D:
      chain(0, l - 2);
      edges.emplace_back(l - 3, l - 1);
      for (auto [a, b] : edges) off[{a, b}] = -1;
      break;
    case Family::E:
      // Chain 1-3-4-5-...-l with node 2 attached to node 4.
      edges.emplace_back(0, 2);
      for (int i = 2; i < l - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, 3);
      for (auto [a, b] : edges) off[{a, b}] = -1;
      break;
    case Family::F: // 1-2=>3-4, alpha_1/alpha_2 long
      chain(0, 3);
      norm = {4, 4, 2, 2};
      off[{0, 1}] = -2;
      off[{1, 2}] = -2;
      off[{2, 3}] = -1;
      break;
    case Family::G: // alpha_1 short, alpha_2 long
      chain(0, 1);
      norm = {2, 6};
      off[{0, 1}] = -3;
      break;
  }

  gram.assign(l, std::vector<long long>(l, 0));
  for (int i = 0; i < l; ++i) gram[i][i] = norm[i];
  for (auto& [key, v] : off) {
    gram[key.first][key.second] = v;
    gram[key.second][key.first] = v;
  }
  cartan.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      long long num = 2 * gram[i][j];
      if (num % norm[j] != 0) throw Error("internal: non-integral Cartan pairing");
      cartan[i][j] = static_cast<int>(num / norm[j]);
    }
}

} // namespace

RootSystem::RootSystem(SimpleType t) : type_(t) {
  const int l = t.rank;
  build_cartan(t, cartan_, gram_);

  // Close the simple roots under simple reflections.
  std::set<RootVec> all;
  std::vector<RootVec> frontier;
  for (int i = 0; i < l; ++i) {
    RootVec v(l, 0);
    v[i] = 1;
    all.insert(v);
    frontier.push_back(v);
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& v : frontier) {
      for (int i = 0; i < l; ++i) {
        long long pai = 0;
        for (int j = 0; j < l; ++j) pai += static_cast<long long>(v[j]) * cartan_[j][i];
        RootVec w = v;
        w[i] -= static_cast<int>(pai);
        if (all.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }

  for (const RootVec& v : all) {
    bool nonneg = std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; });
    bool nonpos = std::all_of(v.begin(), v.end(), [](int c) { return c <= 0; });
    if (!nonneg && !nonpos) throw Error("internal: mixed-sign root generated");
    if (nonneg) positive_.push_back(v);
  }
  std::sort(positive_.begin(), positive_.end(), [this](const RootVec& a, const RootVec& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  const int n = static_cast<int>(positive_.size());
  negative_.reserve(positive_.size());
  for (int i = 0; i < n; ++i) {
    index_[positive_[i]] = i;
    RootVec neg = positive_[i];
    for (int& c : neg) c = -c;
    index_[neg] = n + i;
    negative_.push_back(std::move(neg));
  }

  for (const RootVec& v : positive_) max_norm_ = std::max(max_norm_, norm2(v));

  // The last root in height order must dominate every positive root.
  const RootVec& top = positive_.back();
  for (const RootVec& v : positive_)
    for (int i = 0; i < l; ++i)
      if (v[i] > top[i]) throw Error("internal: highest root is not dominant");
}

const RootSystem& RootSystem::of(SimpleType t) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<char>(t.family), t.rank);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::unique_ptr<RootSystem>(new RootSystem(t))).first;
  return *it->second;
}

bool RootSystem::contains(const RootVec& v) const { return index_.count(v) != 0; }

std::optional<int> RootSystem::signed_index(const RootVec& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const RootVec& RootSystem::signed_root(int idx) const {
  const int n = static_cast<int>(positive_.size());
  return idx < n ? positive_[idx] : negative_[idx - n];
}

int RootSystem::negate_index(int idx) const {
  const int n = static_cast<int>(positive_.size());
  return idx < n ? idx + n : idx - n;
}

long long RootSystem::inner(const RootVec& a, const RootVec& b) const {
  long long s = 0;
  const int l = rank();
  for (int i = 0; i < l; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < l; ++j) s += static_cast<long long>(a[i]) * b[j] * gram_[i][j];
  }
  return s;
}

long long RootSystem::pair_coroot(const RootVec& beta, const RootVec& alpha) const {
  long long num = 2 * inner(beta, alpha);
  long long den = norm2(alpha);
  if (num % den != 0) throw Error("internal: non-integral coroot pairing");
  return num / den;
}

std::vector<long long> RootSystem::coroot_coeffs(const RootVec& beta) const {
  // beta^vee = 2 beta/(beta,beta) = sum_i c_i (alpha_i,alpha_i)/(beta,beta) alpha_i^vee.
  const long long nb = norm2(beta);
  std::vector<long long> out(rank());
  for (int i = 0; i < rank(); ++i) {
    long long num = static_cast<long long>(beta[i]) * gram_[i][i];
    if (num % nb != 0) throw Error("internal: non-integral coroot coefficient");
    out[i] = num / nb;
  }
  return out;
}

RootVec RootSystem::reflect(const RootVec& beta, const RootVec& alpha) const {
  long long k = pair_coroot(beta, alpha);
  RootVec out = beta;
  for (int i = 0; i < rank(); ++i) out[i] -= static_cast<int>(k) * alpha[i];
  return out;
}

int RootSystem::height(const RootVec& v) const {
  return std::accumulate(v.begin(), v.end(), 0);
}

std::pair<bool, bool> RootSystem::sum_and_difference_in_sigma(const RootVec& a,
                                                              const RootVec& b) const {
  if (!contains(a) || !contains(b))
    throw ValidationError("sum_and_difference_in_sigma: inputs must be roots");
  RootVec sum(a.size()), diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum[i] = a[i] + b[i];
    diff[i] = a[i] - b[i];
  }
  return {contains(sum), contains(diff)};
}

std::string RootSystem::canonical_listing() const {
  std::ostringstream os;
  os << "# type=" << type_.name() << " rank=" << rank() << " positive=" << num_positive()
     << "\n";
  auto emit = [&](const RootVec& v, int sign) {
    for (int i = 0; i < rank(); ++i) {
      if (i) os << ' ';
      os << sign * v[i];
    }
    os << "\n";
  };
  for (const RootVec& v : positive_) emit(v, 1);
  for (const RootVec& v : positive_) emit(v, -1);
  return os.str();
}

DominantConjugate dominant_conjugate(const RootSystem& rs, Cocharacter tau) {
  if (static_cast<int>(tau.weights.size()) != rs.rank())
    throw ValidationError("dominant_conjugate: tuple length != rank");
  DominantConjugate out;
  const int l = rs.rank();
  for (;;) {
    int i = 0;
    while (i < l && tau.weights[i] >= 0) ++i;
    if (i == l) break;
    // Apply s_i: r_k -> r_k - <alpha_k, alpha_i^vee> r_i.
    const long long ri = tau.weights[i];
    for (int k = 0; k < l; ++k) tau.weights[k] -= rs.cartan(k, i) * ri;
    out.word.push_back(i + 1);
  }
  out.dominant = std::move(tau);
  return out;
}

namespace {

RootVec parse_index_run(const RootSystem& rs, std::string_view label) {
  RootVec v(rs.rank(), 0);
  int last = -1;
  for (std::size_t i = 0; i < label.size(); ++i) {
    char c = label[i];
    if (c == '^') {
      if (last < 0 || i + 1 >= label.size() ||
          !std::isdigit(static_cast<unsigned char>(label[i + 1])))
        throw ParseError("bad multiplicity in root label '" + std::string(label) + "'");
      int mult = label[i + 1] - '0';
      v[last] += mult - 1; // index already counted once
      ++i;
      last = -1;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad character in root label '" + std::string(label) + "'");
    int idx = c - '0';
    if (idx < 1 || idx > rs.rank())
      throw ParseError("simple root index out of range in '" + std::string(label) + "'");
    v[idx - 1] += 1;
    last = idx - 1;
  }
  return v;
}

} // namespace

RootVec parse_root_label(const RootSystem& rs, std::string_view label) {
  if (label.empty()) throw ParseError("empty root label");
  RootVec v;
  bool coeff_form = (rs.type().family == Family::F || rs.type().family == Family::G) &&
                    static_cast<int>(label.size()) == rs.rank() &&
                    label.find('^') == std::string_view::npos;
  if (coeff_form) {
    v.assign(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(label[i])))
        throw ParseError("bad coefficient in root label '" + std::string(label) + "'");
      v[i] = label[i] - '0';
    }
  } else {
    v = parse_index_run(rs, label);
  }
  if (!rs.contains(v))
    throw ValidationError("'" + std::string(label) + "' is not a root of " +
                          rs.type().name() + " (coefficients " + format_root(v) + ")");
  return v;
}

std::vector<RootVec> parse_root_list(const RootSystem& rs, std::string_view csv) {
  std::vector<RootVec> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view item =
        csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos);
    // trim spaces
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(parse_root_label(rs, item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ParseError("empty root list");
  return out;
}

std::vector<long long> parse_int_tuple(std::string_view s) {
  std::vector<long long> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw ParseError("bad integer tuple '" + std::string(s) + "'");
    try {
      out.push_back(std::stoll(cur));
    } catch (const std::exception&) {
      throw ParseError("bad integer tuple '" + std::string(s) + "'");
    }
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else if (c == ' ' || c == '(' || c == ')') {
      continue;
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

std::string format_int_tuple(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string format_root(const RootVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += ")";
  return s;
}

} // namespace chevlie
