#include "chevlie/claims.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "chevlie/chevalley.hpp"
#include "chevlie/grading.hpp"
#include "chevlie/textio.hpp"

namespace chevlie {

bool glob_match(std::string_view pattern, std::string_view text) {
  if (pattern.empty()) return true;
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<Claim> load_claims(const std::string& path) {
  std::vector<Claim> out;
  std::set<std::string> ids;
  for (const Block& b : parse_blocks(read_file(path), path)) {
    if (b.name != "claim")
      throw ParseError(path + ":" + std::to_string(b.line) + ": unexpected block [" + b.name +
                       "]");
    Claim c;
    c.id = b.get("id");
    c.kind = b.get("kind");
    c.expected = b.get("expected");
    c.note = b.get_or("note", "");
    c.line = b.line;
    if (c.note.empty())
      throw ValidationError(path + ":" + std::to_string(b.line) + ": claim '" + c.id +
                            "' is missing a note");
    if (!ids.insert(c.id).second)
      throw ValidationError(path + ":" + std::to_string(b.line) + ": duplicate claim id '" +
                            c.id + "'");
    for (const auto& [k, v] : b.kv)
      if (k != "id" && k != "kind" && k != "expected" && k != "note") c.inputs[k] = v;
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

using Alg = ChevalleyAlgebra<PrimeField>;

const std::string& need(const Claim& c, const std::string& key) {
  auto it = c.inputs.find(key);
  if (it == c.inputs.end())
    throw ValidationError("claim '" + c.id + "' is missing input '" + key + "'");
  return it->second;
}

unsigned need_prime(const Claim& c) {
  const std::string& s = need(c, "p");
  unsigned p = static_cast<unsigned>(std::stoul(s));
  FieldSpec{p}.validate();
  if (p == 0) throw ValidationError("claim '" + c.id + "': p must be a prime");
  return p;
}

struct ResolvedElement {
  LieElement<PrimeField> value;
  std::optional<Cocharacter> tau; // orbit cocharacter, when available
};

LieElement<PrimeField> sample_generic(const Alg& alg, const Grading& g, std::uint64_t seed,
                                      std::size_t want_dim, bool want_full) {
  const std::vector<int>* bucket2 = g.bucket(2);
  if (!bucket2) throw ValidationError("generic element: empty degree-2 component");
  std::mt19937_64 rng(seed);
  const unsigned p = alg.field().characteristic();
  for (int trial = 0; trial < 5000; ++trial) {
    LieElement<PrimeField> e;
    for (int idx : *bucket2)
      e.set(alg.field(), idx, alg.field().from_int(static_cast<long long>(rng() % p)));
    if (alg.centralizer(e).dimension != want_dim) continue;
    if (want_full && bracket_image_dim(alg, e, g, 0) != g.bucket_dim(2)) continue;
    return e;
  }
  throw Error("generic element: no sample satisfied the acceptance predicate");
}

std::map<std::string, std::string> parse_semi_kv(const std::string& s) {
  std::map<std::string, std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ';')) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("bad key=value list: '" + s + "'");
    auto strip = [](std::string x) {
      std::size_t a = x.find_first_not_of(" \t");
      std::size_t b = x.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : x.substr(a, b - a + 1);
    };
    out[strip(item.substr(0, eq))] = strip(item.substr(eq + 1));
  }
  return out;
}

// Resolves the 'orbit', 'roots' or 'generic' element specification.
ResolvedElement resolve_element(const Catalog& cat, const Alg& alg, const Claim& c,
                                unsigned p) {
  ResolvedElement out;
  const RootSystem& rs = alg.roots();
  if (auto it = c.inputs.find("orbit"); it != c.inputs.end()) {
    const OrbitRecord* rec = cat.find_orbit(rs.type(), it->second, p);
    if (!rec)
      throw ValidationError("claim '" + c.id + "': unknown orbit '" + it->second + "' for " +
                            rs.type().name() + " at p=" + std::to_string(p));
    out.value = alg.element_from_roots(rec->roots);
    out.tau = rec->tau;
    return out;
  }
  if (auto it = c.inputs.find("roots"); it != c.inputs.end()) {
    out.value = alg.element_from_roots(parse_root_list(rs, it->second));
    return out;
  }
  if (auto it = c.inputs.find("generic"); it != c.inputs.end()) {
    auto kv = parse_semi_kv(it->second);
    Cocharacter tau{parse_int_tuple(kv.at("tau"))};
    Grading g = grade(rs, tau);
    std::uint64_t seed = std::stoull(kv.at("seed"));
    std::size_t want = std::stoul(kv.at("centralizer_dim"));
    bool want_full = kv.count("full_bracket_at") != 0;
    out.value = sample_generic(alg, g, seed, want, want_full);
    out.tau = tau;
    return out;
  }
  throw ValidationError("claim '" + c.id + "' needs an 'orbit', 'roots' or 'generic' input");
}

Cocharacter claim_tau(const Claim& c, const ResolvedElement& el, int rank) {
  if (auto it = c.inputs.find("tau"); it != c.inputs.end()) {
    Cocharacter tau{parse_int_tuple(it->second)};
    if (static_cast<int>(tau.weights.size()) != rank)
      throw ValidationError("claim '" + c.id + "': tau length != rank");
    return tau;
  }
  if (el.tau) return *el.tau;
  throw ValidationError("claim '" + c.id + "' needs a cocharacter (tau input or orbit tau)");
}

std::string fmt_graded_dims(const std::map<long long, std::size_t>& dims) {
  std::ostringstream os;
  long long neg_total = 0;
  bool first = true;
  for (const auto& [deg, d] : dims) {
    if (deg < 0) neg_total += static_cast<long long>(d);
    if (d == 0) continue;
    if (!first) os << " ";
    os << deg << ":" << d;
    first = false;
  }
  os << " neg_total:" << neg_total;
  return os.str();
}

bool check_graded_expected(const std::map<long long, std::size_t>& dims,
                           const std::string& expected) {
  long long neg_total = 0;
  for (const auto& [deg, d] : dims)
    if (deg < 0) neg_total += static_cast<long long>(d);
  std::istringstream is(expected);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = item.find_last_not_of(" \t");
    item = item.substr(a, b - a + 1);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("bad graded expectation '" + item + "'");
    std::string key = item.substr(0, colon);
    std::string val = item.substr(colon + 1);
    bool ge = false;
    if (val.rfind(">=", 0) == 0) {
      ge = true;
      val = val.substr(2);
    }
    long long want = std::stoll(val);
    long long have;
    if (key == "neg_total") {
      have = neg_total;
    } else {
      long long deg = std::stoll(key);
      auto it = dims.find(deg);
      have = it == dims.end() ? 0 : static_cast<long long>(it->second);
    }
    if (ge ? have < want : have != want) return false;
  }
  return true;
}

std::string fmt_family(const CocharacterFamily& fam) {
  if (!fam.consistent) return "inconsistent";
  if (fam.lattice.empty()) return "unique:" + format_int_tuple(fam.particular);
  std::string s = "family:particular=" + format_int_tuple(fam.particular) + ";lattice=";
  for (std::size_t i = 0; i < fam.lattice.size(); ++i) {
    if (i) s += "|";
    s += format_int_tuple(fam.lattice[i]);
  }
  return s;
}

struct Outcome {
  std::string computed;
  bool pass;
};

Outcome execute_claim(const Catalog& cat, const Claim& c) {
  const std::string& kind = c.kind;

  if (kind == "dominant_conjugate") {
    const RootSystem& rs = RootSystem::of(SimpleType::parse(need(c, "type")));
    Cocharacter input{parse_int_tuple(need(c, "input"))};
    auto dom = dominant_conjugate(rs, input);
    std::string computed = format_int_tuple(dom.dominant.weights);
    return {computed, computed == c.expected};
  }

  if (kind == "solve_tau") {
    const RootSystem& rs = RootSystem::of(SimpleType::parse(need(c, "type")));
    auto supports = parse_root_list(rs, need(c, "supports"));
    long long target = 2;
    if (auto it = c.inputs.find("target"); it != c.inputs.end()) target = std::stoll(it->second);
    std::vector<std::pair<int, long long>> fixed;
    if (auto it = c.inputs.find("fixed"); it != c.inputs.end()) {
      for (const auto& [k, v] : parse_semi_kv(it->second))
        fixed.emplace_back(std::stoi(k), std::stoll(v));
    }
    auto fam = solve_grading_constraints(rs, supports, target, fixed);
    std::string computed = fmt_family(fam);
    return {computed, computed == c.expected};
  }

  if (kind == "root_sum") {
    const RootSystem& rs = RootSystem::of(SimpleType::parse(need(c, "type")));
    RootVec a = parse_root_label(rs, need(c, "a"));
    RootVec b = parse_root_label(rs, need(c, "b"));
    auto [sum, diff] = rs.sum_and_difference_in_sigma(a, b);
    std::string computed =
        std::string("sum:") + (sum ? "yes" : "no") + ",diff:" + (diff ? "yes" : "no");
    return {computed, computed == c.expected};
  }

  if (kind == "wdd_lookup") {
    SimpleType t = SimpleType::parse(need(c, "type"));
    Cocharacter tuple{parse_int_tuple(need(c, "tuple"))};
    auto label = cat.lookup_wdd(t, tuple);
    std::string computed = label ? "label:" + *label : "absent";
    bool pass;
    if (c.expected == "present")
      pass = label.has_value();
    else
      pass = computed == c.expected;
    return {computed, pass};
  }

  if (kind == "graded_dim") {
    SimpleType t = SimpleType::parse(need(c, "type"));
    const RootSystem& rs = RootSystem::of(t);
    Cocharacter tau{parse_int_tuple(need(c, "tau"))};
    Grading g = grade(rs, tau);
    long long degree = std::stoll(need(c, "degree"));
    std::string computed = std::to_string(g.bucket_dim(degree));
    return {computed, computed == c.expected};
  }

  // Everything below runs in a modular Chevalley algebra.
  unsigned p = need_prime(c);
  SimpleType t = SimpleType::parse(need(c, "type"));
  Alg alg(t, PrimeField(p));
  ResolvedElement el = resolve_element(cat, alg, c, p);

  if (kind == "centralizer_dim") {
    std::string computed = std::to_string(alg.centralizer(el.value).dimension);
    return {computed, computed == c.expected};
  }

  if (kind == "jordan_blocks") {
    auto parts = nilpotent_jordan_partition(alg.field(), alg.ad_matrix(el.value));
    std::string partition;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) partition += ",";
      partition += std::to_string(parts[i]);
    }
    std::string computed =
        "parts:" + std::to_string(parts.size()) + ";partition:" + partition;
    bool pass;
    if (c.expected.rfind("parts:", 0) == 0)
      pass = "parts:" + std::to_string(parts.size()) == c.expected;
    else
      pass = "partition:" + partition == c.expected;
    return {computed, pass};
  }

  Grading g = grade(alg.roots(), claim_tau(c, el, t.rank));

  if (kind == "graded_centralizer") {
    auto dims = graded_centralizer_dims(alg, el.value, g);
    return {fmt_graded_dims(dims), check_graded_expected(dims, c.expected)};
  }

  if (kind == "bracket_image") {
    long long j = std::stoll(need(c, "j"));
    std::size_t dim = bracket_image_dim(alg, el.value, g, j);
    std::size_t target = g.bucket_dim(j + 2);
    std::string computed = std::to_string(dim) + "/" + std::to_string(target) +
                           (dim == target ? " full" : " proper");
    bool pass;
    if (c.expected == "full")
      pass = dim == target;
    else if (c.expected == "proper")
      pass = dim < target;
    else
      pass = std::to_string(dim) == c.expected;
    return {computed, pass};
  }

  if (kind == "pairing_perfect") {
    const std::string& which = need(c, "i");
    if (which == "all_nonzero") {
      std::string failing;
      for (const auto& [deg, bucket] : g.buckets) {
        if (deg <= 0) continue;
        if (!pairing_perfect(alg, g, deg)) failing += (failing.empty() ? "" : ",") + std::to_string(deg);
      }
      std::string computed = failing.empty() ? "all:true" : "fail_at:" + failing;
      return {computed, computed == c.expected};
    }
    long long i = std::stoll(which);
    std::string computed = pairing_perfect(alg, g, i) ? "true" : "false";
    return {computed, computed == c.expected};
  }

  if (kind == "duality_identity") {
    auto check = duality_identity_check(alg, el.value, g);
    std::ostringstream os;
    os << (check.holds ? "holds" : "violated") << ";codim=" << check.codim_image
       << ";kernel=" << check.kernel_neg2;
    bool pass = check.holds;
    if (c.expected.rfind("holds,min:", 0) == 0) {
      long long want = std::stoll(c.expected.substr(10));
      pass = pass && std::min(check.codim_image, check.kernel_neg2) >= want;
    } else {
      pass = pass && c.expected == "holds";
    }
    return {os.str(), pass};
  }

  if (kind == "p_power_degree") {
    int iterations = 1;
    if (auto it = c.inputs.find("iterations"); it != c.inputs.end())
      iterations = std::stoi(it->second);
    long long final_degree = std::stoll(need(c, "degree"));
    LieElement<PrimeField> cur = el.value;
    long long deg = 2;
    for (int i = 0; i < iterations; ++i) {
      deg *= p;
      const std::vector<int>* span = g.bucket(deg);
      if (!span)
        return {"zero (empty degree-" + std::to_string(deg) + " component)", false};
      auto res = alg.p_power(cur, *span);
      if (res.status != Alg::PPowerStatus::ok)
        return {"ambiguous", false};
      cur = res.value;
    }
    if (deg != final_degree)
      throw ValidationError("claim '" + c.id + "': degree input does not match iterations");
    bool nonzero = !cur.is_zero();
    bool centralizes = alg.bracket(el.value, cur).is_zero();
    std::string computed = std::string(nonzero ? "nonzero" : "zero") + ";" +
                           (centralizes ? "centralizes" : "does-not-centralize") +
                           ";degree=" + std::to_string(deg);
    return {computed, nonzero && centralizes && c.expected == "nonzero"};
  }

  throw ValidationError("unknown claim kind '" + kind + "'");
}

} // namespace

ClaimsResult run_claims(const Catalog& catalog, const std::vector<Claim>& claims,
                        const std::string& filter_glob) {
  ClaimsResult result;
  for (const Claim& c : claims) {
    if (!filter_glob.empty() && !glob_match(filter_glob, c.id)) continue;
    ClaimReport r;
    r.id = c.id;
    r.kind = c.kind;
    r.expected = c.expected;
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome out = execute_claim(catalog, c);
      r.computed = out.computed;
      r.status = out.pass ? "pass" : "fail";
    } catch (const std::exception& e) {
      r.computed = std::string("error: ") + e.what();
      r.status = "error";
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    if (r.status == "pass") ++result.passed;
    else if (r.status == "fail") ++result.failed;
    else ++result.errors;
    result.reports.push_back(std::move(r));
  }
  return result;
}

std::string reports_to_json(const ClaimsResult& result) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ClaimReport& r : result.reports) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["kind"] = r.kind;
    o["computed"] = r.computed;
    o["expected"] = r.expected;
    o["status"] = r.status;
    arr.push_back(std::move(o));
  }
  nlohmann::ordered_json top;
  top["claims"] = std::move(arr);
  top["passed"] = result.passed;
  top["failed"] = result.failed;
  top["errors"] = result.errors;
  return top.dump(2) + "\n";
}

std::string reports_to_table(const ClaimsResult& result) {
  std::size_t wid = 4, wkind = 4, wcomp = 8, wexp = 8;
  for (const ClaimReport& r : result.reports) {
    wid = std::max(wid, r.id.size());
    wkind = std::max(wkind, r.kind.size());
    wcomp = std::max(wcomp, r.computed.size());
    wexp = std::max(wexp, r.expected.size());
  }
  std::ostringstream os;
  auto pad = [&](const std::string& s, std::size_t w) {
    os << s;
    for (std::size_t i = s.size(); i < w; ++i) os << ' ';
  };
  pad("id", wid + 2);
  pad("kind", wkind + 2);
  pad("computed", wcomp + 2);
  pad("expected", wexp + 2);
  os << "status  ms\n";
  for (const ClaimReport& r : result.reports) {
    pad(r.id, wid + 2);
    pad(r.kind, wkind + 2);
    pad(r.computed, wcomp + 2);
    pad(r.expected, wexp + 2);
    pad(r.status, 8);
    os << r.millis << "\n";
  }
  os << result.passed << " passed, " << result.failed << " failed, " << result.errors
     << " errors\n";
  return os.str();
}

} // namespace chevlie
