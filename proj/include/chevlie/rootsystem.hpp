#ifndef CHEVLIE_ROOTSYSTEM_HPP
#define CHEVLIE_ROOTSYSTEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chevlie/errors.hpp"

namespace chevlie {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// (family, rank) of a simple type, e.g. E6 or F4.
struct SimpleType {
  Family family;
  int rank;

  static SimpleType parse(std::string_view s); // "E6", "A12", ...
  std::string name() const;
  bool operator==(const SimpleType&) const = default;
};

/// A root as its integer coefficient vector over the simple basis
/// (Bourbaki numbering).
using RootVec = std::vector<int>;

/// Integer cocharacter, encoded by its weights (r_1,...,r_l) on the
/// simple root vectors.
struct Cocharacter {
  std::vector<long long> weights;
  bool operator==(const Cocharacter&) const = default;
};

/// Grading weight of the root vector e_alpha under tau: sum_i c_i r_i.
long long pairing(const Cocharacter& tau, const RootVec& alpha);

struct DominantConjugate {
  Cocharacter dominant;
  std::vector<int> word; // 1-based simple reflection indices, in application order
};

/// Root system of a simple type: all roots, Cartan data, length classes.
/// Basis index convention used throughout the library:
///   0..N-1      e_alpha for the positive roots in storage order,
///   N..2N-1     e_{-alpha} paired with the positive root at index-N,
///   2N..2N+l-1  h_1..h_l (simple coroots).
/// Positive roots are sorted by height, then lexicographically.
class RootSystem {
public:
  /// Shared immutable instance per type (thread-safe registry).
  static const RootSystem& of(SimpleType t);

  SimpleType type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t num_positive() const { return positive_.size(); }
  std::size_t num_roots() const { return 2 * positive_.size(); }

  const std::vector<RootVec>& positive_roots() const { return positive_; }
  const RootVec& highest_root() const { return positive_.back(); }

  /// Cartan pairing table: cartan(i, j) = <alpha_i, alpha_j^vee>, 0-based.
  int cartan(int i, int j) const { return cartan_[i][j]; }

  bool contains(const RootVec& v) const;
  /// Index into the signed root list (positives then negatives), if a root.
  std::optional<int> signed_index(const RootVec& v) const;
  const RootVec& signed_root(int idx) const;
  bool is_positive_index(int idx) const { return idx < static_cast<int>(positive_.size()); }
  int negate_index(int idx) const;

  /// Scaled W-invariant inner product and squared length (integers).
  long long inner(const RootVec& a, const RootVec& b) const;
  long long norm2(const RootVec& a) const { return inner(a, a); }
  bool is_long(const RootVec& a) const { return norm2(a) == max_norm_; }

  /// <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha) for any root alpha.
  long long pair_coroot(const RootVec& beta, const RootVec& alpha) const;
  /// Coefficients of beta^vee over the simple coroots h_1..h_l.
  std::vector<long long> coroot_coeffs(const RootVec& beta) const;
  /// Reflection s_alpha(beta); alpha must be a root.
  RootVec reflect(const RootVec& beta, const RootVec& alpha) const;

  int height(const RootVec& v) const;

  /// (beta+beta' in Sigma, beta-beta' in Sigma); inputs must be roots.
  std::pair<bool, bool> sum_and_difference_in_sigma(const RootVec& a, const RootVec& b) const;

  /// Canonical text serialization: header line, then one root per line
  /// (coefficient vector), positives before negatives in storage order.
  std::string canonical_listing() const;

private:
  explicit RootSystem(SimpleType t);

  SimpleType type_;
  std::vector<std::vector<int>> cartan_; // <alpha_i, alpha_j^vee>
  std::vector<std::vector<long long>> gram_; // scaled (alpha_i, alpha_j)
  std::vector<RootVec> positive_;
  std::vector<RootVec> negative_;
  long long max_norm_ = 0;
  struct VecHash {
    std::size_t operator()(const RootVec& v) const {
      std::size_t h = 1469598103934665603ull;
      for (int x : v) h = (h ^ static_cast<std::size_t>(x + 16)) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_map<RootVec, int, VecHash> index_; // signed index of every root
};

/// Unique dominant W-conjugate of tau (all weights >= 0) plus a word of
/// simple reflections realizing it.  Applying the word's reflections to
/// tau in order yields the dominant representative.
DominantConjugate dominant_conjugate(const RootSystem& rs, Cocharacter tau);

/// Parses a root vector label.
/// E/A/B/C/D types: a run of simple-root indices with optional ^k
/// multiplicity on the preceding index, e.g. "234^25" -> a2+a3+2a4+a5.
/// F4/G2: a digit string of length = rank is read as the coefficient
/// vector (e.g. "2342"); any other length as an index run ("234" = a2+a3+a4).
/// The result must be a root of the system.
RootVec parse_root_label(const RootSystem& rs, std::string_view label);

/// Comma-separated list of root labels.
std::vector<RootVec> parse_root_list(const RootSystem& rs, std::string_view csv);

/// "c1,c2,...,cl" integer tuple.
std::vector<long long> parse_int_tuple(std::string_view s);
std::string format_int_tuple(const std::vector<long long>& v);

std::string format_root(const RootVec& v);

} // namespace chevlie

#endif
