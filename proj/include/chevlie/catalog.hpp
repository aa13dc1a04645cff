#ifndef CHEVLIE_CATALOG_HPP
#define CHEVLIE_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chevlie/rootsystem.hpp"

namespace chevlie {

/// Weighted Dynkin diagram: {0,1,2}-weights on the simple roots,
/// classifying a nilpotent orbit in characteristic zero.
struct WeightedDynkinDiagram {
  SimpleType type;
  std::vector<int> weights;
  std::string label;

  Cocharacter cocharacter() const {
    return Cocharacter{std::vector<long long>(weights.begin(), weights.end())};
  }
};

/// Characteristic constraint attached to an orbit record.
struct CharConstraint {
  enum class Kind { any, eq, neq };
  Kind kind = Kind::any;
  unsigned p = 0;

  bool allows(unsigned q) const {
    switch (kind) {
      case Kind::any: return true;
      case Kind::eq: return q == p;
      case Kind::neq: return q != p;
    }
    return false;
  }
  static CharConstraint parse(std::string_view s);
  std::string str() const;
};

/// Nilpotent orbit representative and its catalog metadata.
struct OrbitRecord {
  std::string label;
  SimpleType type;
  CharConstraint chars;
  std::vector<std::string> root_labels; // verbatim digit labels
  std::vector<RootVec> roots;           // resolved coefficient vectors
  std::optional<Cocharacter> tau;       // stated cocharacter, when unique
  std::optional<int> dim_group_centralizer;
  std::optional<int> dim_lie_centralizer;
  std::string note;
};

/// Versioned data assets: weighted Dynkin diagram tables and orbit
/// representatives, loaded from the block-format files under a data
/// directory and validated against the root systems.
class Catalog {
public:
  /// Loads <dir>/dynkin_diagrams.txt and <dir>/orbits.txt; if
  /// <dir>/MANIFEST.sha256 exists the file hashes must match.
  static Catalog load(const std::string& dir);

  const std::vector<WeightedDynkinDiagram>& diagrams(SimpleType t) const;
  const std::vector<OrbitRecord>& orbits() const { return orbits_; }

  /// Label of the diagram with the given weights, or nullopt.
  /// The input must be dominant (all weights >= 0).
  std::optional<std::string> lookup_wdd(SimpleType t, const Cocharacter& tau) const;

  /// Orbit record by (type, label), respecting the characteristic
  /// constraint; null when absent.
  const OrbitRecord* find_orbit(SimpleType t, const std::string& label, unsigned p) const;

  /// Randomized sanity check of one diagram over GF(101): a random
  /// element of g(tau,2) should have centralizer dimension
  /// dim g(tau,0) + dim g(tau,1).  Returns true if any of the sampled
  /// elements passes.
  bool wdd_char0_consistency(const WeightedDynkinDiagram& d, std::uint64_t seed,
                             int samples = 20) const;

  const std::string& data_dir() const { return dir_; }

private:
  std::string dir_;
  std::vector<std::pair<SimpleType, std::vector<WeightedDynkinDiagram>>> tables_;
  std::vector<OrbitRecord> orbits_;
};

/// Derives the full weighted Dynkin diagram table of an exceptional or
/// classical simple type from the root system: one entry per pair
/// (Levi subsystem up to conjugacy, distinguished parabolic grading of
/// that subsystem), dominant-conjugated into the {0,1,2} chamber.
/// Shipped data is cross-checked against this in the test suite.
std::vector<WeightedDynkinDiagram> generate_dynkin_table(SimpleType t);

/// Resolves the default data directory: CHEVLIE_DATA_DIR env var if
/// set, otherwise the build-time default.
std::string default_data_dir();

} // namespace chevlie

#endif
