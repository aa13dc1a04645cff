#ifndef CHEVLIE_CLAIMS_HPP
#define CHEVLIE_CLAIMS_HPP

#include <map>
#include <string>
#include <vector>

#include "chevlie/catalog.hpp"

namespace chevlie {

/// One declarative claim from a claims file.  The kind-specific inputs
/// stay as key/value strings until execution.
struct Claim {
  std::string id;
  std::string kind;
  std::string expected;
  std::string note;
  std::map<std::string, std::string> inputs;
  int line = 0;
};

struct ClaimReport {
  std::string id;
  std::string kind;
  std::string computed;
  std::string expected;
  std::string status; // "pass", "fail" or "error"
  long long millis = 0;
};

struct ClaimsResult {
  std::vector<ClaimReport> reports;
  int passed = 0;
  int failed = 0;
  int errors = 0;

  bool ok() const { return failed == 0 && errors == 0; }
};

std::vector<Claim> load_claims(const std::string& path);

/// Executes the selected claims in file order.  Unknown kinds or bad
/// inputs become status=error reports without aborting the run.
ClaimsResult run_claims(const Catalog& catalog, const std::vector<Claim>& claims,
                        const std::string& filter_glob = "");

/// Stable machine-readable report (no timing fields, so two runs of the
/// same file are byte-identical).
std::string reports_to_json(const ClaimsResult& result);
/// Column-aligned human table, with wall times.
std::string reports_to_table(const ClaimsResult& result);

/// Glob match supporting '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text);

} // namespace chevlie

#endif
