#pragma once

#include <string>
#include <vector>

namespace bmaps {

// Exhaustive verification suites shared by the command-line front end and
// the acceptance run. Each check is a module invariant evaluated over a
// bounded family of objects.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<std::string> table;
  std::vector<Check> checks;
  bool pass() const;
  void add(std::string name, bool ok, std::string detail = "");
  // First failing check, or empty.
  std::string first_failure() const;
  std::string str() const;
};

struct SuiteOptions {
  int edges = -1;       // map edges (suite default when -1)
  int tree_edges = -1;  // tree closure edges
  int order = -1;       // series order (edges) or t-order
  int threads = 1;
};

Report suite_bijection(const SuiteOptions& o);     // profile counts, closure injective
Report suite_round_trip(const SuiteOptions& o);    // opening/closure both ways
Report suite_tightness(const SuiteOptions& o);     // flow/cut lemma, trumpet/cornet counts
Report suite_doubly_rooted(const SuiteOptions& o); // k-to-one fibers, series identities
Report suite_tree_series(const SuiteOptions& o);
Report suite_plane_series(const SuiteOptions& o);
Report suite_quartic(const SuiteOptions& o);
Report suite_ising(const SuiteOptions& o);
Report suite_geodesic(const SuiteOptions& o);
Report suite_mobiles(const SuiteOptions& o);

}  // namespace bmaps
