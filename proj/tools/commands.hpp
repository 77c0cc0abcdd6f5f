#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmaps::cli {

inline constexpr const char* version = "1.0";
inline constexpr int cap_edges = 6, cap_tree_edges = 8, cap_t_order = 16, cap_order = 16, cap_vertices = 3;

// Every budget is -1 when unset; the command then uses its own default.
struct RunConfig {
  std::string command;  // enumerate | orient | close | open | verify | series
  std::string target;   // subcommand word or input file
  int edges = -1, tree_edges = -1, order = -1, t_order = -1, vertices = -1;
  int charge = 0, d = -1, k = -1, tau = -1, max_degree = -1;
  std::string sign = "-", root = "w", output;
  unsigned seed = 1;
  bool operator==(const RunConfig&) const = default;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws UsageError on bad usage; `help` receives usage text when --help was asked.
RunConfig parse_config(const std::vector<std::string>& args, std::string* help = nullptr);
// Canonical argument list; parse_config(split(config_text(c))) == c.
std::string config_text(const RunConfig& c);

// Writes the report to `out`, phase timings to `err`. Returns the exit code.
int run(const RunConfig& c, std::ostream& out, std::ostream& err, int threads);

}  // namespace bmaps::cli
