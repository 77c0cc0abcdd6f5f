#pragma once

#include <optional>
#include <vector>

#include "bmaps/planar_map.hpp"

namespace bmaps {

struct Orientation {
  int k = 0;
  std::vector<int> val;  // per dart, stems included
  bool operator==(const Orientation&) const = default;
};

enum class Target { alpha_d, alpha_dk_minus, alpha_dk_plus, quasi_eulerian };

struct OutdegreeTarget {
  Target kind = Target::alpha_d;
  int d = 1;
  int kk = 0;
  int rho = 0;
  int tau = -1;
  int at(const Map& m, int v) const;
};

struct OrientationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int outdeg(const Map& m, const Orientation& o, int v);
void check_fractional(const Map& m, const Orientation& o);
void check_target(const Map& m, const Orientation& o, const OutdegreeTarget& t);

Orientation initial_alpha_d(const Map& m, int d);

// Reverse reachability towards `target` (default: root vertex) along forward edges.
std::vector<char> reaches(const Map& m, const Orientation& o, int target);
bool is_accessible(const Map& m, const Orientation& o);
bool is_accessible_unrooted(const Map& m, const Orientation& o);
bool is_quasi_accessible(const Map& m, const Orientation& o, int tau);

// A simple forward cycle as its darts, each directed along the traversal.
using Cycle = std::vector<int>;
// True when the face-side of the cycle containing the right side of its first dart holds the outer face.
bool outer_on_right(const Map& m, const Cycle& c);
std::optional<Cycle> find_counterclockwise_cycle(const Map& m, const Orientation& o);
std::vector<Cycle> forward_cycles(const Map& m, const Orientation& o);

Orientation minimize(const Map& m, Orientation o);
Orientation minimal_alpha_d(const Map& m, int d);
bool is_minimal(const Map& m, const Orientation& o);

struct DirectedEdge {
  int tail_dart;
  int head_dart;
};
std::vector<DirectedEdge> saturated_edges(const Map& m, const Orientation& o);

enum class Sign { minus, plus };
std::optional<Orientation> alpha_dk_orientation(const Map& m, int tau, int d, int k, Sign s);

struct Cut {
  std::vector<char> in_s;  // per vertex, S side holds tau
  Color color;
  int weight = 0;
};
struct MinCut {
  Cut cut;
  bool unique = false;
  int count = 0;
  std::vector<Cut> all_minimum;
};
// Exhaustive over vertex subsets (V <= 12). rho is the root vertex.
std::optional<MinCut> min_cut(const Map& m, int tau, Color c);
int cut_weight(const Map& m, const std::vector<char>& in_s);
std::optional<Color> cut_color(const Map& m, const std::vector<char>& in_s);

enum class Tightness { trumpet, cornet, neither };
const char* name(Tightness t);
Tightness classify_tightness(const Map& m, int tau);

Orientation quasi_eulerian_minimal(const Map& m);

}  // namespace bmaps
