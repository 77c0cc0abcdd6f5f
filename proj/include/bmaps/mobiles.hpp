#pragma once

#include <string>
#include <vector>

#include "bmaps/orientation.hpp"
#include "bmaps/planar_map.hpp"

namespace bmaps {

struct MobileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Directed geodesic labels on a dual map: arcs follow the canonical direction
// (dart h goes from vert(h) to vert(alpha h) when forward[h]).
struct GeodesicLabels {
  std::vector<int> labels;  // per dual vertex
  int pointed = -1;
};
GeodesicLabels geodesic_labeling(const DualMap& d, int pointed);
// The three characterizing conditions (root at 0, an exact incoming arc, no shortcut).
bool geodesic_conditions_hold(const DualMap& d, const GeodesicLabels& g);
// l(tail) - l(head) = O(white dart) - 1 on every edge, with labels of the dual pointed at the outer face.
bool check_geodesic_relation(const Map& m, const Orientation& o, int d);

// A black degree-2 vertex on every edge; old vertices are white. The new dart
// of old dart h at its vertex keeps the id h; the black side gets a fresh id.
Map subdivide_to_bipartite(const Map& m);
// Quasi-Eulerian (2-fractional) orientation of m -> alpha_Delta orientation of the subdivision.
Orientation pull_back_quasi_eulerian(const Map& m, const Map& sub, const Orientation& o, int Delta);
int max_vertex_degree(const Map& m);

enum class NodeType : std::int8_t { white = 0, black = 1, square = 2 };
char letter(NodeType t);

// Mobiles are trees stored as Maps; opening stems are alpha fixed points.
struct Mobile {
  Map tree;
  std::vector<NodeType> type;  // per vertex
  // Degree of the matching map vertex (round) or face (square); empty when unknown.
  std::vector<int> map_degree;
  bool round(int v) const { return type[v] != NodeType::square; }
};

struct BlossomingMobile : Mobile {
  Orientation o;
  int excess() const;
};

struct LabeledMobile : Mobile {
  std::vector<int> label;  // per vertex, squares only (-1 elsewhere)
  std::vector<int> flag;   // per dart of a white-black edge: label on its right side (-1 elsewhere)
};

// outer_square=false skips the square of the outer face; with it the output
// is never a tree and the call throws "outside Phi_BF domain".
BlossomingMobile phi_BF(const Map& m, const Orientation& o, bool outer_square = false);
// The Eulerian map is given as the dual of a bipartite plane map, pointed at
// the dual vertex of the outer face.
LabeledMobile phi_BDG(const DualMap& e);
BlossomingMobile upsilon_d(const LabeledMobile& t, int d);

// Per-corner successor data along the clockwise contour.
struct ContourEvent {
  bool corner = false;  // square corner (else a flag)
  int dart = -1;        // corner: the dart after the corner; flag: the dart whose right side holds it
  int label = 0;
  int successor = -1;   // index into the event list, -1 if none
};
std::vector<ContourEvent> contour_events(const LabeledMobile& t);

// Violations of the labeled-mobile rules (I)-(IV), empty when valid.
std::vector<std::string> labeled_mobile_violations(const LabeledMobile& t);
// Violations of the blossoming-mobile axioms and the d-conditions (1)-(6);
// condition (5) is only checked when map_degree is known.
std::vector<std::string> blossoming_violations(const BlossomingMobile& t);
std::vector<std::string> d_blossoming_violations(const BlossomingMobile& t, int d);

std::string mobile_code(const BlossomingMobile& t);
std::string mobile_code(const LabeledMobile& t);

bool check_commutation(const Map& m, int d);

}  // namespace bmaps
