#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmaps/orientation.hpp"
#include "bmaps/planar_map.hpp"

namespace bmaps {

// Blossoming trees and maps are plain Maps: stems and the planted root are
// fixed points of alpha, told apart by Map::kind. The root of a non-planted
// tree is a dart, its corner is the root corner.

struct BlossomError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_tree(const Map& t);
bool is_planted(const Map& t);

// Parent dart of every vertex (the dart at v pointing to its parent, or the
// planted dart, or -1 for a non-planted root) and a root-first vertex order.
struct TreeShape {
  std::vector<int> parent_dart;
  std::vector<int> order;
};
TreeShape tree_shape(const Map& t);

struct Charge {
  int total = 0;
  std::vector<int> per_vertex;
};
Charge charge(const Map& t);

struct Violation {
  int vertex;
  std::string rule;
};
struct WellChargedWitness {
  bool ok = true;
  std::vector<Violation> violations;
};
// Planted trees constrain their root vertex like any other vertex.
WellChargedWitness is_well_charged(const Map& t);

// Unique alpha_d (charge 0), alpha_{d,k}^- (charge k>0) or alpha_{d,k}^+
// (charge -k) orientation; planted trees get alpha_d with the excess on the planted dart.
Orientation orient_tree(const Map& t, int d);
int excess(const Map& t, const Orientation& o);

// Parenthesis closure along the clockwise contour of the marked face (or the only face).
Map closure(const Map& b);

struct Pointed {
  Map map;
  int tau = -1;
};
// Joins all stems (which must lie in one face) to a new vertex of colour c.
Pointed attach_tau(const Map& b, Color c);
Pointed complete_closure(const Map& t);
// Orientation of the complete closure induced by a tree orientation.
Orientation complete_orientation(const Map& t, const Orientation& o, const Pointed& p);

// Deletes tau, turning its edges into stems. old_of maps new darts to old ones.
Map remove_tau(const Pointed& p, std::vector<int>* old_of = nullptr);

// Iterated local opening. Throws BlossomError("opening mismatch") when the
// orientation is not minimal and accessible or the round trip fails.
Map opening(const Map& m, const Orientation& o);
// Inverse of complete closure through the minimal alpha_{d,k}^{-/+} orientation.
Map open_pointed(const Pointed& p, int d);
// Inverse of closure through the minimal alpha_d orientation.
Map open_plane(const Map& m, int d);

struct DoublyRooted {
  Map map;  // root is rho1
  int root2 = -1;
};
std::string doubly_rooted_code(const DoublyRooted& m);
std::string pointed_code(const Pointed& p);

struct Decomposition {
  Pointed trumpet, cornet;
  int k = 0;
};
Decomposition decompose_doubly_rooted(const DoublyRooted& m);
DoublyRooted glue(const Pointed& trumpet, const Pointed& cornet, int rotation);

// Tree enumeration. Sizes: a non-planted tree of charge k and total degree S
// (stems included) closes to a map with (S + |k|) / 2 edges; planted trees are
// measured by their total degree, the planted dart included.
constexpr int kMaxTreeEdges = 8;
std::vector<Map> enumerate_well_charged_trees(int charge_k, int max_edges,
                                              std::optional<int> max_degree, Color root_color);
std::vector<Map> enumerate_planted_trees(int max_total_degree, Color root_color);

// Weight u^{#opening} prod x_deg(white) prod y_deg(black).
Monomial tree_weight(const Map& t);

// Tree exchange format helpers: the stems line lists one word per corner in
// clockwise contour order from the root corner; the root corner is split in two.
std::string stems_line(const Map& t);
Map edge_part(const Map& t);
Map tree_from_parts(const Map& edges_only, const std::string& stems);

}  // namespace bmaps
