#pragma once

// Brute-force reference implementations used to derive expected values.
// Nothing here calls into the library except for final conversions.

#include <map>
#include <string>
#include <vector>

#include "bmaps/planar_map.hpp"

namespace oracle {

// Raw rooted map on darts 0..2n-1, alpha = (0 1)(2 3)..., root dart 0.
struct Raw {
  std::vector<int> sigma, alpha;
  int n_vertices = 0, n_faces = 0;
  std::vector<int> vert;             // vertex of each dart
  std::vector<int> vdeg;             // degree per vertex
  std::vector<std::vector<int>> faces;  // darts of each cycle of sigma o alpha
};

Raw make_raw(std::vector<int> sigma);
// Rooted planar maps with n edges (n <= 4): every sigma by backtracking, kept
// when connected and of genus 0, deduplicated by a BFS code from dart 0.
std::vector<Raw> rooted_planar_maps(int n);
// Colour of each vertex with the root vertex white, empty when not bipartite.
std::vector<int> two_coloring(const Raw& r);

// Sorted white and black degrees of a coloured raw map.
struct Profile {
  std::vector<int> white, black;
  auto operator<=>(const Profile&) const = default;
};
Profile profile(const Raw& r, const std::vector<int>& col, int skip_vertex = -1);
bmaps::Map to_map(const Raw& r);

// Counts of white-rooted bipartite plane maps (rooted map + marked face) per
// (edges, profile), edges 1..n.
std::map<std::pair<int, Profile>, long> plane_map_counts(int n);

// Planted plane trees as nested words. A vertex is a list of items read ccw
// after the parent: 'O' opening stem, 'C' closing stem, or a child subtree.
struct Node {
  std::vector<char> items;          // 'O', 'C', 'T' (child)
  std::vector<Node> children;       // in order of 'T' items
};
// All planted trees of total degree <= s (planted dart included) whose vertices
// alternate colours starting from `black_root`. Stems obey the colour rule
// (black: opening only, white: closing only).
std::vector<Node> planted_trees(int s, bool black_root);
int total_degree(const Node& t);
// Subtree charge (#closing - #opening).
int charge(const Node& t);
// Every non-root subtree: black charge <= 1, white charge >= 0; the root too.
bool well_charged(const Node& t, bool black_root);
// u^{#opening} prod x_deg(white) prod y_deg(black), as a library monomial.
bmaps::Monomial weight(const Node& t, bool black_root);

// Minimum weight over cuts of a colour (exhaustive over subsets holding tau
// and not rho), with the number of minimisers; weight -1 when none exists.
struct CutInfo {
  int weight = -1, count = 0, trivial = 0;
};
CutInfo cuts(const bmaps::Map& m, int rho, int tau, bmaps::Color c);

// All labelings l of the dual vertices with l(pointed) = 0 and values in
// [0, dual vertex count] satisfying the three characterizing conditions.
std::vector<std::vector<int>> geodesic_labelings(const bmaps::DualMap& d);

}  // namespace oracle
