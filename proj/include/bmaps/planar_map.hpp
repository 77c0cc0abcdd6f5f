#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace bmaps {

enum class Color : std::int8_t { white = 0, black = 1 };
inline Color flip(Color c) { return c == Color::white ? Color::black : Color::white; }
inline char letter(Color c) { return c == Color::white ? 'w' : 'b'; }

// Half-edge kinds. Stems and the planted root half-edge are fixed points of alpha.
enum class Kind : std::int8_t { edge = 0, opening = 1, closing = 2, planted = 3 };

struct MapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Darts are 0-based internally (the exchange format is 1-based).
// sigma: ccw successor around the vertex, alpha: edge partner.
// The face permutation is phi = sigma o alpha; the phi-orbit through h is the
// face on the right of h (h directed away from its vertex), traversed so that
// the outer face of a tree is walked counterclockwise. Clockwise contours use
// phi^{-1}. The corner of h is the gap between h and sigma(h).
class Map {
 public:
  std::vector<int> sigma, alpha;
  std::vector<Kind> kind;
  int root = -1;
  int outer = -1;  // face index, -1 when no face is marked
  std::vector<Color> color;  // per vertex, empty when absent

  // derived by refresh()
  int nv = 0, nf = 0;
  std::vector<int> vert, face;
  std::vector<std::vector<int>> vdarts;  // ccw from the smallest dart
  std::vector<std::vector<int>> fdarts;  // phi order from the smallest dart

  Map() = default;
  Map(std::vector<int> s, std::vector<int> a);

  void refresh();
  int darts() const { return static_cast<int>(sigma.size()); }
  int edges() const;
  int stems() const;
  bool stem(int h) const { return alpha[h] == h; }
  Kind kind_of(int h) const { return kind.empty() ? Kind::edge : kind[h]; }
  int phi(int h) const { return sigma[alpha[h]]; }
  int phi_inv(int h) const;
  int sigma_inv(int h) const;
  int degree(int v) const { return static_cast<int>(vdarts[v].size()); }
  int face_degree(int f) const { return static_cast<int>(fdarts[f].size()); }
  int root_vertex() const { return root < 0 ? 0 : vert[root]; }
  bool colored() const { return !color.empty(); }
  Color color_of_dart(int h) const { return color[vert[h]]; }
  int euler() const { return nv - edges() + nf; }
  int max_degree(Color c) const;
  // Left face of h is the face on the right of alpha(h).
  int left_face(int h) const { return face[alpha[h]]; }
};

// Bipartite 2-colouring with the root vertex coloured `root_color`; empty if none.
std::vector<Color> bipartite_coloring(const Map& m, Color root_color = Color::white);

// Validating constructor: permutations, fixed-point-free alpha, transitivity, genus 0.
Map build_map(std::vector<int> sigma, std::vector<int> alpha, int root, int outer,
              Color root_color = Color::white);
void validate_map(const Map& m, bool allow_stems = false);
bool connected(const Map& m);

// Atomic map: one vertex, no darts.
Map vertex_map(Color c = Color::white);

struct DualMap {
  Map map;                    // sigma' = phi^{-1}, alpha' = alpha
  std::vector<char> forward;  // per dart: 1 if it is the canonical direction
  std::vector<int> face_of_vertex;  // dual face index of each primal vertex
  int pointed = -1;           // dual vertex of the primal outer face
  bool directed() const { return !forward.empty(); }
};

DualMap dual(const Map& m);

// Canonical codes. Extra per-dart tags (may be empty) are folded into the code.
std::string canonical_code(const Map& m, int root, const std::vector<int>& tags = {});
std::string canonical_code(const Map& m);
std::string unrooted_code(const Map& m, const std::vector<int>& tags = {});
std::vector<int> relabel_order(const Map& m, int root);

// Relabel darts by a permutation p (new id of old dart h is p[h]).
Map relabel(const Map& m, const std::vector<int>& p);

// Restriction to a vertex subset: darts of kept vertices survive, darts whose
// partner is dropped become stems of kind `cut_kind`. old_of maps new -> old.
Map restrict_to(const Map& m, const std::vector<char>& keep_vertex, Kind cut_kind,
                std::vector<int>* old_of = nullptr);

struct DegreeProfile {
  std::vector<int> white, black;
  bool operator<(const DegreeProfile& o) const {
    return std::tie(white, black) < std::tie(o.white, o.black);
  }
  bool operator==(const DegreeProfile& o) const = default;
  std::string str() const;
};
DegreeProfile degree_profile(const Map& m, int skip_vertex = -1);

struct SpinConfiguration {
  std::vector<Color> spin;
  int mono = 0;
};
SpinConfiguration make_spins(const Map& m, std::vector<Color> spin);

// Monomial with integer exponents keyed by variable name.
struct Monomial {
  std::map<std::string, int> exps;
  void mul(const std::string& v, int e = 1) {
    if (e == 0) return;
    if ((exps[v] += e) == 0) exps.erase(v);
  }
  bool operator<(const Monomial& o) const { return exps < o.exps; }
  bool operator==(const Monomial& o) const = default;
  std::string str() const;
};

enum class Scheme { planar, plane, square, ising };
// square scheme reads `squares` (per vertex); ising reads the spin configuration.
Monomial weight(const Map& m, Scheme s, const SpinConfiguration* spins = nullptr,
                const std::vector<char>* squares = nullptr);

// Enumeration. Rooted planar maps are produced directly in canonical BFS form.
struct GenOptions {
  int max_degree = 0;             // 0: unbounded
  std::vector<int> degrees;       // allowed vertex degrees, empty: all
};
std::vector<Map> enumerate_rooted_planar(int n_edges, const GenOptions& opt = {});
std::vector<Map> enumerate_bipartite_plane_maps(int n_edges, std::optional<int> max_white_degree,
                                                Color root_color);
struct SpinMap {
  Map map;
  SpinConfiguration spins;
};
std::vector<SpinMap> enumerate_spin_maps(int n_vertices, int degree);
std::vector<SpinMap> enumerate_spin_maps_by_edges(int n_edges);

constexpr int kMaxEnumEdges = 6;

}  // namespace bmaps
