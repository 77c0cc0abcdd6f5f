#include <algorithm>
#include <set>

#include "bmaps/planar_map.hpp"

namespace bmaps {

namespace {

// Generates rooted maps directly in the BFS labelling used by canonical_code:
// dart i is processed in label order, sigma(i) then alpha(i) either point to an
// already labelled dart or receive the next fresh label. Every rooted map thus
// appears exactly once, with no isomorphism rejection needed.
struct Generator {
  int n;
  GenOptions opt;
  int maxdeg;
  std::vector<int> S, A, Sinv;
  int L = 1;
  std::vector<Map>* out;

  bool allowed(int len) const {
    if (opt.degrees.empty()) return maxdeg == 0 || len <= maxdeg;
    return std::find(opt.degrees.begin(), opt.degrees.end(), len) != opt.degrees.end();
  }
  int chain_head(int i, int& len) const {
    len = 1;
    int g = i;
    while (Sinv[g] >= 0) {
      g = Sinv[g];
      ++len;
    }
    return g;
  }
  int chain_len_from(int j) const {
    int len = 1;
    for (int g = j; S[g] >= 0; g = S[g]) ++len;
    return len;
  }

  void emit() {
    Map m(S, A);
    if (m.euler() != 2) return;
    m.root = 0;
    out->push_back(std::move(m));
  }

  void alpha_step(int i) {
    if (A[i] >= 0) {
      next(i + 1);
      return;
    }
    if (L < n) {
      int j = L++;
      A[i] = j;
      A[j] = i;
      next(i + 1);
      A[i] = A[j] = -1;
      --L;
    }
    for (int j = i + 1; j < L; ++j) {
      if (A[j] >= 0) continue;
      A[i] = j;
      A[j] = i;
      next(i + 1);
      A[i] = A[j] = -1;
    }
  }

  void next(int i) {
    if (i == L) {
      if (L == n) emit();
      return;
    }
    int len;
    int head = chain_head(i, len);
    if (L < n && (maxdeg == 0 || len + 1 <= maxdeg)) {
      int j = L++;
      S[i] = j;
      Sinv[j] = i;
      alpha_step(i);
      S[i] = -1;
      Sinv[j] = -1;
      --L;
    }
    for (int j = 0; j < L; ++j) {
      if (Sinv[j] >= 0) continue;
      if (j == head) {
        if (!allowed(len)) continue;
      } else {
        // j starts another open chain which gets appended after i
        if (maxdeg && len + chain_len_from(j) > maxdeg) continue;
      }
      S[i] = j;
      Sinv[j] = i;
      alpha_step(i);
      S[i] = -1;
      Sinv[j] = -1;
    }
  }
};

}  // namespace

std::vector<Map> enumerate_rooted_planar(int n_edges, const GenOptions& opt) {
  if (n_edges < 0 || n_edges > kMaxEnumEdges)
    throw MapError("enumeration budget exceeded: at most " + std::to_string(kMaxEnumEdges) + " edges");
  std::vector<Map> out;
  if (n_edges == 0) {
    if (opt.degrees.empty() ||
        std::find(opt.degrees.begin(), opt.degrees.end(), 0) != opt.degrees.end())
      out.push_back(vertex_map());
    return out;
  }
  Generator g;
  g.n = 2 * n_edges;
  g.opt = opt;
  g.maxdeg = opt.max_degree;
  if (!opt.degrees.empty()) g.maxdeg = *std::max_element(opt.degrees.begin(), opt.degrees.end());
  g.S.assign(g.n, -1);
  g.A.assign(g.n, -1);
  g.Sinv.assign(g.n, -1);
  g.out = &out;
  g.next(0);
  return out;
}

std::vector<Map> enumerate_bipartite_plane_maps(int n_edges, std::optional<int> max_white_degree,
                                                Color root_color) {
  if (n_edges < 0 || n_edges > 5) throw MapError("enumeration budget exceeded: at most 5 edges");
  std::vector<Map> out;
  std::set<std::string> seen;
  for (auto& m : enumerate_rooted_planar(n_edges)) {
    auto col = bipartite_coloring(m, root_color);
    if (col.empty()) continue;
    m.color = col;
    if (max_white_degree && m.darts() && m.max_degree(Color::white) > *max_white_degree) continue;
    for (int f = 0; f < m.nf; ++f) {
      Map p = m;
      p.outer = f;
      if (seen.insert(canonical_code(p)).second) out.push_back(std::move(p));
    }
  }
  return out;
}

static std::vector<SpinMap> with_spins(std::vector<Map> maps) {
  std::vector<SpinMap> out;
  for (auto& m : maps) {
    int nv = m.nv;
    for (int mask = 0; mask < (1 << nv); ++mask) {
      std::vector<Color> s(nv);
      for (int v = 0; v < nv; ++v) s[v] = (mask >> v) & 1 ? Color::black : Color::white;
      out.push_back({m, make_spins(m, s)});
    }
  }
  return out;
}

std::vector<SpinMap> enumerate_spin_maps(int n_vertices, int degree) {
  if (degree != 4 || n_vertices > 3 || n_vertices < 0)
    throw MapError("spin enumeration budget: quartic maps with at most 3 vertices");
  if (n_vertices == 0) return {};
  GenOptions opt;
  opt.degrees = {4};
  return with_spins(enumerate_rooted_planar(2 * n_vertices, opt));
}

std::vector<SpinMap> enumerate_spin_maps_by_edges(int n_edges) {
  if (n_edges < 0 || n_edges > 3) throw MapError("spin enumeration budget: at most 3 edges");
  return with_spins(enumerate_rooted_planar(n_edges));
}

}  // namespace bmaps
