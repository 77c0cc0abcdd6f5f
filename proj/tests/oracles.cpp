#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace oracle {

namespace {

std::vector<std::vector<int>> cycles(const std::vector<int>& p, std::vector<int>* label = nullptr) {
  int n = static_cast<int>(p.size());
  std::vector<int> lab(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (lab[s] >= 0) continue;
    out.emplace_back();
    for (int h = s; lab[h] < 0; h = p[h]) {
      lab[h] = static_cast<int>(out.size()) - 1;
      out.back().push_back(h);
    }
  }
  if (label) *label = lab;
  return out;
}

bool transitive(const std::vector<int>& s, const std::vector<int>& a) {
  int n = static_cast<int>(s.size());
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int c = 1;
  while (!st.empty()) {
    int h = st.back();
    st.pop_back();
    for (int g : {s[h], a[h]})
      if (!seen[g]) {
        seen[g] = 1;
        ++c;
        st.push_back(g);
      }
  }
  return c == n;
}

// BFS relabelling from dart 0; returns the relabelled (sigma, alpha).
std::pair<std::vector<int>, std::vector<int>> bfs_form(const std::vector<int>& s, const std::vector<int>& a) {
  int n = static_cast<int>(s.size());
  std::vector<int> nl(n, -1), order;
  std::queue<int> q;
  nl[0] = 0;
  order.push_back(0);
  q.push(0);
  while (!q.empty()) {
    int h = q.front();
    q.pop();
    for (int g : {s[h], a[h]})
      if (nl[g] < 0) {
        nl[g] = static_cast<int>(order.size());
        order.push_back(g);
        q.push(g);
      }
  }
  std::vector<int> s2(n), a2(n);
  for (int h = 0; h < n; ++h) {
    s2[nl[h]] = nl[s[h]];
    a2[nl[h]] = nl[a[h]];
  }
  return {s2, a2};
}

}  // namespace

Raw make_raw(std::vector<int> sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<int> alpha(n);
  for (int h = 0; h < n; ++h) alpha[h] = h ^ 1;
  Raw r;
  r.sigma = std::move(sigma);
  r.alpha = alpha;
  auto vs = cycles(r.sigma, &r.vert);
  r.n_vertices = static_cast<int>(vs.size());
  for (auto& c : vs) r.vdeg.push_back(static_cast<int>(c.size()));
  std::vector<int> phi(n);
  for (int h = 0; h < n; ++h) phi[h] = r.sigma[r.alpha[h]];
  r.faces = cycles(phi);
  r.n_faces = static_cast<int>(r.faces.size());
  return r;
}

std::vector<Raw> rooted_planar_maps(int n) {
  int D = 2 * n;
  std::vector<int> sigma(D, -1);
  std::vector<char> used(D, 0);
  std::vector<int> alpha(D);
  for (int h = 0; h < D; ++h) alpha[h] = h ^ 1;
  std::set<std::vector<int>> seen;
  std::vector<Raw> out;
  std::function<void(int)> rec = [&](int h) {
    if (h == D) {
      if (!transitive(sigma, alpha)) return;
      Raw r = make_raw(sigma);
      if (r.n_vertices - n + r.n_faces != 2) return;
      auto [s2, a2] = bfs_form(sigma, alpha);
      std::vector<int> key(s2);
      key.insert(key.end(), a2.begin(), a2.end());
      if (!seen.insert(key).second) return;
      // keep the BFS form; alpha is then no longer (0 1)(2 3)...
      Raw k;
      k.sigma = s2;
      k.alpha = a2;
      auto vs = cycles(k.sigma, &k.vert);
      k.n_vertices = static_cast<int>(vs.size());
      for (auto& c : vs) k.vdeg.push_back(static_cast<int>(c.size()));
      std::vector<int> phi(D);
      for (int x = 0; x < D; ++x) phi[x] = k.sigma[k.alpha[x]];
      k.faces = cycles(phi);
      k.n_faces = static_cast<int>(k.faces.size());
      out.push_back(std::move(k));
      return;
    }
    for (int t = 0; t < D; ++t) {
      if (used[t]) continue;
      used[t] = 1;
      sigma[h] = t;
      rec(h + 1);
      used[t] = 0;
    }
  };
  rec(0);
  return out;
}

std::vector<int> two_coloring(const Raw& r) {
  std::vector<int> col(r.n_vertices, -1);
  if (r.n_vertices == 0) return col;
  col[r.vert.empty() ? 0 : r.vert[0]] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int h = 0; h < static_cast<int>(r.sigma.size()); ++h) {
      int a = r.vert[h], b = r.vert[r.alpha[h]];
      if (col[a] < 0) continue;
      if (col[b] < 0) {
        col[b] = 1 - col[a];
        changed = true;
      } else if (col[b] == col[a]) {
        return {};
      }
    }
  }
  return col;
}

Profile profile(const Raw& r, const std::vector<int>& col, int skip) {
  Profile p;
  for (int v = 0; v < r.n_vertices; ++v) {
    if (v == skip) continue;
    (col[v] == 0 ? p.white : p.black).push_back(r.vdeg[v]);
  }
  std::sort(p.white.begin(), p.white.end());
  std::sort(p.black.begin(), p.black.end());
  return p;
}

bmaps::Map to_map(const Raw& r) { return bmaps::build_map(r.sigma, r.alpha, 0, -1); }

std::map<std::pair<int, Profile>, long> plane_map_counts(int n) {
  std::map<std::pair<int, Profile>, long> out;
  for (int e = 1; e <= n; ++e)
    for (auto& r : rooted_planar_maps(e)) {
      auto col = two_coloring(r);
      if (col.empty()) continue;
      out[{e, profile(r, col)}] += r.n_faces;
    }
  return out;
}

namespace {

// seqs[c][r]: item sequences of cost r at a vertex of colour c (1 = black).
struct TreeTables {
  std::vector<std::vector<Node>> exact[2];
  std::vector<std::vector<std::pair<std::vector<char>, std::vector<Node>>>> seqs[2];
};

}  // namespace

std::vector<Node> planted_trees(int s, bool black_root) {
  TreeTables t;
  for (int c = 0; c < 2; ++c) {
    t.exact[c].assign(s + 1, {});
    t.seqs[c].assign(s + 1, {});
    t.seqs[c][0].push_back({{}, {}});
  }
  for (int r = 1; r <= s; ++r) {
    for (int c = 0; c < 2; ++c) {
      // last item is a stem
      for (auto& [it, ch] : t.seqs[c][r - 1]) {
        auto it2 = it;
        it2.push_back(c == 1 ? 'O' : 'C');
        t.seqs[c][r].push_back({it2, ch});
      }
      // last item is a child of total degree j
      for (int j = 1; j <= r - 1; ++j)
        for (auto& child : t.exact[1 - c][j])
          for (auto& [it, ch] : t.seqs[c][r - 1 - j]) {
            auto it2 = it;
            it2.push_back('T');
            auto ch2 = ch;
            ch2.push_back(child);
            t.seqs[c][r].push_back({it2, ch2});
          }
    }
    for (int c = 0; c < 2; ++c)
      for (auto& [it, ch] : t.seqs[c][r - 1]) t.exact[c][r].push_back(Node{it, ch});
  }
  std::vector<Node> out;
  int c = black_root ? 1 : 0;
  for (int d = 1; d <= s; ++d)
    for (auto& n : t.exact[c][d]) out.push_back(n);
  return out;
}

int total_degree(const Node& t) {
  int d = 1 + static_cast<int>(t.items.size());
  for (auto& c : t.children) d += total_degree(c);
  return d;
}

int charge(const Node& t) {
  int c = 0;
  for (char x : t.items) c += x == 'C' ? 1 : x == 'O' ? -1 : 0;
  for (auto& ch : t.children) c += charge(ch);
  return c;
}

bool well_charged(const Node& t, bool black) {
  int c = charge(t);
  if (black ? c > 1 : c < 0) return false;
  for (auto& ch : t.children)
    if (!well_charged(ch, !black)) return false;
  return true;
}

bmaps::Monomial weight(const Node& t, bool black) {
  bmaps::Monomial m;
  std::function<void(const Node&, bool)> rec = [&](const Node& n, bool b) {
    m.mul((b ? "y" : "x") + std::to_string(1 + n.items.size()), 1);
    for (char x : n.items)
      if (x == 'O') m.mul("u", 1);
    for (auto& ch : n.children) rec(ch, !b);
  };
  rec(t, black);
  return m;
}

CutInfo cuts(const bmaps::Map& m, int rho, int tau, bmaps::Color c) {
  CutInfo ci;
  int V = m.nv;
  for (int mask = 0; mask < (1 << V); ++mask) {
    if (!(mask >> tau & 1) || (mask >> rho & 1)) continue;
    int w = 0;
    bool ok = true;
    for (int h = 0; h < m.darts(); ++h) {
      int a = m.vert[h], b = m.vert[m.alpha[h]];
      if ((mask >> a & 1) && !(mask >> b & 1)) {
        ++w;
        if (m.color[a] != c) ok = false;
      }
    }
    if (!ok) continue;
    if (ci.weight < 0 || w < ci.weight) {
      ci.weight = w;
      ci.count = 0;
      ci.trivial = 0;
    }
    if (w == ci.weight) {
      ++ci.count;
      if (mask == (1 << tau)) ci.trivial = 1;
    }
  }
  return ci;
}

std::vector<std::vector<int>> geodesic_labelings(const bmaps::DualMap& d) {
  const auto& g = d.map;
  int V = g.nv;
  std::vector<std::vector<int>> out;
  std::vector<int> l(V, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == V) {
      for (int w = 0; w < V; ++w) {
        if (w == d.pointed) continue;
        bool has = false;
        for (int h = 0; h < g.darts(); ++h)
          if (d.forward[h] && g.vert[g.alpha[h]] == w && l[w] == l[g.vert[h]] + 1) has = true;
        if (!has) return;
      }
      for (int h = 0; h < g.darts(); ++h)
        if (d.forward[h] && l[g.vert[g.alpha[h]]] > l[g.vert[h]] + 1) return;
      out.push_back(l);
      return;
    }
    if (v == d.pointed) {
      l[v] = 0;
      rec(v + 1);
      return;
    }
    for (int x = 0; x < V; ++x) {
      l[v] = x;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
