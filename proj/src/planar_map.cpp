#include "bmaps/planar_map.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace bmaps {

Map::Map(std::vector<int> s, std::vector<int> a) : sigma(std::move(s)), alpha(std::move(a)) {
  refresh();
}

int Map::edges() const {
  int n = 0;
  for (int h = 0; h < darts(); ++h)
    if (alpha[h] != h) ++n;
  return n / 2;
}

int Map::stems() const {
  int n = 0;
  for (int h = 0; h < darts(); ++h)
    if (alpha[h] == h) ++n;
  return n;
}

int Map::sigma_inv(int h) const {
  int g = h;
  while (sigma[g] != h) g = sigma[g];
  return g;
}

int Map::phi_inv(int h) const { return alpha[sigma_inv(h)]; }

int Map::max_degree(Color c) const {
  int best = 0;
  for (int v = 0; v < nv; ++v)
    if (color[v] == c) best = std::max(best, degree(v));
  return best;
}

void Map::refresh() {
  int n = darts();
  vert.assign(n, -1);
  face.assign(n, -1);
  vdarts.clear();
  fdarts.clear();
  for (int h = 0; h < n; ++h) {
    if (vert[h] >= 0) continue;
    std::vector<int> cyc;
    for (int g = h; vert[g] < 0; g = sigma[g]) {
      vert[g] = static_cast<int>(vdarts.size());
      cyc.push_back(g);
    }
    vdarts.push_back(std::move(cyc));
  }
  for (int h = 0; h < n; ++h) {
    if (face[h] >= 0) continue;
    std::vector<int> cyc;
    for (int g = h; face[g] < 0; g = phi(g)) {
      face[g] = static_cast<int>(fdarts.size());
      cyc.push_back(g);
    }
    fdarts.push_back(std::move(cyc));
  }
  nv = static_cast<int>(vdarts.size());
  nf = static_cast<int>(fdarts.size());
  if (n == 0) {
    nv = 1;
    nf = 1;
    vdarts.assign(1, {});
    fdarts.assign(1, {});
  }
}

Map vertex_map(Color c) {
  Map m;
  m.refresh();
  m.outer = 0;
  m.color = {c};
  return m;
}

bool connected(const Map& m) {
  int n = m.darts();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int cnt = 1;
  while (!st.empty()) {
    int h = st.back();
    st.pop_back();
    for (int g : {m.sigma[h], m.alpha[h]})
      if (!seen[g]) {
        seen[g] = 1;
        ++cnt;
        st.push_back(g);
      }
  }
  return cnt == n;
}

std::vector<Color> bipartite_coloring(const Map& m, Color root_color) {
  if (m.darts() == 0) return {root_color};
  std::vector<int> col(m.nv, -1);
  int r = m.root_vertex();
  col[r] = static_cast<int>(root_color);
  std::queue<int> q;
  q.push(r);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int h : m.vdarts[v]) {
      if (m.stem(h)) continue;
      int w = m.vert[m.alpha[h]];
      if (col[w] < 0) {
        col[w] = 1 - col[v];
        q.push(w);
      } else if (col[w] == col[v]) {
        return {};
      }
    }
  }
  std::vector<Color> out(m.nv);
  for (int v = 0; v < m.nv; ++v) {
    if (col[v] < 0) return {};
    out[v] = static_cast<Color>(col[v]);
  }
  return out;
}

static bool is_permutation(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

void validate_map(const Map& m, bool allow_stems) {
  int n = m.darts();
  if (static_cast<int>(m.alpha.size()) != n) throw MapError("sigma and alpha differ in size");
  if (!is_permutation(m.sigma)) throw MapError("sigma is not a permutation");
  if (!is_permutation(m.alpha)) throw MapError("alpha is not a permutation");
  for (int h = 0; h < n; ++h) {
    if (m.alpha[m.alpha[h]] != h) throw MapError("alpha is not an involution");
    if (m.alpha[h] == h && !allow_stems) throw MapError("alpha has a fixed point");
  }
  if (!connected(m)) throw MapError("disconnected");
  if (m.euler() != 2) throw MapError("genus is not 0");
  if (m.outer >= m.nf) throw MapError("outer face index out of range");
  if (n > 0 && (m.root < -1 || m.root >= n)) throw MapError("root dart out of range");
}

Map build_map(std::vector<int> sigma, std::vector<int> alpha, int root, int outer,
              Color root_color) {
  Map m;
  m.sigma = std::move(sigma);
  m.alpha = std::move(alpha);
  if (m.sigma.size() != m.alpha.size()) throw MapError("sigma and alpha differ in size");
  if (!is_permutation(m.sigma) || !is_permutation(m.alpha)) throw MapError("not a permutation");
  m.refresh();
  m.root = m.darts() ? root : -1;
  m.outer = outer;
  validate_map(m);
  m.color = bipartite_coloring(m, root_color);
  return m;
}

DualMap dual(const Map& m) {
  DualMap d;
  int n = m.darts();
  std::vector<int> s(n);
  for (int h = 0; h < n; ++h) s[h] = m.phi_inv(h);
  d.map.sigma = std::move(s);
  d.map.alpha = m.alpha;
  d.map.refresh();
  d.map.root = m.root;
  d.face_of_vertex.assign(m.nv, 0);
  for (int v = 0; v < m.nv && n > 0; ++v) d.face_of_vertex[v] = d.map.face[m.alpha[m.vdarts[v][0]]];
  d.map.outer = d.face_of_vertex[m.root_vertex()];
  d.pointed = m.outer;
  if (m.colored() && n > 0) {
    d.forward.assign(n, 0);
    for (int h = 0; h < n; ++h) d.forward[h] = m.color_of_dart(h) == Color::white;
  }
  return d;
}

std::vector<int> relabel_order(const Map& m, int root) {
  int n = m.darts();
  std::vector<int> order;
  if (n == 0) return order;
  std::vector<char> seen(n, 0);
  order.push_back(root);
  seen[root] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    int h = order[i];
    for (int g : {m.sigma[h], m.alpha[h]})
      if (!seen[g]) {
        seen[g] = 1;
        order.push_back(g);
      }
  }
  return order;
}

static void put(std::string& s, int x) {
  s.push_back(static_cast<char>(x & 0xff));
  s.push_back(static_cast<char>((x >> 8) & 0xff));
}

std::string canonical_code(const Map& m, int root, const std::vector<int>& tags) {
  std::string code;
  if (m.darts() == 0) {
    code = "atom";
    if (m.colored()) code.push_back(letter(m.color[0]));
    for (int t : tags) put(code, t);
    return code;
  }
  auto order = relabel_order(m, root);
  std::vector<int> lab(m.darts(), -1);
  for (size_t i = 0; i < order.size(); ++i) lab[order[i]] = static_cast<int>(i);
  put(code, m.darts());
  for (int h : order) {
    put(code, lab[m.sigma[h]]);
    put(code, lab[m.alpha[h]]);
    int extra = static_cast<int>(m.kind_of(h));
    if (m.outer >= 0 && m.face[h] == m.outer) extra |= 8;
    if (m.colored() && m.color[m.vert[h]] == Color::black) extra |= 16;
    put(code, extra);
    if (!tags.empty()) put(code, tags[h]);
  }
  return code;
}

std::string canonical_code(const Map& m) { return canonical_code(m, m.darts() ? m.root : -1); }

std::string unrooted_code(const Map& m, const std::vector<int>& tags) {
  if (m.darts() == 0) return canonical_code(m, -1, tags);
  std::string best;
  for (int h = 0; h < m.darts(); ++h) {
    auto c = canonical_code(m, h, tags);
    if (h == 0 || c < best) best = std::move(c);
  }
  return best;
}

Map relabel(const Map& m, const std::vector<int>& p) {
  int n = m.darts();
  Map r;
  r.sigma.assign(n, 0);
  r.alpha.assign(n, 0);
  if (!m.kind.empty()) r.kind.assign(n, Kind::edge);
  for (int h = 0; h < n; ++h) {
    r.sigma[p[h]] = p[m.sigma[h]];
    r.alpha[p[h]] = p[m.alpha[h]];
    if (!m.kind.empty()) r.kind[p[h]] = m.kind[h];
  }
  r.refresh();
  r.root = m.root >= 0 ? p[m.root] : -1;
  if (m.outer >= 0) r.outer = n ? r.face[p[m.fdarts[m.outer][0]]] : 0;
  if (m.colored()) {
    r.color.assign(r.nv, Color::white);
    for (int h = 0; h < n; ++h) r.color[r.vert[p[h]]] = m.color[m.vert[h]];
    if (n == 0) r.color = m.color;
  }
  return r;
}

Map restrict_to(const Map& m, const std::vector<char>& keep, Kind cut_kind, std::vector<int>* old_of) {
  int n = m.darts();
  std::vector<int> nid(n, -1), back;
  for (int h = 0; h < n; ++h)
    if (keep[m.vert[h]]) {
      nid[h] = static_cast<int>(back.size());
      back.push_back(h);
    }
  Map r;
  int k = static_cast<int>(back.size());
  r.sigma.resize(k);
  r.alpha.resize(k);
  r.kind.assign(k, Kind::edge);
  for (int i = 0; i < k; ++i) {
    int h = back[i];
    r.sigma[i] = nid[m.sigma[h]];
    int a = m.alpha[h];
    if (a == h) {
      r.alpha[i] = i;
      r.kind[i] = m.kind_of(h);
    } else if (nid[a] < 0) {
      r.alpha[i] = i;
      r.kind[i] = cut_kind;
    } else {
      r.alpha[i] = nid[a];
    }
  }
  r.refresh();
  r.root = (m.root >= 0 && nid[m.root] >= 0) ? nid[m.root] : -1;
  if (m.colored()) {
    r.color.assign(r.nv, Color::white);
    for (int i = 0; i < k; ++i) r.color[r.vert[i]] = m.color[m.vert[back[i]]];
  }
  if (old_of) *old_of = back;
  return r;
}

std::string DegreeProfile::str() const {
  std::ostringstream os;
  os << "w[";
  for (size_t i = 0; i < white.size(); ++i) os << (i ? "," : "") << white[i];
  os << "] b[";
  for (size_t i = 0; i < black.size(); ++i) os << (i ? "," : "") << black[i];
  os << "]";
  return os.str();
}

DegreeProfile degree_profile(const Map& m, int skip) {
  DegreeProfile p;
  for (int v = 0; v < m.nv; ++v) {
    if (v == skip) continue;
    (m.color[v] == Color::white ? p.white : p.black).push_back(m.degree(v));
  }
  std::sort(p.white.begin(), p.white.end());
  std::sort(p.black.begin(), p.black.end());
  return p;
}

SpinConfiguration make_spins(const Map& m, std::vector<Color> spin) {
  SpinConfiguration s;
  s.spin = std::move(spin);
  for (int h = 0; h < m.darts(); ++h)
    if (h < m.alpha[h] && s.spin[m.vert[h]] == s.spin[m.vert[m.alpha[h]]]) ++s.mono;
  return s;
}

std::string Monomial::str() const {
  if (exps.empty()) return "1";
  std::string s;
  for (auto& [v, e] : exps) {
    if (!s.empty()) s += ' ';
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

static std::string xname(Color c, int k) { return (c == Color::white ? "x" : "y") + std::to_string(k); }

Monomial weight(const Map& m, Scheme s, const SpinConfiguration* spins, const std::vector<char>* squares) {
  Monomial w;
  switch (s) {
    case Scheme::planar:
    case Scheme::plane: {
      if (!m.colored()) throw MapError("weight needs a bipartite colouring");
      for (int v = 0; v < m.nv; ++v) w.mul(xname(m.color[v], m.degree(v)));
      w.mul("u", m.nf - (s == Scheme::plane ? 1 : 0));
      return w;
    }
    case Scheme::ising: {
      if (!spins) throw MapError("ising weight needs a spin configuration");
      for (int v = 0; v < m.nv; ++v) w.mul(xname(spins->spin[v], m.degree(v)));
      w.mul("t", m.edges());
      w.mul("nu", spins->mono);
      w.mul("u", m.nf);
      return w;
    }
    case Scheme::square: {
      if (!squares || !m.colored()) throw MapError("square weight needs square annotations");
      const auto& sq = *squares;
      int nsq = 0;
      for (int v = 0; v < m.nv; ++v) {
        if (sq[v]) {
          if (m.degree(v) != 2) throw MapError("square vertex of degree != 2");
          ++nsq;
        } else {
          w.mul(xname(m.color[v], m.degree(v)));
        }
      }
      // maximal chains of squares: each contracts to one edge, so count edges
      // with no square endpoint plus the chains (union-find over square-square edges)
      std::vector<int> comp(m.nv);
      std::iota(comp.begin(), comp.end(), 0);
      auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
      };
      for (int h = 0; h < m.darts(); ++h) {
        int a = m.vert[h], b = m.vert[m.alpha[h]];
        if (sq[a] && sq[b]) comp[find(a)] = find(b);
      }
      int chains = 0;
      for (int v = 0; v < m.nv; ++v)
        if (sq[v] && find(v) == v) ++chains;
      w.mul("t", chains);
      w.mul("nu", nsq);
      w.mul("u", m.nf);
      return w;
    }
  }
  return w;
}

}  // namespace bmaps
