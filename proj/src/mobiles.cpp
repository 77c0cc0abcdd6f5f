#include "bmaps/mobiles.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "bmaps/blossoming.hpp"

namespace bmaps {

char letter(NodeType t) { return t == NodeType::white ? 'w' : t == NodeType::black ? 'b' : 's'; }

GeodesicLabels geodesic_labeling(const DualMap& d, int pointed) {
  const Map& e = d.map;
  if (!d.directed()) throw MobileError("dual map carries no canonical direction");
  GeodesicLabels g;
  g.pointed = pointed;
  g.labels.assign(e.nv, -1);
  g.labels[pointed] = 0;
  std::deque<int> q{pointed};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int h : e.vdarts[v]) {
      if (!d.forward[h]) continue;
      int w = e.vert[e.alpha[h]];
      if (g.labels[w] < 0) {
        g.labels[w] = g.labels[v] + 1;
        q.push_back(w);
      }
    }
  }
  for (int l : g.labels)
    if (l < 0) throw MobileError("dual vertex unreachable from the pointed vertex");
  return g;
}

bool geodesic_conditions_hold(const DualMap& d, const GeodesicLabels& g) {
  const Map& e = d.map;
  if (g.pointed < 0 || g.labels[g.pointed] != 0) return false;
  std::vector<char> exact(e.nv, 0);
  for (int h = 0; h < e.darts(); ++h) {
    if (!d.forward[h] || e.stem(h)) continue;
    int a = g.labels[e.vert[h]], b = g.labels[e.vert[e.alpha[h]]];
    if (b > a + 1) return false;
    if (b == a + 1) exact[e.vert[e.alpha[h]]] = 1;
  }
  for (int v = 0; v < e.nv; ++v)
    if (v != g.pointed && (!exact[v] || g.labels[v] < 0)) return false;
  return true;
}

bool check_geodesic_relation(const Map& m, const Orientation& o, int) {
  DualMap d = dual(m);
  auto g = geodesic_labeling(d, d.pointed);
  for (int h = 0; h < m.darts(); ++h) {
    if (m.stem(h) || m.color_of_dart(h) != Color::white) continue;
    int tail = g.labels[d.map.vert[h]], head = g.labels[d.map.vert[m.alpha[h]]];
    if (tail - head != o.val[h] - 1) return false;
  }
  return true;
}

int max_vertex_degree(const Map& m) {
  int best = 0;
  for (int v = 0; v < m.nv; ++v) best = std::max(best, m.degree(v));
  return best;
}

Map subdivide_to_bipartite(const Map& m) {
  int n = m.darts();
  if (m.stems()) throw MobileError("subdivision of a map with stems");
  std::vector<int> s(2 * n), a(2 * n);
  for (int h = 0; h < n; ++h) {
    s[h] = m.sigma[h];
    a[h] = n + h;
    a[n + h] = h;
    s[n + h] = n + m.alpha[h];
  }
  Map r(s, a);
  r.root = m.root;
  if (m.outer >= 0 && n > 0) r.outer = r.face[m.fdarts[m.outer][0]];
  r.color.assign(r.nv, Color::white);
  for (int h = 0; h < n; ++h) r.color[r.vert[n + h]] = Color::black;
  return r;
}

Orientation pull_back_quasi_eulerian(const Map& m, const Map& sub, const Orientation& o, int Delta) {
  int n = m.darts();
  if (sub.darts() != 2 * n || o.k != 2) throw MobileError("pull-back needs a 2-fractional orientation of m");
  Orientation r{Delta + 1, std::vector<int>(2 * n, 0)};
  for (int h = 0; h < n; ++h) {
    r.val[h] = o.val[h];
    r.val[n + h] = Delta + 1 - o.val[h];
  }
  return r;
}

namespace {

// Darts are created with an owner node; rotations are listed ccw per node.
struct Builder {
  std::vector<int> alpha, val, flag;
  std::vector<Kind> kind;
  std::vector<std::vector<int>> rot;
  std::vector<NodeType> type;
  std::vector<int> degree, label;

  int node(NodeType t, int deg, int lab = -1) {
    rot.emplace_back();
    type.push_back(t);
    degree.push_back(deg);
    label.push_back(lab);
    return static_cast<int>(rot.size()) - 1;
  }
  int dart(int value, Kind k = Kind::edge) {
    alpha.push_back(static_cast<int>(alpha.size()));
    val.push_back(value);
    flag.push_back(-1);
    kind.push_back(k);
    return static_cast<int>(alpha.size()) - 1;
  }
  void pair(int a, int b) {
    alpha[a] = b;
    alpha[b] = a;
  }

  Mobile finish(const char* what) const {
    int n = static_cast<int>(alpha.size());
    std::vector<int> s(n, -1);
    for (auto& r : rot) {
      if (r.empty()) throw MobileError(std::string(what) + ": a vertex lost all its half-edges");
      for (size_t i = 0; i < r.size(); ++i) s[r[i]] = r[(i + 1) % r.size()];
    }
    Mobile mb;
    mb.tree = Map(s, alpha);
    mb.tree.kind = kind;
    mb.tree.root = 0;
    if (mb.tree.nv != static_cast<int>(rot.size()) || !is_tree(mb.tree))
      throw MobileError(std::string(what) + ": output is not a tree");
    mb.type.assign(mb.tree.nv, NodeType::white);
    mb.map_degree.assign(mb.tree.nv, 0);
    for (size_t v = 0; v < rot.size(); ++v) {
      int nv = mb.tree.vert[rot[v][0]];
      mb.type[nv] = type[v];
      mb.map_degree[nv] = degree[v];
    }
    return mb;
  }
  std::vector<int> labels_of(const Mobile& mb) const {
    std::vector<int> out(mb.tree.nv, -1);
    for (size_t v = 0; v < rot.size(); ++v) out[mb.tree.vert[rot[v][0]]] = label[v];
    return out;
  }
};

NodeType round_type(const Map& m, int v) {
  return m.colored() && m.color[v] == Color::black ? NodeType::black : NodeType::white;
}

}  // namespace

int BlossomingMobile::excess() const {
  int r = 0;
  for (int h = 0; h < tree.darts(); ++h) {
    if (tree.stem(h)) --r;
    else if (round(tree.vert[h])) ++r;
  }
  return r;
}

BlossomingMobile phi_BF(const Map& m, const Orientation& o, bool outer_square) {
  int n = m.darts();
  if (m.stems()) throw MobileError("phi_BF: map has stems");
  if (static_cast<int>(o.val.size()) != n) throw MobileError("phi_BF: orientation size mismatch");
  if (!is_minimal(m, o) || !is_accessible_unrooted(m, o))
    throw MobileError("phi_BF: orientation is not minimal and accessible");
  auto sat_tail = [&](int h) { return o.val[h] > 0 && o.val[m.alpha[h]] == 0; };

  Builder b;
  for (int v = 0; v < m.nv; ++v) b.node(round_type(m, v), m.degree(v));
  std::vector<int> sq(m.nf, -1);
  for (int f = 0; f < m.nf; ++f)
    if (f != m.outer || outer_square) sq[f] = b.node(NodeType::square, m.face_degree(f));

  std::vector<int> id(n, -1);
  for (int v = 0; v < m.nv; ++v)
    for (int h : m.vdarts[v])
      if (!sat_tail(h)) {
        id[h] = b.dart(o.val[h]);
        b.rot[v].push_back(id[h]);
      }
  for (int h = 0; h < n; ++h)
    if (!sat_tail(h) && !sat_tail(m.alpha[h]) && h < m.alpha[h]) b.pair(id[h], id[m.alpha[h]]);

  for (int f = 0; f < m.nf; ++f) {
    if (sq[f] < 0) continue;
    // ccw around the square is phi^{-1} along the face
    int g0 = m.fdarts[f][0], g = g0;
    do {
      if (sat_tail(g)) {
        int x = b.dart(o.k);
        b.pair(x, id[m.alpha[g]]);
        b.rot[sq[f]].push_back(x);
      } else {
        b.rot[sq[f]].push_back(b.dart(0, Kind::opening));
      }
      g = m.phi_inv(g);
    } while (g != g0);
  }
  for (int h = 0; h < n; ++h)
    if (sat_tail(h) && sq[m.face[h]] < 0) throw MobileError("outside Phi_BF domain: saturated edge along the outer face");

  BlossomingMobile out;
  try {
    static_cast<Mobile&>(out) = b.finish("phi_BF");
  } catch (const MobileError& e) {
    throw MobileError(std::string("outside Phi_BF domain: ") + e.what());
  }
  out.o = Orientation{o.k, b.val};
  return out;
}

LabeledMobile phi_BDG(const DualMap& e) {
  const Map& dm = e.map;
  int n = dm.darts();
  if (!e.directed() || e.pointed < 0) throw MobileError("phi_BDG: needs a directed pointed dual");
  if (n == 0) throw MobileError("phi_BDG: degenerate single-face input");
  auto g = geodesic_labeling(e, e.pointed);
  const auto& L = g.labels;

  // primal: sigma = sigma'^{-1} o alpha, its faces are the dual vertices
  std::vector<int> s(n);
  for (int h = 0; h < n; ++h) s[h] = dm.sigma_inv(dm.alpha[h]);
  Map pm(s, dm.alpha);
  auto white = [&](int h) { return e.forward[h] != 0; };
  auto geodesic = [&](int w) { return L[dm.vert[dm.alpha[w]]] == L[dm.vert[w]] + 1; };
  auto dropped = [&](int h) { return !white(h) && geodesic(dm.alpha[h]); };

  Builder b;
  for (int v = 0; v < pm.nv; ++v)
    b.node(white(pm.vdarts[v][0]) ? NodeType::white : NodeType::black, pm.degree(v));
  std::vector<int> sq(dm.nv, -1);
  for (int f = 0; f < dm.nv; ++f)
    if (f != e.pointed) sq[f] = b.node(NodeType::square, dm.degree(f), L[f]);

  std::vector<int> id(n, -1);
  for (int v = 0; v < pm.nv; ++v)
    for (int h : pm.vdarts[v])
      if (!dropped(h)) {
        id[h] = b.dart(0);
        b.rot[v].push_back(id[h]);
      }
  for (int h = 0; h < n; ++h) {
    if (!white(h) || geodesic(h)) continue;
    b.pair(id[h], id[dm.alpha[h]]);
    b.flag[id[h]] = L[dm.vert[h]];
    b.flag[id[dm.alpha[h]]] = L[dm.vert[dm.alpha[h]]];
  }
  for (int f = 0; f < dm.nv; ++f) {
    if (sq[f] < 0) continue;
    for (int h : dm.vdarts[f])  // sigma' order is ccw around the square
      if (dropped(h)) {
        int x = b.dart(0);
        b.pair(x, id[dm.alpha[h]]);
        b.rot[sq[f]].push_back(x);
      }
  }

  LabeledMobile out;
  static_cast<Mobile&>(out) = b.finish("phi_BDG");
  out.label = b.labels_of(out);
  out.flag = b.flag;
  return out;
}

std::vector<ContourEvent> contour_events(const LabeledMobile& t) {
  const Map& m = t.tree;
  std::vector<ContourEvent> ev;
  if (m.darts() == 0) return ev;
  int d0 = 0, d = d0;
  do {
    int x = m.sigma_inv(d);
    if (t.type[m.vert[d]] == NodeType::square) ev.push_back({true, d, t.label[m.vert[d]], -1});
    int a = m.alpha[x];
    if (t.flag[a] >= 0) ev.push_back({false, a, t.flag[a], -1});
    d = a;
  } while (d != d0);
  int k = static_cast<int>(ev.size());
  for (int i = 0; i < k; ++i) {
    int want = ev[i].corner ? ev[i].label - 1 : ev[i].label;
    if ((ev[i].corner && ev[i].label < 2) || (!ev[i].corner && ev[i].label < 1)) continue;
    for (int j = 1; j <= k; ++j) {
      auto& c = ev[(i + j) % k];
      if (c.corner && c.label == want) {
        ev[i].successor = (i + j) % k;
        break;
      }
    }
  }
  return ev;
}

BlossomingMobile upsilon_d(const LabeledMobile& t, int d) {
  const Map& m = t.tree;
  int n = m.darts();
  if (m.stems()) throw MobileError("upsilon_d: labeled mobile with stems");
  auto ev = contour_events(t);
  std::vector<int> stems_before(n, 0);  // corner (sigma^{-1} h, h) keyed by h
  for (auto& e : ev) {
    bool needs = e.corner ? e.label >= 2 : e.label >= 1;
    if (needs && e.successor < 0) throw MobileError("upsilon_d: missing successor");
    if (e.successor >= 0) ++stems_before[ev[e.successor].dart];
  }

  Builder b;
  for (int v = 0; v < m.nv; ++v) b.node(t.type[v], t.map_degree.empty() ? 0 : t.map_degree[v]);
  for (int h = 0; h < n; ++h) b.dart(0);
  for (int h = 0; h < n; ++h) b.pair(h, m.alpha[h]);
  for (int v = 0; v < m.nv; ++v)
    for (int h : m.vdarts[v]) {
      for (int i = 0; i < stems_before[h]; ++i) b.rot[v].push_back(b.dart(0, Kind::opening));
      b.rot[v].push_back(h);
    }
  for (int h = 0; h < n; ++h) {
    NodeType a = t.type[m.vert[h]], c = t.type[m.vert[m.alpha[h]]];
    if (a != NodeType::white) continue;
    if (c == NodeType::square) {
      b.val[h] = 0;
      b.val[m.alpha[h]] = d + 1;
    } else {
      int oc = t.flag[h] - t.flag[m.alpha[h]] + 1;
      if (oc < 1 || oc > d) throw MobileError("upsilon_d: flag difference out of range");
      b.val[h] = oc;
      b.val[m.alpha[h]] = d + 1 - oc;
    }
  }
  BlossomingMobile out;
  static_cast<Mobile&>(out) = b.finish("upsilon_d");
  if (t.map_degree.empty()) out.map_degree.clear();
  out.o = Orientation{d + 1, b.val};
  return out;
}

namespace {

std::string at(const char* what, int v) {
  std::ostringstream os;
  os << what << " at vertex " << v;
  return os.str();
}

bool edge_types_ok(const Mobile& t, std::vector<std::string>& out) {
  bool ok = true;
  for (int h = 0; h < t.tree.darts(); ++h) {
    if (t.tree.stem(h)) continue;
    NodeType a = t.type[t.tree.vert[h]], c = t.type[t.tree.vert[t.tree.alpha[h]]];
    bool wb = (a == NodeType::white && c == NodeType::black) || (a == NodeType::black && c == NodeType::white);
    bool ws = (a == NodeType::white && c == NodeType::square) || (a == NodeType::square && c == NodeType::white);
    if (!wb && !ws) {
      out.push_back(at("edge not white-black or white-square", t.tree.vert[h]));
      ok = false;
    }
  }
  return ok;
}

}  // namespace

std::vector<std::string> labeled_mobile_violations(const LabeledMobile& t) {
  std::vector<std::string> out;
  const Map& m = t.tree;
  if (!is_tree(m)) return {"not a tree"};
  if (m.stems()) out.push_back("labeled mobile with stems");
  if (!edge_types_ok(t, out)) return out;
  auto wb = [&](int h) {
    return !m.stem(h) && t.type[m.vert[h]] != NodeType::square &&
           t.type[m.vert[m.alpha[h]]] != NodeType::square;
  };
  // (I)
  bool zero = false;
  for (int h = 0; h < m.darts(); ++h) {
    if (!wb(h)) continue;
    if (t.flag[h] < 0) out.push_back(at("(I) negative or missing flag", m.vert[h]));
    if (t.flag[h] == 0) zero = true;
  }
  if (!zero) out.push_back("(I) no flag labeled 0");
  // (II)
  for (int v = 0; v < m.nv; ++v)
    if (t.type[v] == NodeType::square && t.label[v] <= 0) out.push_back(at("(II) square label not positive", v));
  // (III), (IV): clockwise is sigma^{-1}; the left flag of h comes before its right flag
  for (int v = 0; v < m.nv; ++v) {
    if (t.type[v] == NodeType::square) continue;
    bool black = t.type[v] == NodeType::black;
    std::vector<int> rev(m.vdarts[v].rbegin(), m.vdarts[v].rend());
    int k = static_cast<int>(rev.size());
    for (int i = 0; i < k; ++i) {
      int h = rev[i], nx = rev[(i + 1) % k];
      bool sq = !wb(h);
      if (!sq) {
        int l1 = t.flag[m.alpha[h]], l2 = t.flag[h];
        if (black ? l2 > l1 : l2 < l1) out.push_back(at(black ? "(III) same-edge flags" : "(IV) same-edge flags", v));
      }
      int l1 = sq ? t.label[m.vert[m.alpha[h]]] : t.flag[h];
      int l2 = wb(nx) ? t.flag[m.alpha[nx]] : t.label[m.vert[m.alpha[nx]]];
      if (black) {
        if (l2 < l1) out.push_back(at("(III) consecutive labels decrease", v));
      } else if (sq ? l2 != l1 - 1 : l2 != l1) {
        out.push_back(at("(IV) consecutive labels", v));
      }
    }
  }
  for (auto& e : contour_events(t)) {
    bool needs = e.corner ? e.label >= 2 : e.label >= 1;
    if (needs && e.successor < 0) out.push_back("successor undefined");
  }
  return out;
}

std::vector<std::string> blossoming_violations(const BlossomingMobile& t) {
  std::vector<std::string> out;
  const Map& m = t.tree;
  if (!is_tree(m)) return {"not a tree"};
  if (static_cast<int>(t.o.val.size()) != m.darts()) return {"orientation size mismatch"};
  for (int h = 0; h < m.darts(); ++h) {
    int v = m.vert[h];
    if (m.stem(h)) {
      if (t.type[v] != NodeType::square) out.push_back(at("stem on a round vertex", v));
      if (m.kind_of(h) != Kind::opening) out.push_back(at("stem is not opening", v));
      if (t.o.val[h] != 0) out.push_back(at("stem with nonzero value", v));
      continue;
    }
    bool round_side = t.round(v) && !t.round(m.vert[m.alpha[h]]);
    if (round_side != (t.o.val[h] == 0)) out.push_back(at("zero pattern", v));
    if (t.o.val[h] < 0) out.push_back(at("negative value", v));
    if (t.o.val[h] + t.o.val[m.alpha[h]] != t.o.k) out.push_back(at("edge weight", v));
  }
  return out;
}

std::vector<std::string> d_blossoming_violations(const BlossomingMobile& t, int d) {
  auto out = blossoming_violations(t);
  if (!out.empty()) return out;
  const Map& m = t.tree;
  if (t.o.k != d + 1) out.push_back("orientation is not (d+1)-fractional");
  if (t.excess() <= 0) out.push_back("(1) excess not positive");
  edge_types_ok(t, out);
  for (int v = 0; v < m.nv; ++v) {
    if (t.type[v] == NodeType::square) continue;
    int in = 0;
    for (int h : m.vdarts[v]) in += t.o.val[m.alpha[h]];
    if (t.type[v] == NodeType::white) {
      if (m.degree(v) > d) out.push_back(at("(3) white degree above d", v));
      if (in != d * m.degree(v)) out.push_back(at("(4) white indegree", v));
    } else if (!t.map_degree.empty() && in != t.map_degree[v]) {
      out.push_back(at("(5) black indegree", v));
    }
  }
  for (int h = 0; h < m.darts(); ++h)
    if (!m.stem(h) && t.type[m.vert[h]] == NodeType::white && t.type[m.vert[m.alpha[h]]] == NodeType::black &&
        (t.o.val[h] == 0 || t.o.val[m.alpha[h]] == 0))
      out.push_back(at("(6) saturated white-black edge", m.vert[h]));
  return out;
}

namespace {
Map bare(const Map& t) {
  Map m = t;
  m.color.clear();
  m.outer = -1;
  return m;
}
}  // namespace

std::string mobile_code(const BlossomingMobile& t) {
  std::vector<int> tags(t.tree.darts());
  for (int h = 0; h < t.tree.darts(); ++h)
    tags[h] = static_cast<int>(t.type[t.tree.vert[h]]) * 1000 + t.o.val[h];
  return unrooted_code(bare(t.tree), tags);
}

std::string mobile_code(const LabeledMobile& t) {
  std::vector<int> tags(t.tree.darts());
  for (int h = 0; h < t.tree.darts(); ++h) {
    int v = t.tree.vert[h];
    tags[h] = static_cast<int>(t.type[v]) * 1000000 + (t.label[v] + 1) * 1000 + t.flag[h] + 1;
  }
  return unrooted_code(bare(t.tree), tags);
}

bool check_commutation(const Map& m, int d) {
  if (!m.colored() || m.max_degree(Color::white) > d || m.darts() == 0) return false;
  auto o = minimal_alpha_d(m, d);
  auto a = phi_BF(m, o);
  auto lm = phi_BDG(dual(m));
  if (!labeled_mobile_violations(lm).empty()) return false;
  auto b = upsilon_d(lm, d);
  if (!d_blossoming_violations(a, d).empty() || !d_blossoming_violations(b, d).empty()) return false;
  return mobile_code(a) == mobile_code(b);
}

}  // namespace bmaps
