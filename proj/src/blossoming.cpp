#include "bmaps/blossoming.hpp"

#include <algorithm>
#include <set>

namespace bmaps {

bool is_tree(const Map& t) { return connected(t) && t.nf == 1 && t.euler() == 2; }

bool is_planted(const Map& t) { return t.root >= 0 && t.kind_of(t.root) == Kind::planted; }

TreeShape tree_shape(const Map& t) {
  if (!is_tree(t)) throw BlossomError("not a tree");
  TreeShape s;
  s.parent_dart.assign(t.nv, -1);
  int r = t.root_vertex();
  if (is_planted(t)) s.parent_dart[r] = t.root;
  std::vector<char> seen(t.nv, 0);
  seen[r] = 1;
  s.order.push_back(r);
  for (size_t i = 0; i < s.order.size(); ++i) {
    int v = s.order[i];
    for (int h : t.vdarts[v]) {
      if (t.stem(h)) continue;
      int g = t.alpha[h];
      int w = t.vert[g];
      if (seen[w]) continue;
      seen[w] = 1;
      s.parent_dart[w] = g;
      s.order.push_back(w);
    }
  }
  return s;
}

static int stem_charge(const Map& t, int h) {
  Kind k = t.kind_of(h);
  return k == Kind::closing ? 1 : k == Kind::opening ? -1 : 0;
}

Charge charge(const Map& t) {
  auto s = tree_shape(t);
  Charge c;
  c.per_vertex.assign(t.nv, 0);
  for (int h = 0; h < t.darts(); ++h)
    if (t.stem(h)) c.per_vertex[t.vert[h]] += stem_charge(t, h);
  for (auto it = s.order.rbegin(); it != s.order.rend(); ++it) {
    int v = *it;
    int p = s.parent_dart[v];
    if (p >= 0 && !t.stem(p)) c.per_vertex[t.vert[t.alpha[p]]] += c.per_vertex[v];
  }
  c.total = c.per_vertex[t.root_vertex()];
  return c;
}

WellChargedWitness is_well_charged(const Map& t) {
  WellChargedWitness w;
  if (!t.colored()) {
    w.ok = false;
    w.violations.push_back({-1, "tree is not bipartite"});
    return w;
  }
  auto c = charge(t);
  bool planted = is_planted(t);
  int r = t.root_vertex();
  for (int v = 0; v < t.nv; ++v) {
    bool black = t.color[v] == Color::black;
    for (int h : t.vdarts[v]) {
      if (!t.stem(h)) continue;
      Kind k = t.kind_of(h);
      if (black && k == Kind::closing) w.violations.push_back({v, "closing stem at a black vertex"});
      if (!black && k == Kind::opening) w.violations.push_back({v, "opening stem at a white vertex"});
    }
    if (v == r && !planted) continue;
    if (black && c.per_vertex[v] > 1) w.violations.push_back({v, "black charge above 1"});
    if (!black && c.per_vertex[v] < 0) w.violations.push_back({v, "negative white charge"});
  }
  w.ok = w.violations.empty();
  return w;
}

Orientation orient_tree(const Map& t, int d) {
  if (d < 1) throw BlossomError("d must be at least 1");
  if (!t.colored()) throw BlossomError("tree is not bipartite");
  auto s = tree_shape(t);
  auto c = charge(t);
  bool planted = is_planted(t);
  int r = t.root_vertex();
  int k = planted ? 0 : c.total;
  for (int v = 0; v < t.nv; ++v) {
    if (t.degree(v) > d) throw BlossomError("not orientable at this d: degree above d");
    for (int h : t.vdarts[v]) {
      if (!t.stem(h)) continue;
      Kind kd = t.kind_of(h);
      if ((kd == Kind::opening && t.color[v] == Color::white) ||
          (kd == Kind::closing && t.color[v] == Color::black))
        throw BlossomError("not orientable at this d: stem on the wrong colour");
    }
  }
  if (std::abs(k) > d) throw BlossomError("not orientable at this d: |charge| above d");
  if (d == 1 && std::abs(k) == 1 && t.nv == 1 && t.darts() == 1)
    throw BlossomError("not orientable at this d: trivial alpha_{1,1} tree");
  Orientation o{d + 1, std::vector<int>(t.darts(), 0)};
  for (int h = 0; h < t.darts(); ++h)
    if (t.stem(h) && t.kind_of(h) == Kind::opening) o.val[h] = d + 1;
  auto target = [&](int v) {
    int a = t.color[v] == Color::black ? d * t.degree(v) : t.degree(v);
    if (v == r && !planted) a -= k;  // alpha_{d,k}^- for k > 0, alpha_{d,|k|}^+ for k < 0
    return a;
  };
  for (auto it = s.order.rbegin(); it != s.order.rend(); ++it) {
    int v = *it;
    int p = s.parent_dart[v];
    int sum = 0;
    for (int h : t.vdarts[v])
      if (h != p) {
        if (!t.stem(h)) o.val[h] = d + 1 - o.val[t.alpha[h]];
        sum += o.val[h];
      }
    int x = target(v) - sum;
    if (p < 0) {
      if (x != 0) throw BlossomError("not orientable at this d: root outdegree mismatch");
      continue;
    }
    int hi = t.stem(p) && t.color[v] == Color::white ? d : d + 1;
    if (x < 1 || x > hi) throw BlossomError("not orientable at this d: excess out of range");
    o.val[p] = x;
  }
  return o;
}

int excess(const Map& t, const Orientation& o) {
  if (!is_planted(t)) throw BlossomError("excess needs a planted tree");
  return o.val[t.root];
}

namespace {

struct Token {
  int dart;
  bool open;
};

// Darts of face f in phi^{-1} order, starting from its smallest dart.
std::vector<int> cw_contour(const Map& m, int f) {
  std::vector<int> seq;
  int d0 = m.fdarts[f][0];
  int d = d0;
  do {
    seq.push_back(d);
    d = m.phi_inv(d);
  } while (d != d0);
  return seq;
}

}  // namespace

Map closure(const Map& b) {
  Map m = b;
  int n = m.darts();
  if (m.kind.empty()) m.kind.assign(n, Kind::edge);
  if (n == 0) {
    m.outer = 0;
    return m;
  }
  int f = b.outer >= 0 ? b.outer : 0;
  if (b.outer < 0 && b.nf != 1) throw BlossomError("closure needs a marked face");
  auto seq = cw_contour(b, f);
  int L = static_cast<int>(seq.size());
  std::vector<Token> tokens;
  int level = 0, best = 0, best_dart = seq[0];
  for (int i = 0; i < L; ++i) {
    if (level < best) {
      best = level;
      best_dart = seq[i];
    }
    int nx = seq[(i + 1) % L];
    if (b.stem(nx)) {
      Kind k = b.kind_of(nx);
      if (k == Kind::opening || k == Kind::closing) {
        tokens.push_back({nx, k == Kind::opening});
        level += k == Kind::opening ? 1 : -1;
      }
    }
  }
  // tokens were collected starting after seq[0]; the stem at seq[0] (if any) is last
  std::vector<int> stack;
  std::vector<char> matched(n, 0);
  auto match = [&](int o, int c) {
    m.alpha[o] = c;
    m.alpha[c] = o;
    m.kind[o] = m.kind[c] = Kind::edge;
    matched[o] = matched[c] = 1;
  };
  for (auto& t : tokens) {
    if (t.open)
      stack.push_back(t.dart);
    else if (!stack.empty()) {
      match(stack.back(), t.dart);
      stack.pop_back();
    }
  }
  for (auto& t : tokens) {
    if (t.open || matched[t.dart] || stack.empty()) continue;
    match(stack.back(), t.dart);
    stack.pop_back();
  }
  int anchor = best_dart;
  for (auto& t : tokens)
    if (!matched[t.dart]) anchor = t.dart;
  m.refresh();
  m.outer = m.face[anchor];
  return m;
}

Pointed attach_tau(const Map& b, Color c) {
  int n = b.darts();
  std::vector<int> stems;
  int f = -1;
  for (int h = 0; h < n; ++h)
    if (b.stem(h) && b.kind_of(h) != Kind::planted) {
      if (f < 0) f = b.face[h];
      if (b.face[h] != f) throw BlossomError("stems lie in several faces");
    }
  if (f < 0) throw BlossomError("no stems to attach");
  for (int h : b.fdarts[f])
    if (b.stem(h) && b.kind_of(h) != Kind::planted) stems.push_back(h);
  int k = static_cast<int>(stems.size());
  Pointed p;
  Map& m = p.map;
  m.sigma = b.sigma;
  m.alpha = b.alpha;
  m.kind = b.kind.empty() ? std::vector<Kind>(n, Kind::edge) : b.kind;
  m.sigma.resize(n + k);
  m.alpha.resize(n + k);
  m.kind.resize(n + k, Kind::edge);
  for (int i = 0; i < k; ++i) {
    int s = stems[i], t = n + i;
    m.alpha[s] = t;
    m.alpha[t] = s;
    m.kind[s] = Kind::edge;
    m.sigma[t] = n + (i + k - 1) % k;
  }
  m.refresh();
  m.root = b.root;
  m.outer = -1;
  p.tau = m.vert[n];
  if (b.colored()) {
    m.color = b.color;
    m.color.resize(m.nv, c);
    m.color[p.tau] = c;
  }
  if (m.euler() != 2) throw BlossomError("complete closure is not planar");
  return p;
}

Pointed complete_closure(const Map& t) {
  auto c = charge(t);
  if (c.total == 0) throw BlossomError("zero charge: use closure");
  Map m = closure(t);
  return attach_tau(m, c.total > 0 ? Color::black : Color::white);
}

Orientation complete_orientation(const Map& t, const Orientation& o, const Pointed& p) {
  Orientation r = o;
  int n = t.darts();
  r.val.resize(p.map.darts());
  for (int h = n; h < p.map.darts(); ++h) r.val[h] = o.k - o.val[p.map.alpha[h]];
  return r;
}

Map remove_tau(const Pointed& p, std::vector<int>* old_of) {
  std::vector<char> keep(p.map.nv, 1);
  keep[p.tau] = 0;
  Kind k = p.map.color[p.tau] == Color::black ? Kind::closing : Kind::opening;
  Map b = restrict_to(p.map, keep, k, old_of);
  for (int h = 0; h < b.darts(); ++h)
    if (b.stem(h)) {
      b.outer = b.face[h];
      break;
    }
  return b;
}

static Map cut_edge(const Map& b, int h) {
  Map r = b;
  int a = r.alpha[h];
  r.alpha[h] = h;
  r.alpha[a] = a;
  r.kind[h] = Kind::opening;
  r.kind[a] = Kind::closing;
  r.refresh();
  r.outer = r.face[h];
  return r;
}

static bool same_plane_map(const Map& a, const Map& b) {
  if (a.alpha != b.alpha || a.sigma != b.sigma) return false;
  if (a.darts() == 0) return true;
  return a.face[b.fdarts[b.outer][0]] == a.outer;
}

Map opening(const Map& m, const Orientation& o) {
  check_fractional(m, o);
  if (m.outer < 0) throw BlossomError("opening needs a marked outer face");
  if (!is_accessible(m, o)) throw BlossomError("opening mismatch: orientation not accessible");
  if (find_counterclockwise_cycle(m, o)) throw BlossomError("opening mismatch: orientation not minimal");
  Map b = m;
  if (b.kind.empty()) b.kind.assign(b.darts(), Kind::edge);
  for (;;) {
    bool done = false;
    for (int h = 0; h < b.darts() && !done; ++h) {
      if (b.stem(h) || o.val[h] == 0 || o.val[b.alpha[h]] != 0) continue;
      if (b.face[b.alpha[h]] != b.outer || b.face[h] == b.outer) continue;
      Map trial = cut_edge(b, h);
      if (!is_accessible(trial, o)) continue;
      b = std::move(trial);
      done = true;
    }
    if (!done) break;
  }
  if (b.darts() && b.nf != 1) throw BlossomError("opening mismatch: result is not a tree");
  if (!same_plane_map(closure(b), m)) throw BlossomError("opening mismatch: closure differs");
  return b;
}

Map open_plane(const Map& m, int d) { return opening(m, minimal_alpha_d(m, d)); }

Map open_pointed(const Pointed& p, int d) {
  const Map& m = p.map;
  int k = m.degree(p.tau);
  Sign s = m.color[p.tau] == Color::black ? Sign::minus : Sign::plus;
  auto o = alpha_dk_orientation(m, p.tau, d, k, s);
  if (!o) throw BlossomError("no alpha_{d,k} orientation: not tight");
  std::vector<int> old_of;
  Map b = remove_tau(p, &old_of);
  Orientation ob{o->k, std::vector<int>(b.darts())};
  for (int h = 0; h < b.darts(); ++h) ob.val[h] = o->val[old_of[h]];
  ob = minimize(b, ob);
  return opening(b, ob);
}

std::string pointed_code(const Pointed& p) {
  std::vector<int> tags(p.map.darts(), 0);
  for (int h : p.map.vdarts[p.tau]) tags[h] = 1;
  Map m = p.map;
  m.outer = -1;
  m.kind.clear();
  return canonical_code(m, m.root, tags);
}

std::string doubly_rooted_code(const DoublyRooted& d) {
  std::vector<int> tags(d.map.darts(), 0);
  tags[d.root2] = 1;
  Map m = d.map;
  m.outer = -1;
  m.kind.clear();
  return canonical_code(m, m.root, tags);
}

Decomposition decompose_doubly_rooted(const DoublyRooted& d) {
  const Map& m = d.map;
  int tau = m.vert[d.root2];
  if (tau == m.root_vertex()) throw BlossomError("roots on the same vertex");
  auto mc = min_cut(m, tau, Color::black);
  if (!mc) throw BlossomError("inseparable pair: no black cut");
  std::vector<char> s_min(m.nv, 1);
  for (auto& c : mc->all_minimum)
    for (int v = 0; v < m.nv; ++v) s_min[v] = s_min[v] && c.in_s[v];
  std::vector<char> r_side(m.nv);
  for (int v = 0; v < m.nv; ++v) r_side[v] = !s_min[v];
  Decomposition out;
  out.k = mc->cut.weight;
  std::vector<int> old_r, old_s;
  Map a = restrict_to(m, r_side, Kind::closing, &old_r);
  Map b = restrict_to(m, s_min, Kind::opening, &old_s);
  if (!connected(a) || !connected(b)) throw BlossomError("minimal cut sides are not connected");
  for (int i = 0; i < b.darts(); ++i)
    if (old_s[i] == d.root2) b.root = i;
  out.trumpet = attach_tau(a, Color::black);
  out.cornet = attach_tau(b, Color::white);
  return out;
}

DoublyRooted glue(const Pointed& trumpet, const Pointed& cornet, int rotation) {
  int k = trumpet.map.degree(trumpet.tau);
  if (cornet.map.degree(cornet.tau) != k) throw BlossomError("degree mismatch between tau vertices");
  if (trumpet.map.color[trumpet.tau] != Color::black || cornet.map.color[cornet.tau] != Color::white)
    throw BlossomError("glue needs a black-tau trumpet and a white-tau cornet");
  Map a = remove_tau(trumpet), b = remove_tau(cornet);
  int na = a.darts(), nb = b.darts();
  auto stems_in_order = [](const Map& x, int off) {
    std::vector<int> s;
    for (int h : x.fdarts[x.outer])
      if (x.stem(h)) s.push_back(h + off);
    return s;
  };
  auto cs = stems_in_order(a, 0), os = stems_in_order(b, na);
  DoublyRooted out;
  Map& m = out.map;
  m.sigma.resize(na + nb);
  m.alpha.resize(na + nb);
  for (int h = 0; h < na; ++h) {
    m.sigma[h] = a.sigma[h];
    m.alpha[h] = a.alpha[h];
  }
  for (int h = 0; h < nb; ++h) {
    m.sigma[na + h] = b.sigma[h] + na;
    m.alpha[na + h] = b.alpha[h] + na;
  }
  int j = ((rotation % k) + k) % k;
  for (int i = 0; i < k; ++i) {
    int c = cs[i], o = os[((j - i) % k + k) % k];
    m.alpha[c] = o;
    m.alpha[o] = c;
  }
  m.refresh();
  m.root = a.root;
  out.root2 = b.root + na;
  m.outer = -1;
  m.color.assign(m.nv, Color::white);
  for (int h = 0; h < na; ++h) m.color[m.vert[h]] = a.color[a.vert[h]];
  for (int h = 0; h < nb; ++h) m.color[m.vert[na + h]] = b.color[b.vert[h]];
  if (m.euler() != 2) throw BlossomError("gluing is not planar");
  return out;
}

Monomial tree_weight(const Map& t) {
  Monomial w;
  for (int v = 0; v < t.nv; ++v)
    w.mul((t.color[v] == Color::white ? "x" : "y") + std::to_string(t.degree(v)));
  int o = 0;
  for (int h = 0; h < t.darts(); ++h)
    if (t.stem(h) && t.kind_of(h) == Kind::opening) ++o;
  w.mul("u", o);
  return w;
}

}  // namespace bmaps
