#include "bmaps/orientation.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>
#include <functional>
#include <queue>

namespace bmaps {

int OutdegreeTarget::at(const Map& m, int v) const {
  int base;
  if (kind == Target::quasi_eulerian) return m.degree(v);
  base = m.color[v] == Color::black ? d * m.degree(v) : m.degree(v);
  if (kind == Target::alpha_dk_minus) base += (v == tau ? kk : 0) - (v == rho ? kk : 0);
  if (kind == Target::alpha_dk_plus) base += (v == rho ? kk : 0) - (v == tau ? kk : 0);
  return base;
}

int outdeg(const Map& m, const Orientation& o, int v) {
  int s = 0;
  for (int h : m.vdarts[v]) s += o.val[h];
  return s;
}

void check_fractional(const Map& m, const Orientation& o) {
  if (static_cast<int>(o.val.size()) != m.darts()) throw OrientationError("orientation size mismatch");
  for (int h = 0; h < m.darts(); ++h) {
    if (o.val[h] < 0 || o.val[h] > o.k) throw OrientationError("value out of range");
    if (m.stem(h)) {
      Kind kd = m.kind_of(h);
      if (kd == Kind::opening && o.val[h] != o.k) throw OrientationError("opening stem not valued k");
      if (kd == Kind::closing && o.val[h] != 0) throw OrientationError("closing stem not valued 0");
    } else if (o.val[h] + o.val[m.alpha[h]] != o.k) {
      throw OrientationError("edge values do not sum to k");
    }
  }
}

void check_target(const Map& m, const Orientation& o, const OutdegreeTarget& t) {
  check_fractional(m, o);
  for (int v = 0; v < m.nv; ++v)
    if (outdeg(m, o, v) != t.at(m, v)) throw OrientationError("outdegree differs from target");
}

Orientation initial_alpha_d(const Map& m, int d) {
  if (d < 1) throw OrientationError("d must be at least 1");
  if (!m.colored()) throw OrientationError("map is not bipartite");
  Orientation o{d + 1, std::vector<int>(m.darts())};
  for (int h = 0; h < m.darts(); ++h) o.val[h] = m.color_of_dart(h) == Color::black ? d : 1;
  return o;
}

std::vector<char> reaches(const Map& m, const Orientation& o, int target) {
  std::vector<char> ok(m.nv, 0);
  ok[target] = 1;
  std::vector<int> st{target};
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int g : m.vdarts[v]) {
      if (m.stem(g)) continue;
      int h = m.alpha[g];
      int u = m.vert[h];
      if (o.val[h] > 0 && !ok[u]) {
        ok[u] = 1;
        st.push_back(u);
      }
    }
  }
  return ok;
}

bool is_accessible(const Map& m, const Orientation& o) {
  auto ok = reaches(m, o, m.root_vertex());
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c; });
}

bool is_accessible_unrooted(const Map& m, const Orientation& o) {
  if (m.outer < 0) return false;
  std::vector<char> tried(m.nv, 0);
  for (int h : m.fdarts[m.outer]) {
    int v = m.vert[h];
    if (tried[v]) continue;
    tried[v] = 1;
    auto ok = reaches(m, o, v);
    if (std::all_of(ok.begin(), ok.end(), [](char c) { return c; })) return true;
  }
  return m.darts() == 0;
}

bool is_quasi_accessible(const Map& m, const Orientation& o, int tau) {
  auto ok = reaches(m, o, m.root_vertex());
  for (int v = 0; v < m.nv; ++v)
    if (v != tau && !ok[v]) return false;
  return true;
}

bool outer_on_right(const Map& m, const Cycle& c) {
  std::vector<char> blocked(m.darts(), 0);
  for (int h : c) blocked[h] = blocked[m.alpha[h]] = 1;
  std::vector<std::vector<int>> adj(m.nf);
  for (int h = 0; h < m.darts(); ++h)
    if (!blocked[h] && !m.stem(h)) adj[m.face[h]].push_back(m.face[m.alpha[h]]);
  std::vector<char> seen(m.nf, 0);
  std::vector<int> st{m.face[c[0]]};
  seen[st[0]] = 1;
  while (!st.empty()) {
    int f = st.back();
    st.pop_back();
    for (int g : adj[f])
      if (!seen[g]) {
        seen[g] = 1;
        st.push_back(g);
      }
  }
  return seen[m.outer];
}

// Depth-first enumeration of simple forward cycles. Each cycle is reported once,
// starting at its smallest vertex; darts are tried in increasing id order.
static bool each_forward_cycle(const Map& m, const Orientation& o,
                               const std::function<bool(const Cycle&)>& fn) {
  std::vector<std::vector<int>> out(m.nv);
  for (int h = 0; h < m.darts(); ++h)
    if (!m.stem(h) && o.val[h] > 0) out[m.vert[h]].push_back(h);
  std::vector<char> on(m.nv, 0);
  Cycle path;
  std::function<bool(int, int)> dfs = [&](int s, int v) -> bool {
    for (int h : out[v]) {
      int w = m.vert[m.alpha[h]];
      if (w == s) {
        if (path.size() == 1 && m.alpha[path[0]] == h) continue;
        path.push_back(h);
        bool stop = fn(path);
        path.pop_back();
        if (stop) return true;
      } else if (w > s && !on[w]) {
        on[w] = 1;
        path.push_back(h);
        bool stop = dfs(s, w);
        path.pop_back();
        on[w] = 0;
        if (stop) return true;
      }
    }
    return false;
  };
  for (int s = 0; s < m.nv; ++s) {
    on[s] = 1;
    bool stop = dfs(s, s);
    on[s] = 0;
    if (stop) return true;
  }
  return false;
}

std::vector<Cycle> forward_cycles(const Map& m, const Orientation& o) {
  std::vector<Cycle> all;
  each_forward_cycle(m, o, [&](const Cycle& c) {
    all.push_back(c);
    return false;
  });
  return all;
}

std::optional<Cycle> find_counterclockwise_cycle(const Map& m, const Orientation& o) {
  if (m.outer < 0) throw OrientationError("no marked outer face");
  std::optional<Cycle> found;
  each_forward_cycle(m, o, [&](const Cycle& c) {
    if (outer_on_right(m, c)) {
      found = c;
      return true;
    }
    return false;
  });
  return found;
}

bool is_minimal(const Map& m, const Orientation& o) { return !find_counterclockwise_cycle(m, o); }

Orientation minimize(const Map& m, Orientation o) {
  long e = m.edges();
  long bound = 4L * o.k * e * e;
  for (long step = 0;; ++step) {
    auto c = find_counterclockwise_cycle(m, o);
    if (!c) break;
    if (step >= bound) throw OrientationError("minimize: step bound exceeded");
    for (int h : *c) {
      --o.val[h];
      ++o.val[m.alpha[h]];
    }
  }
  check_fractional(m, o);
  return o;
}

Orientation minimal_alpha_d(const Map& m, int d) {
  Orientation o = minimize(m, initial_alpha_d(m, d));
  check_target(m, o, {Target::alpha_d, d});
  return o;
}

std::vector<DirectedEdge> saturated_edges(const Map& m, const Orientation& o) {
  std::vector<DirectedEdge> out;
  for (int h = 0; h < m.darts(); ++h)
    if (!m.stem(h) && o.val[h] > 0 && o.val[m.alpha[h]] == 0) out.push_back({h, m.alpha[h]});
  return out;
}

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
using Arc = Traits::edge_descriptor;

Arc add_arc(FlowGraph& g, int a, int b, long cap) {
  auto e = boost::add_edge(a, b, g).first;
  auto r = boost::add_edge(b, a, g).first;
  boost::put(boost::edge_capacity, g, e, cap);
  boost::put(boost::edge_capacity, g, r, 0);
  boost::put(boost::edge_reverse, g, e, r);
  boost::put(boost::edge_reverse, g, r, e);
  return e;
}

}  // namespace

std::optional<Orientation> alpha_dk_orientation(const Map& m, int tau, int d, int k, Sign s) {
  if (!m.colored()) throw OrientationError("map is not bipartite");
  int rho = m.root_vertex();
  if (tau == rho || tau < 0 || tau >= m.nv) throw OrientationError("tau must be a vertex other than the root");
  if (m.degree(tau) != k) throw OrientationError("deg(tau) must equal k");
  if (k < 1 || d < k) throw OrientationError("need d >= k >= 1");
  if (std::max(m.max_degree(Color::white), m.max_degree(Color::black)) > d)
    throw OrientationError("maximum degree exceeds d");
  FlowGraph g(m.nv + 1);
  int super = m.nv;
  int src = s == Sign::minus ? rho : tau, sink = s == Sign::minus ? tau : rho;
  add_arc(g, super, src, k);
  // per white dart h: arc white->black (cap 1) and black->white (cap d)
  std::vector<std::pair<Arc, Arc>> arcs(m.darts());
  for (int h = 0; h < m.darts(); ++h) {
    if (m.color_of_dart(h) != Color::white) continue;
    int w = m.vert[h], b = m.vert[m.alpha[h]];
    arcs[h] = {add_arc(g, w, b, 1), add_arc(g, b, w, d)};
  }
  long flow = boost::edmonds_karp_max_flow(g, super, sink);
  if (flow < k) return std::nullopt;
  auto cap = boost::get(boost::edge_capacity, g);
  auto res = boost::get(boost::edge_residual_capacity, g);
  auto F = [&](Arc a) { return static_cast<int>(cap[a] - res[a]); };
  Orientation o{d + 1, std::vector<int>(m.darts())};
  for (int h = 0; h < m.darts(); ++h) {
    if (m.color_of_dart(h) != Color::white) continue;
    int wb = F(arcs[h].first), bw = F(arcs[h].second);
    o.val[h] = 1 + bw - wb;
    o.val[m.alpha[h]] = d - bw + wb;
  }
  check_target(m, o, {s == Sign::minus ? Target::alpha_dk_minus : Target::alpha_dk_plus, d, k, rho, tau});
  return o;
}

int cut_weight(const Map& m, const std::vector<char>& in_s) {
  int w = 0;
  for (int h = 0; h < m.darts(); ++h)
    if (in_s[m.vert[h]] && !in_s[m.vert[m.alpha[h]]]) ++w;
  return w;
}

std::optional<Color> cut_color(const Map& m, const std::vector<char>& in_s) {
  std::optional<Color> c;
  for (int h = 0; h < m.darts(); ++h) {
    if (!in_s[m.vert[h]] || in_s[m.vert[m.alpha[h]]]) continue;
    Color x = m.color_of_dart(h);
    if (c && *c != x) return std::nullopt;
    c = x;
  }
  return c;
}

std::optional<MinCut> min_cut(const Map& m, int tau, Color c) {
  int rho = m.root_vertex();
  int n = m.nv;
  if (n > 12) throw OrientationError("exhaustive cut enumeration limited to 12 vertices");
  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (v != rho && v != tau) others.push_back(v);
  std::optional<MinCut> best;
  for (int mask = 0; mask < (1 << others.size()); ++mask) {
    std::vector<char> in_s(n, 0);
    in_s[tau] = 1;
    for (size_t i = 0; i < others.size(); ++i)
      if ((mask >> i) & 1) in_s[others[i]] = 1;
    auto col = cut_color(m, in_s);
    if (!col || *col != c) continue;
    int w = cut_weight(m, in_s);
    if (!best || w < best->cut.weight) {
      best = MinCut{{in_s, c, w}, true, 1, {}};
      best->all_minimum = {best->cut};
    } else if (w == best->cut.weight) {
      best->unique = false;
      ++best->count;
      best->all_minimum.push_back({in_s, c, w});
    }
  }
  return best;
}

const char* name(Tightness t) {
  switch (t) {
    case Tightness::trumpet: return "trumpet";
    case Tightness::cornet: return "cornet";
    default: return "neither";
  }
}

Tightness classify_tightness(const Map& m, int tau) {
  if (tau == m.root_vertex()) throw OrientationError("tau must differ from the root vertex");
  Color c = m.color[tau];
  auto mc = min_cut(m, tau, c);
  if (!mc) return Tightness::neither;
  int trivial = m.degree(tau);
  if (c == Color::black) return mc->cut.weight == trivial ? Tightness::trumpet : Tightness::neither;
  if (mc->unique && mc->cut.weight == trivial) {
    int cnt = 0;
    for (char x : mc->cut.in_s) cnt += x;
    if (cnt == 1) return Tightness::cornet;
  }
  return Tightness::neither;
}

Orientation quasi_eulerian_minimal(const Map& m) {
  Orientation o{2, std::vector<int>(m.darts(), 1)};
  o = minimize(m, o);
  check_target(m, o, {Target::quasi_eulerian});
  return o;
}

}  // namespace bmaps
