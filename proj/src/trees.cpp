#include <algorithm>
#include <functional>

#include "bmaps/blossoming.hpp"

namespace bmaps {

namespace {

constexpr int kOpen = -1, kClose = -2;

// Planted well-charged tree as an item sequence after the planted dart.
// Items: kOpen / kClose stems, or an index into the pool of the other colour.
struct Planted {
  int grade;  // total degree, planted dart included
  int charge;
  int maxdeg;
  std::vector<int> items;
};

struct Pools {
  std::vector<Planted> pool[2];
  std::vector<std::vector<int>> by_grade[2];  // grade -> indices
};

int ci(Color c) { return static_cast<int>(c); }

// All item sequences at a vertex of colour c with cost in [lo, hi]; each item
// costs 1 (stem) or 1 + grade (child). Stems follow the colour rule.
void sequences(const Pools& P, Color c, int lo, int hi, int max_items,
               const std::function<void(const std::vector<int>&, int cost, int charge, int maxdeg)>& fn) {
  std::vector<int> items;
  int other = 1 - ci(c);
  std::function<void(int, int, int)> rec = [&](int cost, int charge, int md) {
    if (cost >= lo) fn(items, cost, charge, md);
    if (static_cast<int>(items.size()) >= max_items) return;
    if (cost + 1 <= hi) {
      items.push_back(c == Color::white ? kClose : kOpen);
      rec(cost + 1, charge + (c == Color::white ? 1 : -1), md);
      items.pop_back();
    }
    for (int g = 1; cost + 1 + g <= hi && g < static_cast<int>(P.by_grade[other].size()); ++g)
      for (int idx : P.by_grade[other][g]) {
        const Planted& t = P.pool[other][idx];
        items.push_back(idx);
        rec(cost + 1 + g, charge + t.charge, std::max(md, t.maxdeg));
        items.pop_back();
      }
  };
  rec(0, 0, 0);
}

Pools build_pools(int max_grade, int max_degree) {
  Pools P;
  for (int c = 0; c < 2; ++c) P.by_grade[c].assign(max_grade + 1, {});
  for (int g = 1; g <= max_grade; ++g)
    for (int c = 0; c < 2; ++c) {
      Color col = static_cast<Color>(c);
      sequences(P, col, g - 1, g - 1, max_degree - 1, [&](const std::vector<int>& items, int, int ch, int md) {
        if (col == Color::black ? ch > 1 : ch < 0) return;
        int deg = static_cast<int>(items.size()) + 1;
        P.by_grade[c][g].push_back(static_cast<int>(P.pool[c].size()));
        P.pool[c].push_back({g, ch, std::max(md, deg), items});
      });
    }
  return P;
}

struct Builder {
  const Pools& P;
  std::vector<int> sigma, alpha;
  std::vector<Kind> kind;
  std::vector<Color> dcol;

  int fresh(Color c, Kind k) {
    int h = static_cast<int>(sigma.size());
    sigma.push_back(h);
    alpha.push_back(h);
    kind.push_back(k);
    dcol.push_back(c);
    return h;
  }
  // ring: darts of this vertex in ccw order, starting with `first` if >= 0
  std::vector<int> vertex(Color c, const std::vector<int>& items, int first) {
    std::vector<int> ring;
    if (first >= 0) ring.push_back(first);
    for (int it : items) {
      if (it == kOpen || it == kClose) {
        ring.push_back(fresh(c, it == kOpen ? Kind::opening : Kind::closing));
        continue;
      }
      int a = fresh(c, Kind::edge);
      int b = fresh(flip(c), Kind::edge);
      alpha[a] = b;
      alpha[b] = a;
      ring.push_back(a);
      vertex(flip(c), P.pool[1 - ci(c)][it].items, b);
    }
    for (size_t i = 0; i < ring.size(); ++i) sigma[ring[i]] = ring[(i + 1) % ring.size()];
    return ring;
  }
  Map finish(int root) {
    Map m(sigma, alpha);
    m.kind = kind;
    m.root = root;
    m.outer = 0;
    m.color.assign(m.nv, Color::white);
    for (int h = 0; h < m.darts(); ++h) m.color[m.vert[h]] = dcol[h];
    return m;
  }
};

}  // namespace

std::vector<Map> enumerate_planted_trees(int max_total_degree, Color root_color) {
  if (max_total_degree < 1 || max_total_degree > 2 * kMaxTreeEdges)
    throw BlossomError("tree budget exceeded: total degree at most " + std::to_string(2 * kMaxTreeEdges));
  Pools P = build_pools(max_total_degree, max_total_degree + 1);
  std::vector<Map> out;
  int c = ci(root_color);
  for (auto& t : P.pool[c]) {
    Builder b{P, {}, {}, {}, {}};
    int root = b.fresh(root_color, Kind::planted);
    b.vertex(root_color, t.items, root);
    out.push_back(b.finish(root));
  }
  return out;
}

std::vector<Map> enumerate_well_charged_trees(int charge_k, int max_edges, std::optional<int> max_degree,
                                              Color root_color) {
  if (max_edges < 0 || max_edges > kMaxTreeEdges)
    throw BlossomError("tree budget exceeded: at most " + std::to_string(kMaxTreeEdges) + " edges");
  int smax = 2 * max_edges - std::abs(charge_k);
  std::vector<Map> out;
  if (smax < 0) return out;
  int dmax = max_degree ? *max_degree : smax + 1;
  Pools P = build_pools(std::max(smax - 1, 0), dmax);
  if (charge_k == 0) out.push_back(vertex_map(root_color));
  sequences(P, root_color, 1, smax, dmax, [&](const std::vector<int>& items, int, int ch, int) {
    if (ch != charge_k) return;
    Builder b{P, {}, {}, {}, {}};
    auto ring = b.vertex(root_color, items, -1);
    out.push_back(b.finish(ring.back()));
  });
  return out;
}

std::string stems_line(const Map& t) {
  std::string out;
  if (t.darts() == 0) return "- -";
  std::string word;
  auto flush = [&] {
    if (!out.empty()) out += ' ';
    out += word.empty() ? "-" : word;
    word.clear();
  };
  int d0 = t.sigma[t.root];
  int d = d0;
  do {
    int x = t.sigma_inv(d);
    if (t.stem(x)) {
      Kind k = t.kind_of(x);
      word += k == Kind::opening ? 'O' : k == Kind::closing ? 'C' : 'P';
    } else {
      flush();
    }
    d = t.alpha[x];
  } while (d != d0);
  flush();
  if (t.edges() == 0) out += " -";
  return out;
}

Map edge_part(const Map& t) {
  if (t.edges() == 0) return vertex_map(t.colored() ? t.color[t.root_vertex()] : Color::white);
  std::vector<int> nid(t.darts(), -1), back;
  for (int h = 0; h < t.darts(); ++h)
    if (!t.stem(h)) {
      nid[h] = static_cast<int>(back.size());
      back.push_back(h);
    }
  int n = static_cast<int>(back.size());
  std::vector<int> s(n), a(n);
  for (int i = 0; i < n; ++i) {
    int g = t.sigma[back[i]];
    while (t.stem(g)) g = t.sigma[g];
    s[i] = nid[g];
    a[i] = nid[t.alpha[back[i]]];
  }
  Map e(s, a);
  // root: first edge met on the clockwise contour from the root corner
  int d = t.sigma[t.root];
  int x = t.sigma_inv(d);
  while (t.stem(x)) x = t.sigma_inv(x);
  e.root = nid[x];
  e.outer = 0;
  if (t.colored()) {
    e.color.assign(e.nv, Color::white);
    for (int i = 0; i < n; ++i) e.color[e.vert[i]] = t.color[t.vert[back[i]]];
  }
  return e;
}

Map tree_from_parts(const Map& e, const std::string& stems) {
  std::vector<std::string> words;
  {
    std::string w;
    for (char ch : stems + " ") {
      if (ch == ' ') {
        if (!w.empty()) words.push_back(w == "-" ? "" : w);
        w.clear();
      } else {
        if (ch != 'O' && ch != 'C' && ch != 'P' && ch != '-') throw BlossomError("bad stem letter");
        w += ch;
      }
    }
  }
  int n = e.darts();
  int corners = std::max(n, 1);
  if (static_cast<int>(words.size()) != corners + 1)
    throw BlossomError("stems line needs " + std::to_string(corners + 1) + " words");
  if (n > 0 && (e.nf != 1 || e.stems() != 0)) throw BlossomError("edge part is not a plain tree");
  Map m;
  m.sigma = e.sigma;
  m.alpha = e.alpha;
  m.kind.assign(n, Kind::edge);
  auto add = [&](char ch) {
    int h = static_cast<int>(m.sigma.size());
    m.sigma.push_back(h);
    m.alpha.push_back(h);
    m.kind.push_back(ch == 'O' ? Kind::opening : ch == 'C' ? Kind::closing : Kind::planted);
    return h;
  };
  // Stems of a corner(x) in clockwise order go between sigma(x) and x.
  auto insert = [&](int x, const std::vector<int>& cw) {
    if (cw.empty()) return;
    int after = m.sigma[x];
    m.sigma[x] = cw.back();
    for (size_t i = cw.size() - 1; i > 0; --i) m.sigma[cw[i]] = cw[i - 1];
    m.sigma[cw[0]] = after;
  };
  int root = -1;
  if (n == 0) {
    std::vector<int> cw;
    for (char ch : words[0]) cw.push_back(add(ch));
    for (char ch : words[1]) cw.push_back(add(ch));
    if (cw.empty()) {
      Map v = vertex_map(e.colored() ? e.color[0] : Color::white);
      return v;
    }
    for (size_t i = 0; i < cw.size(); ++i) m.sigma[cw[i]] = cw[(i + cw.size() - 1) % cw.size()];
    root = cw[0];
  } else {
    // corners in clockwise contour order from the root corner of e
    std::vector<int> xs;
    int d0 = e.sigma[e.root], d = d0;
    do {
      int x = e.sigma_inv(d);
      xs.push_back(x);
      d = e.alpha[x];
    } while (d != d0);
    std::vector<std::vector<int>> created(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
      for (char ch : words[i]) created[i].push_back(add(ch));
    std::vector<int> last;
    for (char ch : words.back()) last.push_back(add(ch));
    root = created[0].empty() ? xs[0] : created[0][0];
    std::vector<int> first = last;
    first.insert(first.end(), created[0].begin(), created[0].end());
    insert(xs[0], first);
    for (size_t i = 1; i < xs.size(); ++i) insert(xs[i], created[i]);
  }
  m.refresh();
  m.root = root;
  for (int h = 0; h < m.darts(); ++h)
    if (m.kind[h] == Kind::planted) m.root = h;
  m.outer = 0;
  if (e.colored()) {
    m.color.assign(m.nv, Color::white);
    for (int h = 0; h < n; ++h) m.color[m.vert[h]] = e.color[e.vert[h]];
    if (n == 0) m.color = e.color;
  }
  return m;
}

}  // namespace bmaps
