#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "bmaps/formats.hpp"
#include "bmaps/mobiles.hpp"
#include "oracles.hpp"

using namespace bmaps;

namespace {

Map four_cycle() {
  std::vector<int> s(8), a(8);
  for (int i = 0; i < 4; ++i) {
    a[2 * i] = 2 * i + 1;
    a[2 * i + 1] = 2 * i;
    int out = 2 * i, in = (2 * i + 7) % 8;
    s[out] = in;
    s[in] = out;
  }
  return build_map(s, a, 0, 0);
}

std::vector<Map> plane_maps(int max_edges) {
  std::vector<Map> out;
  for (int e = 1; e <= max_edges; ++e)
    for (auto& m : enumerate_bipartite_plane_maps(e, std::nullopt, Color::white)) out.push_back(m);
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("geodesic labels on small duals") {
  auto path = enumerate_bipartite_plane_maps(2, std::nullopt, Color::white);
  for (auto& m : path)
    if (m.nf == 1) {
      auto d = dual(m);
      auto g = geodesic_labeling(d, d.pointed);
      CHECK(g.labels == std::vector<int>{0});
    }
  auto c = four_cycle();
  auto d = dual(c);
  auto g = geodesic_labeling(d, d.pointed);
  REQUIRE(g.labels.size() == 2);
  CHECK(g.labels[d.pointed] == 0);
  CHECK(g.labels[1 - d.pointed] == 1);
}

TEST_CASE("geodesic labels are the unique labelling meeting the three conditions") {
  for (auto& m : plane_maps(4)) {
    auto d = dual(m);
    auto all = oracle::geodesic_labelings(d);
    REQUIRE(all.size() == 1);
    auto g = geodesic_labeling(d, d.pointed);
    CHECK(all[0] == g.labels);
    CHECK(geodesic_conditions_hold(d, g));
  }
}

TEST_CASE("geodesic relation with alpha_d orientations") {
  auto e = enumerate_bipartite_plane_maps(1, std::nullopt, Color::white)[0];
  CHECK(check_geodesic_relation(e, minimal_alpha_d(e, 1), 1));
  long neg = 0;
  for (auto& m : plane_maps(4)) {
    int D = m.max_degree(Color::white);
    auto o = minimal_alpha_d(m, D);
    CHECK(check_geodesic_relation(m, o, D));
    for (auto& c : forward_cycles(m, o)) {
      auto q = o;
      for (int h : c) {
        --q.val[h];
        ++q.val[m.alpha[h]];
      }
      bool ok = true;
      for (int x : q.val) ok = ok && x >= 0 && x <= D + 1;
      if (!ok || is_minimal(m, q)) continue;
      CHECK_FALSE(check_geodesic_relation(m, q, D));
      ++neg;
      break;
    }
  }
  CHECK(neg > 10);
}

TEST_CASE("subdivision into a bipartite map") {
  auto edge = build_map({0, 1}, {1, 0}, 0, 0);
  auto s = subdivide_to_bipartite(edge);
  CHECK(s.nv == 3);
  CHECK(s.edges() == 2);
  CHECK(s.nf == 1);

  auto loop = build_map({1, 0}, {1, 0}, 0, 0);
  auto l = subdivide_to_bipartite(loop);
  CHECK(l.nv == 2);
  CHECK(l.edges() == 2);
  CHECK(l.nf == 2);
  REQUIRE(l.colored());
  int black = 0;
  for (int v = 0; v < l.nv; ++v)
    if (l.color[v] == Color::black) {
      ++black;
      CHECK(l.degree(v) == 2);
    }
  CHECK(black == 1);

  for (int e = 1; e <= 3; ++e)
    for (auto m : enumerate_rooted_planar(e)) {
      m.outer = m.face[m.root];
      int D = max_vertex_degree(m);
      auto sub = subdivide_to_bipartite(m);
      auto pb = pull_back_quasi_eulerian(m, sub, quasi_eulerian_minimal(m), D);
      CHECK(pb == minimal_alpha_d(sub, D));
    }
}

TEST_CASE("Phi_BF parameter correspondences") {
  for (auto& m : plane_maps(4)) {
    int D = m.max_degree(Color::white);
    for (int d : {D, D + 1}) {
      auto o = minimal_alpha_d(m, d);
      auto b = phi_BF(m, o);
      CHECK(b.excess() == m.face_degree(m.outer));
      int rs = 0;
      std::vector<int> sq, faces, white_m, white_b;
      for (int h = 0; h < b.tree.darts(); ++h)
        if (!b.tree.stem(h) && b.type[b.tree.vert[h]] == NodeType::square &&
            b.type[b.tree.vert[b.tree.alpha[h]]] != NodeType::square)
          ++rs;
      CHECK(rs == static_cast<int>(saturated_edges(m, o).size()));
      for (int v = 0; v < b.tree.nv; ++v) {
        if (b.type[v] == NodeType::square) sq.push_back(b.tree.degree(v));
        if (b.type[v] == NodeType::white) white_b.push_back(b.tree.degree(v));
      }
      for (int f = 0; f < m.nf; ++f)
        if (f != m.outer) faces.push_back(m.face_degree(f));
      for (int v = 0; v < m.nv; ++v)
        if (m.color[v] == Color::white) white_m.push_back(m.degree(v));
      CHECK(sorted(sq) == sorted(faces));
      CHECK(sorted(white_b) == sorted(white_m));
      CHECK(d_blossoming_violations(b, d).empty());
      CHECK_THROWS_AS(phi_BF(m, o, true), MobileError);
    }
  }
}

TEST_CASE("Phi_BDG on the four-cycle") {
  auto d = dual(four_cycle());
  auto lm = phi_BDG(d);
  int squares = 0;
  for (int v = 0; v < lm.tree.nv; ++v)
    if (lm.type[v] == NodeType::square) {
      ++squares;
      CHECK(lm.label[v] == 1);
    }
  CHECK(squares == 1);
  CHECK(labeled_mobile_violations(lm).empty());
  CHECK_THROWS_AS(phi_BDG(dual(vertex_map())), MobileError);
}

TEST_CASE("Phi_BDG parameter correspondences") {
  for (auto& m : plane_maps(4)) {
    if (m.nf < 2) continue;
    auto d = dual(m);
    auto lm = phi_BDG(d);
    CHECK(labeled_mobile_violations(lm).empty());
    auto g = geodesic_labeling(d, d.pointed);
    std::vector<int> labels, sq, white_m, white_t;
    for (int v = 0; v < d.map.nv; ++v)
      if (v != d.pointed) labels.push_back(g.labels[v]);
    for (int v = 0; v < lm.tree.nv; ++v) {
      if (lm.type[v] == NodeType::square) sq.push_back(lm.label[v]);
      if (lm.type[v] == NodeType::white) white_t.push_back(lm.tree.degree(v));
    }
    for (int v = 0; v < m.nv; ++v)
      if (m.color[v] == Color::white) white_m.push_back(m.degree(v));
    CHECK(sorted(sq) == sorted(labels));
    CHECK(sorted(white_t) == sorted(white_m));
    int ones = 0;
    for (auto& e : contour_events(lm))
      if ((e.corner && e.label == 1) || (!e.corner && e.label == 0)) ++ones;
    CHECK(ones == m.face_degree(m.outer));
    int D = m.max_degree(Color::white);
    for (int h = 0; h < lm.tree.darts(); ++h)
      if (lm.flag[h] >= 0) CHECK(std::abs(lm.flag[h] - lm.flag[lm.tree.alpha[h]]) <= D - 1);
  }
}

TEST_CASE("Upsilon_d") {
  long n = 0;
  for (int extra : {0, 1}) {
    std::map<std::string, std::string> image;  // blossoming code -> labeled code
    for (auto& m : plane_maps(4)) {
      if (m.nf < 2) continue;
      int d = m.max_degree(Color::white) + extra;
      auto lm = phi_BDG(dual(m));
      auto b = upsilon_d(lm, d);
      CHECK(d_blossoming_violations(b, d).empty());
      // equal flags on a white-black edge give O(white side) = 1
      for (int h = 0; h < lm.tree.darts(); ++h)
        if (lm.flag[h] >= 0 && lm.type[lm.tree.vert[h]] == NodeType::white && lm.flag[h] == lm.flag[lm.tree.alpha[h]])
          CHECK(b.o.val[h] == 1);
      auto [it, fresh] = image.emplace(mobile_code(b), mobile_code(lm));
      if (!fresh) CHECK(it->second == mobile_code(lm));
      ++n;
    }
  }
  CHECK(n > 100);
}

TEST_CASE("commutation") {
  CHECK(check_commutation(four_cycle(), 2));
  for (auto& m : plane_maps(3)) {
    int D = m.max_degree(Color::white);
    CHECK(check_commutation(m, D));
    CHECK(check_commutation(m, D + 1));
  }
}

TEST_CASE("mobile exchange format") {
  for (auto& m : plane_maps(3)) {
    if (m.nf < 2) continue;
    int D = m.max_degree(Color::white);
    auto b = phi_BF(m, minimal_alpha_d(m, D));
    auto lm = phi_BDG(dual(m));
    std::istringstream in(write_mobile(b) + "\n" + write_mobile(lm));
    auto recs = read_records(in);
    REQUIRE(recs.size() == 2);
    CHECK(mobile_code(blossoming_mobile_of(recs[0])) == mobile_code(b));
    CHECK(mobile_code(labeled_mobile_of(recs[1])) == mobile_code(lm));
  }
}
