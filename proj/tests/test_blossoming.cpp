#include <doctest.h>

#include <set>
#include <sstream>

#include "bmaps/blossoming.hpp"
#include "bmaps/formats.hpp"
#include "oracles.hpp"

using namespace bmaps;

namespace {

Map edge_map(Color root) { return build_map({0, 1}, {1, 0}, 0, 0, root); }

Map tree(Color root, const std::string& stems) { return tree_from_parts(vertex_map(root), stems); }
Map edge_tree(Color root, const std::string& stems) { return tree_from_parts(edge_map(root), stems); }

int max_deg(const Map& m) {
  int d = 1;
  for (int v = 0; v < m.nv; ++v) d = std::max(d, m.degree(v));
  return d;
}

int count_kind(const Map& m, Kind k) {
  int c = 0;
  for (int h = 0; h < m.darts(); ++h)
    if (m.stem(h) && m.kind_of(h) == k) ++c;
  return c;
}

}  // namespace

TEST_CASE("charge") {
  auto plain = edge_tree(Color::white, "- - -");
  CHECK(charge(plain).total == 0);
  for (int c : charge(plain).per_vertex) CHECK(c == 0);

  std::vector<Map> minus3;
  for (auto& t : enumerate_planted_trees(4, Color::black))
    if (charge(t).total == -3) minus3.push_back(t);
  REQUIRE(minus3.size() == 1);
  CHECK(minus3[0].nv == 1);
  CHECK(tree_weight(minus3[0]) == Monomial{{{"y4", 1}, {"u", 3}}});

  // white root with three closing stems and one opening-stem black child
  auto t = edge_tree(Color::white, "C O CC");
  CHECK(charge(t).total == 2);
}

TEST_CASE("well-charged predicate") {
  CHECK(is_well_charged(tree(Color::white, "- -")).ok);
  auto bad = edge_tree(Color::black, "- O -");  // the white leaf carries an opening stem
  auto w = is_well_charged(bad);
  CHECK_FALSE(w.ok);
  CHECK_FALSE(w.violations.empty());
  for (int k = -2; k <= 2; ++k)
    for (Color rc : {Color::white, Color::black})
      for (auto& t : enumerate_well_charged_trees(k, 4, std::nullopt, rc)) {
        CHECK(is_well_charged(t).ok);
        CHECK(charge(t).total == k);
        CHECK(t.color[t.root_vertex()] == rc);
      }
  CHECK_THROWS(enumerate_well_charged_trees(0, 9, std::nullopt, Color::white));
}

TEST_CASE("smallest trees of charge one") {
  bool found = false;
  for (auto& t : enumerate_well_charged_trees(1, 1, std::nullopt, Color::white))
    if (t.nv == 1 && t.stems() == 1 && count_kind(t, Kind::closing) == 1) found = true;
  CHECK(found);
}

TEST_CASE("planted trees match the independent tree generator") {
  for (bool black : {true, false}) {
    std::map<std::pair<int, Monomial>, long> want, got;
    for (auto& t : oracle::planted_trees(10, black))
      if (oracle::well_charged(t, black)) ++want[{oracle::charge(t), oracle::weight(t, black)}];
    for (auto& t : enumerate_planted_trees(10, black ? Color::black : Color::white)) {
      CHECK(is_planted(t));
      ++got[{charge(t).total, tree_weight(t)}];
    }
    CHECK(got == want);
  }
}

TEST_CASE("tree orientations") {
  Map star;
  for (auto& t : enumerate_planted_trees(4, Color::black))
    if (charge(t).total == -3) star = t;
  auto o = orient_tree(star, 4);
  int out = 0;
  for (int h = 0; h < star.darts(); ++h) {
    out += o.val[h];
    if (star.kind_of(h) == Kind::planted) CHECK(o.val[h] == 1);
    if (star.kind_of(h) == Kind::opening) CHECK(o.val[h] == 5);
  }
  CHECK(out == 16);

  // excess law on planted trees
  for (Color rc : {Color::white, Color::black})
    for (auto& t : enumerate_planted_trees(8, rc)) {
      int d = max_deg(t) + 1, c = charge(t).total;
      int exc = rc == Color::white ? c + 1 : d + c;
      bool admissible = rc == Color::white ? (exc >= 1 && exc <= d) : (exc >= 1 && exc <= d + 1);
      if (!admissible) {
        CHECK_THROWS(orient_tree(t, d));
        continue;
      }
      auto q = orient_tree(t, d);
      for (int h = 0; h < t.darts(); ++h) {
        if (t.kind_of(h) == Kind::planted) CHECK(q.val[h] == exc);
        if (t.kind_of(h) == Kind::opening) CHECK(t.color_of_dart(h) == Color::black);
        if (t.kind_of(h) == Kind::closing) CHECK(t.color_of_dart(h) == Color::white);
      }
    }
  CHECK_THROWS(orient_tree(star, 3));
}

TEST_CASE("trivial one-stem trees are not alpha_{1,1} trees") {
  CHECK_THROWS(orient_tree(tree(Color::black, "C -"), 1));
  CHECK_THROWS(orient_tree(tree(Color::white, "O -"), 1));
}

TEST_CASE("closure") {
  auto plain = edge_tree(Color::white, "- - -");
  CHECK(canonical_code(closure(plain)) == canonical_code(edge_map(Color::white)));

  auto two = closure(edge_tree(Color::black, "O C -"));
  CHECK(two.nv == 2);
  CHECK(two.edges() == 2);
  CHECK(two.nf == 2);
  CHECK(two.stems() == 0);

  for (int k = 1; k <= 3; ++k)
    for (auto& t : enumerate_well_charged_trees(k, 4, std::nullopt, Color::white)) {
      auto c = closure(t);
      CHECK(count_kind(c, Kind::closing) == k);
      CHECK(count_kind(c, Kind::opening) == 0);
    }
}

TEST_CASE("closure preserves degrees and root colour, created edges are saturated") {
  for (Color rc : {Color::white, Color::black})
    for (auto& t : enumerate_well_charged_trees(0, 5, std::nullopt, rc)) {
      auto m = closure(t);
      CHECK(degree_profile(m) == degree_profile(t));
      CHECK(m.color[m.root_vertex()] == rc);
      auto o = minimal_alpha_d(m, max_deg(t));
      for (int h = 0; h < t.darts(); ++h)
        if (t.stem(h) && t.kind_of(h) == Kind::opening) {
          CHECK(o.val[m.alpha[h]] == 0);
          CHECK(o.val[h] > 0);
        }
    }
}

TEST_CASE("closure counts match the map oracle profile by profile") {
  auto want = oracle::plane_map_counts(4);
  std::map<std::pair<int, oracle::Profile>, long> got;
  std::set<std::string> codes;
  for (auto& t : enumerate_well_charged_trees(0, 4, std::nullopt, Color::white)) {
    auto m = closure(t);
    if (m.edges() == 0) continue;
    auto p = degree_profile(m);
    ++got[{m.edges(), {p.white, p.black}}];
    CHECK(codes.insert(canonical_code(m)).second);
  }
  CHECK(got == want);
}

TEST_CASE("complete closure") {
  auto corn = complete_closure(tree(Color::black, "OO -"));
  CHECK(corn.map.edges() == 2);
  CHECK(corn.map.nf == 2);
  CHECK(corn.map.color[corn.tau] == Color::white);
  CHECK(corn.map.degree(corn.tau) == 2);
  CHECK(classify_tightness(corn.map, corn.tau) == Tightness::cornet);

  auto tr = complete_closure(tree(Color::white, "C -"));
  CHECK(tr.map.edges() == 1);
  CHECK(tr.map.color[tr.tau] == Color::black);
  CHECK(classify_tightness(tr.map, tr.tau) == Tightness::trumpet);

  CHECK_THROWS(complete_closure(edge_tree(Color::white, "- - -")));

  for (int k = 1; k <= 3; ++k)
    for (Color rc : {Color::white, Color::black}) {
      for (auto& t : enumerate_well_charged_trees(k, 4, std::nullopt, rc)) {
        auto p = complete_closure(t);
        CHECK(p.map.degree(p.tau) == k);
        CHECK(classify_tightness(p.map, p.tau) == Tightness::trumpet);
      }
      for (auto& t : enumerate_well_charged_trees(-k, 4, std::nullopt, rc)) {
        auto p = complete_closure(t);
        CHECK(p.map.degree(p.tau) == k);
        CHECK(classify_tightness(p.map, p.tau) == Tightness::cornet);
      }
    }
}

TEST_CASE("opening") {
  // a tree-shaped map is its own opening
  for (auto& m : enumerate_bipartite_plane_maps(3, std::nullopt, Color::white)) {
    if (m.nf != 1) continue;
    int D = m.max_degree(Color::white);
    auto t = opening(m, minimal_alpha_d(m, D));
    CHECK(t.stems() == 0);
    CHECK(canonical_code(t) == canonical_code(m));
  }
  for (auto& t : enumerate_well_charged_trees(0, 4, std::nullopt, Color::white)) {
    int D = max_deg(t);
    auto m = closure(t);
    CHECK(canonical_code(opening(m, minimal_alpha_d(m, D))) == canonical_code(t));
  }
  // reverse a clockwise cycle: the orientation stays alpha_d but is no longer minimal
  long refused = 0;
  for (int e = 2; e <= 4; ++e)
    for (auto& m : enumerate_bipartite_plane_maps(e, std::nullopt, Color::white)) {
      int D = m.max_degree(Color::white);
      auto o = minimal_alpha_d(m, D);
      for (auto& c : forward_cycles(m, o)) {
        auto q = o;
        for (int h : c) {
          --q.val[h];
          ++q.val[m.alpha[h]];
        }
        bool ok = true;
        for (int x : q.val) ok = ok && x >= 0 && x <= D + 1;
        if (!ok || is_minimal(m, q)) continue;
        try {
          opening(m, q);
          FAIL("non-minimal orientation opened");
        } catch (const BlossomError& err) {
          CHECK(std::string(err.what()).find("opening mismatch") != std::string::npos);
          ++refused;
        }
        break;
      }
    }
  CHECK(refused > 10);
}

TEST_CASE("doubly rooted decomposition") {
  auto e = edge_map(Color::white);
  auto dc = decompose_doubly_rooted({e, 1});
  CHECK(dc.k == 1);
  CHECK(dc.trumpet.map.edges() == 1);
  CHECK(dc.cornet.map.edges() == 1);
  CHECK(doubly_rooted_code(glue(dc.trumpet, dc.cornet, 0)) == doubly_rooted_code({e, 1}));

  auto b = edge_map(Color::black);
  try {
    decompose_doubly_rooted({b, 1});
    FAIL("black root next to a white second root decomposed");
  } catch (const BlossomError& err) {
    CHECK(std::string(err.what()).find("inseparable") != std::string::npos);
  }

  // two parallel edges on both sides: k = 2 gives two different gluings
  auto tp = complete_closure(tree(Color::white, "CC -"));
  auto cn = complete_closure(tree(Color::black, "OO -"));
  REQUIRE(tp.map.degree(tp.tau) == 2);
  auto g0 = glue(tp, cn, 0), g1 = glue(tp, cn, 1);
  CHECK(doubly_rooted_code(g0) != doubly_rooted_code(g1));
  for (auto& g : {g0, g1}) {
    auto d2 = decompose_doubly_rooted(g);
    CHECK(d2.k == 2);
    CHECK(pointed_code(d2.trumpet) == pointed_code(tp));
    CHECK(pointed_code(d2.cornet) == pointed_code(cn));
  }
}

TEST_CASE("tree exchange format") {
  std::ostringstream all;
  auto trees = enumerate_well_charged_trees(1, 3, std::nullopt, Color::black);
  for (auto& t : trees) all << write_tree(t) << '\n';
  std::istringstream in(all.str());
  auto recs = read_records(in);
  REQUIRE(recs.size() == trees.size());
  for (size_t i = 0; i < trees.size(); ++i) CHECK(canonical_code(map_of(recs[i])) == canonical_code(trees[i]));
  CHECK(write_tree(edge_tree(Color::black, "O C -")) ==
        "darts 2\nsigma 1 2\nalpha 2 1\nroot 1 outer 0\ncolors b w\nstems O C -\n");
}
