#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "bmaps/formats.hpp"
#include "bmaps/gf.hpp"
#include "bmaps/planar_map.hpp"
#include "oracles.hpp"

using namespace bmaps;

namespace {

Map single_edge() { return build_map({0, 1}, {1, 0}, 0, 0); }

Map four_cycle() {
  // square w0 b1 w2 b3; darts (2i, 2i+1) along edge i, vertex i holds 2i and 2i-1
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

Monomial mono(std::map<std::string, int> e) { return Monomial{std::move(e)}; }

}  // namespace

TEST_CASE("build_map on the smallest maps") {
  auto m = single_edge();
  CHECK(m.nv == 2);
  CHECK(m.edges() == 1);
  CHECK(m.nf == 1);
  REQUIRE(m.colored());
  CHECK(m.color[m.root_vertex()] == Color::white);

  auto loop = build_map({1, 0}, {1, 0}, 0, 0);
  CHECK(loop.nv == 1);
  CHECK(loop.nf == 2);
  CHECK_FALSE(loop.colored());
}

TEST_CASE("build_map rejects invalid input") {
  try {
    build_map({0, 1, 2, 3}, {1, 0, 3, 2}, 0, 0);
    FAIL("two isolated edges accepted");
  } catch (const MapError& e) {
    CHECK(std::string(e.what()).find("disconnected") != std::string::npos);
  }
  CHECK_THROWS_AS(build_map({0, 1}, {0, 1}, 0, 0), MapError);              // fixed point
  CHECK_THROWS_AS(build_map({1, 2, 3, 0}, {2, 3, 0, 1}, 0, 0), MapError);  // crossing loops, genus 1
  CHECK_THROWS_AS(build_map({0, 1}, {1, 0}, 0, 5), MapError);              // no such face
}

TEST_CASE("dual of small maps") {
  auto d = dual(single_edge());
  CHECK(d.map.nv == 1);
  CHECK(d.map.edges() == 1);
  CHECK(d.map.nf == 2);

  auto c = four_cycle();
  CHECK(c.nf == 2);
  auto d4 = dual(c);
  CHECK(d4.map.nv == 2);
  CHECK(d4.map.edges() == 4);
  for (int h = 0; h < 8; ++h) CHECK(d4.map.vert[h] != d4.map.vert[d4.map.alpha[h]]);
  for (int v = 0; v < d4.map.nv; ++v) CHECK(d4.map.degree(v) % 2 == 0);
}

// sigma'' = alpha sigma alpha, so h -> alpha(h) is an isomorphism m -> dual(dual(m))
TEST_CASE("dual of dual is conjugation by alpha on maps up to 4 edges") {
  long n = 0;
  for (int e = 1; e <= 4; ++e)
    for (auto m : enumerate_rooted_planar(e)) {
      m.outer = m.face[m.root];
      auto dd = dual(dual(m).map).map;
      CHECK(canonical_code(dd, dd.alpha[m.root]) == canonical_code(m, m.root));
      ++n;
    }
  CHECK(n == 2 + 9 + 54 + 378);
}

TEST_CASE("canonical codes are invariant under relabelling") {
  std::mt19937 rng(12345);
  for (int e = 1; e <= 3; ++e)
    for (auto m : enumerate_rooted_planar(e)) {
      m.outer = m.face[m.root];
      auto code = canonical_code(m);
      std::vector<int> p(m.darts());
      for (int rep = 0; rep < 100; ++rep) {
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(canonical_code(relabel(m, p)) == code);
      }
    }
}

TEST_CASE("canonical codes separate marked faces and are stable") {
  // two parallel edges: the two faces are told apart by the root
  auto m = build_map({2, 3, 0, 1}, {1, 0, 3, 2}, 0, 0);
  REQUIRE(m.nf == 2);
  Map a = m, b = m;
  b.outer = 1;
  CHECK(canonical_code(a) != canonical_code(b));
  CHECK(canonical_code(single_edge()) == canonical_code(build_map({0, 1}, {1, 0}, 0, 0)));
  CHECK_FALSE(canonical_code(single_edge()).empty());
}

TEST_CASE("rooted planar enumeration equals the permutation oracle") {
  // counts produced by the oracle, frozen
  const long expected[] = {0, 2, 9, 54, 378};
  for (int e = 1; e <= 4; ++e) {
    auto raw = oracle::rooted_planar_maps(e);
    auto lib = enumerate_rooted_planar(e);
    CHECK(static_cast<long>(raw.size()) == expected[e]);
    CHECK(lib.size() == raw.size());
    std::map<std::vector<int>, long> a, b;  // vertex degree multisets
    for (auto& r : raw) {
      auto d = r.vdeg;
      std::sort(d.begin(), d.end());
      ++a[d];
    }
    for (auto& m : lib) {
      std::vector<int> d;
      for (int v = 0; v < m.nv; ++v) d.push_back(m.degree(v));
      std::sort(d.begin(), d.end());
      ++b[d];
    }
    CHECK(a == b);
    std::set<std::string> codes;
    for (auto& m : lib) codes.insert(canonical_code(m));
    CHECK(codes.size() == lib.size());
  }
}

TEST_CASE("bipartite plane map enumeration") {
  CHECK(enumerate_bipartite_plane_maps(0, std::nullopt, Color::white).size() == 1);
  auto one = enumerate_bipartite_plane_maps(1, std::nullopt, Color::white);
  REQUIRE(one.size() == 1);
  CHECK(one[0].nf == 1);
  CHECK_THROWS_AS(enumerate_bipartite_plane_maps(6, std::nullopt, Color::white), MapError);

  auto want = oracle::plane_map_counts(4);
  std::map<std::pair<int, oracle::Profile>, long> got;
  for (int e = 1; e <= 4; ++e)
    for (auto& m : enumerate_bipartite_plane_maps(e, std::nullopt, Color::white)) {
      auto p = degree_profile(m);
      ++got[{e, {p.white, p.black}}];
    }
  CHECK(got == want);
  // totals per edge count, frozen from the oracle
  std::map<int, long> tot;
  for (auto& [k, c] : want) tot[k.first] += c;
  CHECK(tot == std::map<int, long>{{1, 1}, {2, 4}, {3, 20}, {4, 112}});
}

TEST_CASE("two-edge plane maps match the series at order 2") {
  std::map<Monomial, Rational> want;
  for (auto& m : enumerate_bipartite_plane_maps(2, std::nullopt, Color::white)) want[weight(m, Scheme::plane)] += 1;
  auto s = plane_map_series(solve_tree_system(map_ring(2)));
  std::map<Monomial, Rational> got;
  for (auto& [e, c] : s.terms())
    if (s.ring()->grade(e) == 4) got[s.monomial_of(e)] = c;
  CHECK(got == want);
}

TEST_CASE("bipartite iff every face has even degree") {
  for (int e = 1; e <= 4; ++e)
    for (auto& m : enumerate_rooted_planar(e)) {
      bool even = true;
      for (int f = 0; f < m.nf; ++f) even = even && m.face_degree(f) % 2 == 0;
      CHECK(even == !bipartite_coloring(m).empty());
    }
}

TEST_CASE("spin map enumeration") {
  auto one = enumerate_spin_maps(1, 4);
  CHECK(one.size() == 4);  // two planar loop pairings, two spins each
  for (auto& s : one) CHECK(s.spins.mono == 2);
  CHECK(enumerate_spin_maps(0, 4).empty());
  CHECK_THROWS_AS(enumerate_spin_maps(4, 4), MapError);
  CHECK_THROWS_AS(enumerate_spin_maps(2, 3), MapError);
}

TEST_CASE("weights") {
  CHECK(weight(single_edge(), Scheme::plane) == mono({{"x1", 1}, {"y1", 1}}));
  CHECK(weight(single_edge(), Scheme::planar) == mono({{"x1", 1}, {"y1", 1}, {"u", 1}}));
  for (auto& s : enumerate_spin_maps(1, 4))
    if (s.spins.spin[0] == Color::white)
      CHECK(weight(s.map, Scheme::ising, &s.spins) == mono({{"x4", 1}, {"t", 2}, {"nu", 2}, {"u", 3}}));
  for (int e = 1; e <= 3; ++e)
    for (auto& m : enumerate_bipartite_plane_maps(e, std::nullopt, Color::white)) {
      auto a = weight(m, Scheme::planar);
      a.mul("u", -1);
      CHECK(a == weight(m, Scheme::plane));
    }
  CHECK_THROWS(weight(single_edge(), Scheme::ising));
}

TEST_CASE("map exchange format round trips") {
  std::ostringstream all;
  for (int e = 0; e <= 3; ++e)
    for (auto& m : enumerate_bipartite_plane_maps(e, std::nullopt, Color::black)) all << write_map(m) << '\n';
  std::istringstream in(all.str());
  auto recs = read_records(in);
  size_t i = 0;
  for (int e = 0; e <= 3; ++e)
    for (auto& m : enumerate_bipartite_plane_maps(e, std::nullopt, Color::black)) {
      REQUIRE(i < recs.size());
      auto back = map_of(recs[i++]);
      CHECK(canonical_code(back) == canonical_code(m));
      CHECK(back.color == m.color);
    }
  CHECK(i == recs.size());
  CHECK(write_map(single_edge()) == "darts 2\nsigma 1 2\nalpha 2 1\nroot 1 outer 0\ncolors w b\n");
}

TEST_CASE("face positions follow the sorted rotated cycles") {
  for (int e = 1; e <= 3; ++e)
    for (auto& m : enumerate_rooted_planar(e))
      for (int f = 0; f < m.nf; ++f) CHECK(face_from_position(m, face_position(m, f)) == f);
}
