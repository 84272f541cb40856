#include <doctest.h>

#include <algorithm>
#include <random>

#include "hypo/constructions.hpp"
#include "hypo/errors.hpp"
#include "hypo/planar.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hypo;

namespace {

void check_euler(const Graph& g, const Embedding& e) {
  REQUIRE(is_valid_plane_embedding(g, e));
  long long darts = 0;
  for (const auto& f : e.faces) darts += static_cast<long long>(f.size());
  CHECK(darts == 2LL * g.size());
  CHECK(g.order() - g.size() + e.face_count() == 2);
}

}  // namespace

TEST_CASE("named graphs") {
  CHECK(is_planar(testing::complete(4)));
  CHECK_FALSE(is_planar(testing::complete(5)));
  CHECK_FALSE(is_planar(testing::complete_bipartite(3, 3)));
  CHECK(is_planar(testing::complete_bipartite(2, 7)));
  CHECK_FALSE(is_planar(petersen()));
  CHECK(is_planar(Graph(0)));
  CHECK(is_planar(disjoint_union(testing::complete(4), testing::cycle(5))));
  CHECK_FALSE(is_planar(disjoint_union(testing::cycle(3), testing::complete(5))));
}

TEST_CASE("face sizes of small embeddings") {
  const auto k4 = planar_embedding(testing::complete(4));
  REQUIRE(k4);
  CHECK(face_sizes(*k4).sizes == std::vector<int>{3, 3, 3, 3});
  const auto c6 = planar_embedding(testing::cycle(6));
  REQUIRE(c6);
  CHECK(face_sizes(*c6).sizes == std::vector<int>{6, 6});
  const auto p3 = planar_embedding(testing::path(3));
  REQUIRE(p3);
  CHECK(face_sizes(*p3).sizes == std::vector<int>{4});
  const auto single = planar_embedding(Graph(1));
  REQUIRE(single);
  CHECK(single->face_count() == 1);
  CHECK_THROWS_AS(planar_embedding(Graph(2)), InputError);
}

TEST_CASE("the bundled 42-vertex graph embeds with 26 pentagons and one quadrilateral") {
  const Graph g = wiener_araya();
  const auto e = planar_embedding(g);
  REQUIRE(e);
  check_euler(g, *e);
  std::vector<int> expected(26, 5);
  expected.insert(expected.begin(), 4);
  CHECK(face_sizes(*e).sizes == expected);
}

TEST_CASE("a corrupted rotation is rejected") {
  const Graph g = testing::complete(4);
  auto e = planar_embedding(g);
  REQUIRE(e);
  std::swap(e->rotation[0][0], e->rotation[0][1]);
  e->faces = trace_faces(e->rotation);
  CHECK_FALSE(is_valid_plane_embedding(g, *e));
}

TEST_CASE("planarity verdicts match rotation-system enumeration up to 6 vertices") {
  int planar = 0;
  int total = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      const bool expected = oracle::is_planar_brute(g);
      REQUIRE(is_planar(g) == expected);
      planar += expected;
      ++total;
    }
  }
  CHECK(total == 143);
  CHECK(planar == 129);  // connected planar graphs: 1, 1, 2, 6, 20, 99
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(6, 0.5, rng);
    REQUIRE(is_planar(g) == oracle::is_planar_brute(g));
  }
}

TEST_CASE("Euler's formula on every embedding of connected graphs up to 8 vertices") {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      if (auto e = planar_embedding(g)) check_euler(g, *e);
    }
  }
}

TEST_CASE("face multiset of a 3-connected planar graph survives relabeling") {
  const Graph g = wiener_araya();
  const auto base = face_sizes(*planar_embedding(g));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto perm = oracle::random_permutation(g.order(), rng);
    const Graph h = permute(g, perm);
    const auto e = planar_embedding(h);
    REQUIRE(e);
    check_euler(h, *e);
    CHECK(face_sizes(*e) == base);
  }
}

TEST_CASE("random straight-line graphs are recognized as planar") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_geometric_planar(20, 0.8, rng);
    CHECK(is_planar(g));
  }
}
