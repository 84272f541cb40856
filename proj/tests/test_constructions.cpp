#include <doctest.h>

#include <random>

#include "hypo/constructions.hpp"
#include "hypo/errors.hpp"
#include "hypo/hamilton.hpp"
#include "hypo/planar.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hypo;

TEST_CASE("Petersen fixture") {
  const Graph g = petersen();
  CHECK(g.order() == 10);
  CHECK(g.size() == 15);
  CHECK(g.min_degree() == 3);
  CHECK(g.max_degree() == 3);
  std::mt19937_64 rng(1);
  const auto perm = oracle::random_permutation(10, rng);
  CHECK(oracle::canonical_code(g) == oracle::canonical_code(permute(g, perm)));
}

TEST_CASE("42-vertex asset") {
  const Graph g = wiener_araya();
  CHECK(g.order() == 42);
  CHECK(g.size() == 67);
  CHECK(is_k_connected(g, 3));
  CHECK_FALSE(is_k_connected(g, 4));
  CHECK(cubic_vertices(g).size() == 34);
  CHECK(wiener_araya_asset().find("# thomassen-pivot:") != std::string_view::npos);
  const CombinePart part = wiener_araya_part();
  CHECK(part.graph.degree(part.pivot) == 3);
}

TEST_CASE("combination arithmetic") {
  const CombinePart p = make_part(petersen(), 0);
  CHECK(p.roles == std::array<Vertex, 3>{1, 4, 5});
  const CombinedGraph four = thomassen_combine({{p, p, p, p}});
  CHECK(four.graph.order() == 34);
  CHECK(four.graph.size() == 4 * (15 - 3) + 4);
  CHECK(is_connected(four.graph));
  CHECK(four.graph == thomassen_petersen());

  const CombinePart w = wiener_araya_part();
  const CombinedGraph mixed = thomassen_combine({{p, p, w, w}});
  CHECK(mixed.graph.order() == 9 + 9 + 41 + 41 - 2);

  const Graph big = thomassen_wiener_araya();
  CHECK(big.order() == 162);
  CHECK(big.size() == 4 * (67 - 3) + 4);
  CHECK(is_planar(big));
  CHECK(is_connected(big));
}

TEST_CASE("merged vertices and cross edges") {
  const CombinePart p = make_part(petersen(), 0);
  const CombinedGraph c = thomassen_combine({{p, p, p, p}});
  auto id = [&](int part, Vertex v) { return c.id_maps[static_cast<std::size_t>(part)][static_cast<std::size_t>(v)]; };
  CHECK(id(0, 0) == -1);
  CHECK(id(0, 1) == id(1, 1));
  CHECK(id(2, 1) == id(3, 1));
  CHECK(c.graph.degree(id(0, 1)) == 4);
  CHECK(c.graph.adjacent(id(0, 4), id(2, 4)));
  CHECK(c.graph.adjacent(id(0, 5), id(2, 5)));
  CHECK(c.graph.adjacent(id(1, 4), id(3, 4)));
  CHECK(c.graph.adjacent(id(1, 5), id(3, 5)));
  for (Vertex v : {4, 5}) {
    for (int part = 0; part < 4; ++part) CHECK(c.graph.degree(id(part, v)) == 3);
  }
}

TEST_CASE("recipe validation") {
  const CombinePart p = make_part(petersen(), 0);
  CHECK_THROWS_AS(thomassen_combine({{p, p, p}}), InputError);
  CombinePart bad = p;
  bad.roles = {1, 2, 4};
  CHECK_THROWS_AS(thomassen_combine({{p, p, p, bad}}), InputError);
  CHECK_THROWS_AS(make_part(testing::complete(5), 0), InputError);
}

TEST_CASE("assembled deletion paths validate on the 34-vertex graph") {
  const CombinePart p = make_part(petersen(), 0);
  const CombineRecipe recipe{{p, p, p, p}};
  const CombinedGraph c = thomassen_combine(recipe);
  for (Vertex v = 0; v < c.graph.order(); ++v) {
    const auto w = thomassen_deleted_path(recipe, c, v);
    REQUIRE(w);
    const Vertex drop[] = {v};
    const auto sub = delete_vertices(c.graph, drop);
    std::vector<Vertex> local;
    for (Vertex x : w->order) local.push_back(sub.relabel[static_cast<std::size_t>(x)]);
    CHECK(is_hamiltonian_path(sub.graph, local));
  }
  CHECK_THROWS_AS(thomassen_deleted_path(recipe, c, 34), InputError);
}

TEST_CASE("assembly on parts that are not hypohamiltonian returns only valid paths") {
  // K4 minus a vertex is a triangle, Hamiltonian between any two of a, b, c.
  const CombinePart k = make_part(testing::complete(4), 0);
  const CombineRecipe recipe{{k, k, k, k}};
  const CombinedGraph c = thomassen_combine(recipe);
  for (Vertex v = 0; v < c.graph.order(); ++v) {
    if (auto w = thomassen_deleted_path(recipe, c, v)) {
      const Vertex drop[] = {v};
      const auto sub = delete_vertices(c.graph, drop);
      std::vector<Vertex> local;
      for (Vertex x : w->order) local.push_back(sub.relabel[static_cast<std::size_t>(x)]);
      CHECK(is_hamiltonian_path(sub.graph, local));
    }
  }
}
