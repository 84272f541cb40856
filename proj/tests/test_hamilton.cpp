#include <doctest.h>

#include <random>

#include "hypo/constructions.hpp"
#include "hypo/errors.hpp"
#include "hypo/hamilton.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hypo;

TEST_CASE("witness validators") {
  const Graph g = testing::cycle(5);
  CHECK(is_cycle(g, std::vector<Vertex>{0, 1, 2, 3, 4}));
  CHECK(is_hamiltonian_cycle(g, std::vector<Vertex>{2, 1, 0, 4, 3}));
  CHECK_FALSE(is_cycle(g, std::vector<Vertex>{0, 1}));
  CHECK_FALSE(is_cycle(g, std::vector<Vertex>{0, 1, 2, 3}));  // 3 and 0 not adjacent
  CHECK_FALSE(is_cycle(g, std::vector<Vertex>{0, 1, 2, 1, 0}));
  CHECK(is_path(g, std::vector<Vertex>{3}));
  CHECK(is_hamiltonian_path(g, std::vector<Vertex>{1, 2, 3, 4, 0}));
  CHECK_FALSE(is_path(g, std::vector<Vertex>{1, 3}));
  CHECK_FALSE(is_path(g, std::vector<Vertex>{1, 9}));
}

TEST_CASE("deciders on named graphs") {
  CHECK(hamiltonian_cycle(testing::complete(4)));
  CHECK_FALSE(hamiltonian_cycle(testing::path(4)));
  CHECK_FALSE(hamiltonian_cycle(testing::complete_bipartite(2, 3)));
  CHECK(hamiltonian_path(testing::complete_bipartite(2, 3)));
  CHECK_FALSE(hamiltonian_path(testing::complete_bipartite(2, 4)));
  CHECK_FALSE(hamiltonian_cycle(petersen()));
  CHECK(hamiltonian_path(petersen()));
  CHECK_THROWS_AS(hamiltonian_cycle(testing::path(2)), InputError);
  CHECK_THROWS_AS(hamiltonian_path(Graph(1)), InputError);
}

TEST_CASE("pinned endpoints") {
  const Graph g = testing::path(4);
  const auto w = hamiltonian_path(g, std::pair{3, 0});
  REQUIRE(w);
  CHECK(w->order == std::vector<Vertex>{3, 2, 1, 0});
  CHECK_FALSE(hamiltonian_path(g, std::pair{0, 2}));
  CHECK_THROWS_AS(hamiltonian_path(g, std::pair{1, 1}), InputError);
  CHECK_THROWS_AS(hamiltonian_path(g, std::pair{0, 4}), InputError);
  // Adjacent ends would close a Hamiltonian cycle.
  CHECK_FALSE(hamiltonian_path(petersen(), std::pair{0, 1}));
}

TEST_CASE("budget exhaustion is reported as unknown") {
  const Graph g = wiener_araya();
  SearchBudget budget;
  budget.node_limit = 5;
  const auto r = cycle_of_length_at_least(g, g.order(), budget);
  CHECK(r.status == SearchStatus::unknown);
  CHECK_FALSE(r.witness);
  const auto longest = longest_cycle_length(g, budget);
  CHECK_FALSE(longest.exact);
}

TEST_CASE("bounded searches") {
  const Graph p = petersen();
  const auto nine = cycle_of_length_at_least(p, 9, SearchBudget::unlimited());
  CHECK(nine.status == SearchStatus::found);
  REQUIRE(nine.witness);
  CHECK(nine.witness->order.size() >= 9);
  CHECK(cycle_of_length_at_least(p, 10, SearchBudget::unlimited()).status == SearchStatus::exhausted);
  CHECK(path_of_length_at_least(testing::complete_bipartite(2, 4), 5, SearchBudget::unlimited()).status ==
        SearchStatus::found);
  CHECK(path_of_length_at_least(testing::complete_bipartite(2, 4), 6, SearchBudget::unlimited()).status ==
        SearchStatus::exhausted);
  CHECK_THROWS_AS(cycle_of_length_at_least(p, 2, SearchBudget::unlimited()), InputError);
  CHECK_THROWS_AS(cycle_of_length_at_least(p, 11, SearchBudget::unlimited()), InputError);
}

TEST_CASE("longest lengths") {
  const auto k4 = longest_cycle_length(testing::complete(4), SearchBudget::unlimited());
  CHECK(k4.length == 4);
  CHECK(k4.exact);
  const auto pet = longest_cycle_length(petersen(), SearchBudget::unlimited());
  CHECK(pet.length == 9);
  CHECK(pet.exact);
  CHECK(longest_cycle_length(testing::path(5), SearchBudget::unlimited()).length == 0);
  const auto star = longest_path_length(testing::complete_bipartite(1, 4), SearchBudget::unlimited());
  CHECK(star.length == 3);
  CHECK(star.exact);
}

TEST_CASE("cycle and path verdicts match Held-Karp on connected graphs up to 8 vertices") {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      if (n >= 3) {
        const auto c = hamiltonian_cycle(g);
        REQUIRE(c.has_value() == oracle::has_hamiltonian_cycle(g));
        if (c) REQUIRE(is_hamiltonian_cycle(g, c->order));
      }
      const auto p = hamiltonian_path(g);
      REQUIRE(p.has_value() == oracle::has_hamiltonian_path(g));
      if (p) REQUIRE(is_hamiltonian_path(g, p->order));
    }
  }
}

TEST_CASE("longest cycle matches the subset DP on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(9, 0.35, rng);
    const auto r = longest_cycle_length(g, SearchBudget::unlimited());
    REQUIRE(r.exact);
    REQUIRE(r.length == oracle::longest_cycle(g));
  }
}

TEST_CASE("verdicts are invariant under relabeling") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(10, 0.3, rng);
    const auto perm = oracle::random_permutation(10, rng);
    const Graph h = permute(g, perm);
    REQUIRE(hamiltonian_cycle(g).has_value() == hamiltonian_cycle(h).has_value());
    REQUIRE(hamiltonian_path(g).has_value() == hamiltonian_path(h).has_value());
  }
}

TEST_CASE("searches are deterministic") {
  const Graph g = wiener_araya();
  const Vertex drop[] = {17};
  const Graph h = delete_vertices(g, drop).graph;
  const auto a = hamiltonian_cycle(h);
  const auto b = hamiltonian_cycle(h);
  REQUIRE(a);
  CHECK(a == b);
}
