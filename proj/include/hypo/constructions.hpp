#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "hypo/graph.hpp"
#include "hypo/hamilton.hpp"

namespace hypo {

/// The 10-vertex Petersen graph: outer 5-cycle 0..4, spokes i -- i+5,
/// inner pentagram 5+i -- 5+(i+2)%5.
Graph petersen();

/// The bundled 42-vertex planar hypohamiltonian graph. Ingestion checks
/// n = 42, connectivity, planarity and 3-connectivity and throws
/// ConfigurationError if any fails.
Graph wiener_araya();

/// Raw bytes of the bundled edge-list asset (with provenance header).
std::string_view wiener_araya_asset();

/// One input of the four-part combination. `roles` lists the pivot's
/// neighbors as (a, b, c): a is merged with the partner part's a, b and c
/// receive the new cross edges.
struct CombinePart {
  Graph graph;
  Vertex pivot = 0;
  std::array<Vertex, 3> roles{};
};

/// Part with the pivot's neighbors assigned to (a, b, c) in ascending order.
/// Throws InputError if the pivot is not cubic.
CombinePart make_part(Graph graph, Vertex pivot);

struct CombineRecipe {
  std::vector<CombinePart> parts;
};

struct CombinedGraph {
  Graph graph;
  /// id_maps[i][v] = id of part i's vertex v in the output, -1 for the pivot.
  std::vector<std::vector<Vertex>> id_maps;
};

/// Thomassen's hypotraceable construction from four hypohamiltonian graphs
/// (C. Thomassen, "Hypohamiltonian and hypotraceable graphs", Discrete
/// Mathematics 9 (1974) 91-96). With H_i = G_i - x_i and the neighbors of
/// x_i named a_i, b_i, c_i:
///
///     a_1 = a_2,  a_3 = a_4                  (identified)
///     b_1 b_3,  c_1 c_3,  b_2 b_4,  c_2 c_4  (new edges)
///
/// giving sum(n_i - 1) - 2 vertices and sum(m_i - 3) + 4 edges. Part
/// vertices keep their relative order; the two merged vertices take the
/// ids of a_1 and a_3.
///
/// Throws InputError unless there are exactly four parts with cubic pivots
/// and roles that are the pivot's neighbors.
CombinedGraph thomassen_combine(const CombineRecipe& recipe);

/// Hamiltonian path of `combined.graph` minus `deleted`, assembled from
/// Hamiltonian paths inside the four parts along the cases of Thomassen's
/// proof. Sub-searches run on single parts, so this scales to outputs far
/// beyond what a whole-graph search can handle. Returns nullopt when the
/// parts lack the required sub-paths (parts that are not hypohamiltonian).
/// Witness ids are output ids; the witness is validated before returning.
std::optional<PathWitness> thomassen_deleted_path(const CombineRecipe& recipe, const CombinedGraph& combined,
                                                  Vertex deleted);

/// Pivot and (a, b, c) roles for the 42-vertex graph, read from the asset's
/// provenance header. With these, four copies combine into a planar graph.
CombinePart wiener_araya_part();

/// Four Petersen copies, pivot 0: the 34-vertex hypotraceable graph.
Graph thomassen_petersen();

/// Four copies of the 42-vertex graph: a 162-vertex planar graph.
Graph thomassen_wiener_araya();

}  // namespace hypo
