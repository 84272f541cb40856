#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace hypo {

using Vertex = int;

/// Unordered vertex pair. Graph::edges() always reports u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Values are immutable once built: every operation that "changes" a graph
/// returns a new one. Neighbor lists are kept sorted, which gives set
/// semantics and O(log d) adjacency tests.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(int n);

  /// Builds a graph from an edge list. Duplicate pairs (in either
  /// orientation) collapse to one edge. Throws InputError on a loop or an
  /// endpoint outside [0, n).
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  int min_degree() const;
  int max_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

/// Induced subgraph plus the relabeling that produced it.
struct InducedSubgraph {
  Graph graph;
  /// original[new_id] = id in the parent graph.
  std::vector<Vertex> original;
  /// relabel[old_id] = new id, or -1 for deleted vertices.
  std::vector<Vertex> relabel;
};

/// Deletes `removed` (duplicates ignored) and relabels the survivors
/// contiguously in ascending order of their old ids.
InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// Applies a vertex permutation: vertex v of `g` becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// Disjoint union with `h` shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);

/// True iff n > k and no set of fewer than k vertices disconnects g.
/// Uses unit-capacity max-flow on the vertex-split network.
bool is_k_connected(const Graph& g, int k);

/// Number of internally vertex-disjoint s-t paths for non-adjacent s, t,
/// capped at `cap`.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap);

/// Vertices of degree exactly 3, ascending.
std::vector<Vertex> cubic_vertices(const Graph& g);

}  // namespace hypo
