#pragma once

#include <optional>
#include <vector>

#include "hypo/graph.hpp"

namespace hypo {

/// Combinatorial embedding given by a rotation system.
///
/// rotation[v] lists the neighbors of v in clockwise order. Each face is
/// stored as the vertex sequence of its boundary walk; the walk visits the
/// darts face[i] -> face[i+1] (cyclically), and every dart of the graph
/// appears on exactly one face.
struct Embedding {
  int vertex_count = 0;
  int edge_count = 0;
  std::vector<std::vector<Vertex>> rotation;
  std::vector<std::vector<Vertex>> faces;

  int face_count() const { return static_cast<int>(faces.size()); }
};

/// Face lengths, sorted ascending. Sum equals 2m.
struct FaceSizes {
  std::vector<int> sizes;

  int count() const { return static_cast<int>(sizes.size()); }
  friend bool operator==(const FaceSizes&, const FaceSizes&) = default;
};

/// Left-right planarity test with embedding extraction. Returns nullopt
/// when g is not planar. Throws InputError on a disconnected graph.
std::optional<Embedding> planar_embedding(const Graph& g);

/// Planarity verdict for any graph, connected or not.
bool is_planar(const Graph& g);

/// Traces the faces of a rotation system. rotation[v] must be a
/// permutation of g's neighbors of v.
std::vector<std::vector<Vertex>> trace_faces(const std::vector<std::vector<Vertex>>& rotation);

FaceSizes face_sizes(const Embedding& e);

/// Structural validity of an embedding of g: rotations match neighborhoods,
/// every dart on exactly one face, face lengths sum to 2m, and
/// n - m + f = 2.
bool is_valid_plane_embedding(const Graph& g, const Embedding& e);

}  // namespace hypo
