#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hypo/graph.hpp"

namespace hypo {

/// Vertex order of a cycle; the last vertex is adjacent to the first.
struct CycleWitness {
  std::vector<Vertex> order;
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

struct PathWitness {
  std::vector<Vertex> order;
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Limits for the bounded searches. An empty field means "no limit".
/// Running out never produces a negative answer, only SearchStatus::unknown.
struct SearchBudget {
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;

  static SearchBudget unlimited() { return {}; }
};

enum class SearchStatus {
  found,      ///< a witness is attached
  exhausted,  ///< complete search, nothing exists
  unknown,    ///< budget ran out first
};

template <class Witness>
struct SearchResult {
  SearchStatus status = SearchStatus::unknown;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
};

using CycleSearch = SearchResult<CycleWitness>;
using PathSearch = SearchResult<PathWitness>;

/// Simple cycle check: at least 3 distinct in-range vertices, consecutive
/// ones adjacent, last adjacent to first.
bool is_cycle(const Graph& g, std::span<const Vertex> order);

/// Simple path check: distinct in-range vertices, consecutive ones adjacent.
bool is_path(const Graph& g, std::span<const Vertex> order);

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> order);
bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> order);

/// Complete Hamiltonian cycle decision. nullopt means the exhaustive search
/// found none. Throws InputError for n < 3.
std::optional<CycleWitness> hamiltonian_cycle(const Graph& g);

/// Complete Hamiltonian path decision, optionally with both ends pinned
/// (the witness then starts at endpoints->first and ends at
/// endpoints->second). Throws InputError for n < 2 or bad endpoints.
std::optional<PathWitness> hamiltonian_path(const Graph& g,
                                            std::optional<std::pair<Vertex, Vertex>> endpoints = std::nullopt);

/// A simple cycle with at least `min_length` vertices (3 <= min_length <= n).
CycleSearch cycle_of_length_at_least(const Graph& g, int min_length, const SearchBudget& budget);

/// A simple path with at least `min_vertices` vertices (1 <= min_vertices <= n).
PathSearch path_of_length_at_least(const Graph& g, int min_vertices, const SearchBudget& budget);

/// Longest cycle (path) length. `exact` is set only when the next length up
/// was refuted by complete search; otherwise `length` is a lower bound.
/// Cycle length 0 means the graph is a forest. Path lengths count vertices.
struct LongestResult {
  int length = 0;
  bool exact = false;
  std::optional<std::vector<Vertex>> witness;
};

LongestResult longest_cycle_length(const Graph& g, const SearchBudget& budget);
LongestResult longest_path_length(const Graph& g, const SearchBudget& budget);

}  // namespace hypo
