#pragma once

#include <initializer_list>
#include <vector>

#include "hypo/graph.hpp"

namespace testing {

inline hypo::Graph make(int n, std::initializer_list<hypo::Edge> edges) {
  const std::vector<hypo::Edge> list(edges);
  return hypo::Graph::from_edges(n, list);
}

inline hypo::Graph complete(int n) {
  std::vector<hypo::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return hypo::Graph::from_edges(n, edges);
}

inline hypo::Graph cycle(int n) {
  std::vector<hypo::Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return hypo::Graph::from_edges(n, edges);
}

inline hypo::Graph path(int n) {
  std::vector<hypo::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return hypo::Graph::from_edges(n, edges);
}

inline hypo::Graph complete_bipartite(int a, int b) {
  std::vector<hypo::Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return hypo::Graph::from_edges(a + b, edges);
}

}  // namespace testing
