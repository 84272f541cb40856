#include "hypo/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "hypo/errors.hpp"

namespace hypo {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InputError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                       std::to_string(e.v) + " (n=" + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
  }
  g.edge_count_ = static_cast<int>(degree_sum / 2);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::min_degree() const {
  int d = order() == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < order(); ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
  return d;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  const int n = g.order();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (Vertex v : removed) {
    if (!g.contains(v)) throw InputError("cannot delete vertex " + std::to_string(v) + ": out of range");
    gone[static_cast<std::size_t>(v)] = 1;
  }
  InducedSubgraph out;
  out.relabel.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (!gone[static_cast<std::size_t>(v)]) {
      out.relabel[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    const Vertex a = out.relabel[static_cast<std::size_t>(e.u)];
    const Vertex b = out.relabel[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.push_back({a, b});
  }
  out.graph = Graph::from_edges(static_cast<int>(out.original.size()), kept);
  return out;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InputError("permutation size mismatch");
  std::vector<Edge> mapped;
  for (const Edge& e : g.edges()) {
    mapped.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  }
  return Graph::from_edges(g.order(), mapped);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> all = g.edges();
  for (const Edge& e : h.edges()) all.push_back({e.u + g.order(), e.v + g.order()});
  return Graph::from_edges(g.order() + h.order(), all);
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

namespace {

// Residual network for unit-capacity vertex-disjoint paths. Node 2v is the
// "in" copy of v and 2v+1 the "out" copy.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(static_cast<std::size_t>(2 * g.order()), -1) {
    for (Vertex v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1);
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v);
      add_arc(2 * e.v + 1, 2 * e.u);
    }
  }

  int max_flow(int source, int sink, int cap) {
    int flow = 0;
    const std::size_t nodes = head_.size();
    std::vector<int> via(nodes);
    while (flow < cap) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(source);
      via[static_cast<std::size_t>(source)] = -2;
      while (!q.empty() && via[static_cast<std::size_t>(sink)] == -1) {
        const int x = q.front();
        q.pop();
        for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
          const int y = to_[static_cast<std::size_t>(a)];
          if (residual_[static_cast<std::size_t>(a)] > 0 && via[static_cast<std::size_t>(y)] == -1) {
            via[static_cast<std::size_t>(y)] = a;
            q.push(y);
          }
        }
      }
      if (via[static_cast<std::size_t>(sink)] == -1) break;
      for (int y = sink; y != source;) {
        const int a = via[static_cast<std::size_t>(y)];
        --residual_[static_cast<std::size_t>(a)];
        ++residual_[static_cast<std::size_t>(a ^ 1)];
        y = to_[static_cast<std::size_t>(a ^ 1)];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_arc(int from, int to) {
    push(from, to, 1);
    push(to, from, 0);
  }
  void push(int from, int to, int cap) {
    to_.push_back(to);
    residual_.push_back(cap);
    next_.push_back(head_[static_cast<std::size_t>(from)]);
    head_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_, to_, residual_, next_;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  if (!g.contains(s) || !g.contains(t) || s == t) throw InputError("invalid vertex pair");
  if (g.adjacent(s, t)) throw InputError("local vertex connectivity needs non-adjacent vertices");
  SplitNetwork net(g);
  return net.max_flow(2 * s + 1, 2 * t, cap);
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw InputError("connectivity order must be positive");
  const int n = g.order();
  if (n <= k) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  if (g.min_degree() < k) return false;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      if (local_vertex_connectivity(g, s, t, k) < k) return false;
    }
  }
  return true;
}

std::vector<Vertex> cubic_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 3) out.push_back(v);
  }
  return out;
}

}  // namespace hypo
