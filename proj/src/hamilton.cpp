#include "hypo/hamilton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "hypo/errors.hpp"

namespace hypo {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget) : budget_(budget), start_(Clock::now()) {}

  // Counts one search node; false once the budget is gone.
  bool tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (budget_.node_limit && nodes_ > *budget_.node_limit) exhausted_ = true;
    if (budget_.time_limit && (nodes_ & 1023u) == 0 && Clock::now() - start_ > *budget_.time_limit) {
      exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

enum class Outcome { found, none, aborted };

// Vertices by ascending degree, ties by id.
std::vector<int> degree_rank(const Graph& g) {
  std::vector<Vertex> order(at(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<int> rank(at(g.order()));
  for (std::size_t i = 0; i < order.size(); ++i) rank[at(order[i])] = static_cast<int>(i);
  return rank;
}

std::vector<Vertex> by_rank(const std::vector<int>& rank) {
  std::vector<Vertex> order(rank.size());
  for (std::size_t v = 0; v < rank.size(); ++v) order[at(rank[v])] = static_cast<Vertex>(v);
  return order;
}

// Depth-first extension of a path until it covers every vertex and ends in
// an allowed end vertex. Prunes on
//   * a free vertex with fewer usable edges than it needs (2 for an inner
//     vertex, 1 for a possible end), or more than one forced end;
//   * free vertices not reachable from the head through free vertices;
//   * no free vertex left that may end the path.
// A free neighbor of the head that needs all of its usable edges is forced
// to be the next vertex.
class SpanningPathSearch {
 public:
  SpanningPathSearch(const Graph& g, const std::vector<int>& rank, BudgetMeter& meter)
      : g_(g), rank_(rank), meter_(meter), in_path_(at(g.order()), 0), free_degree_(at(g.order())),
        seen_(at(g.order()), 0), key_((at(g.order()) + 63) / 64 + 1, 0) {
    for (Vertex v = 0; v < g.order(); ++v) free_degree_[at(v)] = g.degree(v);
  }

  Outcome run(const std::vector<Vertex>& prefix, std::vector<char> end_ok) {
    end_ok_ = std::move(end_ok);
    dead_states_.clear();
    for (Vertex v : prefix) enter(v);
    const Outcome out = extend();
    if (out != Outcome::found) {
      while (!path_.empty()) leave();
    }
    return out;
  }

  // Valid after run() returned Outcome::found; resets the search state.
  std::vector<Vertex> take_path() {
    std::vector<Vertex> out = path_;
    while (!path_.empty()) leave();
    return out;
  }

 private:
  void enter(Vertex v) {
    in_path_[at(v)] = 1;
    key_[at(v) / 64] ^= std::uint64_t{1} << (v % 64);
    path_.push_back(v);
    for (Vertex w : g_.neighbors(v)) --free_degree_[at(w)];
  }

  void leave() {
    const Vertex v = path_.back();
    path_.pop_back();
    in_path_[at(v)] = 0;
    key_[at(v) / 64] ^= std::uint64_t{1} << (v % 64);
    for (Vertex w : g_.neighbors(v)) ++free_degree_[at(w)];
  }

  int need(Vertex v) const { return end_ok_[at(v)] ? 1 : 2; }

  Outcome extend() {
    if (!meter_.tick()) return Outcome::aborted;
    const Vertex head = path_.back();
    const int remaining = g_.order() - static_cast<int>(path_.size());
    if (remaining == 0) return end_ok_[at(head)] ? Outcome::found : Outcome::none;

    key_.back() = static_cast<std::uint64_t>(head);
    const std::string_view key(reinterpret_cast<const char*>(key_.data()), key_.size() * sizeof(std::uint64_t));
    if (dead_states_.count(std::string(key))) return Outcome::none;
    const Outcome out = branch(head, remaining);
    if (out == Outcome::none && dead_states_.size() < kMaxDeadStates) {
      key_.back() = static_cast<std::uint64_t>(head);
      dead_states_.emplace(reinterpret_cast<const char*>(key_.data()), key_.size() * sizeof(std::uint64_t));
    }
    return out;
  }

  // Everything below depends only on the head and the visited set, so a
  // refuted (head, visited) state can be skipped when it recurs.
  Outcome branch(Vertex head, int remaining) {
    bool any_end = false;
    int dead_ends = 0;
    for (Vertex u = 0; u < g_.order(); ++u) {
      if (in_path_[at(u)]) continue;
      const int avail = free_degree_[at(u)] + (g_.adjacent(head, u) ? 1 : 0);
      if (avail < need(u)) return Outcome::none;
      if (avail == 1 && ++dead_ends > 1) return Outcome::none;
      any_end = any_end || end_ok_[at(u)];
    }
    if (!any_end) return Outcome::none;

    Vertex forced = -1;
    for (Vertex u : g_.neighbors(head)) {
      if (in_path_[at(u)]) continue;
      const int avail = free_degree_[at(u)] + 1;
      if (avail == need(u)) {
        if (forced != -1) return Outcome::none;
        forced = u;
      }
    }
    if (!free_part_connected(head, remaining)) return Outcome::none;

    std::vector<Vertex> next;
    if (forced != -1) {
      next.push_back(forced);
    } else {
      for (Vertex u : g_.neighbors(head)) {
        if (!in_path_[at(u)]) next.push_back(u);
      }
      std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
        if (free_degree_[at(a)] != free_degree_[at(b)]) return free_degree_[at(a)] < free_degree_[at(b)];
        return rank_[at(a)] < rank_[at(b)];
      });
    }
    for (Vertex u : next) {
      enter(u);
      const Outcome out = extend();
      if (out == Outcome::found) return out;
      leave();
      if (out == Outcome::aborted) return out;
    }
    return Outcome::none;
  }

  bool free_part_connected(Vertex head, int remaining) {
    ++stamp_;
    if (stamp_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      stamp_ = 1;
    }
    stack_.clear();
    stack_.push_back(head);
    int reached = 0;
    while (!stack_.empty()) {
      const Vertex v = stack_.back();
      stack_.pop_back();
      for (Vertex w : g_.neighbors(v)) {
        if (in_path_[at(w)] || seen_[at(w)] == stamp_) continue;
        seen_[at(w)] = stamp_;
        ++reached;
        stack_.push_back(w);
      }
    }
    return reached == remaining;
  }

  const Graph& g_;
  const std::vector<int>& rank_;
  BudgetMeter& meter_;
  std::vector<char> in_path_;
  std::vector<int> free_degree_;
  std::vector<char> end_ok_;
  std::vector<Vertex> path_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  std::vector<Vertex> stack_;
  std::vector<std::uint64_t> key_;
  std::unordered_set<std::string> dead_states_;
  static constexpr std::size_t kMaxDeadStates = std::size_t{1} << 20;
};

Outcome spanning_cycle(const Graph& g, BudgetMeter& meter, std::vector<Vertex>& out) {
  const int n = g.order();
  if (n < 3 || g.min_degree() < 2 || !is_connected(g)) return Outcome::none;
  const auto rank = degree_rank(g);
  const Vertex anchor = by_rank(rank).front();

  std::vector<Vertex> firsts(g.neighbors(anchor).begin(), g.neighbors(anchor).end());
  std::sort(firsts.begin(), firsts.end(), [&](Vertex a, Vertex b) { return rank[at(a)] < rank[at(b)]; });

  SpanningPathSearch search(g, rank, meter);
  for (Vertex first : firsts) {
    // Each cycle is found once: it leaves the anchor through the
    // lower-ranked of its two anchor neighbors.
    std::vector<char> end_ok(at(n), 0);
    bool any = false;
    for (Vertex y : g.neighbors(anchor)) {
      if (rank[at(y)] > rank[at(first)]) {
        end_ok[at(y)] = 1;
        any = true;
      }
    }
    if (!any) continue;
    const Outcome res = search.run({anchor, first}, std::move(end_ok));
    if (res == Outcome::found) {
      out = search.take_path();
      return res;
    }
    if (res == Outcome::aborted) return res;
  }
  return Outcome::none;
}

Outcome spanning_path(const Graph& g, std::optional<std::pair<Vertex, Vertex>> ends, BudgetMeter& meter,
                      std::vector<Vertex>& out) {
  const int n = g.order();
  if (!is_connected(g)) return Outcome::none;
  const auto rank = degree_rank(g);
  SpanningPathSearch search(g, rank, meter);

  if (ends) {
    if (n == 1) return Outcome::none;
    std::vector<char> end_ok(at(n), 0);
    end_ok[at(ends->second)] = 1;
    const Outcome res = search.run({ends->first}, std::move(end_ok));
    if (res == Outcome::found) out = search.take_path();
    return res;
  }

  if (n == 1) {
    out = {0};
    return Outcome::found;
  }
  int leaves = 0;
  for (Vertex v = 0; v < n; ++v) leaves += g.degree(v) == 1 ? 1 : 0;
  if (leaves > 2) return Outcome::none;

  // A path is found from its lower-ranked end.
  for (Vertex start : by_rank(rank)) {
    std::vector<char> end_ok(at(n), 0);
    bool any = false;
    for (Vertex v = 0; v < n; ++v) {
      if (rank[at(v)] > rank[at(start)]) {
        end_ok[at(v)] = 1;
        any = true;
      }
    }
    if (!any) break;
    const Outcome res = search.run({start}, std::move(end_ok));
    if (res == Outcome::found) {
      out = search.take_path();
      return res;
    }
    if (res == Outcome::aborted) return res;
  }
  return Outcome::none;
}

// Enumerates simple paths/cycles by depth-first search with a reachability
// bound: a branch dies when the path plus everything still reachable from
// its head is shorter than the target.
class BoundedWalkSearch {
 public:
  BoundedWalkSearch(const Graph& g, BudgetMeter& meter, bool closed, int target)
      : g_(g), meter_(meter), closed_(closed), target_(target), rank_(degree_rank(g)), used_(at(g.order()), 0),
        seen_(at(g.order()), 0) {}

  Outcome run(std::vector<Vertex>& out) {
    for (Vertex start : by_rank(rank_)) {
      start_ = start;
      used_[at(start)] = 1;
      path_ = {start};
      const Outcome res = extend();
      if (res == Outcome::found) {
        out = path_;
        return res;
      }
      used_[at(start)] = 0;
      if (res == Outcome::aborted) return res;
    }
    return Outcome::none;
  }

 private:
  // Cycles are enumerated from their lowest-ranked vertex only.
  bool allowed(Vertex v) const { return !closed_ || rank_[at(v)] > rank_[at(start_)]; }

  Outcome extend() {
    if (!meter_.tick()) return Outcome::aborted;
    const Vertex head = path_.back();
    const int len = static_cast<int>(path_.size());
    if (closed_) {
      if (len >= target_ && len >= 3 && g_.adjacent(head, start_) && rank_[at(head)] > rank_[at(path_[1])]) {
        return Outcome::found;
      }
    } else if (len >= target_) {
      return Outcome::found;
    }
    if (len + reachable(head) < target_) return Outcome::none;

    std::vector<Vertex> next;
    for (Vertex w : g_.neighbors(head)) {
      if (!used_[at(w)] && allowed(w)) next.push_back(w);
    }
    std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) { return rank_[at(a)] < rank_[at(b)]; });
    for (Vertex w : next) {
      used_[at(w)] = 1;
      path_.push_back(w);
      const Outcome res = extend();
      if (res == Outcome::found) return res;
      path_.pop_back();
      used_[at(w)] = 0;
      if (res == Outcome::aborted) return res;
    }
    return Outcome::none;
  }

  int reachable(Vertex head) {
    ++stamp_;
    std::vector<Vertex> stack{head};
    int count = 0;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g_.neighbors(v)) {
        if (used_[at(w)] || !allowed(w) || seen_[at(w)] == stamp_) continue;
        seen_[at(w)] = stamp_;
        ++count;
        stack.push_back(w);
      }
    }
    return count;
  }

  const Graph& g_;
  BudgetMeter& meter_;
  bool closed_;
  int target_;
  std::vector<int> rank_;
  std::vector<char> used_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
};

// Cycle on n-1 vertices: some single-vertex deletion is Hamiltonian.
Outcome near_spanning_cycle(const Graph& g, BudgetMeter& meter, std::vector<Vertex>& out) {
  const auto rank = degree_rank(g);
  for (Vertex v : by_rank(rank)) {
    const Vertex drop[] = {v};
    const auto sub = delete_vertices(g, drop);
    std::vector<Vertex> found;
    const Outcome res = spanning_cycle(sub.graph, meter, found);
    if (res == Outcome::found) {
      out.clear();
      for (Vertex w : found) out.push_back(sub.original[at(w)]);
      return res;
    }
    if (res == Outcome::aborted) return res;
  }
  return Outcome::none;
}

Outcome cycle_at_least(const Graph& g, int min_length, BudgetMeter& meter, std::vector<Vertex>& out) {
  const int n = g.order();
  if (min_length == n) return spanning_cycle(g, meter, out);
  if (min_length == n - 1 && n >= 4) return near_spanning_cycle(g, meter, out);
  return BoundedWalkSearch(g, meter, true, min_length).run(out);
}

Outcome path_at_least(const Graph& g, int min_vertices, BudgetMeter& meter, std::vector<Vertex>& out) {
  if (min_vertices == g.order()) return spanning_path(g, std::nullopt, meter, out);
  return BoundedWalkSearch(g, meter, false, min_vertices).run(out);
}

SearchStatus status_of(Outcome o) {
  switch (o) {
    case Outcome::found:
      return SearchStatus::found;
    case Outcome::none:
      return SearchStatus::exhausted;
    case Outcome::aborted:
      break;
  }
  return SearchStatus::unknown;
}

[[noreturn]] void unsound(const char* what) {
  throw std::logic_error(std::string("solver produced an invalid ") + what + " witness");
}

}  // namespace

bool is_path(const Graph& g, std::span<const Vertex> order) {
  std::vector<char> seen(at(g.order()), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (!g.contains(v) || seen[at(v)]) return false;
    seen[at(v)] = 1;
    if (i > 0 && !g.adjacent(order[i - 1], v)) return false;
  }
  return true;
}

bool is_cycle(const Graph& g, std::span<const Vertex> order) {
  return order.size() >= 3 && is_path(g, order) && g.adjacent(order.back(), order.front());
}

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> order) {
  return static_cast<int>(order.size()) == g.order() && is_cycle(g, order);
}

bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> order) {
  return static_cast<int>(order.size()) == g.order() && g.order() > 0 && is_path(g, order);
}

std::optional<CycleWitness> hamiltonian_cycle(const Graph& g) {
  if (g.order() < 3) throw InputError("Hamiltonian cycle needs at least 3 vertices");
  BudgetMeter meter(SearchBudget::unlimited());
  std::vector<Vertex> order;
  if (spanning_cycle(g, meter, order) != Outcome::found) return std::nullopt;
  if (!is_hamiltonian_cycle(g, order)) unsound("cycle");
  return CycleWitness{std::move(order)};
}

std::optional<PathWitness> hamiltonian_path(const Graph& g, std::optional<std::pair<Vertex, Vertex>> endpoints) {
  if (g.order() < 2) throw InputError("Hamiltonian path needs at least 2 vertices");
  if (endpoints) {
    const auto [s, t] = *endpoints;
    if (!g.contains(s) || !g.contains(t) || s == t) throw InputError("path endpoints must be distinct vertices");
  }
  BudgetMeter meter(SearchBudget::unlimited());
  std::vector<Vertex> order;
  if (spanning_path(g, endpoints, meter, order) != Outcome::found) return std::nullopt;
  if (!is_hamiltonian_path(g, order)) unsound("path");
  if (endpoints && (order.front() != endpoints->first || order.back() != endpoints->second)) unsound("path");
  return PathWitness{std::move(order)};
}

CycleSearch cycle_of_length_at_least(const Graph& g, int min_length, const SearchBudget& budget) {
  if (min_length < 3 || min_length > g.order()) {
    throw InputError("cycle length bound " + std::to_string(min_length) + " outside [3, n]");
  }
  BudgetMeter meter(budget);
  std::vector<Vertex> order;
  CycleSearch result;
  result.status = status_of(cycle_at_least(g, min_length, meter, order));
  result.nodes = meter.nodes();
  if (result.status == SearchStatus::found) {
    if (!is_cycle(g, order) || static_cast<int>(order.size()) < min_length) unsound("cycle");
    result.witness = CycleWitness{std::move(order)};
  }
  return result;
}

PathSearch path_of_length_at_least(const Graph& g, int min_vertices, const SearchBudget& budget) {
  if (min_vertices < 1 || min_vertices > g.order()) {
    throw InputError("path length bound " + std::to_string(min_vertices) + " outside [1, n]");
  }
  BudgetMeter meter(budget);
  std::vector<Vertex> order;
  PathSearch result;
  result.status = status_of(path_at_least(g, min_vertices, meter, order));
  result.nodes = meter.nodes();
  if (result.status == SearchStatus::found) {
    if (!is_path(g, order) || static_cast<int>(order.size()) < min_vertices) unsound("path");
    result.witness = PathWitness{std::move(order)};
  }
  return result;
}

LongestResult longest_cycle_length(const Graph& g, const SearchBudget& budget) {
  if (g.order() < 3) throw InputError("longest cycle needs at least 3 vertices");
  BudgetMeter meter(budget);
  bool gaps = false;
  for (int length = g.order(); length >= 3; --length) {
    std::vector<Vertex> order;
    const Outcome res = cycle_at_least(g, length, meter, order);
    if (res == Outcome::found) {
      if (!is_cycle(g, order)) unsound("cycle");
      const int found = static_cast<int>(order.size());
      return {found, !gaps, std::move(order)};
    }
    gaps = gaps || res == Outcome::aborted;
  }
  return {0, !gaps, std::nullopt};
}

LongestResult longest_path_length(const Graph& g, const SearchBudget& budget) {
  if (g.order() < 1) throw InputError("longest path needs at least 1 vertex");
  BudgetMeter meter(budget);
  bool gaps = false;
  for (int length = g.order(); length >= 1; --length) {
    std::vector<Vertex> order;
    const Outcome res = path_at_least(g, length, meter, order);
    if (res == Outcome::found) {
      if (!is_path(g, order)) unsound("path");
      const int found = static_cast<int>(order.size());
      return {found, !gaps, std::move(order)};
    }
    gaps = gaps || res == Outcome::aborted;
  }
  return {0, !gaps, std::nullopt};
}

}  // namespace hypo
