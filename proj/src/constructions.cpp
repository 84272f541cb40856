#include "hypo/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "hypo/errors.hpp"
#include "hypo/io.hpp"
#include "hypo/planar.hpp"

namespace hypo {

// Defined in the generated asset translation unit.
extern const char* const kWienerArayaEdges;

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

constexpr std::string_view kPivotTag = "# thomassen-pivot:";

}  // namespace

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edges(10, edges);
}

std::string_view wiener_araya_asset() { return kWienerArayaEdges; }

Graph wiener_araya() {
  Graph g;
  try {
    g = parse_edge_list(wiener_araya_asset());
  } catch (const InputError& e) {
    throw ConfigurationError(std::string("bundled 42-vertex asset does not parse: ") + e.what());
  }
  if (g.order() != 42) throw ConfigurationError("bundled asset: expected 42 vertices");
  if (!is_connected(g)) throw ConfigurationError("bundled asset: graph is disconnected");
  if (!planar_embedding(g)) throw ConfigurationError("bundled asset: graph is not planar");
  if (!is_k_connected(g, 3)) throw ConfigurationError("bundled asset: graph is not 3-connected");
  return g;
}

CombinePart make_part(Graph graph, Vertex pivot) {
  if (!graph.contains(pivot) || graph.degree(pivot) != 3) {
    throw InputError("pivot " + std::to_string(pivot) + " is not a cubic vertex");
  }
  CombinePart part;
  const auto nbrs = graph.neighbors(pivot);
  std::copy(nbrs.begin(), nbrs.end(), part.roles.begin());
  part.pivot = pivot;
  part.graph = std::move(graph);
  return part;
}

CombinedGraph thomassen_combine(const CombineRecipe& recipe) {
  if (recipe.parts.size() != 4) {
    throw InputError("Thomassen combination needs exactly four parts, got " + std::to_string(recipe.parts.size()));
  }
  for (const CombinePart& part : recipe.parts) {
    if (!part.graph.contains(part.pivot) || part.graph.degree(part.pivot) != 3) {
      throw InputError("pivot " + std::to_string(part.pivot) + " is not a cubic vertex");
    }
    auto roles = part.roles;
    std::sort(roles.begin(), roles.end());
    const auto nbrs = part.graph.neighbors(part.pivot);
    if (!std::equal(roles.begin(), roles.end(), nbrs.begin(), nbrs.end())) {
      throw InputError("roles must be the three neighbors of the pivot");
    }
  }

  CombinedGraph out;
  Vertex next = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const CombinePart& part = recipe.parts[i];
    auto& ids = out.id_maps.emplace_back(at(part.graph.order()), -1);
    for (Vertex v = 0; v < part.graph.order(); ++v) {
      if (v == part.pivot) continue;
      // a_2 and a_4 merge into a_1 and a_3.
      if ((i == 1 || i == 3) && v == part.roles[0]) {
        const CombinePart& partner = recipe.parts[i - 1];
        ids[at(v)] = out.id_maps[i - 1][at(partner.roles[0])];
      } else {
        ids[at(v)] = next++;
      }
    }
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& ids = out.id_maps[i];
    for (const Edge& e : recipe.parts[i].graph.edges()) {
      if (ids[at(e.u)] >= 0 && ids[at(e.v)] >= 0) edges.push_back({ids[at(e.u)], ids[at(e.v)]});
    }
  }
  auto role = [&](std::size_t part, std::size_t which) {
    return out.id_maps[part][at(recipe.parts[part].roles[which])];
  };
  for (std::size_t which : {1u, 2u}) {
    edges.push_back({role(0, which), role(2, which)});
    edges.push_back({role(1, which), role(3, which)});
  }
  out.graph = Graph::from_edges(next, edges);
  return out;
}

CombinePart wiener_araya_part() {
  const std::string_view asset = wiener_araya_asset();
  const auto pos = asset.find(kPivotTag);
  if (pos == std::string_view::npos) throw ConfigurationError("bundled asset: no pivot recorded");
  const auto line = asset.substr(pos + kPivotTag.size(), asset.find('\n', pos) - pos - kPivotTag.size());

  std::array<int, 4> values{};
  const char* cur = line.data();
  const char* end = line.data() + line.size();
  for (int& value : values) {
    while (cur < end && *cur == ' ') ++cur;
    const auto [ptr, ec] = std::from_chars(cur, end, value);
    if (ec != std::errc{}) throw ConfigurationError("bundled asset: malformed pivot record");
    cur = ptr;
  }
  CombinePart part = make_part(wiener_araya(), values[0]);
  part.roles = {values[1], values[2], values[3]};
  return part;
}

namespace {

// Hamiltonian path of g that ends at `end`: a pendant vertex hung on `end`
// must be an end of any Hamiltonian path of the extended graph.
std::optional<std::vector<Vertex>> path_ending_at(const Graph& g, Vertex end) {
  if (g.order() == 1) return std::vector<Vertex>{end};
  std::vector<Edge> edges = g.edges();
  const Vertex pendant = g.order();
  edges.push_back({end, pendant});
  auto found = hamiltonian_path(Graph::from_edges(g.order() + 1, edges));
  if (!found) return std::nullopt;
  auto order = std::move(found->order);
  if (order.front() == pendant) std::reverse(order.begin(), order.end());
  order.pop_back();
  return order;
}

class ThomassenPathBuilder {
 public:
  ThomassenPathBuilder(const CombineRecipe& recipe, const CombinedGraph& combined)
      : recipe_(recipe), combined_(combined) {}

  std::optional<std::vector<Vertex>> build(Vertex deleted) {
    int home = -1;
    Vertex local = -1;
    for (int i = 0; i < 4 && home < 0; ++i) {
      const auto& ids = combined_.id_maps[at(i)];
      const auto it = std::find(ids.begin(), ids.end(), deleted);
      if (it != ids.end()) {
        home = i;
        local = static_cast<Vertex>(it - ids.begin());
      }
    }
    if (home < 0) throw InputError("vertex " + std::to_string(deleted) + " is not in the combined graph");
    if (local != role(home, 0)) {
      if (auto path = through_shared(home, local)) return path;
    }
    return around_shared(home, local);
  }

 private:
  const Graph& part(int i) const { return recipe_.parts[at(i)].graph; }
  Vertex pivot(int i) const { return recipe_.parts[at(i)].pivot; }
  Vertex role(int i, int r) const { return recipe_.parts[at(i)].roles[at(r)]; }
  Vertex out(int i, Vertex v) const { return combined_.id_maps[at(i)][at(v)]; }

  int role_of(int i, Vertex v) const {
    for (int r = 0; r < 3; ++r) {
      if (role(i, r) == v) return r;
    }
    return -1;
  }

  void append(std::vector<Vertex>& path, int i, std::span<const Vertex> local) const {
    for (Vertex v : local) {
      const Vertex id = out(i, v);
      if (path.empty() || path.back() != id) path.push_back(id);
    }
  }

  // Part i minus its pivot and `removed`; result in part ids.
  std::optional<std::vector<Vertex>> fragment_path(int i, std::vector<Vertex> removed, Vertex from,
                                                   std::optional<Vertex> to) const {
    removed.push_back(pivot(i));
    const auto sub = delete_vertices(part(i), removed);
    const Vertex s = sub.relabel[at(from)];
    std::optional<std::vector<Vertex>> found;
    if (to) {
      if (auto w = hamiltonian_path(sub.graph, std::pair{s, sub.relabel[at(*to)]})) found = std::move(w->order);
    } else if (auto w = path_ending_at(sub.graph, s)) {
      found = std::vector<Vertex>(w->rbegin(), w->rend());
    }
    if (!found) return std::nullopt;
    for (Vertex& v : *found) v = sub.original[at(v)];
    return found;
  }

  // Part i without the edge pivot-a: a Hamiltonian path ending at a with
  // the pivot inside, i.e. two paths covering the fragment that end at
  // b and c (split at the pivot).
  struct SplitPath {
    std::vector<Vertex> before;  // ..., q
    std::vector<Vertex> after;   // r, ..., a
    int q = 0;                   // role of the last vertex of `before`
  };

  std::optional<SplitPath> split_path_to_shared(int i) const {
    std::vector<Edge> edges;
    const Vertex a = role(i, 0);
    for (const Edge& e : part(i).edges()) {
      if (!((e.u == pivot(i) && e.v == a) || (e.v == pivot(i) && e.u == a))) edges.push_back(e);
    }
    auto found = path_ending_at(Graph::from_edges(part(i).order(), edges), a);
    if (!found) return std::nullopt;
    const auto it = std::find(found->begin(), found->end(), pivot(i));
    if (it == found->begin() || it + 1 == found->end()) return std::nullopt;
    SplitPath split;
    split.before.assign(found->begin(), it);
    split.after.assign(it + 1, found->end());
    split.q = role_of(i, split.before.back());
    return split;
  }

  // The deleted vertex lies in part `home` but is not its shared vertex:
  // the home fragment is crossed from the shared vertex to one cross edge.
  std::optional<std::vector<Vertex>> through_shared(int home, Vertex local) const {
    const int sibling = home ^ 1;
    const int mate = home ^ 2;
    const int far = home ^ 3;
    for (int p : {1, 2}) {
      if (role(home, p) == local) continue;
      const auto home_path = fragment_path(home, {local}, role(home, 0), role(home, p));
      if (!home_path) continue;
      const auto mate_path = fragment_path(mate, {}, role(mate, p), std::nullopt);
      if (!mate_path) continue;
      const auto loop = split_path_to_shared(sibling);
      if (!loop) return std::nullopt;
      const int q = loop->q;
      const auto far_path = fragment_path(far, {role(far, 0)}, role(far, q), role(far, 3 - q));
      if (!far_path) return std::nullopt;

      std::vector<Vertex> path;
      append(path, sibling, loop->before);
      append(path, far, *far_path);
      append(path, sibling, loop->after);
      append(path, home, *home_path);
      append(path, mate, *mate_path);
      return path;
    }
    return std::nullopt;
  }

  // The home fragment is crossed between its two cross edges, with the
  // shared vertex inside (or deleted).
  std::optional<std::vector<Vertex>> around_shared(int home, Vertex local) const {
    const int sibling = home ^ 1;
    const int mate = home ^ 2;
    const int far = home ^ 3;
    const Vertex a = role(home, 0);
    auto home_path = fragment_path(home, local == a ? std::vector<Vertex>{a} : std::vector<Vertex>{local},
                                   role(home, 1), role(home, 2));
    if (!home_path) return std::nullopt;
    auto sibling_path = fragment_path(sibling, {role(sibling, 0)}, role(sibling, 1), role(sibling, 2));
    if (!sibling_path) return std::nullopt;
    const auto into = split_path_to_shared(mate);
    if (!into) return std::nullopt;
    auto out_of = split_path_to_shared(far);
    if (!out_of) return std::nullopt;
    // Walk the far part away from the shared vertex.
    std::reverse(out_of->before.begin(), out_of->before.end());
    std::reverse(out_of->after.begin(), out_of->after.end());
    std::swap(out_of->before, out_of->after);
    const int exit_role = role_of(far, out_of->before.back());

    if (into->q != 1) std::reverse(home_path->begin(), home_path->end());
    if (exit_role != 1) std::reverse(sibling_path->begin(), sibling_path->end());

    std::vector<Vertex> path;
    append(path, mate, into->before);
    append(path, home, *home_path);
    append(path, mate, into->after);
    append(path, far, out_of->before);
    append(path, sibling, *sibling_path);
    append(path, far, out_of->after);
    return path;
  }

  const CombineRecipe& recipe_;
  const CombinedGraph& combined_;
};

}  // namespace

std::optional<PathWitness> thomassen_deleted_path(const CombineRecipe& recipe, const CombinedGraph& combined,
                                                  Vertex deleted) {
  if (!combined.graph.contains(deleted)) throw InputError("deleted vertex out of range");
  auto path = ThomassenPathBuilder(recipe, combined).build(deleted);
  if (!path) return std::nullopt;
  const Vertex drop[] = {deleted};
  const auto rest = delete_vertices(combined.graph, drop);
  std::vector<Vertex> local;
  for (Vertex v : *path) {
    if (v == deleted) return std::nullopt;
    local.push_back(rest.relabel[at(v)]);
  }
  if (!is_hamiltonian_path(rest.graph, local)) return std::nullopt;
  return PathWitness{std::move(*path)};
}

Graph thomassen_petersen() {
  const CombinePart part = make_part(petersen(), 0);
  return thomassen_combine({{part, part, part, part}}).graph;
}

Graph thomassen_wiener_araya() {
  const CombinePart part = wiener_araya_part();
  return thomassen_combine({{part, part, part, part}}).graph;
}

}  // namespace hypo
