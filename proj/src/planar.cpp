#include "hypo/planar.hpp"

#include <algorithm>
#include <cassert>

#include "hypo/errors.hpp"

namespace hypo {

namespace {

constexpr int kNone = -1;

// Left-right planarity (de Fraysseix-Rosenstiehl criterion, in the
// formulation of Brandes' "The Left-Right Planarity Test"). Darts are
// indexed densely: dart offset_[v] + i runs from v to its i-th neighbor.
class LeftRightPlanarity {
 public:
  explicit LeftRightPlanarity(const Graph& g) : g_(g) {
    const int n = g.order();
    offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) offset_[at(v) + 1] = offset_[at(v)] + g.degree(v);
    const int darts = offset_.back();
    source_.resize(static_cast<std::size_t>(darts));
    target_.resize(static_cast<std::size_t>(darts));
    for (Vertex v = 0; v < n; ++v) {
      int d = offset_[at(v)];
      for (Vertex w : g.neighbors(v)) {
        source_[at(d)] = v;
        target_[at(d)] = w;
        ++d;
      }
    }
    height_.assign(static_cast<std::size_t>(n), kNone);
    parent_edge_.assign(static_cast<std::size_t>(n), kNone);
    oriented_.assign(static_cast<std::size_t>(darts), 0);
    lowpt_.assign(static_cast<std::size_t>(darts), 0);
    lowpt2_.assign(static_cast<std::size_t>(darts), 0);
    nesting_depth_.assign(static_cast<std::size_t>(darts), 0);
    ref_.assign(static_cast<std::size_t>(darts), kNone);
    side_.assign(static_cast<std::size_t>(darts), 1);
    stack_bottom_.assign(static_cast<std::size_t>(darts), 0);
    lowpt_edge_.assign(static_cast<std::size_t>(darts), kNone);
    out_.resize(static_cast<std::size_t>(n));
    left_ref_.assign(static_cast<std::size_t>(n), kNone);
    right_ref_.assign(static_cast<std::size_t>(n), kNone);
  }

  // On success returns the clockwise rotation system.
  std::optional<std::vector<std::vector<Vertex>>> run() {
    const int n = g_.order();
    if (n > 2 && g_.size() > 3 * n - 6) return std::nullopt;

    for (Vertex v = 0; v < n; ++v) {
      if (height_[at(v)] == kNone) {
        height_[at(v)] = 0;
        roots_.push_back(v);
        orient(v);
      }
    }
    sort_out_darts();
    for (Vertex r : roots_) {
      if (!test(r)) return std::nullopt;
    }
    for (Vertex v = 0; v < n; ++v) {
      for (int d : out_[at(v)]) nesting_depth_[at(d)] *= sign(d);
    }
    sort_out_darts();

    rotation_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      for (int d : out_[at(v)]) rotation_[at(v)].push_back(target_[at(d)]);
    }
    for (Vertex r : roots_) embed(r);
    return std::move(rotation_);
  }

 private:
  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };

  struct ConflictPair {
    Interval left;
    Interval right;
    void swap() { std::swap(left, right); }
  };

  static std::size_t at(int i) { return static_cast<std::size_t>(i); }

  int dart(Vertex v, Vertex w) const {
    const auto nbrs = g_.neighbors(v);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), w);
    return offset_[at(v)] + static_cast<int>(it - nbrs.begin());
  }

  bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[at(i.high)] > lowpt_[at(b)]; }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[at(p.right.low)];
    if (p.right.empty()) return lowpt_[at(p.left.low)];
    return std::min(lowpt_[at(p.left.low)], lowpt_[at(p.right.low)]);
  }

  void sort_out_darts() {
    for (auto& darts : out_) {
      std::stable_sort(darts.begin(), darts.end(),
                       [&](int a, int b) { return nesting_depth_[at(a)] < nesting_depth_[at(b)]; });
    }
  }

  void orient(Vertex v) {
    const int e = parent_edge_[at(v)];
    for (Vertex w : g_.neighbors(v)) {
      const int vw = dart(v, w);
      if (oriented_[at(vw)] || oriented_[at(dart(w, v))]) continue;
      oriented_[at(vw)] = 1;
      out_[at(v)].push_back(vw);
      lowpt_[at(vw)] = height_[at(v)];
      lowpt2_[at(vw)] = height_[at(v)];
      if (height_[at(w)] == kNone) {
        parent_edge_[at(w)] = vw;
        height_[at(w)] = height_[at(v)] + 1;
        orient(w);
      } else {
        lowpt_[at(vw)] = height_[at(w)];
      }

      nesting_depth_[at(vw)] = 2 * lowpt_[at(vw)];
      if (lowpt2_[at(vw)] < height_[at(v)]) nesting_depth_[at(vw)] += 1;

      if (e != kNone) {
        if (lowpt_[at(vw)] < lowpt_[at(e)]) {
          lowpt2_[at(e)] = std::min(lowpt_[at(e)], lowpt2_[at(vw)]);
          lowpt_[at(e)] = lowpt_[at(vw)];
        } else if (lowpt_[at(vw)] > lowpt_[at(e)]) {
          lowpt2_[at(e)] = std::min(lowpt2_[at(e)], lowpt_[at(vw)]);
        } else {
          lowpt2_[at(e)] = std::min(lowpt2_[at(e)], lowpt2_[at(vw)]);
        }
      }
    }
  }

  bool test(Vertex v) {
    const int e = parent_edge_[at(v)];
    const auto& darts = out_[at(v)];
    for (int ei : darts) {
      const Vertex w = target_[at(ei)];
      stack_bottom_[at(ei)] = static_cast<int>(stack_.size());
      if (ei == parent_edge_[at(w)]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[at(ei)] = ei;
        stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[at(ei)] < height_[at(v)]) {
        if (ei == darts.front()) {
          lowpt_edge_[at(e)] = lowpt_edge_[at(ei)];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[at(q.right.low)] > lowpt_[at(e)]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[at(p.right.low)] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[at(q.right.low)] = lowpt_edge_[at(e)];
      }
    } while (static_cast<int>(stack_.size()) != stack_bottom_[at(ei)]);

    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      if (p.right.low != kNone) ref_[at(p.right.low)] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        ref_[at(p.left.low)] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const Vertex u = source_[at(e)];
    while (!stack_.empty() && lowest(stack_.back()) == height_[at(u)]) {
      const ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.left.low != kNone) side_[at(p.left.low)] = -1;
    }
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && target_[at(p.left.high)] == u) p.left.high = ref_[at(p.left.high)];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[at(p.left.low)] = p.right.low;
        side_[at(p.left.low)] = -1;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && target_[at(p.right.high)] == u) p.right.high = ref_[at(p.right.high)];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[at(p.right.low)] = p.left.low;
        side_[at(p.right.low)] = -1;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[at(e)] < height_[at(u)] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      if (hl != kNone && (hr == kNone || lowpt_[at(hl)] > lowpt_[at(hr)])) {
        ref_[at(e)] = hl;
      } else {
        ref_[at(e)] = hr;
      }
    }
  }

  int sign(int e) {
    if (ref_[at(e)] != kNone) {
      side_[at(e)] *= sign(ref_[at(e)]);
      ref_[at(e)] = kNone;
    }
    return side_[at(e)];
  }

  static void insert_after(std::vector<Vertex>& ring, Vertex ref, Vertex x) {
    const auto it = std::find(ring.begin(), ring.end(), ref);
    assert(it != ring.end());
    ring.insert(it + 1, x);
  }

  static void insert_before(std::vector<Vertex>& ring, Vertex ref, Vertex x) {
    const auto it = std::find(ring.begin(), ring.end(), ref);
    assert(it != ring.end());
    ring.insert(it, x);
  }

  void embed(Vertex v) {
    for (int ei : out_[at(v)]) {
      const Vertex w = target_[at(ei)];
      if (ei == parent_edge_[at(w)]) {
        auto& ring = rotation_[at(w)];
        ring.insert(ring.begin(), v);
        left_ref_[at(v)] = w;
        right_ref_[at(v)] = w;
        embed(w);
      } else if (side_[at(ei)] == 1) {
        insert_after(rotation_[at(w)], right_ref_[at(w)], v);
      } else {
        insert_before(rotation_[at(w)], left_ref_[at(w)], v);
        left_ref_[at(w)] = v;
      }
    }
  }

  const Graph& g_;
  std::vector<int> offset_, source_, target_;
  std::vector<int> height_, parent_edge_;
  std::vector<char> oriented_;
  std::vector<int> lowpt_, lowpt2_, nesting_depth_, ref_, side_, stack_bottom_, lowpt_edge_;
  std::vector<std::vector<int>> out_;
  std::vector<Vertex> roots_;
  std::vector<ConflictPair> stack_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<Vertex> left_ref_, right_ref_;
};

}  // namespace

std::vector<std::vector<Vertex>> trace_faces(const std::vector<std::vector<Vertex>>& rotation) {
  const auto n = rotation.size();
  auto index_in = [&](Vertex v, Vertex w) {
    const auto& ring = rotation[static_cast<std::size_t>(v)];
    return static_cast<std::size_t>(std::find(ring.begin(), ring.end(), w) - ring.begin());
  };
  std::vector<std::vector<char>> used(n);
  std::size_t darts = 0;
  for (std::size_t v = 0; v < n; ++v) {
    used[v].assign(rotation[v].size(), 0);
    darts += rotation[v].size();
  }

  std::vector<std::vector<Vertex>> faces;
  if (darts == 0) {
    if (n > 0) faces.emplace_back();
    return faces;
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rotation[v].size(); ++i) {
      if (used[v][i]) continue;
      std::vector<Vertex> face;
      auto a = static_cast<Vertex>(v);
      std::size_t slot = i;
      while (!used[static_cast<std::size_t>(a)][slot]) {
        used[static_cast<std::size_t>(a)][slot] = 1;
        face.push_back(a);
        const Vertex b = rotation[static_cast<std::size_t>(a)][slot];
        // Next dart leaves b towards the neighbor counter-clockwise of a.
        const auto& ring = rotation[static_cast<std::size_t>(b)];
        const std::size_t back = index_in(b, a);
        slot = (back + ring.size() - 1) % ring.size();
        a = b;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::optional<Embedding> planar_embedding(const Graph& g) {
  if (!is_connected(g)) throw InputError("planar embedding requires a connected graph");
  auto rotation = LeftRightPlanarity(g).run();
  if (!rotation) return std::nullopt;
  Embedding e;
  e.vertex_count = g.order();
  e.edge_count = g.size();
  e.rotation = std::move(*rotation);
  e.faces = trace_faces(e.rotation);
#ifndef NDEBUG
  assert(is_valid_plane_embedding(g, e));
#endif
  return e;
}

bool is_planar(const Graph& g) { return LeftRightPlanarity(g).run().has_value(); }

FaceSizes face_sizes(const Embedding& e) {
  FaceSizes out;
  for (const auto& face : e.faces) out.sizes.push_back(static_cast<int>(face.size()));
  std::sort(out.sizes.begin(), out.sizes.end());
  return out;
}

bool is_valid_plane_embedding(const Graph& g, const Embedding& e) {
  const int n = g.order();
  if (e.vertex_count != n || e.edge_count != g.size() || static_cast<int>(e.rotation.size()) != n) return false;
  for (Vertex v = 0; v < n; ++v) {
    auto ring = e.rotation[static_cast<std::size_t>(v)];
    std::sort(ring.begin(), ring.end());
    const auto nbrs = g.neighbors(v);
    if (!std::equal(ring.begin(), ring.end(), nbrs.begin(), nbrs.end())) return false;
  }
  // Each dart exactly once across all faces.
  std::vector<std::vector<int>> hits(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) hits[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(g.degree(v)), 0);
  long long total = 0;
  for (const auto& face : e.faces) {
    total += static_cast<long long>(face.size());
    for (std::size_t i = 0; i < face.size(); ++i) {
      const Vertex a = face[i];
      const Vertex b = face[(i + 1) % face.size()];
      if (!g.adjacent(a, b)) return false;
      const auto nbrs = g.neighbors(a);
      const auto slot = static_cast<std::size_t>(std::lower_bound(nbrs.begin(), nbrs.end(), b) - nbrs.begin());
      if (++hits[static_cast<std::size_t>(a)][slot] != 1) return false;
    }
  }
  if (total != 2LL * g.size()) return false;
  return n - g.size() + e.face_count() == 2;
}

}  // namespace hypo
