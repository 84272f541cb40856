#include "hypo/grinberg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "hypo/errors.hpp"

namespace hypo {

namespace {

std::size_t at(long long i) { return static_cast<std::size_t>(i); }

}  // namespace

std::string to_string(GrinbergReason reason) {
  return reason == GrinbergReason::parity ? "parity" : "exhausted-subset-sum";
}

std::optional<GrinbergPartition> grinberg_partition(const FaceSizes& sizes) {
  if (sizes.count() < 2) throw InputError("Grinberg partition needs at least two faces");
  std::vector<int> faces = sizes.sizes;
  std::sort(faces.begin(), faces.end());
  if (faces.front() < 3) throw InputError("face lengths must be at least 3");

  long long total = 0;
  for (int k : faces) total += k - 2;
  if (total % 2 != 0) return std::nullopt;
  const long long half = total / 2;

  // reach[i][s]: some subset of faces[1..i] has weight s. Face 0 is pinned
  // inside, so the target for the rest is half - w0.
  const long long target = half - (faces[0] - 2);
  if (target < 0) return std::nullopt;
  const std::size_t f = faces.size();
  std::vector<std::vector<char>> reach(f, std::vector<char>(at(target) + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 1; i < f; ++i) {
    const long long w = faces[i] - 2;
    for (long long s = 0; s <= target; ++s) {
      reach[i][at(s)] = reach[i - 1][at(s)] || (s >= w && reach[i - 1][at(s - w)]);
    }
  }
  if (!reach[f - 1][at(target)]) return std::nullopt;

  GrinbergPartition out;
  out.inside.push_back(faces[0]);
  long long s = target;
  for (std::size_t i = f - 1; i >= 1; --i) {
    if (reach[i - 1][at(s)]) {
      out.outside.push_back(faces[i]);
    } else {
      out.inside.push_back(faces[i]);
      s -= faces[i] - 2;
    }
  }
  std::sort(out.inside.begin(), out.inside.end());
  std::sort(out.outside.begin(), out.outside.end());
  return out;
}

GrinbergOutcome grinberg_obstruction(const Graph& g) {
  const auto embedding = planar_embedding(g);
  if (!embedding) throw InputError("Grinberg's criterion needs a planar graph");
  GrinbergOutcome out;
  out.face_sizes = face_sizes(*embedding);
  if (auto partition = grinberg_partition(out.face_sizes)) {
    out.result = std::move(*partition);
    return out;
  }
  GrinbergCertificate cert;
  cert.face_sizes = out.face_sizes;
  for (int k : cert.face_sizes.sizes) cert.total_weight += k - 2;
  cert.reason = cert.total_weight % 2 != 0 ? GrinbergReason::parity : GrinbergReason::exhausted_subset_sum;
  out.result = std::move(cert);
  return out;
}

bool verify_certificate(const GrinbergCertificate& cert) {
  if (cert.face_sizes.count() < 2) return false;
  int total = 0;
  for (int k : cert.face_sizes.sizes) total += k - 2;
  if (total != cert.total_weight) return false;
  if (cert.reason == GrinbergReason::parity && total % 2 == 0) return false;
  return !grinberg_partition(cert.face_sizes).has_value();
}

long long grinberg_residual(const Graph& g, const Embedding& e, const CycleWitness& cycle) {
  if (!is_hamiltonian_cycle(g, cycle.order)) throw InputError("residual needs a Hamiltonian cycle of the graph");
  const auto n = cycle.order.size();

  // Darts on the cycle, in both directions.
  std::set<std::pair<Vertex, Vertex>> forward;
  std::set<std::pair<Vertex, Vertex>> on_cycle;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a = cycle.order[i];
    const Vertex b = cycle.order[(i + 1) % n];
    forward.insert({a, b});
    on_cycle.insert({a, b});
    on_cycle.insert({b, a});
  }

  // Faces that share a non-cycle edge lie on the same side; the cycle's
  // forward darts all border one side.
  const auto& faces = e.faces;
  const std::size_t f = faces.size();
  std::vector<std::size_t> parent(f);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::pair<Vertex, Vertex>, std::size_t> owner;
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t j = 0; j < faces[i].size(); ++j) {
      owner[{faces[i][j], faces[i][(j + 1) % faces[i].size()]}] = i;
    }
  }
  for (const auto& [dart, face] : owner) {
    if (on_cycle.count(dart)) continue;
    const auto twin = owner.find({dart.second, dart.first});
    if (twin != owner.end()) parent[find(face)] = find(twin->second);
  }

  std::set<std::size_t> left;
  for (const auto& dart : forward) left.insert(find(owner.at(dart)));
  long long residual = 0;
  for (std::size_t i = 0; i < f; ++i) {
    const long long weight = static_cast<long long>(faces[i].size()) - 2;
    residual += left.count(find(i)) ? weight : -weight;
  }
  return residual;
}

}  // namespace hypo
