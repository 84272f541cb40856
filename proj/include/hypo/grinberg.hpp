#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypo/graph.hpp"
#include "hypo/hamilton.hpp"
#include "hypo/planar.hpp"

namespace hypo {

/// Split of the faces into two non-empty groups with equal total weight,
/// where a face of length k weighs k - 2. Any Hamiltonian cycle of a plane
/// graph induces one (its inside and outside faces).
struct GrinbergPartition {
  std::vector<int> inside;   ///< face lengths, ascending
  std::vector<int> outside;  ///< face lengths, ascending
};

enum class GrinbergReason {
  parity,               ///< total weight is odd
  exhausted_subset_sum, ///< even total, but no subset reaches half of it
};

std::string to_string(GrinbergReason reason);

/// Proof that no balanced face partition exists, hence no Hamiltonian cycle.
struct GrinbergCertificate {
  FaceSizes face_sizes;
  GrinbergReason reason = GrinbergReason::parity;
  int total_weight = 0;

  static constexpr const char* statement = "no balanced partition exists, hence no Hamiltonian cycle";
};

/// Balanced partition of the face weights, or nullopt when none exists.
/// Exact subset-sum DP over weights k-2; the first (smallest) face is always
/// placed inside. Throws InputError with fewer than 2 faces or a face
/// shorter than 3.
std::optional<GrinbergPartition> grinberg_partition(const FaceSizes& sizes);

/// Outcome of the obstruction check: a certificate, or the balanced
/// partition that makes the criterion inconclusive.
struct GrinbergOutcome {
  FaceSizes face_sizes;
  std::variant<GrinbergCertificate, GrinbergPartition> result;

  bool certified() const { return std::holds_alternative<GrinbergCertificate>(result); }
};

/// Embeds g and runs the partition test on its face lengths. Throws
/// InputError for disconnected or non-planar input.
GrinbergOutcome grinberg_obstruction(const Graph& g);

/// Re-checks a certificate from its face sizes alone.
bool verify_certificate(const GrinbergCertificate& cert);

/// Sum of (k - 2) over faces on one side of the cycle minus the same sum on
/// the other side. Zero for every Hamiltonian cycle of a plane graph.
/// Throws InputError if `cycle` is not a Hamiltonian cycle of the embedded
/// graph.
long long grinberg_residual(const Graph& g, const Embedding& e, const CycleWitness& cycle);

}  // namespace hypo
