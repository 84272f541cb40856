#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypo/graph.hpp"
#include "hypo/grinberg.hpp"
#include "hypo/hamilton.hpp"
#include "hypo/io.hpp"

namespace hypo {

enum class WitnessKind { cycle, path };

/// Avoidance claim: every j vertices are omitted by some longest cycle
/// (path). `k` is the connectivity the graph is required to have.
struct AvoidanceQuery {
  int j = 1;
  WitnessKind kind = WitnessKind::cycle;
  int k = 1;
};

enum class ClaimKind { hypohamiltonian, hypotraceable, avoidance };
enum class Verdict { pass, fail, inconclusive };

std::string to_string(WitnessKind kind);
std::string to_string(Verdict verdict);

/// Exit status convention shared with the command line: 0 pass, 1 fail,
/// 2 inconclusive.
int exit_code(Verdict verdict);

/// One independent piece of a verification: the graph with `removed`
/// deleted. For the hypo claims the empty set is the whole graph, where a
/// witness is *not* wanted.
struct Subcase {
  std::vector<Vertex> removed;  ///< ascending, original ids
  SearchStatus status = SearchStatus::unknown;
  std::optional<std::vector<Vertex>> witness;  ///< original ids
};

/// "G" for the whole graph, "G-3" or "G-3,7" for deletions.
std::string subcase_label(const std::vector<Vertex>& removed);

struct VerificationReport {
  ClaimKind claim = ClaimKind::hypohamiltonian;
  AvoidanceQuery query;           ///< meaningful for avoidance only
  std::optional<int> longest;     ///< avoidance: the pinned length
  Verdict verdict = Verdict::inconclusive;
  /// Ascending by removed set, whole graph first. Avoidance stops at the
  /// first failing subset.
  std::vector<Subcase> subcases;
  std::optional<std::string> failure_detail;

  /// "hypohamiltonian", "hypotraceable" or
  /// "avoidance(j=1,kind=cycle,k=3,longest=41)".
  std::string claim_text() const;
};

struct VerifyOptions {
  /// Worker threads for independent subcases; 0 or 1 runs inline.
  unsigned threads = 1;
  /// Called as (finished, total) after each subcase, serialized.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// pass iff G has no Hamiltonian cycle and every G-v has one. Runs all 1+n
/// subcases to completion. Throws InputError for n < 3.
VerificationReport verify_hypohamiltonian(const Graph& g, const VerifyOptions& options = {});

/// pass iff G has no Hamiltonian path and every G-v has one. Throws
/// InputError for n < 2.
VerificationReport verify_hypotraceable(const Graph& g, const VerifyOptions& options = {});

/// Determines the longest cycle (path) length l, then checks every j-subset
/// S in lexicographic order for a cycle (path) of length l in G-S. A graph
/// that is not k-connected fails up front. If `prior` is a passing
/// hypohamiltonian (cycle) or hypotraceable (path) report and j = 1, l = n-1
/// and its deletion witnesses are reused instead of searching again.
/// `budget` applies to each search separately; running out gives
/// inconclusive. Throws InputError unless 1 <= j < n and k >= 1.
VerificationReport verify_avoidance(const Graph& g, const AvoidanceQuery& query, const SearchBudget& budget,
                                    const VerificationReport* prior = nullptr, const VerifyOptions& options = {});

/// Re-checks every stored witness against the corresponding deleted graph,
/// including its length, and that whole-graph subcases carry none.
bool revalidate(const Graph& g, const VerificationReport& report);

/// Certificate for a report. Refuted subcases get an empty sequence;
/// unknown ones are left out.
CertificateDocument make_certificate(const VerificationReport& report, std::string digest);

/// Certificate for a Grinberg check: "face_sizes" lists the face lengths
/// and, when certified, "reason:<code>" (empty) names the argument. Verdict
/// is pass when certified, inconclusive otherwise.
CertificateDocument make_certificate(const GrinbergOutcome& outcome, std::string digest);

/// Certificate for a plain Hamiltonian cycle or path decision.
CertificateDocument make_certificate(WitnessKind kind, const std::optional<std::vector<Vertex>>& witness,
                                     std::string digest);

extern const char* const kToolVersion;

}  // namespace hypo
