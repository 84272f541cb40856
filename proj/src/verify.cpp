#include "hypo/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hypo/errors.hpp"

namespace hypo {

const char* const kToolVersion = "hypo 1.0.0";

namespace {

std::size_t at(long long i) { return static_cast<std::size_t>(i); }

// Runs work(i) for i in [0, total) on a small pool. When stop_on_failure
// is set, a failing index f cancels every index above f; all indices below
// it still run, so the result does not depend on scheduling. Returns the
// completed prefix.
template <class Work, class Failed>
std::vector<Subcase> run_subcases(std::size_t total, Work work, Failed failed, bool stop_on_failure,
                                  const VerifyOptions& options) {
  std::vector<std::optional<Subcase>> slots(total);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop{total};
  std::mutex progress_mutex;
  std::size_t finished = 0;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total || i > stop.load()) return;
      try {
        Subcase result = work(i);
        if (stop_on_failure && failed(result)) {
          std::size_t seen = stop.load();
          while (i < seen && !stop.compare_exchange_weak(seen, i)) {
          }
        }
        slots[i] = std::move(result);
      } catch (...) {
        std::lock_guard lock(progress_mutex);
        if (!error) error = std::current_exception();
        stop.store(0);
        return;
      }
      std::lock_guard lock(progress_mutex);
      ++finished;
      if (options.progress) options.progress(finished, total);
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(total)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  std::vector<Subcase> out;
  const std::size_t end = std::min(total, stop.load() + (stop.load() < total ? 1 : 0));
  for (std::size_t i = 0; i < end; ++i) out.push_back(std::move(*slots[i]));
  return out;
}

std::vector<Vertex> to_original(const InducedSubgraph& sub, const std::vector<Vertex>& order) {
  std::vector<Vertex> out;
  out.reserve(order.size());
  for (Vertex v : order) out.push_back(sub.original[at(v)]);
  return out;
}

Subcase decide(const Graph& g, std::vector<Vertex> removed, WitnessKind kind) {
  Subcase out;
  const auto sub = delete_vertices(g, removed);
  out.removed = std::move(removed);
  const int n = sub.graph.order();
  std::optional<std::vector<Vertex>> found;
  if (kind == WitnessKind::cycle) {
    if (n >= 3) {
      if (auto w = hamiltonian_cycle(sub.graph)) found = std::move(w->order);
    }
  } else if (n == 1) {
    found = std::vector<Vertex>{0};
  } else if (n >= 2) {
    if (auto w = hamiltonian_path(sub.graph)) found = std::move(w->order);
  }
  out.status = found ? SearchStatus::found : SearchStatus::exhausted;
  if (found) out.witness = to_original(sub, *found);
  return out;
}

VerificationReport verify_hypo(const Graph& g, WitnessKind kind, const VerifyOptions& options) {
  const int n = g.order();
  VerificationReport report;
  report.claim = kind == WitnessKind::cycle ? ClaimKind::hypohamiltonian : ClaimKind::hypotraceable;

  auto work = [&](std::size_t i) {
    std::vector<Vertex> removed;
    if (i > 0) removed.push_back(static_cast<Vertex>(i - 1));
    return decide(g, std::move(removed), kind);
  };
  report.subcases = run_subcases(at(n) + 1, work, [](const Subcase&) { return false; }, false, options);

  const std::string noun = kind == WitnessKind::cycle ? "Hamiltonian cycle" : "Hamiltonian path";
  report.verdict = Verdict::pass;
  if (report.subcases.front().status == SearchStatus::found) {
    report.verdict = Verdict::fail;
    report.failure_detail = "G has a " + noun;
    return report;
  }
  for (const Subcase& s : report.subcases) {
    if (!s.removed.empty() && s.status != SearchStatus::found) {
      report.verdict = Verdict::fail;
      report.failure_detail = subcase_label(s.removed) + " has no " + noun;
      return report;
    }
  }
  return report;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (out > (std::uint64_t{1} << 40)) return out;
  }
  return out;
}

std::vector<std::vector<Vertex>> subsets(int n, int j) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur(at(j));
  for (int i = 0; i < j; ++i) cur[at(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = j - 1;
    while (i >= 0 && cur[at(i)] == n - j + i) --i;
    if (i < 0) return out;
    ++cur[at(i)];
    for (int t = i + 1; t < j; ++t) cur[at(t)] = cur[at(t - 1)] + 1;
  }
}

bool usable_prior(const VerificationReport* prior, const Graph& g, const AvoidanceQuery& q) {
  if (!prior || q.j != 1 || prior->verdict != Verdict::pass) return false;
  const ClaimKind wanted = q.kind == WitnessKind::cycle ? ClaimKind::hypohamiltonian : ClaimKind::hypotraceable;
  return prior->claim == wanted && prior->subcases.size() == at(g.order()) + 1;
}

}  // namespace

std::string to_string(WitnessKind kind) { return kind == WitnessKind::cycle ? "cycle" : "path"; }

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

int exit_code(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass:
      return 0;
    case Verdict::fail:
      return 1;
    case Verdict::inconclusive:
      return 2;
  }
  return 2;
}

std::string subcase_label(const std::vector<Vertex>& removed) {
  std::string out = "G";
  for (std::size_t i = 0; i < removed.size(); ++i) {
    out += i == 0 ? "-" : ",";
    out += std::to_string(removed[i]);
  }
  return out;
}

std::string VerificationReport::claim_text() const {
  switch (claim) {
    case ClaimKind::hypohamiltonian:
      return "hypohamiltonian";
    case ClaimKind::hypotraceable:
      return "hypotraceable";
    case ClaimKind::avoidance:
      break;
  }
  std::string out = "avoidance(j=" + std::to_string(query.j) + ",kind=" + to_string(query.kind) +
                    ",k=" + std::to_string(query.k);
  if (longest) out += ",longest=" + std::to_string(*longest);
  return out + ")";
}

VerificationReport verify_hypohamiltonian(const Graph& g, const VerifyOptions& options) {
  if (g.order() < 3) throw InputError("hypohamiltonicity needs at least 3 vertices");
  return verify_hypo(g, WitnessKind::cycle, options);
}

VerificationReport verify_hypotraceable(const Graph& g, const VerifyOptions& options) {
  if (g.order() < 2) throw InputError("hypotraceability needs at least 2 vertices");
  return verify_hypo(g, WitnessKind::path, options);
}

VerificationReport verify_avoidance(const Graph& g, const AvoidanceQuery& query, const SearchBudget& budget,
                                    const VerificationReport* prior, const VerifyOptions& options) {
  const int n = g.order();
  if (query.j < 1) throw InputError("j must be at least 1");
  if (query.k < 1) throw InputError("k must be at least 1");
  if (query.j >= n) throw InputError("j must be smaller than the number of vertices");
  if (binomial(n, query.j) > 10'000'000) throw InputError("too many vertex subsets to enumerate");

  VerificationReport report;
  report.claim = ClaimKind::avoidance;
  report.query = query;
  if (!is_k_connected(g, query.k)) {
    report.verdict = Verdict::fail;
    report.failure_detail = "G is not " + std::to_string(query.k) + "-connected";
    return report;
  }

  if (usable_prior(prior, g, query)) {
    report.longest = n - 1;
    report.subcases.assign(prior->subcases.begin() + 1, prior->subcases.end());
    report.verdict = Verdict::pass;
    if (!revalidate(g, report)) throw std::logic_error("prior report carries invalid witnesses");
    return report;
  }

  const LongestResult longest =
      query.kind == WitnessKind::cycle ? longest_cycle_length(g, budget) : longest_path_length(g, budget);
  if (!longest.exact) {
    report.verdict = Verdict::inconclusive;
    report.failure_detail = "longest " + to_string(query.kind) + " length not pinned within budget (at least " +
                            std::to_string(longest.length) + ")";
    return report;
  }
  const int target = longest.length;
  report.longest = target;
  if (target == 0) {
    report.verdict = Verdict::fail;
    report.failure_detail = "G has no cycle";
    return report;
  }

  const auto sets = subsets(n, query.j);
  auto work = [&](std::size_t i) {
    Subcase out;
    out.removed = sets[i];
    const auto sub = delete_vertices(g, out.removed);
    if (sub.graph.order() < target) {
      out.status = SearchStatus::exhausted;
      return out;
    }
    std::optional<std::vector<Vertex>> found;
    if (query.kind == WitnessKind::cycle) {
      auto r = cycle_of_length_at_least(sub.graph, target, budget);
      out.status = r.status;
      if (r.witness) found = std::move(r.witness->order);
    } else {
      auto r = path_of_length_at_least(sub.graph, target, budget);
      out.status = r.status;
      if (r.witness) found = std::move(r.witness->order);
    }
    if (found) out.witness = to_original(sub, *found);
    return out;
  };
  auto failed = [](const Subcase& s) { return s.status == SearchStatus::exhausted; };
  report.subcases = run_subcases(sets.size(), work, failed, true, options);

  report.verdict = Verdict::pass;
  for (const Subcase& s : report.subcases) {
    if (s.status == SearchStatus::exhausted) {
      report.verdict = Verdict::fail;
      report.failure_detail = "every longest " + to_string(query.kind) + " meets " + subcase_label(s.removed);
      return report;
    }
    if (s.status == SearchStatus::unknown && report.verdict == Verdict::pass) {
      report.verdict = Verdict::inconclusive;
      report.failure_detail = subcase_label(s.removed) + " ran out of budget";
    }
  }
  return report;
}

bool revalidate(const Graph& g, const VerificationReport& report) {
  const bool hypo = report.claim != ClaimKind::avoidance;
  const WitnessKind kind =
      report.claim == ClaimKind::hypohamiltonian || (!hypo && report.query.kind == WitnessKind::cycle)
          ? WitnessKind::cycle
          : WitnessKind::path;
  if (!hypo && !report.longest && !report.subcases.empty()) return false;

  std::vector<std::vector<Vertex>> seen;
  for (const Subcase& s : report.subcases) {
    if (!std::is_sorted(s.removed.begin(), s.removed.end())) return false;
    seen.push_back(s.removed);
    if (s.witness.has_value() != (s.status == SearchStatus::found)) return false;
    if (!s.witness) {
      if (report.verdict == Verdict::pass && !(hypo && s.removed.empty())) return false;
      continue;
    }
    if (report.verdict == Verdict::pass && hypo && s.removed.empty()) return false;
    for (Vertex v : s.removed) {
      if (!g.contains(v)) return false;
    }
    const auto sub = delete_vertices(g, s.removed);
    std::vector<Vertex> local;
    for (Vertex v : *s.witness) {
      if (!g.contains(v) || sub.relabel[at(v)] < 0) return false;
      local.push_back(sub.relabel[at(v)]);
    }
    const auto expected = at(hypo ? sub.graph.order() : *report.longest);
    if (local.size() != expected) return false;
    const bool ok = kind == WitnessKind::cycle ? (local.size() >= 3 && is_cycle(sub.graph, local))
                                               : is_path(sub.graph, local);
    if (!ok) return false;
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

CertificateDocument make_certificate(const VerificationReport& report, std::string digest) {
  CertificateDocument doc;
  doc.tool_version = kToolVersion;
  doc.input_digest = std::move(digest);
  doc.claim = report.claim_text();
  doc.verdict = to_string(report.verdict);
  for (const Subcase& s : report.subcases) {
    if (s.status == SearchStatus::unknown) continue;
    doc.witnesses.emplace_back(subcase_label(s.removed), s.witness.value_or(std::vector<Vertex>{}));
  }
  return doc;
}

CertificateDocument make_certificate(const GrinbergOutcome& outcome, std::string digest) {
  CertificateDocument doc;
  doc.tool_version = kToolVersion;
  doc.input_digest = std::move(digest);
  doc.claim = "non-hamiltonian(grinberg)";
  doc.verdict = outcome.certified() ? "pass" : "inconclusive";
  doc.witnesses.emplace_back("face_sizes", outcome.face_sizes.sizes);
  if (const auto* cert = std::get_if<GrinbergCertificate>(&outcome.result)) {
    doc.witnesses.emplace_back("reason:" + to_string(cert->reason), std::vector<Vertex>{});
  } else {
    const auto& partition = std::get<GrinbergPartition>(outcome.result);
    doc.witnesses.emplace_back("partition:inside", partition.inside);
    doc.witnesses.emplace_back("partition:outside", partition.outside);
  }
  return doc;
}

CertificateDocument make_certificate(WitnessKind kind, const std::optional<std::vector<Vertex>>& witness,
                                     std::string digest) {
  CertificateDocument doc;
  doc.tool_version = kToolVersion;
  doc.input_digest = std::move(digest);
  doc.claim = kind == WitnessKind::cycle ? "hamiltonian-cycle" : "hamiltonian-path";
  doc.verdict = witness ? "pass" : "fail";
  doc.witnesses.emplace_back("G", witness.value_or(std::vector<Vertex>{}));
  return doc;
}

}  // namespace hypo
