#include "hypo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "hypo/constructions.hpp"
#include "hypo/errors.hpp"
#include "hypo/grinberg.hpp"
#include "hypo/io.hpp"
#include "hypo/verify.hpp"

namespace hypo {

namespace {

const std::vector<std::string> kFixtures = {"wiener-araya", "petersen", "thomassen-petersen",
                                            "thomassen-wiener-araya"};

struct Options {
  std::string in;
  std::string fixture;
  std::string format;
  std::string out;
  bool quiet = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::optional<std::uint64_t> node_limit;
  std::optional<long long> time_limit_ms;
  int j = 1;
  std::string kind = "cycle";
  int k = 1;
  std::string target;  // positional word after the subcommand
};

struct Input {
  Graph graph;
  std::string digest;
};

GraphFormat parse_format_flag(const std::string& flag) {
  return flag == "g6" ? GraphFormat::graph6 : GraphFormat::edge_list;
}

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Input fixture_input(const std::string& name) {
  if (name == "wiener-araya") {
    const std::string_view bytes = wiener_araya_asset();
    return {wiener_araya(), input_digest(bytes)};
  }
  Graph g;
  if (name == "petersen") {
    g = petersen();
  } else if (name == "thomassen-petersen") {
    g = thomassen_petersen();
  } else {
    g = thomassen_wiener_araya();
  }
  return {g, input_digest(write_edge_list(g))};
}

Input load_input(const Options& opt) {
  if (opt.in.empty() == opt.fixture.empty()) throw InputError("give exactly one of --in and --fixture");
  if (!opt.fixture.empty()) return fixture_input(opt.fixture);
  std::string bytes;
  if (opt.in == "-") {
    bytes = read_all(std::cin);
  } else {
    std::ifstream file(opt.in, std::ios::binary);
    if (!file) throw InputError("cannot read " + opt.in);
    bytes = read_all(file);
  }
  const GraphFormat format = opt.format.empty() ? detect_format(bytes) : parse_format_flag(opt.format);
  return {parse_graph(bytes, format), input_digest(bytes)};
}

SearchBudget budget_of(const Options& opt) {
  SearchBudget budget;
  budget.node_limit = opt.node_limit;
  if (opt.time_limit_ms) budget.time_limit = std::chrono::milliseconds(*opt.time_limit_ms);
  return budget;
}

void emit(const Options& opt, std::ostream& out, const std::string& bytes) {
  if (opt.out.empty()) {
    out << bytes;
    out.flush();
    return;
  }
  std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write " + opt.out);
  file << bytes;
  if (!file.flush()) throw InputError("cannot write " + opt.out);
}

std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
}

int run_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const Input input = load_input(opt);
  const auto start = std::chrono::steady_clock::now();
  VerifyOptions vopt;
  vopt.threads = opt.threads;
  if (!opt.quiet) {
    vopt.progress = [&err](std::size_t done, std::size_t total) {
      err << "subcase " << done << "/" << total << "\n";
      err.flush();
    };
  }
  VerificationReport report;
  if (opt.target == "hypohamiltonian") {
    report = verify_hypohamiltonian(input.graph, vopt);
  } else if (opt.target == "hypotraceable") {
    report = verify_hypotraceable(input.graph, vopt);
  } else {
    AvoidanceQuery query;
    query.j = opt.j;
    query.kind = opt.kind == "path" ? WitnessKind::path : WitnessKind::cycle;
    query.k = opt.k;
    report = verify_avoidance(input.graph, query, budget_of(opt), nullptr, vopt);
  }
  if (!revalidate(input.graph, report)) throw std::logic_error("report failed revalidation");
  auto doc = make_certificate(report, input.digest);
  doc.runtime_ms = elapsed_ms(start);
  if (report.failure_detail && !opt.quiet) err << report.failure_detail.value() << "\n";
  emit(opt, out, render_certificate(doc));
  return exit_code(report.verdict);
}

int run_grinberg(const Options& opt, std::ostream& out) {
  const Input input = load_input(opt);
  const auto start = std::chrono::steady_clock::now();
  const GrinbergOutcome outcome = grinberg_obstruction(input.graph);
  auto doc = make_certificate(outcome, input.digest);
  doc.runtime_ms = elapsed_ms(start);
  emit(opt, out, render_certificate(doc));
  return outcome.certified() ? 0 : 2;
}

int run_hamilton(const Options& opt, std::ostream& out) {
  const Input input = load_input(opt);
  const auto start = std::chrono::steady_clock::now();
  std::optional<std::vector<Vertex>> witness;
  WitnessKind kind = WitnessKind::cycle;
  if (opt.target == "cycle") {
    if (auto w = hamiltonian_cycle(input.graph)) witness = std::move(w->order);
  } else {
    kind = WitnessKind::path;
    if (auto w = hamiltonian_path(input.graph)) witness = std::move(w->order);
  }
  auto doc = make_certificate(kind, witness, input.digest);
  doc.runtime_ms = elapsed_ms(start);
  emit(opt, out, render_certificate(doc));
  return witness ? 0 : 1;
}

int run_construct(const Options& opt, std::ostream& out) {
  if (!opt.in.empty()) throw InputError("construct takes no --in");
  Graph g;
  if (opt.target == "wiener-araya") {
    g = wiener_araya();
  } else if (opt.target == "petersen") {
    g = petersen();
  } else if (opt.fixture.empty() || opt.fixture == "wiener-araya") {
    g = thomassen_wiener_araya();
  } else if (opt.fixture == "petersen") {
    g = thomassen_petersen();
  } else {
    throw InputError("construct thomassen takes --fixture petersen or wiener-araya");
  }
  if (opt.target != "thomassen" && !opt.fixture.empty()) throw InputError("--fixture only applies to thomassen");
  const GraphFormat format = opt.format.empty() ? GraphFormat::edge_list : parse_format_flag(opt.format);
  emit(opt, out, write_graph(g, format));
  return 0;
}

int run_convert(const Options& opt, std::ostream& out) {
  Options input_opt = opt;
  input_opt.format.clear();
  const Input input = load_input(input_opt);
  const GraphFormat format = opt.format.empty() ? GraphFormat::graph6 : parse_format_flag(opt.format);
  emit(opt, out, write_graph(input.graph, format));
  return 0;
}

void add_input_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--in", opt.in, "input graph file (graph6 or edge list; - for stdin)");
  cmd->add_option("--fixture", opt.fixture, "bundled graph")->check(CLI::IsMember(kFixtures));
}

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "graph format")->check(CLI::IsMember({"g6", "edges"}));
  cmd->add_option("--out", opt.out, "write output here instead of standard output");
  cmd->add_flag("--quiet", opt.quiet, "no progress lines");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Hypohamiltonian and hypotraceable graph verifier", "hypo"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto* verify = app.add_subcommand("verify", "check a hypo or avoidance claim");
  verify->add_option("claim", opt.target)
      ->required()
      ->check(CLI::IsMember({"hypohamiltonian", "hypotraceable", "avoidance"}));
  add_input_flags(verify, opt);
  add_common_flags(verify, opt);
  verify->add_option("--j", opt.j, "avoidance: size of the omitted sets")->check(CLI::Range(1, 1 << 20));
  verify->add_option("--kind", opt.kind, "avoidance: cycle or path")->check(CLI::IsMember({"cycle", "path"}));
  verify->add_option("--k", opt.k, "avoidance: required connectivity")->check(CLI::Range(1, 1 << 20));
  verify->add_option("--node-limit", opt.node_limit, "search nodes per subcase");
  verify->add_option("--time-limit-ms", opt.time_limit_ms, "milliseconds per subcase")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1u, 1024u));

  auto* grinberg = app.add_subcommand("grinberg", "face-weight obstruction to Hamiltonicity");
  add_input_flags(grinberg, opt);
  add_common_flags(grinberg, opt);

  auto* hamilton = app.add_subcommand("hamilton", "decide Hamiltonicity");
  hamilton->add_option("kind", opt.target)->required()->check(CLI::IsMember({"cycle", "path"}));
  add_input_flags(hamilton, opt);
  add_common_flags(hamilton, opt);

  auto* construct = app.add_subcommand("construct", "write a bundled or constructed graph");
  construct->add_option("name", opt.target)
      ->required()
      ->check(CLI::IsMember({"wiener-araya", "petersen", "thomassen"}));
  add_input_flags(construct, opt);
  add_common_flags(construct, opt);

  auto* convert = app.add_subcommand("convert", "re-encode a graph (default: graph6)");
  add_input_flags(convert, opt);
  add_common_flags(convert, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), '\n', ' ');
    err << "error: " << what << "\n";
    return 3;
  }

  try {
    if (verify->parsed()) return run_verify(opt, out, err);
    if (grinberg->parsed()) return run_grinberg(opt, out);
    if (hamilton->parsed()) return run_hamilton(opt, out);
    if (construct->parsed()) return run_construct(opt, out);
    return run_convert(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace hypo
