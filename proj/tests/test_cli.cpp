#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "hypo/cli.hpp"
#include "hypo/io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = hypo::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string without_runtime(const std::string& text) {
  return std::regex_replace(text, std::regex("\"runtime_ms\": [0-9]+"), "\"runtime_ms\": 0");
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hypo_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("verify hypohamiltonian on the bundled graph") {
  const Run r = run({"verify", "hypohamiltonian", "--fixture", "wiener-araya"});
  CHECK(r.code == 0);
  const auto doc = hypo::parse_certificate(r.out);
  CHECK(doc.verdict == "pass");
  CHECK(doc.witnesses.size() == 43);
  CHECK(r.err.find("subcase 43/43\n") != std::string::npos);
  CHECK(r.out.find("subcase") == std::string::npos);
}

TEST_CASE("quiet suppresses progress") {
  const Run r = run({"verify", "hypohamiltonian", "--fixture", "petersen", "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
}

TEST_CASE("exit codes follow verdicts") {
  const auto k4 = scratch("k4.g6");
  write(k4, "C~\n");
  CHECK(run({"verify", "hypohamiltonian", "--in", k4.string(), "--quiet"}).code == 1);
  CHECK(run({"hamilton", "cycle", "--in", k4.string()}).code == 0);
  CHECK(run({"hamilton", "path", "--fixture", "thomassen-petersen"}).code == 1);
  CHECK(run({"grinberg", "--fixture", "wiener-araya"}).code == 0);
  CHECK(run({"grinberg", "--in", k4.string()}).code == 2);
  CHECK(run({"verify", "avoidance", "--fixture", "wiener-araya", "--k", "3", "--node-limit", "2", "--quiet"}).code ==
        2);
}

TEST_CASE("input errors exit 3 with one diagnostic line") {
  const auto bad = scratch("bad.edges");
  write(bad, "3 2\n0 1\n0 1\n");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "hypohamiltonian", "--in", bad.string()},
           {"verify", "hypohamiltonian"},
           {"verify", "hypohamiltonian", "--fixture", "petersen", "--in", bad.string()},
           {"verify", "sideways", "--fixture", "petersen"},
           {"verify", "hypohamiltonian", "--fixture", "nowhere"},
           {"verify", "hypohamiltonian", "--fixture", "petersen", "--bogus"},
           {"grinberg", "--fixture", "petersen"},
           {"verify", "avoidance", "--fixture", "petersen", "--j", "10"},
           {"hamilton", "cycle", "--in", scratch("missing.g6").string()},
           {},
       }) {
    const Run r = run(args);
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    REQUIRE_FALSE(r.err.empty());
    CHECK(r.err.find('\n') == r.err.size() - 1);
  }
}

TEST_CASE("--out carries the same bytes as standard output") {
  const auto file = scratch("cert.json");
  const Run to_stdout = run({"verify", "hypotraceable", "--fixture", "thomassen-petersen", "--quiet"});
  const Run to_file =
      run({"verify", "hypotraceable", "--fixture", "thomassen-petersen", "--quiet", "--out", file.string()});
  CHECK(to_stdout.code == 0);
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(without_runtime(slurp(file)) == without_runtime(to_stdout.out));

  const auto graph = scratch("graph.edges");
  const Run built = run({"construct", "thomassen", "--fixture", "petersen"});
  run({"construct", "thomassen", "--fixture", "petersen", "--out", graph.string()});
  CHECK(slurp(graph) == built.out);
}

TEST_CASE("construct and convert") {
  const Run g6 = run({"construct", "petersen", "--format", "g6"});
  CHECK(g6.code == 0);
  CHECK(g6.out == "IheA@GUAo\n");
  const Run big = run({"construct", "thomassen"});
  CHECK(big.out.rfind("162 260\n", 0) == 0);
  const auto file = scratch("big.edges");
  write(file, big.out);
  const Run converted = run({"convert", "--in", file.string()});
  CHECK(converted.code == 0);
  const auto back = scratch("big.g6");
  write(back, converted.out);
  CHECK(run({"convert", "--in", back.string(), "--format", "edges"}).out == big.out);
  CHECK(run({"construct", "wiener-araya"}).out.rfind("42 67\n", 0) == 0);
  CHECK(run({"construct", "petersen", "--fixture", "petersen"}).code == 3);
}

TEST_CASE("certificates are reproducible") {
  const Run a = run({"verify", "avoidance", "--j", "1", "--kind", "cycle", "--k", "3", "--fixture", "wiener-araya",
                     "--quiet", "--threads", "2"});
  const Run b = run({"verify", "avoidance", "--j", "1", "--kind", "cycle", "--k", "3", "--fixture", "wiener-araya",
                     "--quiet", "--threads", "1"});
  CHECK(a.code == 0);
  CHECK(hypo::parse_certificate(a.out).claim == "avoidance(j=1,kind=cycle,k=3,longest=41)");
  CHECK(without_runtime(a.out) == without_runtime(b.out));
}
