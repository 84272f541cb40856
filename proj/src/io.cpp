#include "hypo/io.hpp"

#include <json.hpp>

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "hypo/errors.hpp"

namespace hypo {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxChar = 126;

int sextet(char c) {
  const int value = static_cast<unsigned char>(c);
  if (value < kOffset || value > kMaxChar) {
    throw InputError("graph6: character out of range (code " + std::to_string(value) + ")");
  }
  return value - kOffset;
}

std::string_view strip_line_end(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  return text;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip_line_end(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw InputError("graph6: empty input");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw InputError("graph6: truncated size prefix");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 4;
    if (n < 63) throw InputError("graph6: non-canonical size prefix");
  } else {
    if (text.size() < 8) throw InputError("graph6: truncated size prefix");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 8;
    if (n < 258048) throw InputError("graph6: non-canonical size prefix");
  }
  if (n > (1u << 20)) throw InputError("graph6: vertex count too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars) {
    throw InputError("graph6: expected " + std::to_string(chars) + " data characters, got " +
                     std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int chunk = sextet(text[pos + bit / 6]);
      if ((chunk >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; bit < chars * 6; ++bit) {
    if ((sextet(text[pos + bit / 6]) >> (5 - bit % 6)) & 1) throw InputError("graph6: non-zero padding bits");
  }
  // Validate every data character even when n is tiny.
  for (std::size_t i = pos; i < text.size(); ++i) sextet(text[i]);
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kOffset));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
  return out;
}

namespace {

struct LineCursor {
  std::string_view rest;
  int number = 0;

  // Next line that is neither blank nor a comment.
  bool next(std::string_view& line) {
    while (!rest.empty()) {
      const auto end = rest.find('\n');
      line = rest.substr(0, end);
      rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end + 1);
      ++number;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }
};

std::vector<long long> integers(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    const auto consumed = static_cast<std::size_t>(ptr - (line.data() + i));
    if (ec != std::errc{} || consumed == 0 ||
        (i + consumed < line.size() && line[i + consumed] != ' ' && line[i + consumed] != '\t')) {
      throw InputError("edge list line " + std::to_string(line_no) + ": malformed token");
    }
    out.push_back(value);
    i += consumed;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineCursor cursor{text};
  std::string_view line;
  if (!cursor.next(line)) throw InputError("edge list: missing header line");
  const auto header = integers(line, cursor.number);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0 || header[0] > (1 << 20)) {
    throw InputError("edge list line " + std::to_string(cursor.number) + ": expected \"n m\"");
  }
  const int n = static_cast<int>(header[0]);
  const long long m = header[1];

  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  while (cursor.next(line)) {
    const int at = cursor.number;
    const auto where = "edge list line " + std::to_string(at) + ": ";
    const auto pair = integers(line, at);
    if (pair.size() != 2) throw InputError(where + "expected \"u v\"");
    if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n) throw InputError(where + "vertex out of range");
    const int u = static_cast<int>(pair[0]);
    const int v = static_cast<int>(pair[1]);
    if (u == v) throw InputError(where + "loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw InputError(where + "duplicate edge");
    if (static_cast<long long>(edges.size()) == m) throw InputError(where + "more edges than declared");
    edges.push_back({u, v});
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError("edge list: header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

GraphFormat detect_format(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InputError("empty graph input");
  const char c = text[first];
  return (c == '#' || (c >= '0' && c <= '9')) ? GraphFormat::edge_list : GraphFormat::graph6;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? write_graph6(g) + "\n" : write_edge_list(g);
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::string input_digest(std::string_view bytes) { return "sha256:" + sha256_hex(bytes); }

std::string render_certificate(const CertificateDocument& doc) {
  // One field per line and one witness per line, so documents diff cleanly.
  using json = nlohmann::ordered_json;
  std::set<std::string> labels;
  std::string out = "{\n";
  out += "  \"tool_version\": " + json(doc.tool_version).dump() + ",\n";
  out += "  \"input_digest\": " + json(doc.input_digest).dump() + ",\n";
  out += "  \"claim\": " + json(doc.claim).dump() + ",\n";
  out += "  \"verdict\": " + json(doc.verdict).dump() + ",\n";
  out += "  \"witnesses\": {";
  for (std::size_t i = 0; i < doc.witnesses.size(); ++i) {
    const auto& [label, sequence] = doc.witnesses[i];
    if (!labels.insert(label).second) throw std::logic_error("duplicate witness label " + label);
    out += i == 0 ? "\n" : ",\n";
    out += "    " + json(label).dump() + ": " + json(sequence).dump();
  }
  out += doc.witnesses.empty() ? "},\n" : "\n  },\n";
  out += "  \"runtime_ms\": " + std::to_string(doc.runtime_ms) + "\n}\n";
  return out;
}

CertificateDocument parse_certificate(std::string_view text) {
  try {
    const auto in = nlohmann::ordered_json::parse(text);
    CertificateDocument doc;
    doc.tool_version = in.at("tool_version").get<std::string>();
    doc.input_digest = in.at("input_digest").get<std::string>();
    doc.claim = in.at("claim").get<std::string>();
    doc.verdict = in.at("verdict").get<std::string>();
    for (const auto& [label, sequence] : in.at("witnesses").items()) {
      doc.witnesses.emplace_back(label, sequence.get<std::vector<Vertex>>());
    }
    doc.runtime_ms = in.at("runtime_ms").get<std::uint64_t>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace hypo
