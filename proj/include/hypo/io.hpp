#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypo/graph.hpp"

namespace hypo {

/// Parses one graph6 line. A single trailing newline and the optional
/// `>>graph6<<` header are accepted; anything else out of place is an
/// InputError (bad size prefix, character outside 63..126, wrong length,
/// non-zero padding bits).
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding without trailing newline. Uses the 1-, 4- or
/// 8-byte size prefix depending on n.
std::string write_graph6(const Graph& g);

/// Edge-list format:
///
///     n m
///     u v        (m lines, 0-based ids)
///
/// Lines whose first non-blank character is '#' and blank lines are
/// ignored. Errors carry the 1-based line number.
Graph parse_edge_list(std::string_view text);

/// Emits the header line followed by edges in ascending order.
std::string write_edge_list(const Graph& g);

enum class GraphFormat { graph6, edge_list };

/// graph6 text never starts with a digit or '#', edge lists always do.
GraphFormat detect_format(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

/// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

/// Machine-checkable verdict record. Rendered as JSON with the fields in
/// declaration order; apart from runtime_ms the text depends only on the
/// input bytes and the claim.
struct CertificateDocument {
  std::string tool_version;
  std::string input_digest;  ///< "sha256:<hex>"
  std::string claim;
  std::string verdict;  ///< pass | fail | inconclusive
  /// Subcase label -> vertex sequence, in canonical subcase order. Labels
  /// must be unique.
  std::vector<std::pair<std::string, std::vector<Vertex>>> witnesses;
  std::uint64_t runtime_ms = 0;
};

/// Two-space indented JSON followed by a newline. Throws std::logic_error
/// on duplicate witness labels.
std::string render_certificate(const CertificateDocument& doc);

/// Inverse of render_certificate. Throws InputError on malformed text.
CertificateDocument parse_certificate(std::string_view text);

/// "sha256:" followed by the hex digest of `bytes`.
std::string input_digest(std::string_view bytes);

}  // namespace hypo
