#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "loopenergy/graph.hpp"

namespace loopenergy {

// Plain-text graph format, one directive per line:
//
//   # comment
//   n 4        order; exactly once, before any other directive
//   e 0 1      an edge between two distinct vertices
//   l 2        a loop on a vertex
//
// Vertices are 0-indexed and tokens are whitespace-separated. Parse errors
// are reported as ErrorKind::ParseError with a "line N:" prefix.

SelfLoopGraph parse_graph_file(std::string_view text);
SelfLoopGraph read_graph_file(const std::filesystem::path& path);

/// Canonical text: `n`, then edges in sorted order, then loops, newline-terminated.
std::string serialize_graph_file(const SelfLoopGraph& g);
/// Same directives joined by "; " on a single line.
std::string graph_one_liner(const SelfLoopGraph& g);

}  // namespace loopenergy
