#include "loopenergy/graph_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "loopenergy/error.hpp"

namespace loopenergy {

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

void expect_arity(const std::vector<std::string_view>& tokens, std::size_t arity, int line) {
  if (tokens.size() != arity + 1) {
    fail(line, "'" + std::string(tokens[0]) + "' takes " + std::to_string(arity) +
                   " argument(s), got " + std::to_string(tokens.size() - 1));
  }
}

}  // namespace

SelfLoopGraph parse_graph_file(std::string_view text) {
  std::optional<int> order;
  std::vector<Edge> edges;
  std::vector<Vertex> loops;
  std::set<Edge> seen_edges;
  std::set<Vertex> seen_loops;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#') {
      if (eol == text.size()) break;
      continue;
    }

    const std::string_view directive = tokens[0];
    auto vertex = [&](std::string_view token) {
      const int v = parse_int(token, line_no);
      if (v < 0 || v >= *order) {
        fail(line_no, "vertex " + std::to_string(v) + " outside [0," + std::to_string(*order) + ")");
      }
      return v;
    };

    if (directive == "n") {
      if (order) fail(line_no, "'n' given more than once");
      expect_arity(tokens, 1, line_no);
      order = parse_int(tokens[1], line_no);
      if (*order < 1) fail(line_no, "order must be at least 1");
    } else if (!order) {
      fail(line_no, "first directive must be 'n <order>'");
    } else if (directive == "e") {
      expect_arity(tokens, 2, line_no);
      const int u = vertex(tokens[1]);
      const int v = vertex(tokens[2]);
      if (u == v) fail(line_no, "edge joins vertex " + std::to_string(u) + " to itself; use 'l'");
      const Edge key{std::min(u, v), std::max(u, v)};
      if (!seen_edges.insert(key).second) fail(line_no, "duplicate edge");
      edges.push_back(key);
    } else if (directive == "l") {
      expect_arity(tokens, 1, line_no);
      const int v = vertex(tokens[1]);
      if (!seen_loops.insert(v).second) fail(line_no, "duplicate loop");
      loops.push_back(v);
    } else {
      fail(line_no, "unknown directive '" + std::string(directive) + "'");
    }
    if (eol == text.size()) break;
  }
  if (!order) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": missing 'n <order>'");
  return SelfLoopGraph::from_edge_list(*order, edges, loops);
}

SelfLoopGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_file(buffer.str());
}

namespace {

std::vector<std::string> directives(const SelfLoopGraph& g) {
  std::vector<std::string> out;
  out.push_back("n " + std::to_string(g.order()));
  for (auto [u, v] : g.edges()) out.push_back("e " + std::to_string(u) + " " + std::to_string(v));
  for (Vertex v : g.loops()) out.push_back("l " + std::to_string(v));
  return out;
}

}  // namespace

std::string serialize_graph_file(const SelfLoopGraph& g) {
  std::string out;
  for (const auto& line : directives(g)) out += line + "\n";
  return out;
}

std::string graph_one_liner(const SelfLoopGraph& g) {
  std::string out;
  for (const auto& line : directives(g)) {
    if (!out.empty()) out += "; ";
    out += line;
  }
  return out;
}

}  // namespace loopenergy
