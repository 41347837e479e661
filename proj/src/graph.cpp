#include "loopenergy/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "loopenergy/error.hpp"

namespace loopenergy {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::DuplicateLoop: return "DuplicateLoop";
    case ErrorKind::SelfPairInEdgeList: return "SelfPairInEdgeList";
    case ErrorKind::IncompatibleOrder: return "IncompatibleOrder";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::DegenerateSpread: return "DegenerateSpread";
    case ErrorKind::UnknownBoundId: return "UnknownBoundId";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

SelfLoopGraph SelfLoopGraph::from_edge_list(int n, std::span<const Edge> edges,
                                            std::span<const Vertex> loops) {
  if (n < 1) {
    throw Error(ErrorKind::IndexOutOfRange, "graph order must be at least 1");
  }
  auto in_range = [n](Vertex v) { return v >= 0 && v < n; };

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (!in_range(u) || !in_range(v)) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) {
      throw Error(ErrorKind::SelfPairInEdgeList,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") joins a vertex to itself; use the loop set instead");
    }
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  if (auto dup = std::adjacent_find(normalized.begin(), normalized.end());
      dup != normalized.end()) {
    throw Error(ErrorKind::DuplicateEdge, "duplicate edge (" +
                                              std::to_string(dup->first) + "," +
                                              std::to_string(dup->second) + ")");
  }

  std::vector<Vertex> loop_set(loops.begin(), loops.end());
  for (Vertex v : loop_set) {
    if (!in_range(v)) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "loop vertex " + std::to_string(v) + " outside [0," +
                      std::to_string(n) + ")");
    }
  }
  std::sort(loop_set.begin(), loop_set.end());
  if (auto dup = std::adjacent_find(loop_set.begin(), loop_set.end());
      dup != loop_set.end()) {
    throw Error(ErrorKind::DuplicateLoop,
                "duplicate loop on vertex " + std::to_string(*dup));
  }
  return SelfLoopGraph(n, std::move(normalized), std::move(loop_set));
}

bool SelfLoopGraph::has_edge(Vertex u, Vertex v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

bool SelfLoopGraph::has_loop(Vertex v) const {
  return std::binary_search(loops_.begin(), loops_.end(), v);
}

int SelfLoopGraph::degree(Vertex v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) {
    return e.first == v || e.second == v;
  }));
}

int AdjacencyMatrix::trace() const {
  int t = 0;
  for (int i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

bool AdjacencyMatrix::is_symmetric() const {
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

AdjacencyMatrix adjacency_matrix(const SelfLoopGraph& g) {
  AdjacencyMatrix a(g.order());
  for (auto [u, v] : g.edges()) {
    a.set(u, v, 1);
    a.set(v, u, 1);
  }
  for (Vertex v : g.loops()) a.set(v, v, 1);
  return a;
}

namespace {

constexpr std::array<std::pair<FamilyName, std::string_view>, 15> kFamilyNames{{
    {FamilyName::K1, "K1"},
    {FamilyName::K1_HAT, "K1_HAT"},
    {FamilyName::K2, "K2"},
    {FamilyName::K2_TILDE, "K2_TILDE"},
    {FamilyName::K2_HAT, "K2_HAT"},
    {FamilyName::KN, "KN"},
    {FamilyName::KN_HAT, "KN_HAT"},
    {FamilyName::NK1, "NK1"},
    {FamilyName::NK1_HAT, "NK1_HAT"},
    {FamilyName::HALF_K2, "HALF_K2"},
    {FamilyName::HALF_K2_TILDE, "HALF_K2_TILDE"},
    {FamilyName::HALF_K2_HAT, "HALF_K2_HAT"},
    {FamilyName::HALF_K1_UNION_HALF_K1HAT, "HALF_K1_UNION_HALF_K1HAT"},
    {FamilyName::KSIGMA_HAT_UNION_ISOLATED, "KSIGMA_HAT_UNION_ISOLATED"},
    {FamilyName::OTHER, "OTHER"},
}};

void require_order(FamilyName name, int n, bool ok) {
  if (!ok) {
    throw Error(ErrorKind::IncompatibleOrder,
                std::string(to_string(name)) + " is not defined for n = " +
                    std::to_string(n));
  }
}

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<Edge> clique_edges(int first, int count) {
  std::vector<Edge> edges;
  for (int u = first; u < first + count; ++u)
    for (int v = u + 1; v < first + count; ++v) edges.emplace_back(u, v);
  return edges;
}

std::vector<Edge> matching_edges(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; u += 2) edges.emplace_back(u, u + 1);
  return edges;
}

}  // namespace

std::string_view to_string(FamilyName name) {
  for (const auto& [value, text] : kFamilyNames)
    if (value == name) return text;
  return "OTHER";
}

std::optional<FamilyName> parse_family_name(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& [value, name] : kFamilyNames)
    if (name == upper) return value;
  return std::nullopt;
}

std::string to_string(const FamilyTag& tag) {
  std::string out(to_string(tag.name));
  if (tag.name == FamilyName::OTHER) return out;
  out += "(n=" + std::to_string(tag.n);
  if (tag.name == FamilyName::KSIGMA_HAT_UNION_ISOLATED)
    out += ",sigma=" + std::to_string(tag.sigma);
  return out + ")";
}

SelfLoopGraph make_family(FamilyName name, int n, int sigma) {
  require_order(name, n, n >= 1);
  const bool even = n % 2 == 0;
  std::vector<Edge> edges;
  std::vector<Vertex> loops;

  switch (name) {
    case FamilyName::K1:
      require_order(name, n, n == 1);
      break;
    case FamilyName::K1_HAT:
      require_order(name, n, n == 1);
      loops = {0};
      break;
    case FamilyName::K2:
      require_order(name, n, n == 2);
      edges = {{0, 1}};
      break;
    case FamilyName::K2_TILDE:
      require_order(name, n, n == 2);
      edges = {{0, 1}};
      loops = {0};
      break;
    case FamilyName::K2_HAT:
      require_order(name, n, n == 2);
      edges = {{0, 1}};
      loops = {0, 1};
      break;
    case FamilyName::KN:
      edges = clique_edges(0, n);
      break;
    case FamilyName::KN_HAT:
      edges = clique_edges(0, n);
      loops = all_vertices(n);
      break;
    case FamilyName::NK1:
      break;
    case FamilyName::NK1_HAT:
      loops = all_vertices(n);
      break;
    case FamilyName::HALF_K2:
      require_order(name, n, even);
      edges = matching_edges(n);
      break;
    case FamilyName::HALF_K2_TILDE:
      require_order(name, n, even);
      edges = matching_edges(n);
      for (int v = 0; v < n; v += 2) loops.push_back(v);
      break;
    case FamilyName::HALF_K2_HAT:
      require_order(name, n, even);
      edges = matching_edges(n);
      loops = all_vertices(n);
      break;
    case FamilyName::HALF_K1_UNION_HALF_K1HAT:
      require_order(name, n, even);
      for (int v = n / 2; v < n; ++v) loops.push_back(v);
      break;
    case FamilyName::KSIGMA_HAT_UNION_ISOLATED:
      if (sigma < 0 || sigma > n) {
        throw Error(ErrorKind::IncompatibleOrder,
                    "KSIGMA_HAT_UNION_ISOLATED needs 0 <= sigma <= n, got sigma = " +
                        std::to_string(sigma) + ", n = " + std::to_string(n));
      }
      edges = clique_edges(0, sigma);
      loops = all_vertices(sigma);
      break;
    case FamilyName::OTHER:
      throw Error(ErrorKind::InvalidFamily, "OTHER does not name a graph");
  }
  return SelfLoopGraph::from_edge_list(n, edges, loops);
}

SelfLoopGraph disjoint_union(const SelfLoopGraph& a, const SelfLoopGraph& b) {
  const int shift = a.order();
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  std::vector<Vertex> loops = a.loops();
  for (Vertex v : b.loops()) loops.push_back(v + shift);
  return SelfLoopGraph::from_edge_list(a.order() + b.order(), edges, loops);
}

namespace {

std::vector<int> component_labels(const SelfLoopGraph& g, int& count) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> neighbours(static_cast<std::size_t>(n));
  for (auto [u, v] : g.edges()) {
    neighbours[u].push_back(v);
    neighbours[v].push_back(u);
  }
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  count = 0;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    label[start] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : neighbours[u]) {
        if (label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

std::vector<SelfLoopGraph> connected_components(const SelfLoopGraph& g) {
  int count = 0;
  const auto label = component_labels(g, count);
  // Labels are assigned in order of the smallest vertex, so component c
  // is the c-th in the required order.
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(count));
  std::vector<int> local(label.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    local[v] = static_cast<int>(members[label[v]].size());
    members[label[v]].push_back(v);
  }
  std::vector<std::vector<Edge>> edges(static_cast<std::size_t>(count));
  for (auto [u, v] : g.edges()) edges[label[u]].emplace_back(local[u], local[v]);
  std::vector<std::vector<Vertex>> loops(static_cast<std::size_t>(count));
  for (Vertex v : g.loops()) loops[label[v]].push_back(local[v]);

  std::vector<SelfLoopGraph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    out.push_back(SelfLoopGraph::from_edge_list(static_cast<int>(members[c].size()),
                                                edges[c], loops[c]));
  }
  return out;
}

bool is_connected(const SelfLoopGraph& g) {
  int count = 0;
  component_labels(g, count);
  return count == 1;
}

SelfLoopGraph permute(const SelfLoopGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw Error(ErrorKind::InvalidArgument, "permutation length must equal graph order");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  std::vector<Vertex> loops;
  for (Vertex v : g.loops()) loops.push_back(perm[v]);
  return SelfLoopGraph::from_edge_list(g.order(), edges, loops);
}

// ---------------------------------------------------------------------------
// Canonical codes

std::string CanonicalCode::to_string() const {
  const int length = n * (n - 1) / 2 + n;
  std::string out(static_cast<std::size_t>(length), '0');
  for (int i = 0; i < length; ++i)
    if ((bits >> (length - 1 - i)) & 1U) out[i] = '1';
  return out;
}

namespace {

constexpr int code_length(int n) { return n * (n - 1) / 2 + n; }

struct CodeSearch {
  int n = 0;
  std::array<std::array<std::uint8_t, kMaxCanonicalOrder>, kMaxCanonicalOrder> adj{};
  std::array<std::uint8_t, kMaxCanonicalOrder> loop{};

  // Column-ordered edge bits followed by loop bits, one byte per bit.
  std::array<std::uint8_t, code_length(kMaxCanonicalOrder)> best{};
  std::array<std::uint8_t, code_length(kMaxCanonicalOrder)> current{};
  std::array<Vertex, kMaxCanonicalOrder> placed{};
  std::array<bool, kMaxCanonicalOrder> used{};

  bool stop_on_improvement = false;
  bool improved = false;
  std::uint64_t updates = 0;

  explicit CodeSearch(const SelfLoopGraph& g) : n(g.order()) {
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    for (Vertex v : g.loops()) loop[v] = 1;
  }

  static int column_offset(int k) { return k * (k - 1) / 2; }

  // `less` means the current prefix is already smaller than best's prefix.
  void extend(int depth, bool less) {
    if (improved && stop_on_improvement) return;
    if (depth == n) {
      const int base = column_offset(n);
      if (!less) {
        int cmp = 0;
        for (int i = 0; i < n && cmp == 0; ++i) {
          const auto bit = loop[placed[i]];
          cmp = static_cast<int>(bit) - static_cast<int>(best[base + i]);
        }
        if (cmp >= 0) return;
      }
      for (int i = 0; i < n; ++i) current[base + i] = loop[placed[i]];
      std::copy_n(current.begin(), code_length(n), best.begin());
      improved = true;
      ++updates;
      return;
    }
    const int offset = column_offset(depth);
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool child_less = less;
      bool pruned = false;
      for (int i = 0; i < depth; ++i) {
        const auto bit = adj[placed[i]][v];
        current[offset + i] = bit;
        if (!child_less) {
          if (bit > best[offset + i]) {
            pruned = true;
            break;
          }
          if (bit < best[offset + i]) child_less = true;
        }
      }
      if (pruned) continue;
      used[v] = true;
      placed[depth] = v;
      const auto before = updates;
      extend(depth + 1, child_less);
      used[v] = false;
      if (improved && stop_on_improvement) return;
      // A completed improvement below makes this prefix equal to best.
      if (updates != before) less = false;
    }
  }

  CanonicalCode pack(const std::array<std::uint8_t, code_length(kMaxCanonicalOrder)>& code) const {
    CanonicalCode out{n, 0};
    for (int i = 0; i < code_length(n); ++i) out.bits = (out.bits << 1) | code[i];
    return out;
  }

  void load_identity() {
    for (int k = 1; k < n; ++k)
      for (int i = 0; i < k; ++i) best[column_offset(k) + i] = adj[i][k];
    for (int i = 0; i < n; ++i) best[column_offset(n) + i] = loop[i];
  }
};

void require_canonical_order(int n) {
  if (n > kMaxCanonicalOrder) {
    throw Error(ErrorKind::OrderTooLarge, "canonical codes support n <= " +
                                              std::to_string(kMaxCanonicalOrder) +
                                              ", got n = " + std::to_string(n));
  }
}

}  // namespace

CanonicalCode labeled_code(const SelfLoopGraph& g) {
  require_canonical_order(g.order());
  CodeSearch search(g);
  search.load_identity();
  return search.pack(search.best);
}

CanonicalCode canonical_code(const SelfLoopGraph& g) {
  require_canonical_order(g.order());
  CodeSearch search(g);
  search.extend(0, true);
  return search.pack(search.best);
}

bool is_canonical_labeling(const SelfLoopGraph& g) {
  require_canonical_order(g.order());
  CodeSearch search(g);
  search.load_identity();
  search.stop_on_improvement = true;
  search.extend(0, false);
  return !search.improved;
}

SelfLoopGraph graph_from_code(const CanonicalCode& code) {
  require_canonical_order(code.n);
  const int n = code.n;
  const int length = code_length(n);
  auto bit = [&](int i) { return ((code.bits >> (length - 1 - i)) & 1U) != 0; };
  std::vector<Edge> edges;
  int pos = 0;
  for (int k = 1; k < n; ++k)
    for (int i = 0; i < k; ++i, ++pos)
      if (bit(pos)) edges.emplace_back(i, k);
  std::vector<Vertex> loops;
  for (int i = 0; i < n; ++i, ++pos)
    if (bit(pos)) loops.push_back(i);
  return SelfLoopGraph::from_edge_list(n, edges, loops);
}

}  // namespace loopenergy
