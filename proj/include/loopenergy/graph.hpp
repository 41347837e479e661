#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace loopenergy {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// A simple graph with at most one self-loop per vertex.
///
/// Edges are stored normalized (u < v) and sorted; loops are a sorted vertex
/// set and never appear in the edge list. Instances are immutable once built.
class SelfLoopGraph {
 public:
  /// Validating constructor. Edge endpoints may be given in either order.
  static SelfLoopGraph from_edge_list(int n, std::span<const Edge> edges,
                                      std::span<const Vertex> loops);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  int loop_count() const noexcept { return static_cast<int>(loops_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& loops() const noexcept { return loops_; }

  bool has_edge(Vertex u, Vertex v) const;
  bool has_loop(Vertex v) const;
  int degree(Vertex v) const;  // loops excluded

  friend bool operator==(const SelfLoopGraph&, const SelfLoopGraph&) = default;

 private:
  SelfLoopGraph(int n, std::vector<Edge> edges, std::vector<Vertex> loops)
      : n_(n), edges_(std::move(edges)), loops_(std::move(loops)) {}

  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<Vertex> loops_;
};

/// Dense symmetric 0/1 matrix; a_ii = 1 iff vertex i carries a loop.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(int order)
      : order_(order), entries_(static_cast<std::size_t>(order) * order, 0) {}

  int order() const noexcept { return order_; }
  int operator()(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, int value) { entries_[index(i, j)] = static_cast<std::uint8_t>(value); }

  int trace() const;
  bool is_symmetric() const;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * order_ + j;
  }

  int order_;
  std::vector<std::uint8_t> entries_;
};

AdjacencyMatrix adjacency_matrix(const SelfLoopGraph& g);

enum class FamilyName {
  K1,
  K1_HAT,
  K2,
  K2_TILDE,
  K2_HAT,
  KN,
  KN_HAT,
  NK1,
  NK1_HAT,
  HALF_K2,
  HALF_K2_TILDE,
  HALF_K2_HAT,
  HALF_K1_UNION_HALF_K1HAT,
  KSIGMA_HAT_UNION_ISOLATED,
  OTHER,
};

/// Named graph family with its parameters. OTHER carries no parameters
/// (n and sigma are left at zero).
struct FamilyTag {
  FamilyName name = FamilyName::OTHER;
  int n = 0;
  int sigma = 0;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

std::string_view to_string(FamilyName name);
/// Accepts the enum spelling in any case ("half_k2_hat", "HALF_K2_HAT").
std::optional<FamilyName> parse_family_name(std::string_view text);
std::string to_string(const FamilyTag& tag);

/// Builds the named family on n vertices. Components occupy contiguous
/// vertex blocks. `sigma` is only read for KSIGMA_HAT_UNION_ISOLATED.
SelfLoopGraph make_family(FamilyName name, int n, int sigma = 0);

SelfLoopGraph disjoint_union(const SelfLoopGraph& a, const SelfLoopGraph& b);

/// Induced components, relabeled 0..k-1 in original vertex order, sorted by
/// their smallest original vertex.
std::vector<SelfLoopGraph> connected_components(const SelfLoopGraph& g);
bool is_connected(const SelfLoopGraph& g);

/// Applies a vertex relabeling: vertex v becomes perm[v].
SelfLoopGraph permute(const SelfLoopGraph& g, std::span<const Vertex> perm);

inline constexpr int kMaxCanonicalOrder = 8;

/// Isomorphism-invariant code of a self-loop graph.
///
/// Bit layout (most significant first): the upper-triangle edge bits in
/// column order (0,1), (0,2), (1,2), (0,3), ... followed by the n loop bits.
/// The canonical code is the minimum of this string over all relabelings.
struct CanonicalCode {
  int n = 0;
  std::uint64_t bits = 0;

  std::string to_string() const;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Encoding of g under its current labeling (no minimization).
CanonicalCode labeled_code(const SelfLoopGraph& g);
CanonicalCode canonical_code(const SelfLoopGraph& g);
/// True when no relabeling of g yields a smaller code than its own labeling.
bool is_canonical_labeling(const SelfLoopGraph& g);
SelfLoopGraph graph_from_code(const CanonicalCode& code);

}  // namespace loopenergy
