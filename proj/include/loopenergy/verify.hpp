#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopenergy/bounds.hpp"
#include "loopenergy/graph.hpp"

namespace loopenergy {

inline constexpr int kMaxSweepOrder = 8;
inline constexpr int kMaxDedupOrder = 7;
inline constexpr int kMaxExtremalOrder = 7;
inline constexpr std::size_t kWitnessCap = 1000;

/// Labeled self-loop graph of order n packed into n(n+1)/2 bits.
///
/// Bit k (least significant first) for k < n(n-1)/2 is the k-th vertex pair
/// in row-major order (0,1), (0,2), ..., (0,n-1), (1,2), ...; the next n bits
/// are the loops on vertices 0..n-1.
struct GraphIndex {
  int n = 1;
  std::uint64_t bits = 0;

  friend auto operator<=>(const GraphIndex&, const GraphIndex&) = default;
};

std::uint64_t labeled_graph_count(int n);
SelfLoopGraph graph_from_index(const GraphIndex& index);
GraphIndex index_of(const SelfLoopGraph& g);

/// Pull-style stream over all labeled graphs of order n, or over one
/// representative per isomorphism class when dedup is set.
class GraphStream {
 public:
  GraphStream(int n, bool dedup);

  std::optional<SelfLoopGraph> next();

 private:
  int n_;
  bool dedup_;
  std::uint64_t cursor_ = 0;
  std::uint64_t end_;
};

GraphStream enumerate_graphs(int n, bool dedup);

struct Violation {
  GraphIndex index;
  std::string check;  // a BoundId name or an auxiliary invariant name
  double observed = 0.0;
  double bound = 0.0;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

/// A graph where a structural characterization and the numerical equality
/// test disagree. `direction` is "structural_only" (the family matcher claims
/// equality, the numbers do not) or "numeric_only" (the reverse).
struct CharacterizationMismatch {
  GraphIndex index;  // smallest labeled index in the isomorphism class
  CanonicalCode code;
  std::string check;
  std::string direction;
  bool audit = false;  // true for the equality clauses known to be incomplete

  friend auto operator<=>(const CharacterizationMismatch&, const CharacterizationMismatch&) = default;
};

struct SweepOptions {
  int max_n = 6;
  double tol = kDefaultEqualityTol;
  bool dedup = false;
  int jobs = 1;
};

struct SweepSummary {
  std::uint64_t graphs_checked = 0;
  std::map<int, std::uint64_t> graphs_by_order;
  std::vector<Violation> violations;
  /// bound name -> order -> sorted canonical codes (at most kWitnessCap each)
  std::map<std::string, std::map<int, std::vector<CanonicalCode>>> equality_witnesses;
  std::vector<CharacterizationMismatch> characterization_mismatches;
  double max_trace_residual = 0.0;
  std::chrono::duration<double> elapsed{0.0};

  /// Witness codes for one bound, all orders combined.
  std::vector<CanonicalCode> witnesses(std::string_view bound) const;
  std::vector<CanonicalCode> witnesses(std::string_view bound, int n) const;
  std::size_t mismatch_count(std::string_view check, bool audit) const;
};

/// Names of the cross-checks recorded in characterization_mismatches.
namespace checks {
inline constexpr std::string_view kGutmanFamily = "gutman_family";
inline constexpr std::string_view kUniformShift = "uniform_shift_family";
inline constexpr std::string_view kLambda1Family = "lambda1_family";
inline constexpr std::string_view kSpreadCondition = "spread_condition";
inline constexpr std::string_view kPairProductClause = "pair_product_clause";
inline constexpr std::string_view kSpectralLowerClause = "spectral_lower_clause";
inline constexpr std::string_view kImprovedVsGutman = "improved_vs_gutman";
inline constexpr std::string_view kImprovedRadicand = "improved_radicand";
inline constexpr std::string_view kImprovedStrict = "improved_strict";
}  // namespace checks

SweepSummary verify_all(const SweepOptions& options);

struct ExtremalEntry {
  CanonicalCode code;
  GraphIndex index;
  double observed = 0.0;  // energy, lambda_1 or the pair-product sum
  double bound = 0.0;
  double gap = 0.0;
};

/// Graphs of order n ranked by |bound - observed|, one per isomorphism class.
std::vector<ExtremalEntry> find_extremal(int n, std::optional<int> sigma_filter, BoundId bound,
                                         std::size_t top_k, int jobs = 1);

}  // namespace loopenergy
