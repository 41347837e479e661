#include "loopenergy/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "loopenergy/error.hpp"
#include "loopenergy/extremal.hpp"
#include "loopenergy/spectral.hpp"

namespace loopenergy {

std::uint64_t labeled_graph_count(int n) {
  if (n < 1 || n > kMaxSweepOrder) {
    throw Error(ErrorKind::OrderTooLarge, "enumeration supports 1 <= n <= " +
                                              std::to_string(kMaxSweepOrder) + ", got " +
                                              std::to_string(n));
  }
  return std::uint64_t{1} << (n * (n + 1) / 2);
}

SelfLoopGraph graph_from_index(const GraphIndex& index) {
  const int n = index.n;
  if (index.bits >= labeled_graph_count(n)) {
    throw Error(ErrorKind::IndexOutOfRange, "graph index out of range for n = " + std::to_string(n));
  }
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((index.bits >> bit) & 1U) edges.emplace_back(u, v);
  std::vector<Vertex> loops;
  for (int v = 0; v < n; ++v, ++bit)
    if ((index.bits >> bit) & 1U) loops.push_back(v);
  return SelfLoopGraph::from_edge_list(n, edges, loops);
}

GraphIndex index_of(const SelfLoopGraph& g) {
  const int n = g.order();
  labeled_graph_count(n);
  GraphIndex out{n, 0};
  for (auto [u, v] : g.edges()) {
    // Row-major position of (u, v) with u < v.
    const int pos = u * n - u * (u + 1) / 2 + (v - u - 1);
    out.bits |= std::uint64_t{1} << pos;
  }
  const int pairs = n * (n - 1) / 2;
  for (Vertex v : g.loops()) out.bits |= std::uint64_t{1} << (pairs + v);
  return out;
}

GraphStream::GraphStream(int n, bool dedup) : n_(n), dedup_(dedup), end_(labeled_graph_count(n)) {
  if (dedup && n > kMaxDedupOrder) {
    throw Error(ErrorKind::OrderTooLarge, "deduplicated enumeration supports n <= " +
                                              std::to_string(kMaxDedupOrder));
  }
}

std::optional<SelfLoopGraph> GraphStream::next() {
  while (cursor_ < end_) {
    auto g = graph_from_index(GraphIndex{n_, cursor_++});
    if (!dedup_ || is_canonical_labeling(g)) return g;
  }
  return std::nullopt;
}

GraphStream enumerate_graphs(int n, bool dedup) { return GraphStream(n, dedup); }

std::vector<CanonicalCode> SweepSummary::witnesses(std::string_view bound) const {
  std::vector<CanonicalCode> out;
  if (auto it = equality_witnesses.find(std::string(bound)); it != equality_witnesses.end())
    for (const auto& [n, codes] : it->second) out.insert(out.end(), codes.begin(), codes.end());
  return out;
}

std::vector<CanonicalCode> SweepSummary::witnesses(std::string_view bound, int n) const {
  if (auto it = equality_witnesses.find(std::string(bound)); it != equality_witnesses.end())
    if (auto codes = it->second.find(n); codes != it->second.end()) return codes->second;
  return {};
}

std::size_t SweepSummary::mismatch_count(std::string_view check, bool audit) const {
  return static_cast<std::size_t>(std::count_if(
      characterization_mismatches.begin(), characterization_mismatches.end(),
      [&](const CharacterizationMismatch& m) { return m.check == check && m.audit == audit; }));
}

namespace {

// Runs fn(begin, end, worker) over [0, total) in fixed-size chunks.
template <typename Fn>
void run_chunked(std::uint64_t total, int jobs, Fn&& fn) {
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](int id) {
    try {
      for (std::uint64_t c = next++; c < chunks; c = next++) {
        fn(c * kChunk, std::min(total, (c + 1) * kChunk), id);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };

  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

using MismatchKey = std::tuple<std::string, std::string, CanonicalCode, bool>;

struct Partial {
  std::map<int, std::uint64_t> graphs_by_order;
  std::vector<Violation> violations;
  std::map<std::string, std::map<int, std::set<CanonicalCode>>> witnesses;
  std::map<MismatchKey, GraphIndex> mismatches;
  double max_residual = 0.0;

  void add_witness(std::string_view bound, const CanonicalCode& code) {
    auto& codes = witnesses[std::string(bound)][code.n];
    codes.insert(code);
    if (codes.size() > kWitnessCap) codes.erase(std::prev(codes.end()));
  }

  void add_mismatch(std::string_view check, bool structural, const CanonicalCode& code,
                    const GraphIndex& index, bool audit) {
    MismatchKey key{std::string(check), structural ? "structural_only" : "numeric_only", code, audit};
    auto [it, inserted] = mismatches.emplace(key, index);
    if (!inserted) it->second = std::min(it->second, index);
  }

  void merge(const Partial& other) {
    for (const auto& [n, count] : other.graphs_by_order) graphs_by_order[n] += count;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto& [bound, by_n] : other.witnesses)
      for (const auto& [n, codes] : by_n)
        for (const auto& code : codes) add_witness(bound, code);
    for (const auto& [key, index] : other.mismatches) {
      auto [it, inserted] = mismatches.emplace(key, index);
      if (!inserted) it->second = std::min(it->second, index);
    }
    max_residual = std::max(max_residual, other.max_residual);
  }
};

class GraphChecker {
 public:
  GraphChecker(double tol, Partial& out) : tol_(tol), out_(out) {}

  void check(const GraphIndex& index, const SelfLoopGraph& g) {
    index_ = index;
    graph_ = &g;
    code_.reset();
    const int n = g.order();
    const int m = g.size();
    const int sigma = g.loop_count();

    Spectrum spec;
    try {
      spec = eigenvalues(g);
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()) + " at graph index n=" + std::to_string(n) +
                                " bits=" + std::to_string(index.bits));
    }
    out_.max_residual = std::max(out_.max_residual, trace_residuals(g, spec).max());

    const BoundReport report = bound_report(n, m, sigma, spec, tol_);
    for (BoundId id : kAllBounds) {
      const auto cmp = report.compare(id);
      if (!cmp) continue;
      const double slack = tol_ * std::max(1.0, std::abs(cmp->bound));
      const bool violated = cmp->is_upper ? cmp->observed > cmp->bound + slack
                                          : cmp->observed < cmp->bound - slack;
      if (violated) violation(to_string(id), cmp->observed, cmp->bound);
      if (report.equality.get(id)) out_.add_witness(to_string(id), code());
    }

    if (report.improved_upper) {
      const auto& improved = *report.improved_upper;
      if (improved.value > report.gutman_upper + tol_ * std::max(1.0, report.gutman_upper))
        violation(checks::kImprovedVsGutman, improved.value, report.gutman_upper);
      const double floor = report.energy * report.energy / n;
      if (improved.radicand < floor - tol_ * std::max(1.0, floor))
        violation(checks::kImprovedRadicand, improved.radicand, floor);
      const double spread = report.shifted.max_abs() - report.shifted.min_abs();
      if (spread > 1e-6 && !(report.gutman_upper - improved.value > tol_))
        violation(checks::kImprovedStrict, improved.value, report.gutman_upper);
    }

    // Structural characterizations against numerical equality.
    cross_check(checks::kGutmanFamily, matches_gutman_equality_family(g).has_value(),
                report.equality.gutman, false);
    if (is_connected(g)) {
      const double top = report.shifted.max_abs();
      const bool uniform = nearly_equal(report.shifted.min_abs(), top, tol_);
      cross_check(checks::kUniformShift, matches_uniform_shift_family(g).has_value(), uniform,
                  false);
    }
    cross_check(checks::kLambda1Family, lambda1_equality_family(g).has_value(),
                report.equality.lambda1_upper, false);
    if (report.spread_ratio_lower) {
      cross_check(checks::kSpreadCondition, spread_equality_condition(spec, n, sigma, tol_),
                  report.equality.spread_ratio, false);
    }

    // Stated equality clauses that are known to be incomplete; recorded only.
    const bool totally_disconnected = m == 0;
    cross_check(checks::kPairProductClause,
                totally_disconnected && (sigma == 0 || sigma == n), report.equality.pair_product,
                true);
    cross_check(checks::kSpectralLowerClause,
                (totally_disconnected && sigma == 0) || (n == 1 && sigma == 1),
                report.equality.spectral_lower, true);
  }

 private:
  const CanonicalCode& code() {
    if (!code_) code_ = canonical_code(*graph_);
    return *code_;
  }

  void violation(std::string_view check, double observed, double bound) {
    out_.violations.push_back(Violation{index_, std::string(check), observed, bound});
  }

  void cross_check(std::string_view check, bool structural, bool numeric, bool audit) {
    if (structural == numeric) return;
    out_.add_mismatch(check, structural, code(), index_, audit);
  }

  double tol_;
  Partial& out_;
  GraphIndex index_;
  const SelfLoopGraph* graph_ = nullptr;
  std::optional<CanonicalCode> code_;
};

}  // namespace

SweepSummary verify_all(const SweepOptions& options) {
  if (options.max_n < 1 || options.max_n > kMaxSweepOrder) {
    throw Error(ErrorKind::OrderTooLarge, "sweeps support 1 <= max_n <= " +
                                              std::to_string(kMaxSweepOrder) + ", got " +
                                              std::to_string(options.max_n));
  }
  if (options.dedup && options.max_n > kMaxDedupOrder) {
    throw Error(ErrorKind::OrderTooLarge, "deduplicated sweeps support max_n <= " +
                                              std::to_string(kMaxDedupOrder));
  }
  if (!(options.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");

  const auto start = std::chrono::steady_clock::now();
  const int jobs = effective_jobs(options.jobs);
  std::vector<Partial> partials(static_cast<std::size_t>(jobs));

  for (int n = 1; n <= options.max_n; ++n) {
    run_chunked(labeled_graph_count(n), jobs, [&](std::uint64_t begin, std::uint64_t end, int worker) {
      Partial& part = partials[worker];
      GraphChecker checker(options.tol, part);
      for (std::uint64_t bits = begin; bits < end; ++bits) {
        const GraphIndex index{n, bits};
        const auto g = graph_from_index(index);
        if (options.dedup && !is_canonical_labeling(g)) continue;
        ++part.graphs_by_order[n];
        checker.check(index, g);
      }
    });
  }

  Partial merged;
  for (const auto& part : partials) merged.merge(part);

  SweepSummary summary;
  summary.graphs_by_order = merged.graphs_by_order;
  for (const auto& [n, count] : merged.graphs_by_order) summary.graphs_checked += count;
  summary.violations = std::move(merged.violations);
  std::sort(summary.violations.begin(), summary.violations.end());
  for (const auto& [bound, by_n] : merged.witnesses)
    for (const auto& [n, codes] : by_n)
      summary.equality_witnesses[bound][n].assign(codes.begin(), codes.end());
  for (const auto& [key, index] : merged.mismatches) {
    const auto& [check, direction, code, audit] = key;
    summary.characterization_mismatches.push_back({index, code, check, direction, audit});
  }
  std::sort(summary.characterization_mismatches.begin(), summary.characterization_mismatches.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.audit, a.check, a.index, a.direction) <
                     std::tie(b.audit, b.check, b.index, b.direction);
            });
  summary.max_trace_residual = merged.max_residual;
  summary.elapsed = std::chrono::steady_clock::now() - start;
  return summary;
}

// ---------------------------------------------------------------------------

namespace {

class TopK {
 public:
  explicit TopK(std::size_t k) : k_(k) {}

  template <typename CodeFn>
  void offer(ExtremalEntry entry, CodeFn&& make_code) {
    if (k_ == 0) return;
    if (ranked_.size() == k_ && entry.gap > ranked_.rbegin()->first) return;
    entry.code = make_code();
    insert(entry);
  }

  void insert(const ExtremalEntry& entry) {
    if (k_ == 0) return;
    if (auto it = by_code_.find(entry.code); it != by_code_.end()) {
      auto& held = it->second;
      if (std::tie(entry.gap, entry.index) < std::tie(held.gap, held.index)) {
        ranked_.erase({held.gap, held.code});
        held = entry;
        ranked_.insert({held.gap, held.code});
      }
      return;
    }
    by_code_.emplace(entry.code, entry);
    ranked_.insert({entry.gap, entry.code});
    if (ranked_.size() > k_) {
      const auto worst = *ranked_.rbegin();
      ranked_.erase(std::prev(ranked_.end()));
      by_code_.erase(worst.second);
    }
  }

  std::vector<ExtremalEntry> sorted() const {
    std::vector<ExtremalEntry> out;
    for (const auto& [gap, code] : ranked_) out.push_back(by_code_.at(code));
    return out;
  }

 private:
  std::size_t k_;
  std::map<CanonicalCode, ExtremalEntry> by_code_;
  std::set<std::pair<double, CanonicalCode>> ranked_;
};

}  // namespace

std::vector<ExtremalEntry> find_extremal(int n, std::optional<int> sigma_filter, BoundId bound,
                                         std::size_t top_k, int jobs) {
  if (n < 1 || n > kMaxExtremalOrder) {
    throw Error(ErrorKind::OrderTooLarge, "extremal search supports 1 <= n <= " +
                                              std::to_string(kMaxExtremalOrder));
  }
  if (sigma_filter && (*sigma_filter < 0 || *sigma_filter > n)) {
    throw Error(ErrorKind::InvalidArgument, "sigma filter must lie in [0, n]");
  }
  const int workers = effective_jobs(jobs);
  const int pairs = n * (n - 1) / 2;
  std::vector<TopK> partial(static_cast<std::size_t>(workers), TopK(top_k));

  run_chunked(labeled_graph_count(n), workers, [&](std::uint64_t begin, std::uint64_t end, int worker) {
    for (std::uint64_t bits = begin; bits < end; ++bits) {
      if (sigma_filter && std::popcount(bits >> pairs) != *sigma_filter) continue;
      const GraphIndex index{n, bits};
      const auto g = graph_from_index(index);
      const auto report = bound_report(g);
      const auto cmp = report.compare(bound);
      if (!cmp) continue;
      ExtremalEntry entry{{}, index, cmp->observed, cmp->bound, std::abs(cmp->bound - cmp->observed)};
      partial[worker].offer(entry, [&] { return canonical_code(g); });
    }
  });

  TopK merged(top_k);
  for (const auto& part : partial)
    for (const auto& entry : part.sorted()) merged.insert(entry);
  return merged.sorted();
}

}  // namespace loopenergy
