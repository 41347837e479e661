#include "loopenergy/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "loopenergy/graph_file.hpp"

namespace loopenergy {

double round_sig12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double rounded = std::strtod(buf, nullptr);
  return rounded == 0.0 ? 0.0 : rounded;
}

std::string format_fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string out(buf);
  if (out.starts_with("-") && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

namespace {

ordered_json number(double x) { return round_sig12(x); }

ordered_json radical(const RadicalBound& b) {
  return ordered_json{{"value", number(b.value)}, {"radicand", number(b.radicand)}};
}

ordered_json optional_tag(const std::optional<FamilyTag>& tag) {
  if (!tag) return nullptr;
  return to_string(*tag);
}

}  // namespace

ordered_json report_json(const SelfLoopGraph& g, const BoundReport& r,
                         const EqualityClassification& families) {
  ordered_json out;
  out["n"] = g.order();
  out["m"] = g.size();
  out["sigma"] = g.loop_count();
  auto spectrum = ordered_json::array();
  for (double lambda : r.spectrum.values) spectrum.push_back(number(lambda));
  out["spectrum"] = spectrum;
  out["energy"] = number(r.energy);

  ordered_json bounds;
  bounds["gutman_upper"] = number(r.gutman_upper);
  bounds["improved_upper"] = r.improved_upper ? radical(*r.improved_upper) : ordered_json(kUndefined);
  bounds["lambda1_lower"] = number(r.lambda1.lower);
  bounds["lambda1_upper"] = number(r.lambda1.upper);
  bounds["pair_product"] = {{"lhs", number(r.pair_product.lhs)}, {"rhs", number(r.pair_product.rhs)}};
  bounds["spectral_lower"] = radical(r.spectral_lower);
  bounds["ozeki_lower"] = radical(r.ozeki_lower);
  bounds["spread_ratio_lower"] =
      r.spread_ratio_lower ? number(*r.spread_ratio_lower) : ordered_json(kUndefined);
  out["bounds"] = bounds;

  ordered_json flags;
  for (BoundId id : kAllBounds) flags[std::string(to_string(id))] = r.equality.get(id);
  out["equality_flags"] = flags;

  ordered_json fam;
  fam["gutman"] = optional_tag(families.gutman_family);
  fam["uniform_shift"] = optional_tag(families.uniform_shift_family);
  fam["lambda1"] = families.lambda1_family ? ordered_json(*families.lambda1_family) : ordered_json(nullptr);
  fam["spread_condition"] =
      families.spread_condition ? ordered_json(*families.spread_condition) : ordered_json(nullptr);
  out["families"] = fam;
  return out;
}

ordered_json summary_json(const SweepSummary& s, const SweepOptions& options) {
  ordered_json out;
  out["max_n"] = options.max_n;
  out["tol"] = options.tol;
  out["dedup"] = options.dedup;
  out["graphs_checked"] = s.graphs_checked;
  ordered_json by_order;
  for (const auto& [n, count] : s.graphs_by_order) by_order[std::to_string(n)] = count;
  out["graphs_by_order"] = by_order;

  auto violations = ordered_json::array();
  for (const auto& v : s.violations) {
    violations.push_back({{"n", v.index.n},
                          {"bits", v.index.bits},
                          {"check", v.check},
                          {"observed", number(v.observed)},
                          {"bound", number(v.bound)},
                          {"graph", graph_one_liner(graph_from_index(v.index))}});
  }
  out["violations"] = violations;

  ordered_json witnesses = ordered_json::object();
  for (const auto& [bound, by_n] : s.equality_witnesses) {
    ordered_json per_order;
    for (const auto& [n, codes] : by_n) {
      auto list = ordered_json::array();
      for (const auto& code : codes)
        list.push_back({{"code", code.to_string()}, {"graph", graph_one_liner(graph_from_code(code))}});
      per_order[std::to_string(n)] = list;
    }
    witnesses[bound] = per_order;
  }
  out["equality_witnesses"] = witnesses;

  auto mismatches = ordered_json::array();
  for (const auto& m : s.characterization_mismatches) {
    mismatches.push_back({{"check", m.check},
                          {"direction", m.direction},
                          {"audit", m.audit},
                          {"n", m.index.n},
                          {"bits", m.index.bits},
                          {"code", m.code.to_string()},
                          {"graph", graph_one_liner(graph_from_code(m.code))}});
  }
  out["characterization_mismatches"] = mismatches;
  out["max_trace_residual"] = s.max_trace_residual;
  out["elapsed_seconds"] = s.elapsed.count();
  return out;
}

}  // namespace loopenergy
