#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "loopenergy/bounds.hpp"
#include "loopenergy/extremal.hpp"
#include "loopenergy/graph.hpp"
#include "loopenergy/verify.hpp"

namespace loopenergy {

using ordered_json = nlohmann::ordered_json;

/// Rounds to 12 significant digits, the precision of every reported real.
double round_sig12(double x);
/// Fixed 12-decimal text with negative zero suppressed.
std::string format_fixed12(double x);

inline constexpr std::string_view kUndefined = "UNDEFINED";

/// Keys, in order: n, m, sigma, spectrum, energy, bounds, equality_flags, families.
ordered_json report_json(const SelfLoopGraph& g, const BoundReport& report,
                         const EqualityClassification& families);

ordered_json summary_json(const SweepSummary& summary, const SweepOptions& options);

}  // namespace loopenergy
