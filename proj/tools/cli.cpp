#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "loopenergy/bounds.hpp"
#include "loopenergy/error.hpp"
#include "loopenergy/extremal.hpp"
#include "loopenergy/graph.hpp"
#include "loopenergy/graph_file.hpp"
#include "loopenergy/report.hpp"
#include "loopenergy/spectral.hpp"
#include "loopenergy/verify.hpp"

namespace loopenergy::cli {

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join_fixed(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ' ';
    out += format_fixed12(v);
  }
  return out;
}

int cmd_energy(const std::string& path, std::ostream& out) {
  const auto g = read_graph_file(path);
  const auto spec = eigenvalues(g);
  const auto mu = shifted_spectrum(spec, g.order(), g.loop_count());
  out << "n " << g.order() << " m " << g.size() << " sigma " << g.loop_count() << '\n';
  out << "spectrum " << join_fixed(spec.values) << '\n';
  out << "energy " << format_fixed12(energy(mu)) << '\n';
  return kOk;
}

void table_row(std::ostream& out, std::string_view name, const std::string& value, bool equal,
               const std::string& note = {}) {
  char head[64];
  std::snprintf(head, sizeof head, "%-16s %-20s", std::string(name).c_str(), value.c_str());
  std::string line = head;
  line += equal ? "equal" : "     ";
  if (!note.empty()) line += "  " + note;
  while (!line.empty() && line.back() == ' ') line.pop_back();
  out << line << '\n';
}

int cmd_bounds(const std::string& path, bool json, std::ostream& out) {
  const auto g = read_graph_file(path);
  const auto r = bound_report(g);
  const auto families = classify(g, r.spectrum);
  if (json) {
    out << report_json(g, r, families).dump(2) << '\n';
    return kOk;
  }
  const auto& eq = r.equality;
  auto radicand = [](const RadicalBound& b) { return "radicand " + format_fixed12(b.radicand); };
  out << "n " << r.n << " m " << r.m << " sigma " << r.sigma << '\n';
  out << "spectrum " << join_fixed(r.spectrum.values) << '\n';
  table_row(out, "energy", format_fixed12(r.energy), false);
  table_row(out, "gutman", format_fixed12(r.gutman_upper), eq.gutman);
  if (r.improved_upper) {
    table_row(out, "improved", format_fixed12(r.improved_upper->value), eq.improved,
              radicand(*r.improved_upper));
  } else {
    table_row(out, "improved", std::string(kUndefined), false);
  }
  const std::string lambda1 = "lambda1 " + format_fixed12(r.lambda1_value());
  table_row(out, "lambda1_lower", format_fixed12(r.lambda1.lower), eq.lambda1_lower, lambda1);
  table_row(out, "lambda1_upper", format_fixed12(r.lambda1.upper), eq.lambda1_upper, lambda1);
  table_row(out, "pair_product", format_fixed12(r.pair_product.lhs), eq.pair_product,
            "rhs " + format_fixed12(r.pair_product.rhs));
  table_row(out, "spectral_lower", format_fixed12(r.spectral_lower.value), eq.spectral_lower,
            radicand(r.spectral_lower));
  table_row(out, "ozeki", format_fixed12(r.ozeki_lower.value), eq.ozeki_lower, radicand(r.ozeki_lower));
  table_row(out, "spread_ratio",
            r.spread_ratio_lower ? format_fixed12(*r.spread_ratio_lower) : std::string(kUndefined),
            eq.spread_ratio);
  out << "gutman family  "
      << (families.gutman_family ? to_string(*families.gutman_family) : std::string("none")) << '\n';
  return kOk;
}

int cmd_verify(const SweepOptions& options, const std::string& report_path, std::ostream& out) {
  if (options.max_n < 1 || options.max_n > kMaxSweepOrder) {
    throw UsageError("--max-n must lie in [1, " + std::to_string(kMaxSweepOrder) + "]");
  }
  if (options.dedup && options.max_n > kMaxDedupOrder) {
    throw UsageError("--dedup supports --max-n up to " + std::to_string(kMaxDedupOrder));
  }
  if (!(options.tol > 0.0)) throw UsageError("--tol must be positive");

  const auto summary = verify_all(options);
  const auto json = summary_json(summary, options);
  if (report_path.empty()) {
    out << json.dump(2) << '\n';
  } else {
    std::ofstream file(report_path);
    if (!file) throw UsageError("cannot write report to '" + report_path + "'");
    file << json.dump(2) << '\n';
    out << "checked " << summary.graphs_checked << " graphs up to n = " << options.max_n << ": "
        << summary.violations.size() << " violations, "
        << summary.characterization_mismatches.size() << " characterization mismatches ("
        << std::count_if(summary.characterization_mismatches.begin(),
                         summary.characterization_mismatches.end(),
                         [](const auto& m) { return m.audit; })
        << " audit), max trace residual " << summary.max_trace_residual << '\n';
    out << "report written to " << report_path << '\n';
  }
  return summary.violations.empty() ? kOk : kViolations;
}

int cmd_family(const std::string& tag, int n, int sigma, std::ostream& out) {
  const auto name = parse_family_name(tag);
  if (!name) throw UsageError("unknown family '" + tag + "'");
  out << serialize_graph_file(make_family(*name, n, sigma));
  return kOk;
}

int cmd_extremal(int n, std::optional<int> sigma, const std::string& bound, std::size_t top,
                 int jobs, std::ostream& out) {
  const BoundId id = parse_bound_id(bound);
  const auto entries = find_extremal(n, sigma, id, top, jobs);
  char line[160];
  std::snprintf(line, sizeof line, "%-5s %-16s %-16s %-16s %-s", "rank", "gap", "observed", "bound",
                "code");
  out << line << "  graph\n";
  int rank = 1;
  for (const auto& e : entries) {
    std::snprintf(line, sizeof line, "%-5d %-16s %-16s %-16s %-s", rank++,
                  format_fixed12(e.gap).c_str(), format_fixed12(e.observed).c_str(),
                  format_fixed12(e.bound).c_str(), e.code.to_string().c_str());
    out << line << "  " << graph_one_liner(graph_from_code(e.code)) << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy and energy bounds of graphs with self-loops", "loopenergy"};
  app.require_subcommand(1);

  std::string graph_path;
  bool as_json = false;
  auto* energy_cmd = app.add_subcommand("energy", "Print the spectrum and energy of a graph file");
  energy_cmd->add_option("file", graph_path, "Graph file")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every bound for a graph file");
  bounds_cmd->add_option("file", graph_path, "Graph file")->required();
  bounds_cmd->add_flag("--json", as_json, "Emit the JSON report");

  SweepOptions sweep;
  std::string report_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check all bounds on every graph up to --max-n");
  verify_cmd->add_option("--max-n", sweep.max_n, "Largest order to enumerate")->capture_default_str();
  verify_cmd->add_option("--tol", sweep.tol, "Equality and violation tolerance")->capture_default_str();
  verify_cmd->add_flag("--dedup", sweep.dedup, "One graph per isomorphism class");
  verify_cmd->add_option("--jobs", sweep.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  verify_cmd->add_option("--report", report_path, "Write the JSON summary here instead of stdout");

  std::string family_tag;
  int family_n = 1;
  int family_sigma = 0;
  auto* family_cmd = app.add_subcommand("family", "Emit a named family as a graph file");
  family_cmd->add_option("tag", family_tag, "Family name, e.g. half_k2_hat")->required();
  family_cmd->add_option("--n", family_n, "Order")->required();
  family_cmd->add_option("--sigma", family_sigma, "Loop count for ksigma_hat_union_isolated");

  int extremal_n = 4;
  std::optional<int> extremal_sigma;
  std::string extremal_bound = "gutman";
  std::size_t extremal_top = 10;
  int extremal_jobs = 1;
  auto* extremal_cmd = app.add_subcommand("extremal", "Rank graphs by their gap to a bound");
  extremal_cmd->add_option("--n", extremal_n, "Order")->required();
  extremal_cmd->add_option("--sigma", extremal_sigma, "Only graphs with this many loops");
  extremal_cmd->add_option("--bound", extremal_bound,
                           "gutman, improved, lambda1_lower, lambda1_upper, pair_product, "
                           "spectral_lower, ozeki or spread_ratio")
      ->capture_default_str();
  extremal_cmd->add_option("--top", extremal_top, "Number of rows")->capture_default_str();
  extremal_cmd->add_option("--jobs", extremal_jobs, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (energy_cmd->parsed()) return cmd_energy(graph_path, out);
    if (bounds_cmd->parsed()) return cmd_bounds(graph_path, as_json, out);
    if (verify_cmd->parsed()) return cmd_verify(sweep, report_path, out);
    if (family_cmd->parsed()) return cmd_family(family_tag, family_n, family_sigma, out);
    if (extremal_cmd->parsed()) {
      return cmd_extremal(extremal_n, extremal_sigma, extremal_bound, extremal_top, extremal_jobs, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::NoConvergence ? kNumeric : kUsage;
  }
  return kUsage;
}

}  // namespace loopenergy::cli
