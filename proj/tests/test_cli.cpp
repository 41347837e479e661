#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "loopenergy/bounds.hpp"
#include "loopenergy/graph.hpp"
#include "loopenergy/graph_file.hpp"
#include "loopenergy/report.hpp"

using namespace loopenergy;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "loopenergy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("loopenergy-cli-" + std::to_string(::getpid()) + "-" +
                                         std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto file = path_ / name;
    std::ofstream(file) << text;
    return file.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string line_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.starts_with(prefix)) return line;
  return {};
}

const char* kCycle4 = "n 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("energy") {
  TempDir dir;
  auto r = run({"energy", dir.write("k2t.txt", serialize_graph_file(make_family(FamilyName::K2_TILDE, 2)))});
  CHECK(r.code == cli::kOk);
  CHECK(line_starting(r.out, "energy") == "energy 2.236067977500");
  CHECK(line_starting(r.out, "spectrum") == "spectrum 1.618033988750 -0.618033988750");

  r = run({"energy", dir.write("hat.txt", "n 3\nl 0\nl 1\nl 2\n")});
  CHECK(r.code == cli::kOk);
  CHECK(line_starting(r.out, "energy") == "energy 0.000000000000");

  r = run({"energy", dir.write("bad.txt", "n 2\ne 0\n")});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("line 2") != std::string::npos);

  r = run({"energy", dir.path("missing.txt")});
  CHECK(r.code == cli::kUsage);
}

TEST_CASE("bounds table") {
  TempDir dir;
  auto r = run({"bounds", dir.write("c4.txt", kCycle4)});
  CHECK(r.code == cli::kOk);
  CHECK(line_starting(r.out, "gutman ").find("5.656854249492") != std::string::npos);
  CHECK(line_starting(r.out, "improved").find("4.898979485566") != std::string::npos);
  const auto spread = line_starting(r.out, "spread_ratio");
  CHECK(spread.find("4.000000000000") != std::string::npos);
  CHECK(spread.find("equal") != std::string::npos);

  r = run({"bounds", dir.write("2k1.txt", "n 2\n")});
  CHECK(line_starting(r.out, "spread_ratio").find("UNDEFINED") != std::string::npos);

  r = run({"bounds", dir.write("k2hat.txt", "n 2\ne 0 1\nl 0\nl 1\n")});
  for (const char* name : {"lambda1_lower", "lambda1_upper"}) {
    const auto line = line_starting(r.out, name);
    CHECK(line.find("2.000000000000") != std::string::npos);
    CHECK(line.find("equal") != std::string::npos);
  }
}

TEST_CASE("bounds --json matches the library at 12 significant digits") {
  TempDir dir;
  const std::vector<std::string> fixtures{kCycle4, "n 2\n", "n 1\n", "n 2\ne 0 1\nl 0\n",
                                          "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\nl 2\n"};
  for (const auto& text : fixtures) {
    const auto r = run({"bounds", "--json", dir.write("g.txt", text)});
    REQUIRE(r.code == cli::kOk);
    const auto json = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& item : json.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"n", "m", "sigma", "spectrum", "energy", "bounds",
                                           "equality_flags", "families"});

    const auto g = parse_graph_file(text);
    const auto report = bound_report(g);
    CHECK(json["energy"].get<double>() == round_sig12(report.energy));
    CHECK(json["bounds"]["gutman_upper"].get<double>() == round_sig12(report.gutman_upper));
    CHECK(json["bounds"]["ozeki_lower"]["radicand"].get<double>() == round_sig12(report.ozeki_lower.radicand));
    CHECK(json["bounds"]["pair_product"]["lhs"].get<double>() == round_sig12(report.pair_product.lhs));
    for (std::size_t i = 0; i < report.spectrum.values.size(); ++i)
      CHECK(json["spectrum"][i].get<double>() == round_sig12(report.spectrum.values[i]));
    if (report.improved_upper) {
      CHECK(json["bounds"]["improved_upper"]["value"].get<double>() == round_sig12(report.improved_upper->value));
    } else {
      CHECK(json["bounds"]["improved_upper"] == "UNDEFINED");
    }
    if (report.spread_ratio_lower) {
      CHECK(json["bounds"]["spread_ratio_lower"].get<double>() == round_sig12(*report.spread_ratio_lower));
    } else {
      CHECK(json["bounds"]["spread_ratio_lower"] == "UNDEFINED");
    }
    for (BoundId id : kAllBounds)
      CHECK(json["equality_flags"][std::string(to_string(id))].get<bool>() == report.equality.get(id));
  }
}

TEST_CASE("verify") {
  TempDir dir;
  auto r = run({"verify", "--max-n", "5", "--tol", "1e-9", "--report", dir.path("r5.json")});
  CHECK(r.code == cli::kOk);
  std::ifstream in(dir.path("r5.json"));
  const auto json = nlohmann::json::parse(in);
  CHECK(json["violations"].empty());
  CHECK(json["graphs_checked"] == 33866);

  r = run({"verify", "--max-n", "9"});
  CHECK(r.code == cli::kUsage);
  r = run({"verify", "--max-n", "0"});
  CHECK(r.code == cli::kUsage);
  r = run({"verify", "--max-n", "8", "--dedup"});
  CHECK(r.code == cli::kUsage);
  r = run({"verify", "--max-n", "three"});
  CHECK(r.code == cli::kUsage);

  r = run({"verify", "--max-n", "2"});
  CHECK(r.code == cli::kOk);
  const auto report = nlohmann::json::parse(r.out);
  const auto k2hat = canonical_code(make_family(FamilyName::K2_HAT, 2)).to_string();
  bool listed = false;
  for (const auto& w : report["equality_witnesses"]["spectral_lower"]["2"]) listed |= w["code"] == k2hat;
  CHECK(listed);
  CHECK_FALSE(report["characterization_mismatches"].empty());
}

TEST_CASE("family") {
  auto r = run({"family", "half_k2_hat", "--n", "4"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "n 4\ne 0 1\ne 2 3\nl 0\nl 1\nl 2\nl 3\n");

  r = run({"family", "nk1", "--n", "3"});
  CHECK(r.out == "n 3\n");

  r = run({"family", "ksigma_hat_union_isolated", "--n", "3", "--sigma", "2"});
  CHECK(r.out == "n 3\ne 0 1\nl 0\nl 1\n");

  CHECK(run({"family", "half_k2", "--n", "3"}).code == cli::kUsage);
  CHECK(run({"family", "petersen", "--n", "10"}).code == cli::kUsage);
}

TEST_CASE("extremal") {
  auto r = run({"extremal", "--n", "4", "--sigma", "2", "--bound", "gutman", "--top", "2"});
  CHECK(r.code == cli::kOk);
  const auto first = line_starting(r.out, "1 ");
  const auto second = line_starting(r.out, "2 ");
  CHECK(first.find("0.000000000000") != std::string::npos);
  CHECK(second.find("0.000000000000") != std::string::npos);
  const auto tilde = canonical_code(make_family(FamilyName::HALF_K2_TILDE, 4)).to_string();
  const auto mixed = canonical_code(make_family(FamilyName::HALF_K1_UNION_HALF_K1HAT, 4)).to_string();
  CHECK(r.out.find(tilde) != std::string::npos);
  CHECK(r.out.find(mixed) != std::string::npos);

  r = run({"extremal", "--n", "2", "--sigma", "0", "--bound", "gutman", "--top", "1"});
  CHECK(r.code == cli::kOk);
  const auto row = line_starting(r.out, "1 ");
  CHECK(row.find("0.000000000000") != std::string::npos);
  const bool family = row.find(canonical_code(make_family(FamilyName::NK1, 2)).to_string()) != std::string::npos ||
                      row.find(canonical_code(make_family(FamilyName::K2, 2)).to_string()) != std::string::npos;
  CHECK(family);

  CHECK(run({"extremal", "--n", "3", "--bound", "nosuch"}).code == cli::kUsage);
  CHECK(run({"extremal", "--n", "8"}).code == cli::kUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"energy"}).code == cli::kUsage);
  const auto help = run({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("verify") != std::string::npos);
}

}  // TEST_SUITE
