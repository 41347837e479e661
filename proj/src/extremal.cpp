#include "loopenergy/extremal.hpp"

#include <algorithm>
#include <cmath>

#include "loopenergy/error.hpp"

namespace loopenergy {

FamilyTag classify_component(const SelfLoopGraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "classify_component needs a connected graph");
  const int n = g.order();
  const int sigma = g.loop_count();
  if (n == 1) return {sigma == 0 ? FamilyName::K1 : FamilyName::K1_HAT, 1, sigma};
  if (n == 2) {
    static constexpr FamilyName by_loops[] = {FamilyName::K2, FamilyName::K2_TILDE, FamilyName::K2_HAT};
    return {by_loops[sigma], 2, sigma};
  }
  if (sigma == n && g.size() == n * (n - 1) / 2) return {FamilyName::KN_HAT, n, n};
  return {};
}

std::optional<FamilyTag> matches_gutman_equality_family(const SelfLoopGraph& g) {
  const int n = g.order();
  int counts[7] = {};  // indexed by FamilyName up to KN_HAT
  for (const auto& component : connected_components(g)) {
    const auto tag = classify_component(component);
    if (tag.name == FamilyName::OTHER || tag.name == FamilyName::KN_HAT) return std::nullopt;
    ++counts[static_cast<int>(tag.name)];
  }
  auto count = [&](FamilyName name) { return counts[static_cast<int>(name)]; };
  const int half = n / 2;
  const bool even = n % 2 == 0;

  if (count(FamilyName::K1) == n) return FamilyTag{FamilyName::NK1, n, 0};
  if (count(FamilyName::K1_HAT) == n) return FamilyTag{FamilyName::NK1_HAT, n, n};
  if (!even) return std::nullopt;
  if (count(FamilyName::K2) == half) return FamilyTag{FamilyName::HALF_K2, n, 0};
  if (count(FamilyName::K2_TILDE) == half) return FamilyTag{FamilyName::HALF_K2_TILDE, n, half};
  if (count(FamilyName::K2_HAT) == half) return FamilyTag{FamilyName::HALF_K2_HAT, n, n};
  if (count(FamilyName::K1) == half && count(FamilyName::K1_HAT) == half)
    return FamilyTag{FamilyName::HALF_K1_UNION_HALF_K1HAT, n, half};
  return std::nullopt;
}

std::optional<FamilyTag> matches_uniform_shift_family(const SelfLoopGraph& g) {
  const auto tag = classify_component(g);
  switch (tag.name) {
    case FamilyName::K1:
    case FamilyName::K1_HAT:
    case FamilyName::K2:
    case FamilyName::K2_TILDE:
    case FamilyName::K2_HAT:
      return tag;
    default:
      return std::nullopt;
  }
}

std::optional<int> lambda1_equality_family(const SelfLoopGraph& g) {
  const int sigma = g.loop_count();
  if (g.size() != sigma * (sigma - 1) / 2) return std::nullopt;
  // Every edge must join two looped vertices; with the edge count above the
  // looped vertices then form a clique.
  for (auto [u, v] : g.edges())
    if (!g.has_loop(u) || !g.has_loop(v)) return std::nullopt;
  return sigma;
}

bool spread_equality_condition(const Spectrum& spec, int n, int sigma, double tol) {
  if (spec.size() != n) throw Error(ErrorKind::InvalidArgument, "spectrum length does not match n");
  const double top = spec.largest();
  const double bottom = spec.smallest();
  if (!(top - bottom > tol)) {
    throw Error(ErrorKind::DegenerateSpread, "all eigenvalues coincide; the spread condition is undefined");
  }
  const double centre = static_cast<double>(sigma) / n;
  for (double lambda : spec.values) {
    if (lambda > centre + tol && std::abs(lambda - top) > tol) return false;
    if (lambda < centre - tol && std::abs(lambda - bottom) > tol) return false;
  }
  return true;
}

EqualityClassification classify(const SelfLoopGraph& g, const Spectrum& spec, double tol) {
  EqualityClassification out;
  out.gutman_family = matches_gutman_equality_family(g);
  if (is_connected(g)) out.uniform_shift_family = matches_uniform_shift_family(g);
  out.lambda1_family = lambda1_equality_family(g);
  if (spec.largest() - spec.smallest() > tol)
    out.spread_condition = spread_equality_condition(spec, g.order(), g.loop_count(), tol);
  return out;
}

}  // namespace loopenergy
