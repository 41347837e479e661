#pragma once

#include <optional>

#include "loopenergy/bounds.hpp"
#include "loopenergy/graph.hpp"
#include "loopenergy/spectral.hpp"

namespace loopenergy {

// Structural matchers for the equality families. None of them look at the
// spectrum, so they can be cross-checked against numerical equality.

/// Tags a connected graph as K1, K1_HAT, K2, K2_TILDE, K2_HAT, KN_HAT (n >= 3)
/// or OTHER. Throws NotConnected.
FamilyTag classify_component(const SelfLoopGraph& g);

/// Graphs attaining E = sqrt(n(2m + sigma - sigma^2/n)): nK1, (n/2)K2,
/// (n/2)K1 u (n/2)K1_HAT, (n/2)K2_TILDE, nK1_HAT, (n/2)K2_HAT.
std::optional<FamilyTag> matches_gutman_equality_family(const SelfLoopGraph& g);

/// Connected graphs whose shifted eigenvalues all share one absolute value.
/// Throws NotConnected.
std::optional<FamilyTag> matches_uniform_shift_family(const SelfLoopGraph& g);

/// sigma when g is K_sigma_HAT plus n - sigma isolated loopless vertices
/// (sigma = 0 is nK1), the graphs with lambda_1 = sqrt(2m + sigma).
std::optional<int> lambda1_equality_family(const SelfLoopGraph& g);

/// True when every eigenvalue above sigma/n equals lambda_1 and every one
/// below equals lambda_n, both within tol. Throws DegenerateSpread when
/// lambda_1 - lambda_n <= tol.
bool spread_equality_condition(const Spectrum& spec, int n, int sigma,
                              double tol = kDefaultEqualityTol);

struct EqualityClassification {
  std::optional<FamilyTag> gutman_family;
  std::optional<FamilyTag> uniform_shift_family;  // empty for disconnected graphs
  std::optional<int> lambda1_family;
  std::optional<bool> spread_condition;     // empty when the spread is degenerate
};

EqualityClassification classify(const SelfLoopGraph& g, const Spectrum& spec,
                                double tol = kDefaultEqualityTol);

}  // namespace loopenergy
