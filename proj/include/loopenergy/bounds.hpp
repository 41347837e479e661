#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "loopenergy/graph.hpp"
#include "loopenergy/spectral.hpp"

namespace loopenergy {

inline constexpr double kDefaultEqualityTol = 1e-9;

/// |a - b| <= tol * max(1, |reference|).
bool nearly_equal(double a, double reference, double tol);

/// A square-root bound: the signed quantity under the root and the value
/// sqrt(max(0, radicand)).
struct RadicalBound {
  double value = 0.0;
  double radicand = 0.0;
};

struct PairProduct {
  double lhs = 0.0;
  double rhs = 0.0;
};

struct Lambda1Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

double energy(const ShiftedSpectrum& mu);
double gutman_upper(int n, int m, int sigma);
/// Throws OrderTooSmall for n < 2.
RadicalBound improved_upper(int n, int m, int sigma, const ShiftedSpectrum& mu);
Lambda1Bounds lambda1_bounds(int n, int m, int sigma);
PairProduct pair_product(const ShiftedSpectrum& mu, int n, int m, int sigma);
RadicalBound spectral_lower(double lambda1, int n, int sigma);
RadicalBound ozeki_lower(int n, int m, int sigma, const ShiftedSpectrum& mu);
/// Empty when lambda_1 - lambda_n <= tol.
std::optional<double> spread_ratio_lower(const Spectrum& spec, int n, int m, int sigma,
                                         double tol = kDefaultEqualityTol);

struct RealTuple {
  std::vector<double> values;

  double mean() const;
};

double ultimate_energy(const RealTuple& x);
/// Empty when all entries are equal. Requires at least two entries.
std::optional<double> ultimate_energy_lower(const RealTuple& x);

/// Every bound that can be checked against a graph.
enum class BoundId {
  Gutman,
  Improved,
  Lambda1Lower,
  Lambda1Upper,
  PairProduct,
  SpectralLower,
  OzekiLower,
  SpreadRatio,
};

inline constexpr std::array<BoundId, 8> kAllBounds{
    BoundId::Gutman,      BoundId::Improved,      BoundId::Lambda1Lower, BoundId::Lambda1Upper,
    BoundId::PairProduct, BoundId::SpectralLower, BoundId::OzekiLower,   BoundId::SpreadRatio,
};

std::string_view to_string(BoundId id);
/// Throws UnknownBoundId.
BoundId parse_bound_id(std::string_view text);

struct EqualityFlags {
  bool gutman = false;
  bool improved = false;
  bool lambda1_lower = false;
  bool lambda1_upper = false;
  bool pair_product = false;
  bool spectral_lower = false;
  bool ozeki_lower = false;
  bool spread_ratio = false;

  bool get(BoundId id) const;
};

struct BoundReport {
  int n = 0;
  int m = 0;
  int sigma = 0;
  Spectrum spectrum;
  ShiftedSpectrum shifted;

  double energy = 0.0;
  double gutman_upper = 0.0;
  std::optional<RadicalBound> improved_upper;  // empty for n = 1
  Lambda1Bounds lambda1;
  PairProduct pair_product;
  RadicalBound spectral_lower;
  RadicalBound ozeki_lower;
  std::optional<double> spread_ratio_lower;
  EqualityFlags equality;

  double lambda1_value() const { return spectrum.largest(); }

  /// The quantity a bound is compared against (energy, lambda_1, or the
  /// pair-product sum) and the bound itself; empty when undefined.
  struct Comparison {
    double observed = 0.0;
    double bound = 0.0;
    bool is_upper = false;
  };
  std::optional<Comparison> compare(BoundId id) const;
};

BoundReport bound_report(const SelfLoopGraph& g, double tol = kDefaultEqualityTol);
/// Same as above with a precomputed spectrum (used by sweeps).
BoundReport bound_report(int n, int m, int sigma, Spectrum spectrum, double tol);

}  // namespace loopenergy
