#include "loopenergy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "loopenergy/error.hpp"

namespace loopenergy {

bool nearly_equal(double a, double reference, double tol) {
  return std::abs(a - reference) <= tol * std::max(1.0, std::abs(reference));
}

namespace {

// 2m + sigma - sigma^2/n, the sum of squared shifted eigenvalues.
double shifted_second_moment(int n, int m, int sigma) {
  const double s = sigma;
  return 2.0 * m + s - s * s / n;
}

void require_counts(int n, int m, int sigma) {
  if (n < 1 || m < 0 || sigma < 0 || sigma > n) {
    throw Error(ErrorKind::InvalidArgument,
                "invalid counts n=" + std::to_string(n) + " m=" + std::to_string(m) +
                    " sigma=" + std::to_string(sigma));
  }
}

RadicalBound from_radicand(double radicand) {
  return RadicalBound{std::sqrt(std::max(0.0, radicand)), radicand};
}

}  // namespace

double energy(const ShiftedSpectrum& mu) {
  double e = 0.0;
  for (double x : mu.mu) e += std::abs(x);
  return e;
}

double gutman_upper(int n, int m, int sigma) {
  require_counts(n, m, sigma);
  return std::sqrt(std::max(0.0, n * shifted_second_moment(n, m, sigma)));
}

RadicalBound improved_upper(int n, int m, int sigma, const ShiftedSpectrum& mu) {
  require_counts(n, m, sigma);
  if (n < 2) throw Error(ErrorKind::OrderTooSmall, "the improved upper bound needs n >= 2");
  const double spread = mu.max_abs() - mu.min_abs();
  const double radicand = n * shifted_second_moment(n, m, sigma) - 0.5 * n * spread * spread;
  // The radicand is provably >= E^2/n; it is only clamped against rounding.
  return from_radicand(radicand);
}

Lambda1Bounds lambda1_bounds(int n, int m, int sigma) {
  require_counts(n, m, sigma);
  const double walks = 2.0 * m + sigma;
  return Lambda1Bounds{walks / n, std::sqrt(walks)};
}

PairProduct pair_product(const ShiftedSpectrum& mu, int n, int m, int sigma) {
  require_counts(n, m, sigma);
  double abs_sum = 0.0;
  double square_sum = 0.0;
  for (double x : mu.mu) {
    abs_sum += std::abs(x);
    square_sum += x * x;
  }
  const double s = sigma;
  return PairProduct{(abs_sum * abs_sum - square_sum) / 2.0, m + s * (n - s) / (2.0 * n)};
}

RadicalBound spectral_lower(double lambda1, int n, int sigma) {
  if (n < 1 || sigma < 0 || sigma > n) throw Error(ErrorKind::InvalidArgument, "invalid n or sigma");
  const double s = sigma;
  return from_radicand(2.0 * lambda1 * lambda1 - 2.0 * s * s / n);
}

RadicalBound ozeki_lower(int n, int m, int sigma, const ShiftedSpectrum& mu) {
  require_counts(n, m, sigma);
  const double spread = mu.max_abs() - mu.min_abs();
  const double nn = n;
  return from_radicand(nn * shifted_second_moment(n, m, sigma) - nn * nn / 3.0 * spread * spread);
}

std::optional<double> spread_ratio_lower(const Spectrum& spec, int n, int m, int sigma,
                                         double tol) {
  require_counts(n, m, sigma);
  const double width = spec.largest() - spec.smallest();
  if (!(width > tol)) return std::nullopt;
  return 2.0 * shifted_second_moment(n, m, sigma) / width;
}

double RealTuple::mean() const {
  if (values.empty()) throw Error(ErrorKind::InvalidArgument, "empty tuple");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double ultimate_energy(const RealTuple& x) {
  const double mean = x.mean();
  double total = 0.0;
  for (double v : x.values) total += std::abs(v - mean);
  return total;
}

std::optional<double> ultimate_energy_lower(const RealTuple& x) {
  if (x.values.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two entries");
  const auto [lo, hi] = std::minmax_element(x.values.begin(), x.values.end());
  if (!(*hi > *lo)) return std::nullopt;
  const double mean = x.mean();
  double squares = 0.0;
  for (double v : x.values) squares += (v - mean) * (v - mean);
  return 2.0 * squares / (*hi - *lo);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::pair<BoundId, std::string_view>, 8> kBoundNames{{
    {BoundId::Gutman, "gutman"},
    {BoundId::Improved, "improved"},
    {BoundId::Lambda1Lower, "lambda1_lower"},
    {BoundId::Lambda1Upper, "lambda1_upper"},
    {BoundId::PairProduct, "pair_product"},
    {BoundId::SpectralLower, "spectral_lower"},
    {BoundId::OzekiLower, "ozeki"},
    {BoundId::SpreadRatio, "spread_ratio"},
}};

}  // namespace

std::string_view to_string(BoundId id) {
  for (const auto& [value, name] : kBoundNames)
    if (value == id) return name;
  return "unknown";
}

BoundId parse_bound_id(std::string_view text) {
  for (const auto& [value, name] : kBoundNames)
    if (name == text) return value;
  throw Error(ErrorKind::UnknownBoundId, "unknown bound id '" + std::string(text) + "'");
}

bool EqualityFlags::get(BoundId id) const {
  switch (id) {
    case BoundId::Gutman: return gutman;
    case BoundId::Improved: return improved;
    case BoundId::Lambda1Lower: return lambda1_lower;
    case BoundId::Lambda1Upper: return lambda1_upper;
    case BoundId::PairProduct: return pair_product;
    case BoundId::SpectralLower: return spectral_lower;
    case BoundId::OzekiLower: return ozeki_lower;
    case BoundId::SpreadRatio: return spread_ratio;
  }
  return false;
}

std::optional<BoundReport::Comparison> BoundReport::compare(BoundId id) const {
  switch (id) {
    case BoundId::Gutman: return Comparison{energy, gutman_upper, true};
    case BoundId::Improved:
      if (!improved_upper) return std::nullopt;
      return Comparison{energy, improved_upper->value, true};
    case BoundId::Lambda1Lower: return Comparison{lambda1_value(), lambda1.lower, false};
    case BoundId::Lambda1Upper: return Comparison{lambda1_value(), lambda1.upper, true};
    case BoundId::PairProduct: return Comparison{pair_product.lhs, pair_product.rhs, false};
    case BoundId::SpectralLower: return Comparison{energy, spectral_lower.value, false};
    case BoundId::OzekiLower: return Comparison{energy, ozeki_lower.value, false};
    case BoundId::SpreadRatio:
      if (!spread_ratio_lower) return std::nullopt;
      return Comparison{energy, *spread_ratio_lower, false};
  }
  return std::nullopt;
}

BoundReport bound_report(int n, int m, int sigma, Spectrum spectrum, double tol) {
  BoundReport r;
  r.n = n;
  r.m = m;
  r.sigma = sigma;
  r.spectrum = std::move(spectrum);
  r.shifted = shifted_spectrum(r.spectrum, n, sigma);

  r.energy = energy(r.shifted);
  r.gutman_upper = gutman_upper(n, m, sigma);
  if (n >= 2) r.improved_upper = improved_upper(n, m, sigma, r.shifted);
  r.lambda1 = lambda1_bounds(n, m, sigma);
  r.pair_product = pair_product(r.shifted, n, m, sigma);
  r.spectral_lower = spectral_lower(r.spectrum.largest(), n, sigma);
  r.ozeki_lower = ozeki_lower(n, m, sigma, r.shifted);
  r.spread_ratio_lower = spread_ratio_lower(r.spectrum, n, m, sigma, tol);

  const double lambda1 = r.spectrum.largest();
  auto& eq = r.equality;
  eq.gutman = nearly_equal(r.gutman_upper, r.energy, tol);
  eq.improved = r.improved_upper && nearly_equal(r.improved_upper->value, r.energy, tol);
  eq.lambda1_lower = nearly_equal(r.lambda1.lower, lambda1, tol);
  eq.lambda1_upper = nearly_equal(r.lambda1.upper, lambda1, tol);
  eq.pair_product = nearly_equal(r.pair_product.lhs, r.pair_product.rhs, tol);
  eq.spectral_lower = nearly_equal(r.spectral_lower.value, r.energy, tol);
  eq.ozeki_lower = nearly_equal(r.ozeki_lower.value, r.energy, tol);
  eq.spread_ratio = r.spread_ratio_lower && nearly_equal(*r.spread_ratio_lower, r.energy, tol);
  return r;
}

BoundReport bound_report(const SelfLoopGraph& g, double tol) {
  return bound_report(g.order(), g.size(), g.loop_count(), eigenvalues(g), tol);
}

}  // namespace loopenergy
