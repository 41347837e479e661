#include <doctest.h>

#include <cmath>
#include <random>

#include "loopenergy/bounds.hpp"
#include "loopenergy/error.hpp"
#include "oracles.hpp"

using namespace loopenergy;

namespace {

constexpr double kTight = 1e-10;

SelfLoopGraph cycle4() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return SelfLoopGraph::from_edge_list(4, edges, {});
}

SelfLoopGraph star3() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
  return SelfLoopGraph::from_edge_list(4, edges, {});
}

ShiftedSpectrum shifted(const SelfLoopGraph& g) {
  return shifted_spectrum(eigenvalues(g), g.order(), g.loop_count());
}

bool close(double a, double b, double tol = kTight) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("energy") {
  CHECK(close(energy(shifted(make_family(FamilyName::K2_TILDE, 2))), std::sqrt(5.0)));
  CHECK(close(energy(shifted(make_family(FamilyName::K2_TILDE, 2))), 2.2360679775));
  CHECK(energy(shifted(make_family(FamilyName::NK1_HAT, 5))) == 0.0);
  CHECK(close(energy(shifted(cycle4())), 4.0));
}

TEST_CASE("gutman_upper") {
  CHECK(close(gutman_upper(2, 1, 1), std::sqrt(5.0)));
  CHECK(gutman_upper(7, 0, 0) == 0.0);
  CHECK(close(gutman_upper(4, 4, 0), std::sqrt(32.0)));
  CHECK(close(gutman_upper(4, 4, 0), 5.6568542495));
  CHECK_THROWS_AS(gutman_upper(3, 0, 4), Error);
}

TEST_CASE("gutman_upper reduces to sqrt(2mn) without loops") {
  for (int n = 1; n <= 8; ++n)
    for (int m = 0; m <= n * (n - 1) / 2; ++m)
      REQUIRE(close(gutman_upper(n, m, 0), std::sqrt(2.0 * m * n), 1e-12));
}

TEST_CASE("improved_upper") {
  const auto c4 = improved_upper(4, 4, 0, shifted(cycle4()));
  CHECK(close(c4.radicand, 24.0));
  CHECK(close(c4.value, 4.8989794856));

  const auto k2t = improved_upper(2, 1, 1, shifted(make_family(FamilyName::K2_TILDE, 2)));
  CHECK(close(k2t.value, gutman_upper(2, 1, 1)));

  const auto star = improved_upper(4, 3, 0, shifted(star3()));
  CHECK(close(star.radicand, 18.0));
  CHECK(close(star.value, 4.2426406871));

  try {
    improved_upper(1, 0, 0, shifted(make_family(FamilyName::K1, 1)));
    FAIL("expected OrderTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderTooSmall);
  }
}

TEST_CASE("improved_upper without loops uses |lambda| ordering") {
  // Recompute the simple-graph form from an independent spectrum.
  for (int n = 2; n <= 5; ++n) {
    oracle::for_each_labeled(n, [n](const SelfLoopGraph& g) {
      if (g.loop_count() != 0) return;
      auto abs_values = oracle::eigen_spectrum(g);
      for (double& x : abs_values) x = std::abs(x);
      std::sort(abs_values.rbegin(), abs_values.rend());
      const double d = abs_values.front() - abs_values.back();
      const double expected = std::sqrt(std::max(0.0, 2.0 * g.size() * n - n / 2.0 * d * d));
      REQUIRE(close(improved_upper(n, g.size(), 0, shifted(g)).value, expected, 1e-9));
    });
  }
}

TEST_CASE("lambda1_bounds") {
  const auto k2hat = lambda1_bounds(2, 1, 2);
  CHECK(k2hat.lower == 2.0);
  CHECK(k2hat.upper == 2.0);
  CHECK(close(eigenvalues(make_family(FamilyName::K2_HAT, 2)).largest(), 2.0));

  const auto k2t = lambda1_bounds(2, 1, 1);
  CHECK(k2t.lower == 1.5);
  CHECK(close(k2t.upper, 1.7320508076));
  const double lambda1 = eigenvalues(make_family(FamilyName::K2_TILDE, 2)).largest();
  CHECK(k2t.lower < lambda1);
  CHECK(lambda1 < k2t.upper);

  const auto empty = lambda1_bounds(5, 0, 0);
  CHECK(empty.lower == 0.0);
  CHECK(empty.upper == 0.0);
}

TEST_CASE("pair_product") {
  const auto nk1 = pair_product(shifted(make_family(FamilyName::NK1, 3)), 3, 0, 0);
  CHECK(nk1.lhs == 0.0);
  CHECK(nk1.rhs == 0.0);

  const auto k2t = pair_product(shifted(make_family(FamilyName::K2_TILDE, 2)), 2, 1, 1);
  CHECK(close(k2t.lhs, 1.25));
  CHECK(k2t.rhs == 1.25);

  const auto k3 = pair_product(shifted(make_family(FamilyName::KN_HAT, 3)), 3, 3, 3);
  CHECK(close(k3.lhs, 5.0));
  CHECK(k3.rhs == 3.0);
}

TEST_CASE("pair_product identity matches the double loop") {
  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_labeled(n, [](const SelfLoopGraph& g) {
      const auto mu = shifted(g);
      const auto pp = pair_product(mu, g.order(), g.size(), g.loop_count());
      REQUIRE(close(pp.lhs, oracle::pair_product_brute(mu.mu), 1e-9));
    });
  }
}

TEST_CASE("spectral_lower") {
  const auto nk1 = spectral_lower(0.0, 4, 0);
  CHECK(nk1.value == 0.0);
  CHECK(nk1.radicand == 0.0);

  const double star_lambda1 = eigenvalues(star3()).largest();
  const auto star = spectral_lower(star_lambda1, 4, 0);
  CHECK(close(star.radicand, 6.0));
  CHECK(close(star.value, 2.4494897428));
  CHECK(star.value <= energy(shifted(star3())));

  for (int n = 2; n <= 6; ++n) {
    const auto hat = spectral_lower(1.0, n, n);
    CHECK(hat.radicand == 2.0 - 2.0 * n);
    CHECK(hat.value == 0.0);
  }
}

TEST_CASE("ozeki_lower") {
  const auto c4 = ozeki_lower(4, 4, 0, shifted(cycle4()));
  CHECK(close(c4.radicand, 32.0 / 3.0));
  CHECK(close(c4.value, 3.2659863237));

  const auto k2t = ozeki_lower(2, 1, 1, shifted(make_family(FamilyName::K2_TILDE, 2)));
  CHECK(close(k2t.radicand, 5.0));
  CHECK(close(k2t.value, std::sqrt(5.0)));

  const auto star = ozeki_lower(4, 3, 0, shifted(star3()));
  CHECK(close(star.radicand, 8.0));
  CHECK(close(star.value, 2.8284271247));
}

TEST_CASE("Ozeki's inequality holds on random nonnegative tuples") {
  // n * sum(a^2) - (sum a)^2 <= n^2/3 (max - min)^2 with b = 1.
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> value(0.0, 5.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + trial % 9;
    std::vector<double> a(n);
    for (double& x : a) x = value(rng);
    double s1 = 0, s2 = 0;
    for (double x : a) {
      s1 += x;
      s2 += x * x;
    }
    const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
    REQUIRE(n * s2 - s1 * s1 <= n * n / 3.0 * (*hi - *lo) * (*hi - *lo) + 1e-9);
  }
}

TEST_CASE("spread_ratio_lower") {
  const auto c4 = spread_ratio_lower(eigenvalues(cycle4()), 4, 4, 0);
  REQUIRE(c4.has_value());
  CHECK(close(*c4, 4.0));

  const auto star = spread_ratio_lower(eigenvalues(star3()), 4, 3, 0);
  REQUIRE(star.has_value());
  CHECK(close(*star, 2 * std::sqrt(3.0)));
  CHECK(close(*star, energy(shifted(star3()))));

  CHECK_FALSE(spread_ratio_lower(eigenvalues(make_family(FamilyName::NK1, 3)), 3, 0, 0).has_value());
  CHECK_FALSE(spread_ratio_lower(eigenvalues(make_family(FamilyName::NK1_HAT, 3)), 3, 0, 3).has_value());
}

TEST_CASE("ultimate energy and its lower bound") {
  CHECK(ultimate_energy(RealTuple{{1, 2, 3}}) == 2.0);
  CHECK(ultimate_energy(RealTuple{{4, 4, 4, 4}}) == 0.0);

  CHECK(ultimate_energy_lower(RealTuple{{1, 2, 3}}) == 2.0);
  CHECK(ultimate_energy_lower(RealTuple{{0, 0, 3}}) == 4.0);
  CHECK(ultimate_energy(RealTuple{{0, 0, 3}}) == 4.0);
  CHECK_FALSE(ultimate_energy_lower(RealTuple{{2, 2}}).has_value());
  CHECK_THROWS_AS(ultimate_energy_lower(RealTuple{{1}}), Error);
  CHECK_THROWS_AS(ultimate_energy(RealTuple{}), Error);

  std::mt19937_64 rng(31);
  std::normal_distribution<double> noise;
  for (int trial = 0; trial < 500; ++trial) {
    RealTuple x;
    for (int i = 0; i < 2 + trial % 7; ++i) x.values.push_back(noise(rng));
    REQUIRE(*ultimate_energy_lower(x) <= ultimate_energy(x) + 1e-12);
  }
}

TEST_CASE("ultimate energy of the spectrum is the graph energy") {
  for (int n = 1; n <= 4; ++n) {
    oracle::for_each_labeled(n, [](const SelfLoopGraph& g) {
      const auto spec = eigenvalues(g);
      const double e = energy(shifted_spectrum(spec, g.order(), g.loop_count()));
      REQUIRE(close(ultimate_energy(RealTuple{spec.values}), e, 1e-12));
    });
  }
}

TEST_CASE("bound_report on equality families") {
  const auto two_hat = bound_report(make_family(FamilyName::HALF_K2_HAT, 4));
  CHECK(close(two_hat.energy, 4.0));
  CHECK(close(two_hat.gutman_upper, 4.0));
  CHECK(two_hat.equality.gutman);

  const auto half = bound_report(make_family(FamilyName::HALF_K1_UNION_HALF_K1HAT, 4));
  CHECK(close(half.energy, 2.0));
  CHECK(close(half.gutman_upper, 2.0));
  CHECK(half.equality.gutman);

  const auto k3 = bound_report(make_family(FamilyName::KN_HAT, 3));
  CHECK(close(k3.energy, 4.0));
  CHECK(close(k3.gutman_upper, std::sqrt(18.0)));
  CHECK_FALSE(k3.equality.gutman);

  const auto single = bound_report(make_family(FamilyName::K1, 1));
  CHECK_FALSE(single.improved_upper.has_value());
  CHECK_FALSE(single.compare(BoundId::Improved).has_value());
  CHECK_FALSE(single.spread_ratio_lower.has_value());
}

TEST_CASE("every bound holds on all graphs up to order 5") {
  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_labeled(n, [n](const SelfLoopGraph& g) {
      const auto r = bound_report(g);
      const double tol = 1e-9;
      REQUIRE(r.energy >= 0.0);
      REQUIRE(r.energy <= r.gutman_upper + tol);
      if (r.improved_upper) {
        REQUIRE(r.energy <= r.improved_upper->value + tol);
        REQUIRE(r.improved_upper->value <= r.gutman_upper + tol);
        REQUIRE(r.improved_upper->radicand >= r.energy * r.energy / n - tol);
      }
      REQUIRE(r.lambda1.lower - tol <= r.lambda1_value());
      REQUIRE(r.lambda1_value() <= r.lambda1.upper + tol);
      REQUIRE(r.pair_product.lhs >= r.pair_product.rhs - tol);
      REQUIRE(r.spectral_lower.value <= r.energy + tol);
      REQUIRE(r.ozeki_lower.value <= r.energy + tol);
      if (r.spread_ratio_lower) REQUIRE(*r.spread_ratio_lower <= r.energy + tol);

      // n * sum(mu^2) - E^2 equals the sum of squared |mu| differences.
      double lagrange = 0.0;
      for (std::size_t i = 0; i < r.shifted.mu.size(); ++i)
        for (std::size_t j = i + 1; j < r.shifted.mu.size(); ++j) {
          const double d = std::abs(r.shifted.mu[i]) - std::abs(r.shifted.mu[j]);
          lagrange += d * d;
        }
      REQUIRE(close(r.gutman_upper * r.gutman_upper - r.energy * r.energy, lagrange, 1e-9));
    });
  }
}

TEST_CASE("bound ids round-trip through their names") {
  for (BoundId id : kAllBounds) CHECK(parse_bound_id(to_string(id)) == id);
  try {
    parse_bound_id("nosuch");
    FAIL("expected UnknownBoundId");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownBoundId);
  }
}

TEST_CASE("nearly_equal is relative above one and absolute below") {
  CHECK(nearly_equal(1000.0 + 5e-7, 1000.0, 1e-9));
  CHECK_FALSE(nearly_equal(1000.0 + 5e-6, 1000.0, 1e-9));
  CHECK(nearly_equal(5e-10, 0.0, 1e-9));
  CHECK_FALSE(nearly_equal(5e-9, 0.0, 1e-9));
}

}  // TEST_SUITE
