#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fflab/errors.hpp"
#include "fflab/info.hpp"
#include "support.hpp"

using namespace fflab;

namespace {

// Phi_n = (8 / (n (n-1)^2)) sum_{i<j} (alpha_i - alpha_j)^{-2}: the sum over i of the
// squared score collapses to twice the pair sum because the cross terms cancel.
double fisher_pairs(const RootVector& a) {
  const double n = static_cast<double>(a.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) s += 1.0 / ((a[i] - a[j]) * (a[i] - a[j]));
  return 8.0 * s / (n * (n - 1) * (n - 1));
}

RootVector scaled(const RootVector& a, double c) {
  std::vector<double> v(a.begin(), a.end());
  for (double& x : v) x *= c;
  return RootVector(std::move(v));
}

}  // namespace

TEST_CASE("score examples") {
  CHECK(score(RootVector{1, -1}) == std::vector<double>{0.5, -0.5});
  const double s = std::sqrt(3.0);
  const auto j = score(RootVector{s, 0, -s});
  CHECK(j[0] == doctest::Approx(s / 2));
  CHECK(std::fabs(j[1]) < 1e-15);
  CHECK(j[2] == doctest::Approx(-s / 2));
  CHECK(score(RootVector{4}) == std::vector<double>{0.0});
  CHECK_THROWS_AS(score(RootVector{1, 1, 0}), RepeatedRoot);
}

TEST_CASE("score sums to zero") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto j = score(testing::random_roots(2 + trial % 20));
    double sum = 0.0, scale = 0.0;
    for (double x : j) {
      sum += x;
      scale += std::fabs(x);
    }
    CHECK(std::fabs(sum) <= 1e-9 * scale);
  }
}

TEST_CASE("fisher examples and pair-sum formula") {
  CHECK(fisher(RootVector{1, -1}) == 1.0);
  const double s = std::sqrt(3.0);
  CHECK(fisher(RootVector{s, 0, -s}) == doctest::Approx(0.5));
  CHECK(fisher(RootVector{7}) == 0.0);
  CHECK(std::isinf(fisher(RootVector{1, 1, 0})));
  for (int trial = 0; trial < 100; ++trial) {
    const RootVector a = testing::random_roots(2 + trial % 20);
    CHECK(fisher(a) == doctest::Approx(fisher_pairs(a)).epsilon(1e-12));
    const double c = testing::uniform(0.2, 5);
    CHECK(fisher(scaled(a, c)) == doctest::Approx(fisher(a) / (c * c)).epsilon(1e-12));
  }
}

TEST_CASE("entropy examples, scaling and discriminant consistency") {
  CHECK(entropy(RootVector{1, -1}) == doctest::Approx(std::log(2.0)));
  const double s = std::sqrt(3.0);
  CHECK(entropy(RootVector{s, 0, -s}) == doctest::Approx(std::log(6 * s) / 3));
  CHECK(entropy_power(RootVector{1, -1}) == doctest::Approx(4.0));
  CHECK(entropy_power(RootVector{2, 2}) == 0.0);
  CHECK(std::isinf(entropy(RootVector{2, 2, 1})));
  CHECK(log_discriminant(RootVector{1, -1}) == doctest::Approx(std::log(4.0)));
  CHECK_THROWS_AS(entropy(RootVector{1}), std::invalid_argument);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 20;
    const RootVector a = testing::random_roots(n);
    const double c = testing::uniform(0.2, 5) * (trial % 2 ? -1 : 1);
    CHECK(std::fabs(entropy(scaled(a, c)) - entropy(a) - std::log(std::fabs(c))) < 1e-12);
    CHECK(entropy_power(scaled(a, c)) == doctest::Approx(c * c * entropy_power(a)).epsilon(1e-12));
    CHECK(log_discriminant(a) == doctest::Approx(n * (n - 1.0) * entropy(a)).epsilon(1e-13));
  }
}

TEST_CASE("Hermite entropy closed form matches the roots") {
  CHECK(hermite_entropy(2) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  for (int n = 2; n <= 40; ++n)
    CHECK(std::fabs(hermite_entropy(n) - entropy(real_roots(hermite_normalized(n)))) <= 1e-8 * std::max(1.0, std::fabs(hermite_entropy(n))));
  CHECK_THROWS_AS(hermite_entropy(1), std::invalid_argument);
}

TEST_CASE("C_n") {
  const double c3 = 0.5 * std::log(1.5) - 2.0 / 3.0 * std::log(2.0);
  CHECK(c_constant(3) == doctest::Approx(c3).epsilon(1e-15));
  CHECK(c_constant(3) == doctest::Approx(-0.2594).epsilon(1e-3));
  for (int n = 3; n <= 200; ++n) {
    CHECK(c_constant(n) < 0.0);
    CHECK(std::fabs(c_constant(n) - (hermite_entropy(n) - hermite_entropy(n - 1))) <= 1e-12);
  }
  CHECK_THROWS_AS(c_constant(2), std::invalid_argument);
}

TEST_CASE("physicists' Hermite discriminant") {
  // Disc(He_3) = 2^9 * 108
  CHECK(physicist_hermite_log_disc(3) == doctest::Approx(std::log(55296.0)).epsilon(1e-14));
  for (int n = 2; n <= 12; ++n) {
    // Physicists' roots are the probabilists' roots over sqrt 2, leading coefficient 2^n.
    std::vector<double> r;
    for (double x : real_roots(hermite(n))) r.push_back(x / std::numbers::sqrt2);
    const double from_roots = log_discriminant(RootVector(r)) + 2.0 * (n - 1) * n * std::log(2.0);
    CHECK(from_roots == doctest::Approx(physicist_hermite_log_disc(n)).epsilon(1e-9));
  }
}
