#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "ssbc/rng.hpp"

using namespace ssbc;

TEST_CASE("engine sequence is the standard mt19937_64") {
  Rng rng(5489);
  // 10000th output of the default-seeded engine, fixed by the C++ standard.
  for (int i = 0; i < 9999; ++i) rng.next();
  CHECK(rng.next() == 9981545732273789042ULL);
}

TEST_CASE("uniform01 uses the top 53 bits") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform01();
    CHECK(u == static_cast<double>(b.next() >> 11) * 0x1.0p-53);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("below stays in range and reaches every value") {
  Rng rng(3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = rng.below(7);
    CHECK(x < 7);
    seen.insert(x);
  }
  CHECK(seen.size() == 7);
  CHECK(rng.below(1) == 0);
}

TEST_CASE("normal pairs come from Box-Muller") {
  Rng a(11), b(11);
  const double z0 = a.normal(), z1 = a.normal();
  const double u1 = b.uniform01(), u2 = b.uniform01();
  const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  CHECK(std::abs(z0 * z0 + z1 * z1 - radius * radius) < 1e-12);
  CHECK(std::abs(std::atan2(z1, z0) - std::remainder(angle, 2 * std::numbers::pi)) < 1e-12);
}

TEST_CASE("gaussian_matrix") {
  SUBCASE("same seed twice gives identical matrices") {
    Rng a(9), b(9);
    CHECK(gaussian_matrix(20, 5, a) == gaussian_matrix(20, 5, b));
  }
  SUBCASE("filled column by column") {
    Rng a(9), b(9);
    const Matrix g = gaussian_matrix(3, 2, a);
    for (Index j = 0; j < 2; ++j)
      for (Index i = 0; i < 3; ++i) CHECK(g(i, j) == b.normal());
  }
  SUBCASE("1000 x 10 sample moments") {
    Rng rng(1);
    const Matrix g = gaussian_matrix(1000, 10, rng);
    const double mean = g.mean();
    const double var = (g.array() - mean).square().sum() / static_cast<double>(g.size() - 1);
    CHECK(std::abs(mean) < 0.05);
    CHECK(std::abs(var - 1.0) < 0.1);
  }
}
