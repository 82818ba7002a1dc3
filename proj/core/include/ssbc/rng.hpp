#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "ssbc/types.hpp"

namespace ssbc {

/// Seedable generator whose output is identical on every platform.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the C++
/// standard. The distributions are implemented here rather than taken from
/// <random>, because the standard leaves those implementation-defined:
///   - uniform01: top 53 bits of one engine draw, scaled by 2^-53, in [0, 1)
///   - below(n): rejection sampling on the engine output, unbiased
///   - normal: Box-Muller on two uniform01 draws; the second variate is
///     cached and returned by the next call
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  std::uint64_t below(std::uint64_t n);
  double normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

/// d x k matrix of independent standard normal entries, filled column by column.
Matrix gaussian_matrix(Index rows, Index cols, Rng& rng);

}  // namespace ssbc
