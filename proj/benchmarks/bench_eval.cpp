#include <benchmark/benchmark.h>

#include <vector>

#include "ssbc/codeword.hpp"
#include "ssbc/eval.hpp"
#include "ssbc/rng.hpp"

namespace {

std::vector<ssbc::Codeword> random_codes(std::size_t n, ssbc::Index k, ssbc::Seed seed) {
  ssbc::Rng rng(seed);
  std::vector<ssbc::Codeword> out;
  std::vector<int> signs(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& s : signs) s = rng.below(2) ? 1 : -1;
    out.push_back(ssbc::Codeword::from_signs(signs));
  }
  return out;
}

void BM_HammingDistance(benchmark::State& state) {
  const auto codes = random_codes(2, state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ssbc::hamming_distance(codes[0], codes[1]));
}
BENCHMARK(BM_HammingDistance)->Arg(32)->Arg(128);

void BM_EvaluateCodes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto codes = random_codes(n, 32, 2);
  ssbc::GroundTruth truth;
  truth.query_count = truth.base_count = static_cast<ssbc::Index>(n);
  truth.similar.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i % 7; j < n; j += 97)
      if (j != i) truth.similar[i].push_back(static_cast<ssbc::Index>(j));
  for (auto _ : state) benchmark::DoNotOptimize(ssbc::evaluate_codes("bench", codes, codes, truth, 8, true));
}
BENCHMARK(BM_EvaluateCodes)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
