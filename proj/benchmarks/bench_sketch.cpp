#include <benchmark/benchmark.h>

#include "ssbc/rng.hpp"
#include "ssbc/sketch.hpp"

namespace {

// Amortised cost of one insert, shrinks included. Args: ell, m, route.
void BM_SketchInsert(benchmark::State& state) {
  const ssbc::Index ell = state.range(0), m = state.range(1);
  const auto method = state.range(2) ? ssbc::ShrinkMethod::svd : ssbc::ShrinkMethod::gram_eigen;
  ssbc::Rng rng(1);
  const ssbc::Matrix rows = ssbc::gaussian_matrix(4 * ell, m, rng);
  ssbc::FdSketch sketch(ell, m, method);
  ssbc::Index i = 0;
  for (auto _ : state) {
    sketch.insert(rows.row(i));
    i = (i + 1) % rows.rows();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SketchInsert)
    ->ArgNames({"ell", "m", "svd"})
    ->Args({60, 500, 0})
    ->Args({60, 500, 1})
    ->Args({150, 500, 0})
    ->Args({150, 500, 1});

void BM_SketchBasis(benchmark::State& state) {
  const ssbc::Index ell = state.range(0), m = state.range(1);
  ssbc::Rng rng(2);
  const ssbc::Matrix rows = ssbc::gaussian_matrix(ell - 1, m, rng);
  for (auto _ : state) {
    state.PauseTiming();
    ssbc::FdSketch sketch(ell, m);
    for (ssbc::Index i = 0; i < rows.rows(); ++i) sketch.insert(rows.row(i));
    state.ResumeTiming();
    benchmark::DoNotOptimize(sketch.basis(ell / 3));
  }
}
BENCHMARK(BM_SketchBasis)->ArgNames({"ell", "m"})->Args({60, 500})->Args({150, 500});

}  // namespace
