#include <benchmark/benchmark.h>

#include "ssbc/affinity.hpp"
#include "ssbc/baselines.hpp"
#include "ssbc/data.hpp"
#include "ssbc/encoder.hpp"

namespace {

void BM_AffinityVector(benchmark::State& state) {
  const ssbc::Dataset ds = ssbc::synth_uniform(state.range(0) + 1, 50, 3);
  const ssbc::TrainSet train(ds.points.topRows(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(ssbc::affinity_vector(ds.points.row(state.range(0)), train));
}
BENCHMARK(BM_AffinityVector)->Arg(500)->Arg(2000);

void BM_SsbcOnline(benchmark::State& state) {
  const ssbc::Index k = state.range(0);
  const ssbc::Dataset ds = ssbc::synth_uniform(1500, 50, 4);
  const double sigma = ssbc::estimate_sigma_nn(ds.points.topRows(500), 30);
  ssbc::SsbcModel model = ssbc::SsbcModel::train(ssbc::TrainSet(ds.points.topRows(500), sigma), {k, 0.5});
  ssbc::Index i = 500;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.process_online(ds.points.row(i)));
    i = i + 1 < ds.points.rows() ? i + 1 : 500;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SsbcOnline)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_LshEncode(benchmark::State& state) {
  const ssbc::Dataset ds = ssbc::synth_uniform(1000, 50, 5);
  const ssbc::LshModel lsh = ssbc::LshModel::train(50, state.range(0), 6);
  for (auto _ : state) benchmark::DoNotOptimize(lsh.encode_all(ds.points));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_LshEncode)->Arg(32)->Arg(64);

}  // namespace
