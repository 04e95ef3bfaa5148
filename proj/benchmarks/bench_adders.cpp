// Throughput of building, simulating and sweeping the adder families.

#include <random>

#include <benchmark/benchmark.h>

#include "ling/builders.hpp"
#include "ling/evaluate.hpp"
#include "ling/metrics.hpp"
#include "ling/transform.hpp"
#include "ling/verify.hpp"

namespace {

using namespace ling;

AdderSpec spec_for(int family, int width) {
  AdderSpec spec;
  spec.family = static_cast<Family>(family);
  spec.width = static_cast<unsigned>(width);
  spec.group_size = 4;
  return spec;
}

void bench_build(benchmark::State& state) {
  const AdderSpec spec = spec_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    Netlist n = build(spec);
    benchmark::DoNotOptimize(n);
  }
  state.SetLabel(describe(spec));
}

// 64 vectors per call; items = vectors.
void bench_evaluate_packed(benchmark::State& state) {
  const AdderSpec spec = spec_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const Netlist n = decompose_fanin2(build(spec));
  std::mt19937_64 rng(0x5eedc0de);
  std::vector<std::uint64_t> lanes(n.primary_inputs().size());
  for (auto& lane : lanes) lane = rng();
  for (auto _ : state) {
    auto values = evaluate_packed(n, lanes);
    benchmark::DoNotOptimize(values.data());
  }
  state.SetItemsProcessed(state.iterations() * 64);
  state.SetLabel(describe(spec) + ", " + std::to_string(depth_profile(n).total_gates) + " gates");
}

void bench_exhaustive_sweep(benchmark::State& state) {
  const Netlist n = build_grouped(GroupFamily::ling, 8, 4, false, SumForm::xor_form);
  const SweepOptions options{SweepMode::exhaustive, 0, 0, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    auto report = verify_against_oracle(n, options);
    benchmark::DoNotOptimize(report.vectors_tested);
  }
  state.SetItemsProcessed(state.iterations() * 65536);
}

void bench_depth_profile(benchmark::State& state) {
  const Netlist n = decompose_fanin2(build_ling_flat(16, true, SumForm::xor_form));
  for (auto _ : state) {
    auto m = depth_profile(n);
    benchmark::DoNotOptimize(m.max_depth);
  }
}

constexpr int kRca = static_cast<int>(Family::rca);
constexpr int kClaFlat = static_cast<int>(Family::cla_flat);
constexpr int kLingFlat = static_cast<int>(Family::ling_flat);
constexpr int kClaGrouped = static_cast<int>(Family::cla_grouped);
constexpr int kLingGrouped = static_cast<int>(Family::ling_grouped);

}  // namespace

BENCHMARK(bench_build)
    ->Args({kRca, 64})
    ->Args({kClaFlat, 16})
    ->Args({kLingFlat, 16})
    ->Args({kLingGrouped, 64});
BENCHMARK(bench_evaluate_packed)
    ->Args({kRca, 32})
    ->Args({kClaFlat, 16})
    ->Args({kLingFlat, 16})
    ->Args({kClaGrouped, 32})
    ->Args({kLingGrouped, 32});
BENCHMARK(bench_exhaustive_sweep)->Arg(1)->Arg(4)->UseRealTime();
BENCHMARK(bench_depth_profile);

BENCHMARK_MAIN();
