// Serial reference vs OpenMP versions of the three hot kernels.

#include <benchmark/benchmark.h>

#include "reflectia/enumerate.hpp"
#include "reflectia/groups.hpp"
#include "reflectia/molien.hpp"

using namespace reflectia;

namespace {

const char* kGroups[] = {"G8", "H3", "G(4,2,3)", "G26", "F4"};

ExecMode mode_of(const benchmark::State& st) { return st.range(1) == 0 ? ExecMode::serial : ExecMode::parallel; }

void BM_enumerate(benchmark::State& st) {
  const GroupSpec g = resolve_group(kGroups[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_elements(g, kDefaultElementCap, mode_of(st)).size());
  st.SetLabel(g.name);
}

void BM_bucket(benchmark::State& st) {
  const GroupSpec g = resolve_group(kGroups[st.range(0)]);
  const GroupElements els = enumerate_elements(g, kDefaultElementCap, ExecMode::serial);
  for (auto _ : st) benchmark::DoNotOptimize(bucket_elements(els, mode_of(st)).size());
  st.SetLabel(g.name);
}

void BM_hilbert(benchmark::State& st) {
  const GroupSpec g = resolve_group(kGroups[st.range(0)]);
  const Enumeration en = generate(g);
  const long cap = 40;
  for (auto _ : st) benchmark::DoNotOptimize(brute_hilbert(en.buckets, en.elements.size(), cap, mode_of(st)).is_zero());
  st.SetLabel(g.name);
}

void args(benchmark::internal::Benchmark* b) {
  for (int i = 0; i < static_cast<int>(std::size(kGroups)); ++i) {
    b->Args({i, 0});
    b->Args({i, 1});
  }
  b->ArgNames({"group", "parallel"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_enumerate)->Apply(args);
BENCHMARK(BM_bucket)->Apply(args);
BENCHMARK(BM_hilbert)->Apply(args);

BENCHMARK_MAIN();
