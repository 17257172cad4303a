#include <benchmark/benchmark.h>

#include <random>

#include "liebound/metric.hpp"

using namespace liebound;

static void BM_distance_closed_form_su2(benchmark::State& state) {
  const auto su2 = make_group(GroupId::su2);
  std::mt19937_64 rng(4);
  const auto g = random_group_element(su2, 0.6, rng);
  const auto h = random_group_element(su2, 0.6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(distance_closed_form(g, h));
}
BENCHMARK(BM_distance_closed_form_su2);

static void BM_distance_refined_sp2(benchmark::State& state) {
  const auto sp2 = make_group(GroupId::sp2m, 1);
  std::mt19937_64 rng(5);
  const auto g = random_group_element(sp2, 0.5, rng);
  const auto h = random_group_element(sp2, 0.5, rng);
  RefineOptions opt;
  opt.segments = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(distance_refined(g, h, opt));
}
BENCHMARK(BM_distance_refined_sp2)->Arg(1)->Arg(4)->Arg(8);
