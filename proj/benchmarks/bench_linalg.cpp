#include <benchmark/benchmark.h>

#include <random>

#include "liebound/linalg.hpp"

using namespace liebound;

namespace {

Mat random_skew(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 0.3);
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = g(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace

static void BM_expm(benchmark::State& state) {
  const Mat a = random_skew(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(expm(a));
}
BENCHMARK(BM_expm)->Arg(2)->Arg(8)->Arg(64)->Arg(128);

static void BM_logm(benchmark::State& state) {
  const Mat e = expm(random_skew(state.range(0), 2));
  for (auto _ : state) benchmark::DoNotOptimize(logm_principal(e));
}
BENCHMARK(BM_logm)->Arg(2)->Arg(8)->Arg(64);

static void BM_eig_hermitian(benchmark::State& state) {
  const Mat a = random_skew(state.range(0), 3);
  const Mat h = cd(0, 1) * a;
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(BM_eig_hermitian)->Arg(8)->Arg(64);
