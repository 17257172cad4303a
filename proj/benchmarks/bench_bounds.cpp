#include <benchmark/benchmark.h>

#include <random>

#include "liebound/bounds.hpp"

using namespace liebound;

static void BM_nelson_basis_sum_metaplectic(benchmark::State& state) {
  const auto rep = make_metaplectic(state.range(0), 64);
  for (auto _ : state) benchmark::DoNotOptimize(nelson_basis_sum(rep));
}
BENCHMARK(BM_nelson_basis_sum_metaplectic)->Arg(1)->Arg(2);

static void BM_ecd_pure_state_sup(benchmark::State& state) {
  const auto rep = make_su11_sector(0, static_cast<int>(state.range(0)));
  std::mt19937_64 rng(6);
  const auto x = random_algebra_element(rep->group, 0.2, rng);
  const auto y = random_algebra_element(rep->group, 0.2, rng);
  const Mat ug = rep->unitary({x});
  const Mat uh = rep->unitary({y});
  const auto ops = su11_sector_ops(0, static_cast<int>(state.range(0)));
  EnergyOperator k02;
  k02.rep = rep;
  k02.mat = SpMat(ops.k0 * ops.k0);
  k02.spectral_floor = 0.25;
  EcdSupOptions opt;
  opt.restarts = 4;
  for (auto _ : state)
    benchmark::DoNotOptimize(ecd_pure_state_sup(ug, uh, k02, 2.25, opt));
}
BENCHMARK(BM_ecd_pure_state_sup)->Arg(24)->Arg(48);

static void BM_exact_diamond_unitary(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0.0, 1.0);
  const int d = static_cast<int>(state.range(0));
  Mat a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = cd(g(rng), g(rng));
  const Mat u = Eigen::HouseholderQR<Mat>(a).householderQ();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = cd(g(rng), g(rng));
  const Mat v = Eigen::HouseholderQR<Mat>(a).householderQ();
  for (auto _ : state) benchmark::DoNotOptimize(exact_diamond_unitary(u, v));
}
BENCHMARK(BM_exact_diamond_unitary)->Arg(2)->Arg(16)->Arg(64);
