#include <benchmark/benchmark.h>

#include <vector>

#include "hermquad/gauss_hermite.hpp"
#include "hermquad/hermite.hpp"
#include "hermquad/lower_bounds.hpp"
#include "hermquad/rule_builder.hpp"
#include "hermquad/wce.hpp"

namespace {

using namespace hermquad;

WeightedSpace flat_space(int s) {
  return WeightedSpace(s, 0.5, SequenceSpec::power(1.0, 0.0),
                       SequenceSpec::power(1.0, 0.0));
}

void BM_hermite_eval_all(benchmark::State& state) {
  const int k_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite_eval_all(k_max, 1.7));
  }
}
BENCHMARK(BM_hermite_eval_all)->Arg(25)->Arg(100)->Arg(200);

void BM_triple_product(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(triple_product_integral(40, 60, 80));
  }
}
BENCHMARK(BM_triple_product);

void BM_gh_rule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gh_rule(n));
  }
}
BENCHMARK(BM_gh_rule)->Arg(8)->Arg(32)->Arg(128)->Arg(200);

void BM_kernel_eval(benchmark::State& state) {
  const WeightedSpace space = flat_space(3);
  const std::vector<double> x{0.3, -1.2, 2.0};
  const std::vector<double> y{-0.7, 0.4, 1.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_eval(space, x, y, 1e-10));
  }
}
BENCHMARK(BM_kernel_eval);

void BM_one_dim_gh_wce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(one_dim_gh_wce(1.0, 1.0, 0.5, n, 1e-12));
  }
}
BENCHMARK(BM_one_dim_gh_wce)->Arg(1)->Arg(8)->Arg(32);

void BM_product_gh_wce(benchmark::State& state) {
  const WeightedSpace space = flat_space(3);
  const std::vector<int> m{8, 8, 8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(product_gh_wce(space, m, 1e-10));
  }
}
BENCHMARK(BM_product_gh_wce);

void BM_general_wce_grid(benchmark::State& state) {
  const WeightedSpace space = flat_space(2);
  const std::vector<int> m{4, 4};
  const ProductRule rule = product_rule(m);
  const auto nodes = grid_points(rule);
  const auto weights = grid_weights(rule);
  for (auto _ : state) {
    benchmark::DoNotOptimize(general_wce(space, nodes, weights, 1e-8));
  }
}
BENCHMARK(BM_general_wce_grid);

void BM_build_uexp(benchmark::State& state) {
  const WeightedSpace space = flat_space(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_uexp(space, 0.01));
  }
}
BENCHMARK(BM_build_uexp);

void BM_best_lower_bound(benchmark::State& state) {
  const WeightedSpace space = flat_space(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_lower_bound(space, 12, 12));
  }
}
BENCHMARK(BM_best_lower_bound);

}  // namespace

BENCHMARK_MAIN();
