#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "arcbound/bounds.hpp"
#include "arcbound/oracle.hpp"
#include "arcbound/precision.hpp"

namespace {

using namespace arcbound;

std::vector<double> random_abscissas(size_t n) {
  std::vector<double> xs(n);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (double& x : xs) x = dist(rng);
  return xs;
}

void bm_eval_bound_fp64(benchmark::State& state) {
  const BoundSpec spec = BoundSpec::sqrt_matched(Real(4L, 64));
  const std::vector<double> xs = random_abscissas(1024);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_bound_fp64(spec, xs[i++ & 1023]));
  }
}
BENCHMARK(bm_eval_bound_fp64);

void bm_std_asin(benchmark::State& state) {
  const std::vector<double> xs = random_abscissas(1024);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(std::asin(xs[i++ & 1023]));
  }
}
BENCHMARK(bm_std_asin);

void bm_eval_bound_mpfr(benchmark::State& state) {
  const PrecisionConfig prec{static_cast<int>(state.range(0))};
  const BoundSpec spec = BoundSpec::sqrt_matched(Real(4L, prec.working_bits()));
  const std::vector<double> xs = random_abscissas(256);
  size_t i = 0;
  for (auto _ : state) {
    const Real x(xs[i++ & 255], prec.working_bits());
    benchmark::DoNotOptimize(eval_bound(spec, x, prec));
  }
}
BENCHMARK(bm_eval_bound_mpfr)->Arg(128)->Arg(256)->Arg(1024);

void bm_arcsin_ref(benchmark::State& state) {
  const PrecisionConfig prec{static_cast<int>(state.range(0))};
  const std::vector<double> xs = random_abscissas(256);
  size_t i = 0;
  for (auto _ : state) {
    const Real x(xs[i++ & 255], prec.working_bits());
    benchmark::DoNotOptimize(arcsin_ref(x, prec));
  }
}
BENCHMARK(bm_arcsin_ref)->Arg(128)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
