#include <benchmark/benchmark.h>

#include "semient/estimator.hpp"
#include "semient/root_finder.hpp"

using namespace semient;

namespace {

RationalMap zpow(int d) {
  std::vector<ExactScalar> c(d + 1, ExactScalar(0));
  c[0] = 1;
  return RationalMap::from_affine(c, {1});
}

void BM_Preimages(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<ExactScalar> num(d + 1, ExactScalar(0)), den{1, ExactScalar(0, 1)};
  num[0] = 1;
  num[d] = ExactScalar(mpq_class(1, 3), 0);
  const auto f = RationalMap::from_affine(num, den);
  const auto q = ProjPoint::from_affine({0.3, -0.7});
  for (auto _ : state) benchmark::DoNotOptimize(preimages(f, q));
}
BENCHMARK(BM_Preimages)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_Compose(benchmark::State& state) {
  const auto f = RationalMap::from_affine({1, ExactScalar(mpq_class(1, 2), 1), 0}, {1, -1});
  const auto g = RationalMap::from_affine({2, 0, 0, ExactScalar(0, 3)}, {1});
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_Compose);

void BM_CountSeparated(benchmark::State& state) {
  const auto corr = build_correspondence(GeneratorSet({zpow(2), zpow(3)}));
  EstimatorConfig cfg;
  cfg.start_pool = static_cast<std::size_t>(state.range(0));
  const auto pool = build_estimator_pool(corr, 5, 2, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(count_separated(pool, 0.05, SeparationMode::DinhSibony));
  state.counters["pool"] = static_cast<double>(pool.size());
}
BENCHMARK(BM_CountSeparated)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
