#include <benchmark/benchmark.h>

#include "lingbridge/rng.hpp"
#include "lingbridge/solvers/cv.hpp"
#include "lingbridge/solvers/elasticnet.hpp"
#include "lingbridge/solvers/logistic.hpp"
#include "lingbridge/solvers/rrr.hpp"

using namespace lingbridge;

namespace {

Matrix gaussian(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.normal();
  }
  return m;
}

void BM_ElasticNetFit(benchmark::State& state) {
  const auto n = state.range(0);
  Matrix x = gaussian(n, 40, 1);
  Vector y = x.col(0) - 0.5 * x.col(3) + 0.1 * gaussian(n, 1, 2).col(0);
  for (auto _ : state) benchmark::DoNotOptimize(solvers::elasticnet_fit(x, y, 0.01, 0.5));
}
BENCHMARK(BM_ElasticNetFit)->Arg(500)->Arg(2000)->Arg(10000);

void BM_ElasticNetCvGrid(benchmark::State& state) {
  Matrix x = gaussian(2000, 40, 3);
  Vector y = x.col(1) + 0.3 * gaussian(2000, 1, 4).col(0);
  const auto grid = solvers::default_elasticnet_grid();
  for (auto _ : state) benchmark::DoNotOptimize(solvers::cv_elasticnet(x, y, grid, 3, 0));
}
BENCHMARK(BM_ElasticNetCvGrid)->Unit(benchmark::kMillisecond);

void BM_LogisticL1Fit(benchmark::State& state) {
  Matrix x = gaussian(550, state.range(0), 5);
  Vector y = (x.col(0).array() + 0.5 * gaussian(550, 1, 6).col(0).array() > 0).cast<double>();
  for (auto _ : state) benchmark::DoNotOptimize(solvers::logistic_l1_fit(x, y, 10.0));
}
BENCHMARK(BM_LogisticL1Fit)->Arg(15)->Arg(30)->Arg(185);

void BM_RrrFit(benchmark::State& state) {
  Matrix x = gaussian(2000, 40, 7);
  Matrix y = x * gaussian(40, 30, 8) + gaussian(2000, 30, 9);
  for (auto _ : state) benchmark::DoNotOptimize(solvers::rrr_fit(x, y, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_RrrFit)->Arg(1)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
