#include <benchmark/benchmark.h>

#include "fsq/fsq.hpp"

namespace {

void BM_FnEval(benchmark::State& state) {
  const fsq::LatticeGrid grid(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(0)) - 1;
  const fsq::SqueezeParam xi(0.9);
  for (auto _ : state) {
    for (int j = grid.min_label(); j <= grid.max_label(); ++j) {
      benchmark::DoNotOptimize(fsq::fn_eval(n, j, xi, grid));
    }
  }
}
BENCHMARK(BM_FnEval)->Arg(13)->Arg(41)->Arg(201);

void BM_BuildBasis(benchmark::State& state) {
  const fsq::LatticeGrid grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fsq::build_basis(grid, fsq::SqueezeParam(1.1)));
  }
}
BENCHMARK(BM_BuildBasis)->Arg(13)->Arg(41)->Arg(101)->Arg(201)->Unit(benchmark::kMicrosecond);

void BM_Dual(benchmark::State& state) {
  const auto basis = fsq::build_basis(fsq::LatticeGrid(static_cast<int>(state.range(0))),
                                      fsq::SqueezeParam(1.1));
  for (auto _ : state) benchmark::DoNotOptimize(fsq::dual(basis));
}
BENCHMARK(BM_Dual)->Arg(13)->Arg(41)->Unit(benchmark::kMicrosecond);

void BM_Certify(benchmark::State& state) {
  const fsq::LatticeGrid grid(static_cast<int>(state.range(0)));
  const auto unit = fsq::build_basis(grid, fsq::SqueezeParam(1.0));
  const auto target = fsq::build_basis(grid, fsq::SqueezeParam(0.95));
  for (auto _ : state) benchmark::DoNotOptimize(fsq::certify_partition(unit, target));
}
BENCHMARK(BM_Certify)->Arg(13)->Arg(41)->Unit(benchmark::kMicrosecond);

void BM_SqueezeSquareWave(benchmark::State& state) {
  const fsq::LatticeGrid grid(13);
  const auto input = fsq::square_wave(grid, 2);
  const auto cert = fsq::certify_partition(fsq::build_basis(grid, fsq::SqueezeParam(1.0)),
                                           fsq::build_basis(grid, fsq::SqueezeParam(0.9)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fsq::apply_squeeze(input, fsq::SqueezeParam(0.9), cert, fsq::OperatorKind::kUnitary));
  }
}
BENCHMARK(BM_SqueezeSquareWave)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
