#include <benchmark/benchmark.h>

#include "sympow/complexes.hpp"
#include "sympow/dga.hpp"
#include "sympow/groupring.hpp"
#include "sympow/homology.hpp"

namespace {

using namespace sympow;

void BM_GroupRingMultiply(benchmark::State& state) {
  const auto shape = groupring::RingShape::surface(static_cast<int>(state.range(0)));
  auto a = groupring::GroupRingElement::one(shape);
  for (int v = 0; v < shape.variables(); ++v) a = a * groupring::GroupRingElement::one_minus(shape, v);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_GroupRingMultiply)->Arg(1)->Arg(2)->Arg(3);

void BM_DgaBoundarySigma(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const auto sigma = dga::sigma_element(g, g);
  for (auto _ : state) benchmark::DoNotOptimize(dga::boundary(sigma));
}
BENCHMARK(BM_DgaBoundarySigma)->Arg(2)->Arg(3)->Arg(4);

void BM_BuildCoverComplex(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        complexes::build_cover_complex(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  }
}
BENCHMARK(BM_BuildCoverComplex)->Args({2, 2})->Args({2, 5})->Args({3, 4});

void BM_GenericHomology(benchmark::State& state) {
  const auto c = complexes::build_cover_complex(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const homology::GenericOptions opts{5, 1, homology::kFastPrime, 1};
  for (auto _ : state) benchmark::DoNotOptimize(homology::generic_homology(c, opts));
}
BENCHMARK(BM_GenericHomology)->Args({2, 2})->Args({2, 5})->Args({3, 4});

void BM_CoverSnf(benchmark::State& state) {
  const auto c = complexes::base_change(complexes::build_cover_complex(2, static_cast<int>(state.range(0))),
                                        static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(homology::integer_homology(c));
}
BENCHMARK(BM_CoverSnf)->Args({2, 2})->Args({3, 2})->Args({4, 2});

}  // namespace

BENCHMARK_MAIN();
