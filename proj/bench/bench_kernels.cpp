// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "gyro/catalog.hpp"
#include "gyro/kernels.hpp"
#include "gyro/subalgebra.hpp"

namespace {

using gyro::FiniteGyrogroup;
namespace kernels = gyro::kernels;

const FiniteGyrogroup& fixture(int index)
{
    static std::vector<FiniteGyrogroup> cache = [] {
        std::vector<FiniteGyrogroup> out;
        for (int k = 1; k <= 5; ++k) out.push_back(gyro::catalog::fixture("K" + std::to_string(k)).gyrogroup);
        return out;
    }();
    return cache[static_cast<std::size_t>(index - 1)];
}

template <bool Parallel>
void BM_GyratorImages(benchmark::State& state)
{
    const auto& g = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto images = Parallel ? kernels::gyrator_images(g.table(), g.left_inverses())
                               : kernels::reference::gyrator_images(g.table(), g.left_inverses());
        benchmark::DoNotOptimize(images.data());
    }
}

template <bool Parallel>
void BM_Gyroassociativity(benchmark::State& state)
{
    const auto& g = fixture(static_cast<int>(state.range(0)));
    const auto images = kernels::gyrator_images(g.table(), g.left_inverses());
    for (auto _ : state) {
        auto scan = Parallel ? kernels::gyroassociativity_failures(g.table(), images)
                             : kernels::reference::gyroassociativity_failures(g.table(), images);
        benchmark::DoNotOptimize(scan.count);
    }
}

template <bool Parallel>
void BM_ClosedSubsets(benchmark::State& state)
{
    const auto& g = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto masks = Parallel ? kernels::closed_subsets(g.table(), g.identity())
                              : kernels::reference::closed_subsets(g.table(), g.identity());
        benchmark::DoNotOptimize(masks.data());
    }
}

template <bool Parallel>
void BM_TripleCosetEqual(benchmark::State& state)
{
    const auto& g = fixture(static_cast<int>(state.range(0)));
    const auto subs = gyro::enumerate_subgyrogroups(g);
    for (auto _ : state) {
        auto flags = Parallel ? kernels::triple_coset_equal(g.table(), subs)
                              : kernels::reference::triple_coset_equal(g.table(), subs);
        benchmark::DoNotOptimize(flags.data());
    }
}

}  // namespace

BENCHMARK(BM_GyratorImages<false>)->DenseRange(2, 5);
BENCHMARK(BM_GyratorImages<true>)->DenseRange(2, 5);
BENCHMARK(BM_Gyroassociativity<false>)->DenseRange(2, 5);
BENCHMARK(BM_Gyroassociativity<true>)->DenseRange(2, 5);
BENCHMARK(BM_ClosedSubsets<false>)->Arg(1)->Arg(2);
BENCHMARK(BM_ClosedSubsets<true>)->Arg(1)->Arg(2);
BENCHMARK(BM_TripleCosetEqual<false>)->Arg(1)->Arg(2);
BENCHMARK(BM_TripleCosetEqual<true>)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
