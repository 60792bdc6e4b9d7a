#include <benchmark/benchmark.h>

#include <array>

#include "oracles.hpp"
#include "ttk/canonical.hpp"

using namespace ttk;

namespace {

// Smooth complete surface fan: start from P^2 and blow up adjacent pairs
// until there are m rays.
TopologicalFan blown_up_plane(std::size_t m) {
    std::vector<std::array<long, 2>> v = {{1, 0}, {0, 1}, {-1, -1}};
    for (std::size_t k = 0; v.size() < m; k = (k + 2) % v.size()) {
        const auto& a = v[k];
        const auto& b = v[(k + 1) % v.size()];
        v.insert(v.begin() + static_cast<long>(k + 1), {a[0] + b[0], a[1] + b[1]});
    }
    std::vector<RVector> rays;
    std::vector<Simplex> cones;
    for (std::size_t i = 0; i < v.size(); ++i) {
        rays.push_back({RingElem::diag(v[i][0]), RingElem::diag(v[i][1])});
        const int a = static_cast<int>(i + 1), b = static_cast<int>((i + 1) % v.size() + 1);
        cones.push_back({std::min(a, b), std::max(a, b)});
    }
    return {2, rays, cones};
}

void compat_args(benchmark::internal::Benchmark* b) {
    for (long m : {8, 32})
        for (long r : {2, 4}) b->Args({m, r});
}

template <CompatibilityResult (*Check)(const TopologicalFan&, const KlyachkoData&)>
void BM_compatibility(benchmark::State& state) {
    const auto fan = blown_up_plane(static_cast<std::size_t>(state.range(0)));
    std::mt19937 rng(20240601);
    const auto data = oracle::random_split_data(rng, fan, static_cast<std::size_t>(state.range(1)), Flavor::continuous).data;
    for (auto _ : state) benchmark::DoNotOptimize(Check(fan, data));
}

template <EulerReport (*Verify)(const TopologicalFan&)>
void BM_euler(benchmark::State& state) {
    const auto fan = blown_up_plane(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Verify(fan));
}

}  // namespace

BENCHMARK(BM_compatibility<check_compatibility_serial>)->Apply(compat_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_compatibility<check_compatibility>)->Apply(compat_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_euler<verify_euler_sequence_serial>)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_euler<verify_euler_sequence>)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
