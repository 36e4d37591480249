#include <benchmark/benchmark.h>

#include "hartoric/divisor.hpp"
#include "hartoric/fan.hpp"
#include "hartoric/hartogs.hpp"
#include "hartoric/intersection_ring.hpp"
#include "hartoric/laurent.hpp"
#include "hartoric/polytope.hpp"
#include "hartoric/sheaf_cohomology.hpp"

namespace {

using namespace hartoric;

void bm_build_ring_p2(benchmark::State& state) {
    const FanPtr fan = share(projective_space(2));
    for (auto _ : state) {
        GradedRing ring = build_ring(fan);
        benchmark::DoNotOptimize(ring);
    }
}
BENCHMARK(bm_build_ring_p2);

void bm_build_ring_p4(benchmark::State& state) {
    const FanPtr fan = share(projective_space(4));
    for (auto _ : state) {
        GradedRing ring = build_ring(fan);
        benchmark::DoNotOptimize(ring);
    }
}
BENCHMARK(bm_build_ring_p4);

void bm_mixed_volume_surface(benchmark::State& state) {
    // Mixed volume of two hexagons with vertices of size ~state.range(0).
    const Int k(state.range(0));
    std::vector<MVector> pts;
    const int raw[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    for (const auto& p : raw) {
        const Int x = Int(p[0]) * k;
        const Int y = Int(p[1]) * k;
        pts.push_back(MVector{x, y});
    }
    const LatticePolytope hexagon = LatticePolytope::hull(pts);
    for (auto _ : state) {
        Rat v = mixed_volume({hexagon, hexagon});
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_mixed_volume_surface)->Arg(1)->Arg(8)->Arg(64);

void bm_cohomology_table(benchmark::State& state) {
    const FanPtr fan = share(hirzebruch(Int(2)));
    const GradedRing ring = build_ring(fan);
    const Int a(state.range(0));
    const TDivisor d = TDivisor::make(fan, {a, a, a, a});
    for (auto _ : state) {
        CohomologyTable t = cohomology_table(ring, d);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(bm_cohomology_table)->Arg(1)->Arg(4)->Arg(8);

void bm_decide_polynomial(benchmark::State& state) {
    const FanPtr fan = share(hirzebruch(Int(3)));
    const LaurentSupport s = parse_polynomial("1 + z1 + z2 + z1^2*z2^3 + z1^-1*z2^-2", 2);
    for (auto _ : state) {
        HartogsReport r = decide(fan, s);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_decide_polynomial);

}  // namespace

BENCHMARK_MAIN();
