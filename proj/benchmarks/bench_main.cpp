#include <benchmark/benchmark.h>

#include <random>

#include "matwork/cochain.hpp"
#include "matwork/gradedalg.hpp"
#include "matwork/matching.hpp"
#include "matwork/mobius.hpp"

using namespace matwork;

namespace {

ExactMatrix random_square(std::size_t n, const FieldSpec& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, field.canonical(mpq_class(static_cast<long>(rng() % 19) - 9,
                                                  1 + static_cast<long>(rng() % 4))));
    return m;
}

void bm_rref_rationals(benchmark::State& state) {
    auto m = random_square(static_cast<std::size_t>(state.range(0)),
                           FieldSpec::rationals(), 7);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref_rationals)->Arg(8)->Arg(16)->Arg(32);

void bm_rref_prime_field(benchmark::State& state) {
    auto m = random_square(static_cast<std::size_t>(state.range(0)),
                           FieldSpec::prime_field(65537), 7);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref_prime_field)->Arg(8)->Arg(32)->Arg(64);

void bm_det_elimination(benchmark::State& state) {
    auto m = random_square(static_cast<std::size_t>(state.range(0)),
                           FieldSpec::rationals(), 11);
    for (auto _ : state) benchmark::DoNotOptimize(det_elimination(m));
}
BENCHMARK(bm_det_elimination)->Arg(6)->Arg(12)->Arg(24);

void bm_flat_enumeration_uniform(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Matroid m = Matroid::uniform(4, n);  // fresh matroid defeats the cache
        benchmark::DoNotOptimize(m.flats().counts());
    }
}
BENCHMARK(bm_flat_enumeration_uniform)->Arg(8)->Arg(10)->Arg(12);

void bm_omega_power_fano(benchmark::State& state) {
    auto a = MobiusAlgebra::build(Matroid::named("fano"));
    for (auto _ : state) benchmark::DoNotOptimize(a.omega_power_matrix(1, 2));
}
BENCHMARK(bm_omega_power_fano);

void bm_matching_uniform(benchmark::State& state) {
    Matroid m = Matroid::uniform(6, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(extract_matching(m, 2, 3));
}
BENCHMARK(bm_matching_uniform)->Arg(8)->Arg(10);

void bm_graded_dims_won(benchmark::State& state) {
    MonomialAlgebraSpec spec({4, 4, 4, 4, 4, 4}, {1, 5, 10, 50, 100, 500});
    for (auto _ : state) benchmark::DoNotOptimize(graded_dims(spec));
}
BENCHMARK(bm_graded_dims_won);

void bm_torus_cohomology(benchmark::State& state) {
    auto x = torus_grid(static_cast<int>(state.range(0)));
    const FieldSpec f2 = FieldSpec::prime_field(2);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(x, f2));
}
BENCHMARK(bm_torus_cohomology)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
