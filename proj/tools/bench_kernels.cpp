// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "fplab/codes.hpp"
#include "fplab/hermite.hpp"
#include "fplab/poly_io.hpp"
#include "fplab/random.hpp"
#include "fplab/tables.hpp"
#include "fplab/zeros.hpp"

using namespace fplab;

namespace {

const PrimeField F(31);

Grid square(std::size_t side) { return Grid::leading_block(F, {side, side}); }

Polynomial sample() { return parse_polynomial("x1^5*x2^3-7*x1^2*x2^4+x1*x2-3*x2^6+11", F, 2); }

void BM_zeros_parallel(benchmark::State& state) {
    auto grid = square(static_cast<std::size_t>(state.range(0)));
    IdealPresentation I({sample()});
    auto J = weighted_ball(WeightVector({1, 1}), 3);
    for (auto _ : state) benchmark::DoNotOptimize(zeros_with_multiplicity(I, J, grid));
}

void BM_zeros_serial(benchmark::State& state) {
    auto grid = square(static_cast<std::size_t>(state.range(0)));
    IdealPresentation I({sample()});
    auto J = weighted_ball(WeightVector({1, 1}), 3);
    for (auto _ : state) benchmark::DoNotOptimize(serial::zeros_with_multiplicity(I, J, grid));
}

void BM_multiplicity_sum_parallel(benchmark::State& state) {
    auto grid = square(static_cast<std::size_t>(state.range(0)));
    auto f = sample();
    for (auto _ : state) benchmark::DoNotOptimize(multiplicity_sum(f, WeightVector({2, 3}), grid));
}

void BM_multiplicity_sum_serial(benchmark::State& state) {
    auto grid = square(static_cast<std::size_t>(state.range(0)));
    auto f = sample();
    for (auto _ : state) benchmark::DoNotOptimize(serial::multiplicity_sum(f, WeightVector({2, 3}), grid));
}

void BM_table_parallel(benchmark::State& state) {
    const std::size_t s = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(comparison_table(WeightVector({3, 2}), 5, {s, s}));
}

void BM_table_serial(benchmark::State& state) {
    const std::size_t s = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(serial::comparison_table(WeightVector({3, 2}), 5, {s, s}));
}

struct EvInput {
    std::vector<Multiindex> monomials;
    std::vector<Point> points;
    std::vector<Multiindex> derivs;
};

EvInput ev_input(std::size_t side) {
    auto grid = square(side);
    auto J = weighted_ball(WeightVector({1, 1}), 2);
    return {grid_expand(J, grid.sizes()), grid.points(), J.graded_elements()};
}

void BM_evaluation_matrix_parallel(benchmark::State& state) {
    auto in = ev_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evaluation_matrix(in.monomials, in.points, in.derivs, F));
}

void BM_evaluation_matrix_serial(benchmark::State& state) {
    auto in = ev_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::evaluation_matrix(in.monomials, in.points, in.derivs, F));
}

EvaluationCode distance_code() {
    PrimeField F3(3);
    auto grid = Grid::leading_block(F3, {3, 3});
    auto J = weighted_ball(WeightVector({1, 1}), 2);
    return build_code(grid, {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {0, 3}}, J);
}

void BM_distance_parallel(benchmark::State& state) {
    auto code = distance_code();
    for (auto _ : state) benchmark::DoNotOptimize(code_distance(code, DistanceMode::brute_force));
}

void BM_distance_serial(benchmark::State& state) {
    auto code = distance_code();
    for (auto _ : state) benchmark::DoNotOptimize(serial::brute_force_distance(code));
}

}  // namespace

BENCHMARK(BM_zeros_parallel)->Arg(8)->Arg(16)->Arg(31);
BENCHMARK(BM_zeros_serial)->Arg(8)->Arg(16)->Arg(31);
BENCHMARK(BM_multiplicity_sum_parallel)->Arg(8)->Arg(16)->Arg(31);
BENCHMARK(BM_multiplicity_sum_serial)->Arg(8)->Arg(16)->Arg(31);
BENCHMARK(BM_table_parallel)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_table_serial)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_evaluation_matrix_parallel)->Arg(4)->Arg(8);
BENCHMARK(BM_evaluation_matrix_serial)->Arg(4)->Arg(8);
BENCHMARK(BM_distance_parallel);
BENCHMARK(BM_distance_serial);

BENCHMARK_MAIN();
