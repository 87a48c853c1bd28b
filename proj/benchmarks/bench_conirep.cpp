#include <random>

#include <benchmark/benchmark.h>

#include "conirep/evaluator.hpp"
#include "conirep/nnls.hpp"
#include "conirep/oracle.hpp"

using namespace conirep;

namespace {

Matrix random_matrix(unsigned seed, Eigen::Index m, Eigen::Index n) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    Matrix a(m, n);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = u(rng);
    return a;
}

StateMatrix simplicial3() {
    Matrix a(3, 3);
    a << 2, 3, 0, 3, 1, 0, 1, 1, 1;
    return StateMatrix(a);
}

void BM_EvaluateSimplicial3(benchmark::State& state) {
    const StateMatrix c = simplicial3();
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(c).ir);
}
BENCHMARK(BM_EvaluateSimplicial3);

// analytical pipeline cost as the state count grows
void BM_EvaluateRandom(benchmark::State& state) {
    const auto m = static_cast<Eigen::Index>(state.range(0));
    const StateMatrix c(random_matrix(17, m, m + 2));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(c).ir);
}
BENCHMARK(BM_EvaluateRandom)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Nnls(benchmark::State& state) {
    const auto n = static_cast<Eigen::Index>(state.range(0));
    const Matrix a = random_matrix(3, 5, n);
    const Vector b = Vector::Constant(5, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(nnls(a, b).residual_sq);
}
BENCHMARK(BM_Nnls)->Arg(3)->Arg(5)->Arg(10);

void BM_IrNum(benchmark::State& state) {
    const StateMatrix c = simplicial3();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ir_num(c, n).ir_num);
}
BENCHMARK(BM_IrNum)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
