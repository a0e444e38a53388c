// Serial reference against OpenMP kernels, on inputs of growing size.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "denv/kernels.hpp"

using namespace denv;
using namespace denv::kernels;

namespace {

// Rationals with numerators and denominators of a few dozen bits.
std::vector<Scalar> random_coeffs(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-(1L << 40), 1L << 40), den(1, 1L << 20);
    std::vector<Scalar> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(Scalar::ratio(num(rng), den(rng)));
    return c;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Matrix m(rows, cols);
    m.data = random_coeffs(rows * cols, seed);
    return m;
}

template <auto Mul>
void bm_poly_mul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
}

template <auto Echelon>
void bm_echelon(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix m = random_matrix(n, n + 1, 3);
    for (auto _ : state) {
        Matrix work = m;
        benchmark::DoNotOptimize(Echelon(work));
    }
}

}  // namespace

BENCHMARK(bm_poly_mul<serial::poly_mul>)->Name("poly_mul/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(bm_poly_mul<parallel::poly_mul>)->Name("poly_mul/parallel")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(bm_echelon<serial::fraction_free_echelon>)->Name("echelon/serial")->DenseRange(8, 32, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_echelon<parallel::fraction_free_echelon>)->Name("echelon/parallel")->DenseRange(8, 32, 12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
