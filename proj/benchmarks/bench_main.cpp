#include <benchmark/benchmark.h>

#include <random>

#include "padicops/ktheory.hpp"
#include "padicops/operator.hpp"
#include "padicops/scalar.hpp"

using namespace padic;

static void BM_ScalarMul(benchmark::State& state) {
  auto a = PadicScalar::from_integer(123456789, 3, 64);
  auto b = PadicScalar::from_integer(987654321, 3, 64);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMul);

static void BM_HenselSqrt(benchmark::State& state) {
  auto c = PadicScalar::from_integer(2, 7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hensel_sqrt(c));
}
BENCHMARK(BM_HenselSqrt)->Arg(32)->Arg(128)->Arg(512);

static OperatorMatrix random_matrix(size_t n, long p, int prec, uint64_t seed) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  OperatorMatrix m(Window(labels), p, prec);
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m.set(i, j,
            PadicScalar::from_integer(static_cast<long>(rng() % 1000), p, prec));
  return m;
}

static void BM_Compose(benchmark::State& state) {
  size_t n = static_cast<size_t>(state.range(0));
  auto a = random_matrix(n, 5, 32, 1);
  auto b = random_matrix(n, 5, 32, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose)->Arg(8)->Arg(32)->Arg(64);

static void BM_SmithNormalForm(benchmark::State& state) {
  size_t n = static_cast<size_t>(state.range(0));
  IntMatrix m(n, n);
  std::mt19937_64 rng(3);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m.at(i, j) = static_cast<long>(rng() % 41) - 20;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_MahlerCoefficients(benchmark::State& state) {
  long p = 3;
  int prec = 48;
  std::vector<PadicScalar> values;
  std::mt19937_64 rng(4);
  for (long i = 0; i < state.range(0); ++i)
    values.push_back(
        PadicScalar::from_integer(static_cast<long>(rng() % 100000), p, prec));
  for (auto _ : state) benchmark::DoNotOptimize(mahler_coefficients(values));
}
BENCHMARK(BM_MahlerCoefficients)->Arg(16)->Arg(64);
