#include <benchmark/benchmark.h>

#include <random>

#include "trider/decomposition.hpp"
#include "trider/derivations.hpp"
#include "trider/extension.hpp"
#include "trider/linalg.hpp"
#include "trider/standard.hpp"

using namespace trider;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(num(rng), den(rng));
  return m;
}

TriangularAlgebra corpus_entry(std::size_t index) {
  return TriangularAlgebra::build(standard::seed_corpus().at(index).module);
}

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n + 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

// Level-n Lie system on the largest corpus algebra.
void BM_LieLevel(benchmark::State& state) {
  const auto T = corpus_entry(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto seq = sample_sequence(T.algebra(), DerivationKind::lie_higher, n, 0);
  const std::span<const Matrix> prefix(seq.levels.data(), n);
  for (auto _ : state) benchmark::DoNotOptimize(extend_level(T.algebra(), DerivationKind::lie_higher, prefix));
}
BENCHMARK(BM_LieLevel)->Arg(1)->Arg(2)->Arg(4);

void BM_Decompose(benchmark::State& state) {
  const auto T = corpus_entry(5);
  const auto ext = build_operator_extension(T);
  const auto L = sample_sequence(T.algebra(), DerivationKind::lie_higher, 4, 0);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(ext, L));
}
BENCHMARK(BM_Decompose);

void BM_Extension(benchmark::State& state) {
  const auto T = corpus_entry(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_operator_extension(T));
}
BENCHMARK(BM_Extension)->DenseRange(0, 5);

}  // namespace
BENCHMARK_MAIN();
