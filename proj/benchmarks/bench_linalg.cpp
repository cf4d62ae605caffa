#include <benchmark/benchmark.h>

#include <random>

#include "tauhh/sparse_matrix.hpp"

namespace {

using tauhh::Field;
using tauhh::RankStrategy;
using tauhh::SparseMatrix;

SparseMatrix random_matrix(const Field& f, std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<long> value(-5, 5);
  std::vector<tauhh::Triplet> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (keep(rng)) entries.push_back({i, j, f.from_int(value(rng))});
    }
  }
  return SparseMatrix::from_triplets(f, n, n, entries);
}

void BM_RankRationals(benchmark::State& state, RankStrategy strategy) {
  SparseMatrix m = random_matrix(Field::rationals(), state.range(0), 0.05, 7);
  for (auto _ : state) benchmark::DoNotOptimize(tauhh::rank(m, strategy));
}

void BM_RankPrime(benchmark::State& state) {
  SparseMatrix m = random_matrix(Field::prime(2147483629), state.range(0), 0.05, 7);
  for (auto _ : state) benchmark::DoNotOptimize(tauhh::rank(m));
}

BENCHMARK_CAPTURE(BM_RankRationals, fraction_free, RankStrategy::FractionFree)->Range(32, 128);
BENCHMARK_CAPTURE(BM_RankRationals, plain_fraction, RankStrategy::PlainFraction)->Range(32, 128);
BENCHMARK(BM_RankPrime)->Range(32, 256);

}  // namespace
