#include <random>

#include <benchmark/benchmark.h>

#include "basilica/algebra.hpp"
#include "basilica/parse.hpp"
#include "basilica/spectral.hpp"
#include "basilica/wreath.hpp"

namespace {

using namespace basilica;

void BM_IsTrivialRandom(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(algebra::random_word(rng, state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_trivial(words[i++ % words.size()]));
}
BENCHMARK(BM_IsTrivialRandom)->RangeMultiplier(4)->Range(4, 1024);

// Relators [[a^p,b^p],b^p] have length 8p and are trivial, so every section
// is visited.
void BM_IsTrivialRelator(benchmark::State& state) {
  const Word a = Word::a(state.range(0)), b = Word::b(state.range(0));
  const Word r = commutator(commutator(a, b), b);
  for (auto _ : state) benchmark::DoNotOptimize(is_trivial(r));
}
BENCHMARK(BM_IsTrivialRelator)->RangeMultiplier(4)->Range(1, 1024);

void BM_LevelPermutation(benchmark::State& state) {
  const Word w = parse_word("[a,b]^a b^3 a^-2");
  for (auto _ : state)
    benchmark::DoNotOptimize(level_permutation(w, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_LevelPermutation)->DenseRange(8, 20, 4);

void BM_EigenSpectrum(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(spectral::eigen_spectrum(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EigenSpectrum)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_QRoots(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(spectral::q_root_spectrum(static_cast<unsigned>(state.range(0)), 100000));
}
BENCHMARK(BM_QRoots)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
