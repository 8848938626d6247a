#include <benchmark/benchmark.h>

#include <symdyn/language.hpp>
#include <symdyn/perturbation.hpp>
#include <symdyn/polynomial.hpp>
#include <symdyn/word.hpp>

using namespace symdyn;

namespace {

Word periodic_word(std::size_t n) {
  Word w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(i % 3 == 2 ? 0 : 1);
  return w;
}

void BM_Correlation(benchmark::State& state) {
  const Word w = periodic_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(correlate(w, w));
}
BENCHMARK(BM_Correlation)->RangeMultiplier(4)->Range(8, 512);

void BM_SeriesExpand(benchmark::State& state) {
  EngineOptions opt;
  opt.oracle = false;
  const auto gf = *full_shift_gf(2, ForbiddenSet({Word::parse("11"), Word::parse("0100")}), opt).generating_function;
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_expand(gf, k));
}
BENCHMARK(BM_SeriesExpand)->RangeMultiplier(2)->Range(16, 256);

void BM_CountWords(benchmark::State& state) {
  const auto g = LabeledGraph::full_shift(3);
  const std::vector<Word> k = {Word::parse("012"), Word::parse("1100"), Word::parse("22")};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_words(g, k, n));
}
BENCHMARK(BM_CountWords)->RangeMultiplier(2)->Range(8, 128);

void BM_SftMultiGf(benchmark::State& state) {
  EngineOptions opt;
  opt.oracle = false;
  const DirectedGraph a({{1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
  // Edge walks 0->0->1->2, 1->1->2->2 and 2->0->0->1.
  const std::vector<Word> walks = {Word({0, 1, 3}), Word({2, 3, 6}), Word({4, 0, 1})};
  const ForbiddenSet k(std::vector<Word>(walks.begin(), walks.begin() + state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sft_multi_gf(a, k, opt));
}
BENCHMARK(BM_SftMultiGf)->DenseRange(1, 3);

}  // namespace
BENCHMARK_MAIN();
