#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "saxshape/classifier.hpp"
#include "saxshape/raster.hpp"
#include "saxshape/sax.hpp"
#include "saxshape/shape.hpp"

namespace {

using namespace saxshape;

TimeSeries gaussian_series(std::size_t n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  std::vector<double> v(n);
  for (auto& x : v) x = normal(rng);
  return TimeSeries(std::move(v));
}

void BM_Znormalize(benchmark::State& state) {
  const auto series = gaussian_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(znormalize(series));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Znormalize)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_Paa(benchmark::State& state) {
  const auto series = gaussian_series(static_cast<std::size_t>(state.range(0)));
  const auto w = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(paa(series, w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
// 1024 divides evenly by 64; 1000 takes the fractional-overlap path.
BENCHMARK(BM_Paa)->Args({1024, 64})->Args({1000, 64})->Args({1000000, 64});

void BM_SaxTransform(benchmark::State& state) {
  const auto series = gaussian_series(static_cast<std::size_t>(state.range(0)));
  const SaxConfig config(8, 64);
  for (auto _ : state) benchmark::DoNotOptimize(sax_transform(series, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SaxTransform)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMicrosecond);

void BM_WordDistance(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> sym(1, 8);
  std::vector<Symbol> a(len), b(len);
  for (auto& x : a) x = static_cast<Symbol>(sym(rng));
  for (auto& x : b) x = static_cast<Symbol>(sym(rng));
  const SaxWord lhs(a, 8), rhs(b, 8);
  for (auto _ : state) benchmark::DoNotOptimize(word_distance(lhs, rhs));
}
BENCHMARK(BM_WordDistance)->Arg(8)->Arg(64)->Arg(512);

void BM_Signature(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const double c = static_cast<double>(side - 1) / 2;
  const auto img = draw_regular_polygon(side, side, c, c, 0.4 * side, 8, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(signature(img));
}
BENCHMARK(BM_Signature)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

void BM_Classify(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> sym(1, 8);
  const char* labels[] = {"circle", "octagon", "triangle"};
  WordSetDatabase db(8, 32);
  const auto random_word = [&] {
    std::vector<Symbol> s(32);
    for (auto& x : s) x = static_cast<Symbol>(sym(rng));
    return SaxWord(s, 8);
  };
  for (std::size_t i = 0; i < count; ++i) {
    const auto w = random_word();
    if (db.owner(w) == nullptr) db.add(labels[i % 3], w);
  }
  const auto candidate = random_word();
  for (auto _ : state) benchmark::DoNotOptimize(classify(candidate, db));
}
BENCHMARK(BM_Classify)->RangeMultiplier(10)->Range(100, 100000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
