#include "bench_harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>

#include "saxshape/classifier.hpp"
#include "saxshape/error.hpp"
#include "saxshape/io.hpp"
#include "saxshape/raster.hpp"
#include "saxshape/sax.hpp"
#include "saxshape/shape.hpp"

namespace saxshape::cli {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kBenchAlphabet = 8;
constexpr std::size_t kSaxWordLength = 64;
constexpr std::size_t kClassifyWordLength = 32;

volatile std::size_t g_sink = 0;

std::int64_t time_ns(const std::function<void()>& fn) {
  const auto start = Clock::now();
  fn();
  const auto stop = Clock::now();
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  // steady_clock resolution floor.
  return std::max<std::int64_t>(ns, 1);
}

TimeSeries gaussian_series(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> samples(n);
  for (auto& x : samples) x = dist(rng);
  return TimeSeries(std::move(samples));
}

SaxWord random_word(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> letter(1, kBenchAlphabet);
  std::vector<Symbol> symbols(length);
  for (auto& s : symbols) s = static_cast<Symbol>(letter(rng));
  return SaxWord(std::move(symbols), kBenchAlphabet);
}

}  // namespace

double median(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return static_cast<double>(values[mid]);
  return (static_cast<double>(values[mid - 1]) + static_cast<double>(values[mid])) / 2.0;
}

BenchReport run_bench(std::string_view operation, std::size_t size, std::size_t reps,
                      std::uint64_t seed) {
  if (reps < kMinBenchReps) {
    throw Error(ErrorKind::kInvalidInput, "--reps must be at least " +
                                              std::to_string(kMinBenchReps) + ", got " +
                                              std::to_string(reps));
  }
  if (size < 1) throw Error(ErrorKind::kInvalidInput, "--size must be at least 1");

  BenchReport report;
  report.operation = std::string(operation);
  report.size = size;
  report.reps = reps;
  report.seed = seed;

  std::function<void()> body;
  // Optional per-stage timings, one value per entry of stage_names.
  std::vector<std::string> stage_names;
  std::function<std::vector<std::int64_t>()> staged;

  // Inputs live here so the lambdas can capture by reference.
  std::optional<TimeSeries> series;
  std::optional<SaxConfig> config;
  std::optional<BinaryImage> image;
  std::optional<WordSetDatabase> db;
  std::optional<SaxWord> candidate;

  if (operation == "sax") {
    series = gaussian_series(size, seed);
    config.emplace(kBenchAlphabet, std::min(kSaxWordLength, size));
    report.parameters = "alphabet=" + std::to_string(kBenchAlphabet) +
                        " word_length=" + std::to_string(config->word_length());
    body = [&] { g_sink = g_sink + sax_transform(*series, *config).size(); };

    stage_names = {"znormalize", "paa", "discretize"};
    staged = [&] {
      std::optional<Normalized> normalized;
      std::optional<TimeSeries> reduced;
      const auto t_norm = time_ns([&] { normalized.emplace(znormalize(*series)); });
      const auto t_paa =
          time_ns([&] { reduced.emplace(paa(normalized->series, config->word_length())); });
      const auto t_disc =
          time_ns([&] { g_sink = g_sink + discretize(*reduced, *config).size(); });
      return std::vector<std::int64_t>{t_norm, t_paa, t_disc};
    };
  } else if (operation == "signature") {
    if (size < 16) throw Error(ErrorKind::kInvalidInput, "signature bench needs --size >= 16");
    const double c = (static_cast<double>(size) - 1.0) / 2.0;
    std::mt19937_64 rng(seed);
    const double rotation = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    image = draw_regular_polygon(size, size, c, c, 0.4 * static_cast<double>(size), 8, rotation);
    report.parameters = "image=" + std::to_string(size) + "x" + std::to_string(size) +
                        " shape=octagon bins=" + std::to_string(kDefaultBins);
    body = [&] { g_sink = g_sink + signature(*image, kDefaultBins).samples.size(); };
  } else if (operation == "classify") {
    std::mt19937_64 rng(seed);
    db.emplace(kBenchAlphabet, kClassifyWordLength);
    const char* labels[] = {"circle", "octagon", "triangle"};
    for (std::size_t i = 0; db->word_count() < size; ++i) {
      const SaxWord word = random_word(rng, kClassifyWordLength);
      if (db->owner(word) == nullptr) db->add(labels[i % 3], word);
    }
    candidate = random_word(rng, kClassifyWordLength);
    report.parameters = "alphabet=" + std::to_string(kBenchAlphabet) +
                        " word_length=" + std::to_string(kClassifyWordLength) +
                        " words=" + std::to_string(size);
    body = [&] { g_sink = g_sink + classify(*candidate, *db).label.size(); };
  } else {
    throw Error(ErrorKind::kInvalidInput, "unknown bench operation '" + std::string(operation) +
                                              "' (expected sax, signature or classify)");
  }

  body();  // warm-up
  for (std::size_t r = 0; r < reps; ++r) report.durations_ns.push_back(time_ns(body));

  if (staged) {
    std::vector<std::vector<std::int64_t>> per_stage(stage_names.size());
    for (std::size_t r = 0; r < reps; ++r) {
      const auto timings = staged();
      for (std::size_t i = 0; i < timings.size(); ++i) per_stage[i].push_back(timings[i]);
    }
    for (std::size_t i = 0; i < stage_names.size(); ++i) {
      report.stage_median_ns.emplace_back(stage_names[i], median(std::move(per_stage[i])));
    }
  }

  const auto& d = report.durations_ns;
  report.min_ns = *std::min_element(d.begin(), d.end());
  report.max_ns = *std::max_element(d.begin(), d.end());
  report.median_ns = median(d);
  report.mean_ns = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
  return report;
}

void write_report(const BenchReport& report, std::ostream& out) {
  out << "operation\t" << report.operation << '\n'
      << "size\t" << report.size << '\n'
      << "reps\t" << report.reps << '\n'
      << "seed\t" << report.seed << '\n'
      << "parameters\t" << report.parameters << '\n';
  for (std::size_t i = 0; i < report.durations_ns.size(); ++i) {
    out << "duration_ns\t" << (i + 1) << '\t' << report.durations_ns[i] << '\n';
  }
  out << "min_ns\t" << report.min_ns << '\n'
      << "median_ns\t" << format_real(report.median_ns) << '\n'
      << "mean_ns\t" << format_real(report.mean_ns) << '\n';
  for (const auto& [name, ns] : report.stage_median_ns) {
    out << "stage_median_ns\t" << name << '\t' << format_real(ns) << '\n';
  }
}

}  // namespace saxshape::cli
