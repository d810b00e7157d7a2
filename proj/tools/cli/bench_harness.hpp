#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace saxshape::cli {

inline constexpr std::uint64_t kDefaultBenchSeed = 20240501;
inline constexpr std::size_t kMinBenchReps = 3;

/// Wall-clock timings of one operation over `reps` sequential repetitions
/// (after one untimed warm-up).
struct BenchReport {
  std::string operation;
  std::size_t size = 0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  std::string parameters;
  std::vector<std::int64_t> durations_ns;
  std::int64_t min_ns = 0;
  std::int64_t max_ns = 0;
  double median_ns = 0.0;
  double mean_ns = 0.0;
  /// Per-stage median durations, when the operation has stages.
  std::vector<std::pair<std::string, double>> stage_median_ns;
};

/// Runs `operation` ("sax", "signature" or "classify") on seeded synthetic
/// input of the given size. Throws Error(kInvalidInput) on an unknown
/// operation, reps < 3 or a size the operation cannot use.
BenchReport run_bench(std::string_view operation, std::size_t size, std::size_t reps,
                      std::uint64_t seed = kDefaultBenchSeed);

/// Median of a nonempty sample (mean of the middle pair for even counts).
double median(std::vector<std::int64_t> values);

/// Tab-separated, one key per line:
///   operation, size, reps, seed, parameters, duration_ns <i> <ns>,
///   min_ns, median_ns, mean_ns, stage_median_ns <stage> <ns>
void write_report(const BenchReport& report, std::ostream& out);

}  // namespace saxshape::cli
