#pragma once

// Shape fixtures and test-only helpers shared by the unit and acceptance
// suites.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "saxshape/raster.hpp"
#include "saxshape/sax.hpp"
#include "saxshape/shape.hpp"

namespace saxshape::testing {

inline constexpr std::size_t kFrame = 201;
inline constexpr double kCentre = 100.0;

inline BinaryImage circle_fixture() { return draw_disk(kFrame, kFrame, kCentre, kCentre, 80.0); }
inline BinaryImage triangle_fixture() {
  return draw_regular_polygon(kFrame, kFrame, kCentre, kCentre, 84.0, 3, 0.1);
}
inline BinaryImage octagon_fixture() {
  return draw_regular_polygon(kFrame, kFrame, kCentre, kCentre, 84.0, 8, 0.05);
}

/// Circular moving average over `window` bins (odd).
inline std::vector<double> smooth(const TimeSeries& s, std::size_t window = 5) {
  const std::size_t k = s.size();
  const std::size_t half = window / 2;
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    double sum = 0.0;
    for (std::size_t d = 0; d < window; ++d) sum += s[(i + k + d - half) % k];
    out[i] = sum / static_cast<double>(window);
  }
  return out;
}

/// Indices of circular local maxima of the smoothed signal that lie above
/// its mean. A plateau counts once (strictly greater than the left
/// neighbour, at least the right one).
inline std::vector<std::size_t> smoothed_peaks(const TimeSeries& s, std::size_t window = 5) {
  const auto sm = smooth(s, window);
  double mean = 0.0;
  for (double v : sm) mean += v;
  mean /= static_cast<double>(sm.size());
  std::vector<std::size_t> peaks;
  const std::size_t k = sm.size();
  for (std::size_t i = 0; i < k; ++i) {
    const double prev = sm[(i + k - 1) % k];
    const double next = sm[(i + 1) % k];
    if (sm[i] > mean && sm[i] > prev && sm[i] >= next) peaks.push_back(i);
  }
  return peaks;
}

inline std::vector<double> random_samples(std::mt19937_64& rng, std::size_t n,
                                          double lo = -100.0, double hi = 100.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

inline BinaryImage random_image(std::mt19937_64& rng, std::size_t max_side = 12,
                                double density = 0.5) {
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  std::bernoulli_distribution on(density);
  BinaryImage img(side(rng), side(rng));
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) img.set(x, y, on(rng));
  }
  return img;
}

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

/// Standard normal quantile by bisection on the CDF.
inline double normal_quantile(double p) {
  double lo = -10.0;
  double hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace saxshape::testing
