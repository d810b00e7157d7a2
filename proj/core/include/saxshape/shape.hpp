#pragma once

// Binary shape images and their centroid-distance signatures.

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "saxshape/sax.hpp"

namespace saxshape {

inline constexpr std::size_t kDefaultBins = 360;

struct Pixel {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
  friend auto operator<=>(const Pixel&, const Pixel&) = default;
};

/// Row-major W x H bitmap. `true` is foreground (the shape).
class BinaryImage {
 public:
  /// All-background image. Throws Error(kInvalidInput) on a zero dimension.
  BinaryImage(std::size_t width, std::size_t height);
  /// Throws Error(kInvalidInput) unless pixels.size() == width * height.
  BinaryImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  bool at(std::size_t x, std::size_t y) const noexcept { return pixels_[y * width_ + x] != 0; }
  void set(std::size_t x, std::size_t y, bool foreground) noexcept {
    pixels_[y * width_ + x] = foreground ? 1 : 0;
  }
  /// Out-of-frame coordinates read as background.
  bool foreground(std::int64_t x, std::int64_t y) const noexcept;

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::size_t foreground_count() const noexcept;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

/// Mean foreground pixel coordinates.
struct Centroid {
  double x = 0.0;
  double y = 0.0;
  std::size_t pixel_count = 0;
};

/// A contour pixel in polar form about the centroid.
struct ContourPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  /// atan2(y - yc, x - xc) folded into [0, 2pi).
  double angle = 0.0;
  double distance = 0.0;
};

/// Centroid distance sampled over K uniform angular bins.
struct ShapeSignature {
  TimeSeries samples;
  double bin_width = 2.0 * std::numbers::pi / static_cast<double>(kDefaultBins);
};

/// Throws Error(kEmptyShape) when no pixel is foreground.
Centroid centroid(const BinaryImage& image);

/// Foreground pixels with at least one background or out-of-frame
/// 4-neighbour, in row-major order. Throws Error(kEmptyShape).
std::vector<Pixel> extract_contour(const BinaryImage& image);

/// Contour pixels with their angle and distance about the centroid.
std::vector<ContourPoint> polar_contour(const BinaryImage& image);

/// Centroid-distance signature of length `bins`. Each bin holds the largest
/// contour distance whose angle falls inside it; empty bins are filled by
/// circular linear interpolation between the nearest occupied bins.
///
/// Throws Error(kInvalidInput) for bins < 4, Error(kEmptyShape) for a blank
/// image and Error(kDegenerateShape) when fewer than three bins are occupied.
ShapeSignature signature(const BinaryImage& image, std::size_t bins = kDefaultBins);

/// In-plane rotation about the image centre ((W-1)/2, (H-1)/2) with
/// nearest-neighbour sampling. Same dimensions; content rotated out of frame
/// is dropped and uncovered regions are background.
BinaryImage rotate_image(const BinaryImage& image, double angle);

}  // namespace saxshape
