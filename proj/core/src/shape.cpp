#include "saxshape/shape.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "saxshape/error.hpp"

namespace saxshape {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Raw integer moments. Working from these keeps centroid-relative offsets
// exact under integer translation: N*x - Sx does not change when both the
// pixel and the shape move by the same amount.
struct Moments {
  std::int64_t count = 0;
  std::int64_t sum_x = 0;
  std::int64_t sum_y = 0;
};

Moments moments(const BinaryImage& image) {
  Moments m;
  for (std::size_t y = 0; y < image.height(); ++y) {
    for (std::size_t x = 0; x < image.width(); ++x) {
      if (image.at(x, y)) {
        ++m.count;
        m.sum_x += static_cast<std::int64_t>(x);
        m.sum_y += static_cast<std::int64_t>(y);
      }
    }
  }
  if (m.count == 0) throw Error(ErrorKind::kEmptyShape, "empty shape: no foreground pixels");
  return m;
}

bool on_border(const BinaryImage& image, std::int64_t x, std::int64_t y) {
  return !image.foreground(x - 1, y) || !image.foreground(x + 1, y) ||
         !image.foreground(x, y - 1) || !image.foreground(x, y + 1);
}

}  // namespace

BinaryImage::BinaryImage(std::size_t width, std::size_t height)
    : BinaryImage(width, height, std::vector<std::uint8_t>(width * height, 0)) {}

BinaryImage::BinaryImage(std::size_t width, std::size_t height,
                         std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) {
    throw Error(ErrorKind::kInvalidInput, "image dimensions must be at least 1x1");
  }
  if (pixels_.size() != width_ * height_) {
    throw Error(ErrorKind::kInvalidInput,
                "pixel buffer holds " + std::to_string(pixels_.size()) + " values, expected " +
                    std::to_string(width_ * height_));
  }
  for (auto& p : pixels_) p = p != 0 ? 1 : 0;
}

bool BinaryImage::foreground(std::int64_t x, std::int64_t y) const noexcept {
  if (x < 0 || y < 0) return false;
  if (static_cast<std::size_t>(x) >= width_ || static_cast<std::size_t>(y) >= height_) {
    return false;
  }
  return at(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
}

std::size_t BinaryImage::foreground_count() const noexcept {
  return static_cast<std::size_t>(std::count(pixels_.begin(), pixels_.end(), 1));
}

Centroid centroid(const BinaryImage& image) {
  const Moments m = moments(image);
  const auto n = static_cast<double>(m.count);
  return {static_cast<double>(m.sum_x) / n, static_cast<double>(m.sum_y) / n,
          static_cast<std::size_t>(m.count)};
}

std::vector<Pixel> extract_contour(const BinaryImage& image) {
  std::vector<Pixel> contour;
  for (std::size_t y = 0; y < image.height(); ++y) {
    for (std::size_t x = 0; x < image.width(); ++x) {
      if (!image.at(x, y)) continue;
      const auto px = static_cast<std::int64_t>(x);
      const auto py = static_cast<std::int64_t>(y);
      if (on_border(image, px, py)) contour.push_back({px, py});
    }
  }
  if (contour.empty()) throw Error(ErrorKind::kEmptyShape, "empty shape: no foreground pixels");
  return contour;
}

std::vector<ContourPoint> polar_contour(const BinaryImage& image) {
  const Moments m = moments(image);
  const auto n = static_cast<double>(m.count);
  const auto contour = extract_contour(image);

  std::vector<ContourPoint> points;
  points.reserve(contour.size());
  for (const Pixel& p : contour) {
    const auto num_x = m.count * p.x - m.sum_x;
    const auto num_y = m.count * p.y - m.sum_y;
    const double dx = static_cast<double>(num_x) / n;
    const double dy = static_cast<double>(num_y) / n;

    double angle = std::atan2(dy, dx);
    if (angle < 0.0) angle += kTwoPi;
    if (angle >= kTwoPi) angle = std::nextafter(kTwoPi, 0.0);
    points.push_back({p.x, p.y, angle, std::sqrt(dx * dx + dy * dy)});
  }
  return points;
}

ShapeSignature signature(const BinaryImage& image, std::size_t bins) {
  if (bins < 4) {
    throw Error(ErrorKind::kInvalidInput,
                "signature needs at least 4 bins, got " + std::to_string(bins));
  }
  const double width = kTwoPi / static_cast<double>(bins);

  std::vector<std::optional<double>> peak(bins);
  for (const ContourPoint& p : polar_contour(image)) {
    const auto bin = std::min(bins - 1, static_cast<std::size_t>(p.angle / width));
    if (!peak[bin] || p.distance > *peak[bin]) peak[bin] = p.distance;
  }

  std::vector<std::size_t> occupied;
  for (std::size_t i = 0; i < bins; ++i) {
    if (peak[i]) occupied.push_back(i);
  }
  if (occupied.size() < 3) {
    throw Error(ErrorKind::kDegenerateShape,
                "degenerate shape: contour covers only " + std::to_string(occupied.size()) +
                    " angular bin(s)");
  }

  std::vector<double> samples(bins);
  for (std::size_t k = 0; k < occupied.size(); ++k) {
    const std::size_t from = occupied[k];
    const std::size_t to = occupied[(k + 1) % occupied.size()];
    const std::size_t gap = (to + bins - from) % bins;
    const double lo = *peak[from];
    const double hi = *peak[to];
    samples[from] = lo;
    for (std::size_t step = 1; step < gap; ++step) {
      const double t = static_cast<double>(step) / static_cast<double>(gap);
      samples[(from + step) % bins] = lo + t * (hi - lo);
    }
  }
  return {TimeSeries(std::move(samples)), width};
}

BinaryImage rotate_image(const BinaryImage& image, double angle) {
  const std::size_t w = image.width();
  const std::size_t h = image.height();
  const double cx = (static_cast<double>(w) - 1.0) / 2.0;
  const double cy = (static_cast<double>(h) - 1.0) / 2.0;
  const double c = std::cos(angle);
  const double s = std::sin(angle);

  BinaryImage out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      // Inverse-map each output pixel back into the source.
      const double u = static_cast<double>(x) - cx;
      const double v = static_cast<double>(y) - cy;
      const double sx = c * u + s * v + cx;
      const double sy = -s * u + c * v + cy;
      const auto ix = static_cast<std::int64_t>(std::floor(sx + 0.5));
      const auto iy = static_cast<std::int64_t>(std::floor(sy + 0.5));
      if (image.foreground(ix, iy)) out.set(x, y, true);
    }
  }
  return out;
}

}  // namespace saxshape
