#pragma once

// Synthetic shape rasterizers used for fixtures, benchmarks and the CLI.
// Pixels are sampled at their centres.

#include <cstddef>
#include <cstdint>

#include "saxshape/shape.hpp"

namespace saxshape {

/// Foreground where (x - cx)^2 + (y - cy)^2 <= radius^2.
BinaryImage draw_disk(std::size_t width, std::size_t height, double cx, double cy,
                      double radius);

/// Filled regular polygon with `sides` vertices on a circle of
/// `circumradius`; the first vertex sits at angle `rotation` (radians,
/// measured in image coordinates, y down). Throws Error(kInvalidInput) for
/// fewer than 3 sides.
BinaryImage draw_regular_polygon(std::size_t width, std::size_t height, double cx, double cy,
                                 double circumradius, int sides, double rotation = 0.0);

/// Filled axis-aligned ellipse.
BinaryImage draw_ellipse(std::size_t width, std::size_t height, double cx, double cy,
                         double radius_x, double radius_y);

/// Shifts content by (dx, dy); pixels leaving the frame are dropped.
BinaryImage translate_image(const BinaryImage& image, std::int64_t dx, std::int64_t dy);

}  // namespace saxshape
