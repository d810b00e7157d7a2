#include "saxshape/raster.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "saxshape/error.hpp"

namespace saxshape {

BinaryImage draw_disk(std::size_t width, std::size_t height, double cx, double cy,
                      double radius) {
  return draw_ellipse(width, height, cx, cy, radius, radius);
}

BinaryImage draw_ellipse(std::size_t width, std::size_t height, double cx, double cy,
                         double radius_x, double radius_y) {
  BinaryImage image(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double u = (static_cast<double>(x) - cx) / radius_x;
      const double v = (static_cast<double>(y) - cy) / radius_y;
      if (u * u + v * v <= 1.0) image.set(x, y, true);
    }
  }
  return image;
}

BinaryImage draw_regular_polygon(std::size_t width, std::size_t height, double cx, double cy,
                                 double circumradius, int sides, double rotation) {
  if (sides < 3) {
    throw Error(ErrorKind::kInvalidInput, "polygon needs at least 3 sides");
  }
  struct Vertex {
    double x;
    double y;
  };
  std::vector<Vertex> vertices;
  for (int k = 0; k < sides; ++k) {
    const double a = rotation + 2.0 * std::numbers::pi * k / sides;
    vertices.push_back({cx + circumradius * std::cos(a), cy + circumradius * std::sin(a)});
  }

  // Vertices run counter-clockwise in (x, y); inside means left of every edge.
  BinaryImage image(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const auto px = static_cast<double>(x);
      const auto py = static_cast<double>(y);
      bool inside = true;
      for (int k = 0; k < sides && inside; ++k) {
        const Vertex& a = vertices[k];
        const Vertex& b = vertices[(k + 1) % sides];
        const double cross = (b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x);
        inside = cross >= 0.0;
      }
      if (inside) image.set(x, y, true);
    }
  }
  return image;
}

BinaryImage translate_image(const BinaryImage& image, std::int64_t dx, std::int64_t dy) {
  BinaryImage out(image.width(), image.height());
  for (std::size_t y = 0; y < image.height(); ++y) {
    for (std::size_t x = 0; x < image.width(); ++x) {
      const auto sx = static_cast<std::int64_t>(x) - dx;
      const auto sy = static_cast<std::int64_t>(y) - dy;
      if (image.foreground(sx, sy)) out.set(x, y, true);
    }
  }
  return out;
}

}  // namespace saxshape
