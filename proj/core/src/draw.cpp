#include "ridgekit/draw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ridgekit {

void draw_line(GrayImage& img, int x0, int y0, int x1, int y1, std::uint8_t value) {
  const int dx = std::abs(x1 - x0);
  const int dy = -std::abs(y1 - y0);
  const int sx = x0 < x1 ? 1 : -1;
  const int sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  for (;;) {
    if (img.contains(x0, y0)) img.at(x0, y0) = value;
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

GrayImage render_binary(const BinaryImage& bin) {
  GrayImage out(bin.width(), bin.height(), 255);
  for (int y = 0; y < bin.height(); ++y) {
    for (int x = 0; x < bin.width(); ++x) {
      if (bin.at(x, y)) out.at(x, y) = 0;
    }
  }
  return out;
}

GrayImage render_orientation(const GrayImage& base, const OrientationField& field) {
  GrayImage out = base;
  for (auto& v : out.pixels()) v = static_cast<std::uint8_t>(128 + v / 2);
  const double half = 0.4 * field.block_size;
  for (int by = 0; by < field.blocks_y; ++by) {
    for (int bx = 0; bx < field.blocks_x; ++bx) {
      const double t = field.theta_at(bx, by);
      const double cx = (bx + 0.5) * field.block_size;
      const double cy = (by + 0.5) * field.block_size;
      const int dx = static_cast<int>(std::lround(half * std::cos(t)));
      const int dy = static_cast<int>(std::lround(half * std::sin(t)));
      draw_line(out, static_cast<int>(cx) - dx, static_cast<int>(cy) - dy,
                static_cast<int>(cx) + dx, static_cast<int>(cy) + dy, 0);
    }
  }
  return out;
}

GrayImage render_strength(const StrengthMap& strength, int block_size, int width, int height,
                          const CorePoint* core) {
  GrayImage out(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const int bx = std::min(x / block_size, strength.blocks_x - 1);
      const int by = std::min(y / block_size, strength.blocks_y - 1);
      out.at(x, y) = static_cast<std::uint8_t>(std::lround(255.0 * strength.at(bx, by)));
    }
  }
  if (core) {
    draw_line(out, core->x - 6, core->y, core->x + 6, core->y, 0);
    draw_line(out, core->x, core->y - 6, core->x, core->y + 6, 0);
  }
  return out;
}

GrayImage render_minutiae(const BinaryImage& skeleton, const MinutiaeSet& set) {
  GrayImage out(skeleton.width(), skeleton.height(), 255);
  for (int y = 0; y < skeleton.height(); ++y) {
    for (int x = 0; x < skeleton.width(); ++x) {
      if (skeleton.at(x, y)) out.at(x, y) = 160;
    }
  }
  for (const auto& m : set.items) {
    if (m.kind == MinutiaKind::Termination) {
      draw_line(out, m.x - 3, m.y - 3, m.x + 3, m.y - 3, 0);
      draw_line(out, m.x + 3, m.y - 3, m.x + 3, m.y + 3, 0);
      draw_line(out, m.x + 3, m.y + 3, m.x - 3, m.y + 3, 0);
      draw_line(out, m.x - 3, m.y + 3, m.x - 3, m.y - 3, 0);
    } else {
      draw_line(out, m.x - 3, m.y - 3, m.x + 3, m.y + 3, 0);
      draw_line(out, m.x - 3, m.y + 3, m.x + 3, m.y - 3, 0);
    }
  }
  const auto& c = set.core;
  for (int a = 0; a < 64; ++a) {
    const double t = a * 2.0 * 3.14159265358979323846 / 64.0;
    const int x = c.x + static_cast<int>(std::lround(6.0 * std::cos(t)));
    const int y = c.y + static_cast<int>(std::lround(6.0 * std::sin(t)));
    if (out.contains(x, y)) out.at(x, y) = 0;
  }
  return out;
}

}  // namespace ridgekit
