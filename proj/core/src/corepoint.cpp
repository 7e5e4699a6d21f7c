#include "ridgekit/corepoint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ridgekit/config.hpp"
#include "ridgekit/error.hpp"

namespace ridgekit {

RoiMask::RoiMask(int width, int height, CorePoint center, int radius)
    : width_(width), height_(height), center_(center), radius_(radius) {
  if (radius <= 0) throw Error(ErrorCode::BadRadius, "ROI radius must be > 0");
  clipped_ = center.x - radius < 0 || center.y - radius < 0 || center.x + radius >= width ||
             center.y + radius >= height;
}

bool RoiMask::inside(int x, int y) const noexcept {
  if (x < 0 || y < 0 || x >= width_ || y >= height_) return false;
  const long dx = x - center_.x;
  const long dy = y - center_.y;
  return dx * dx + dy * dy <= static_cast<long>(radius_) * radius_;
}

std::size_t RoiMask::inside_count() const noexcept {
  std::size_t n = 0;
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) n += inside(x, y) ? 1 : 0;
  }
  return n;
}

StrengthMap curvature_strength(const OrientationField& field) {
  if (field.blocks_x < 3 || field.blocks_y < 3) {
    throw Error(ErrorCode::FieldTooSmall, "orientation field must span at least 3x3 blocks");
  }
  StrengthMap map;
  map.blocks_x = field.blocks_x;
  map.blocks_y = field.blocks_y;
  map.values.assign(field.theta.size(), 0.0);
  for (int by = 1; by + 1 < field.blocks_y; ++by) {
    for (int bx = 1; bx + 1 < field.blocks_x; ++bx) {
      double c = 0.0;
      double s = 0.0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const double t = field.theta_at(bx + dx, by + dy);
          c += std::cos(2.0 * t);
          s += std::sin(2.0 * t);
        }
      }
      map.values[field.index(bx, by)] = std::clamp(1.0 - std::hypot(c, s) / 9.0, 0.0, 1.0);
    }
  }
  return map;
}

std::vector<bool> foreground_blocks(const GrayImage& img, int block_size, double ratio) {
  const int bxn = (img.width() + block_size - 1) / block_size;
  const int byn = (img.height() + block_size - 1) / block_size;
  const auto n = static_cast<std::size_t>(bxn) * byn;
  std::vector<double> sum(n, 0.0);
  std::vector<double> sum2(n, 0.0);
  std::vector<double> count(n, 0.0);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const auto i = static_cast<std::size_t>(y / block_size) * bxn + x / block_size;
      const double v = img.at(x, y);
      sum[i] += v;
      sum2[i] += v * v;
      count[i] += 1.0;
    }
  }
  std::vector<double> var(n);
  double mean_var = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double m = sum[i] / count[i];
    var[i] = std::max(0.0, sum2[i] / count[i] - m * m);
    mean_var += var[i];
  }
  mean_var /= static_cast<double>(n);
  std::vector<bool> fg(n);
  for (std::size_t i = 0; i < n; ++i) fg[i] = var[i] >= ratio * mean_var;
  return fg;
}

namespace {

// Vertex offset of a parabola through (-1, lo), (0, mid), (1, hi).
double parabolic_offset(double lo, double mid, double hi) {
  const double curvature = lo - 2.0 * mid + hi;
  if (curvature >= 0.0) return 0.0;
  return std::clamp(0.5 * (lo - hi) / curvature, -0.5, 0.5);
}

}  // namespace

CorePoint locate_core(const StrengthMap& strength, const std::vector<bool>& foreground,
                      int block_size, int width, int height, double min_strength) {
  const int bxn = strength.blocks_x;
  const int byn = strength.blocks_y;
  auto is_fg = [&](int bx, int by) {
    return foreground.empty() || foreground[static_cast<std::size_t>(by) * bxn + bx];
  };

  int best_x = -1;
  int best_y = -1;
  double best = -1.0;
  for (int by = 1; by + 1 < byn; ++by) {
    for (int bx = 1; bx + 1 < bxn; ++bx) {
      bool candidate = true;
      for (int dy = -1; dy <= 1 && candidate; ++dy) {
        for (int dx = -1; dx <= 1 && candidate; ++dx) candidate = is_fg(bx + dx, by + dy);
      }
      if (!candidate) continue;
      // Strict comparison in raster order keeps the uppermost, then leftmost, peak.
      if (strength.at(bx, by) > best) {
        best = strength.at(bx, by);
        best_x = bx;
        best_y = by;
      }
    }
  }
  if (best_x < 0 || best < min_strength) {
    throw Error(ErrorCode::NoCoreFound,
                "peak strength " + std::to_string(std::max(best, 0.0)) + " below " +
                    std::to_string(min_strength));
  }

  const double ox = parabolic_offset(strength.at(best_x - 1, best_y), best,
                                     strength.at(best_x + 1, best_y));
  const double oy = parabolic_offset(strength.at(best_x, best_y - 1), best,
                                     strength.at(best_x, best_y + 1));
  CorePoint core;
  core.x = std::clamp(static_cast<int>(std::lround((best_x + 0.5 + ox) * block_size)), 0,
                      width - 1);
  core.y = std::clamp(static_cast<int>(std::lround((best_y + 0.5 + oy) * block_size)), 0,
                      height - 1);
  core.strength = best;
  return core;
}

BinaryImage foreground_pixels(const std::vector<bool>& blocks, int block_size, int width,
                              int height) {
  const int bxn = (width + block_size - 1) / block_size;
  BinaryImage out(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      out.set(x, y, blocks[static_cast<std::size_t>(y / block_size) * bxn + x / block_size]);
    }
  }
  return out;
}

CoreDetection analyze_orientation(const GrayImage& img, const PipelineConfig& cfg) {
  return analyze_orientation(img, foreground_blocks(img, cfg.block_size, cfg.foreground_ratio),
                             cfg);
}

CoreDetection analyze_orientation(const GrayImage& img, std::vector<bool> foreground,
                                  const PipelineConfig& cfg) {
  CoreDetection d;
  d.gradients = block_gradients(img, cfg.block_size);
  d.field = ridge_orientation(d.gradients);
  d.smoothed = smooth_orientation(d.field, cfg.smoothing_sigma);
  d.strength = curvature_strength(d.smoothed);
  d.foreground = std::move(foreground);
  return d;
}

CorePoint detect_core(const GrayImage& img, const PipelineConfig& cfg) {
  const auto d = analyze_orientation(img, cfg);
  return locate_core(d.strength, d.foreground, cfg.block_size, img.width(), img.height(),
                     cfg.core_threshold);
}

RoiImage extract_roi(const GrayImage& img, const CorePoint& core, int radius) {
  RoiMask mask(img.width(), img.height(), core, radius);
  GrayImage out = img;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (!mask.inside(x, y)) out.at(x, y) = 255;
    }
  }
  return {std::move(out), std::move(mask)};
}

}  // namespace ridgekit
