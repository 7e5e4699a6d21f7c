#pragma once

#include <vector>

#include "ridgekit/image.hpp"
#include "ridgekit/orientation.hpp"

namespace ridgekit {

struct PipelineConfig;

struct CorePoint {
  int x = 0;
  int y = 0;
  double strength = 0.0;
};

struct StrengthMap {
  int blocks_x = 0;
  int blocks_y = 0;
  std::vector<double> values;

  double at(int bx, int by) const {
    return values[static_cast<std::size_t>(by) * static_cast<std::size_t>(blocks_x) +
                  static_cast<std::size_t>(bx)];
  }
};

class RoiMask {
 public:
  RoiMask(int width, int height, CorePoint center, int radius);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  const CorePoint& center() const noexcept { return center_; }
  int radius() const noexcept { return radius_; }
  /// True when part of the disc lies outside the frame.
  bool clipped() const noexcept { return clipped_; }

  bool inside(int x, int y) const noexcept;
  std::size_t inside_count() const noexcept;

 private:
  int width_;
  int height_;
  CorePoint center_;
  int radius_;
  bool clipped_;
};

/// Orientation closure deficit over each 3x3 block neighborhood:
/// 1 - |sum of (cos 2t, sin 2t)| / 9. Border blocks are 0.
/// Throws Error{FieldTooSmall} for fields under 3x3 blocks.
StrengthMap curvature_strength(const OrientationField& field);

/// Block-level foreground: intensity variance at least `ratio` times the mean
/// block variance. A zero ratio marks every block as foreground.
std::vector<bool> foreground_blocks(const GrayImage& img, int block_size, double ratio);

/// Expands a block foreground map to pixels.
BinaryImage foreground_pixels(const std::vector<bool>& blocks, int block_size, int width,
                              int height);

/// Peak of the strength map, refined to sub-block precision. Only blocks whose
/// 3x3 neighborhood is entirely foreground (and off the one-block border) are
/// candidates. Ties go to the smaller y, then the smaller x.
/// Throws Error{NoCoreFound} if the peak is below `min_strength`.
CorePoint locate_core(const StrengthMap& strength, const std::vector<bool>& foreground,
                      int block_size, int width, int height, double min_strength);

struct CoreDetection {
  BlockGradients gradients;
  OrientationField field;
  OrientationField smoothed;
  StrengthMap strength;
  std::vector<bool> foreground;
};

/// Orientation, smoothing and strength for an enhanced image, with a
/// precomputed foreground map (normally segmented before equalization, which
/// stretches background sensor noise).
CoreDetection analyze_orientation(const GrayImage& img, std::vector<bool> foreground,
                                  const PipelineConfig& cfg);
/// Same, segmenting the foreground on `img` itself.
CoreDetection analyze_orientation(const GrayImage& img, const PipelineConfig& cfg);

CorePoint detect_core(const GrayImage& img, const PipelineConfig& cfg);

struct RoiImage {
  GrayImage image;
  RoiMask mask;
};

/// Pixels outside the disc become background (255).
/// Throws Error{BadRadius} for radius <= 0.
RoiImage extract_roi(const GrayImage& img, const CorePoint& core, int radius);

}  // namespace ridgekit
