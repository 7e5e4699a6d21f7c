#pragma once

#include <vector>

#include "ridgekit/image.hpp"

namespace ridgekit {

/// Sobel gradient moments accumulated over non-overlapping square blocks.
/// Partial blocks at the right and bottom edges cover the remaining pixels.
struct BlockGradients {
  int block_size = 0;
  int blocks_x = 0;
  int blocks_y = 0;
  std::vector<double> gxx;
  std::vector<double> gyy;
  std::vector<double> gxy;

  std::size_t index(int bx, int by) const noexcept {
    return static_cast<std::size_t>(by) * static_cast<std::size_t>(blocks_x) +
           static_cast<std::size_t>(bx);
  }
};

/// Per-block ridge direction in radians, [0, pi), in image coordinates
/// (x to the right, y downward). Coherence in [0, 1].
struct OrientationField {
  int block_size = 0;
  int blocks_x = 0;
  int blocks_y = 0;
  std::vector<double> theta;
  std::vector<double> coherence;

  OrientationField() = default;
  OrientationField(int block, int bx, int by, double theta0 = 0.0, double coh0 = 0.0);

  std::size_t index(int bx, int by) const noexcept {
    return static_cast<std::size_t>(by) * static_cast<std::size_t>(blocks_x) +
           static_cast<std::size_t>(bx);
  }
  double theta_at(int bx, int by) const { return theta[index(bx, by)]; }

  /// Orientation of the block containing pixel (x, y), clamped to the field.
  double theta_at_pixel(int x, int y) const;
};

/// Wraps an angle into [0, pi).
double wrap_half_turn(double angle) noexcept;

/// Throws Error{ImageTooSmall} if the image is smaller than one block or
/// block_size < 3.
BlockGradients block_gradients(const GrayImage& img, int block_size = 10);

/// Ridge direction = dominant gradient direction + pi/2. The gradient
/// direction comes from the four-quadrant arctangent of (2 gxy, gxx - gyy).
OrientationField ridge_orientation(const BlockGradients& grads);

/// Gaussian smoothing of the coherence-weighted doubled-angle vectors.
/// The kernel is truncated at 3 sigma.
OrientationField smooth_orientation(const OrientationField& field, double sigma = 1.0);

}  // namespace ridgekit
