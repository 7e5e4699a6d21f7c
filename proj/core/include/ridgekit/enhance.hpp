#pragma once

#include <array>
#include <cstdint>

#include "ridgekit/image.hpp"

namespace ridgekit {

inline constexpr int kGrayLevels = 256;

struct Histogram {
  std::array<std::uint64_t, kGrayLevels> counts{};
  std::uint64_t total = 0;
};

Histogram histogram(const GrayImage& img);

/// Global histogram equalization: out = round(255 * CDF(in)).
GrayImage equalize(const GrayImage& img);

/// Equalization whose CDF is taken over the pixels set in `region` only; the
/// resulting mapping is applied to every pixel. An empty region falls back to
/// the global remap.
GrayImage equalize(const GrayImage& img, const BinaryImage& region);

/// Adaptive (Wiener-style) local noise filter over a square window.
///
/// With local mean m and variance v over the window, and the noise power n
/// taken as the mean of all local variances:
///
///   out = m + max(0, v - n) / max(v, n) * (in - m)
///
/// Flat regions collapse to their local mean while textured regions pass
/// through almost unchanged. Borders use symmetric mirror padding.
/// Throws Error{BadWindow} for an even window or one smaller than 3.
GrayImage adaptive_denoise(const GrayImage& img, int window = 3);

}  // namespace ridgekit
