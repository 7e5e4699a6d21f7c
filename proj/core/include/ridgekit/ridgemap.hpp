#pragma once

#include "ridgekit/corepoint.hpp"
#include "ridgekit/image.hpp"

namespace ridgekit {

/// Ridges are the dark pixels: true iff intensity < threshold.
BinaryImage binarize(const GrayImage& img, int threshold = 160);
BinaryImage binarize(const GrayImage& img, const RoiMask& mask, int threshold = 160);

/// Zhang-Suen two-subiteration thinning.
///
/// Deletions inside a subiteration are applied in raster order and each
/// candidate is re-tested against the partially updated image, so a pixel is
/// only removed while it is still a deletable contour point. This keeps every
/// 8-connected component (2x2 squares and two-pixel diagonals included) from
/// being erased in one parallel step.
BinaryImage thin(const BinaryImage& bin);

/// Removes isolated ridge pixels.
BinaryImage clean(const BinaryImage& bin);

/// Peels endpoint pixels `iterations` times. Endpoints are collected at the
/// start of each pass and a pixel is dropped only if it is still an endpoint
/// when reached, so the last pixel of a two-pixel stub survives as an isolated
/// point.
BinaryImage spur(const BinaryImage& bin, int iterations);

/// Clears the center of every exact H pattern (rows 111/010/111 and its
/// 90-degree rotation), repeated until stable.
BinaryImage hbreak(const BinaryImage& bin);

/// True if any 2x2 block is fully set.
bool has_thick_block(const BinaryImage& bin);

/// Number of 8-connected components, optionally ignoring single pixels.
int count_components(const BinaryImage& bin, int min_size = 1);

}  // namespace ridgekit
