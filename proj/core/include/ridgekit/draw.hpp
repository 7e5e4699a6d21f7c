#pragma once

#include "ridgekit/corepoint.hpp"
#include "ridgekit/image.hpp"
#include "ridgekit/minutiae.hpp"
#include "ridgekit/orientation.hpp"

namespace ridgekit {

// Debug renderings used by `ridgekit inspect`.

GrayImage render_binary(const BinaryImage& bin);
GrayImage render_orientation(const GrayImage& base, const OrientationField& field);
GrayImage render_strength(const StrengthMap& strength, int block_size, int width, int height,
                          const CorePoint* core);
/// Terminations as hollow squares, bifurcations as crosses, core as a ring.
GrayImage render_minutiae(const BinaryImage& skeleton, const MinutiaeSet& set);

void draw_line(GrayImage& img, int x0, int y0, int x1, int y1, std::uint8_t value);

}  // namespace ridgekit
