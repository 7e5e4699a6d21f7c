#pragma once

#include <filesystem>

#include "ridgekit/image.hpp"

namespace ridgekit {

/// Loads a binary PGM (P5), PNG or TIFF file as 8-bit gray. Multi-channel
/// rasters are reduced by the unweighted mean of their color channels.
/// Throws Error{FileNotFound | UnsupportedFormat | CorruptImage}.
GrayImage load_grayscale(const std::filesystem::path& path);

/// Writes a binary PGM (P5). Throws Error{IoError}.
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

GrayImage decode_pgm(std::span<const std::uint8_t> bytes);

/// Bilinear resampling with pixel-center alignment. Same-size calls return an
/// exact copy. Throws Error{ZeroDimension}.
GrayImage resize(const GrayImage& img, int width, int height);

}  // namespace ridgekit
