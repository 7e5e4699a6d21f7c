#include "ridgekit/image.hpp"

#include <algorithm>
#include <string>

#include "ridgekit/error.hpp"

namespace ridgekit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::CorruptImage: return "CorruptImage";
    case ErrorCode::ZeroDimension: return "ZeroDimension";
    case ErrorCode::BadWindow: return "BadWindow";
    case ErrorCode::ImageTooSmall: return "ImageTooSmall";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::NoCoreFound: return "NoCoreFound";
    case ErrorCode::BadRadius: return "BadRadius";
    case ErrorCode::NotThinned: return "NotThinned";
    case ErrorCode::EmptyMinutiaeSet: return "EmptyMinutiaeSet";
    case ErrorCode::BadDescriptorCount: return "BadDescriptorCount";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::IncompatibleTemplates: return "IncompatibleTemplates";
    case ErrorCode::EmptyDatabase: return "EmptyDatabase";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::ZeroDimension,
                "image dimensions must be positive, got " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
}

int fold(int i, int n) {
  // Symmetric reflection: -1 -> 0, n -> n-1.
  const int period = 2 * n;
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - 1 - i;
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  check_dims(width, height);
  if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw Error(ErrorCode::InvalidArgument, "pixel buffer does not match dimensions");
  }
}

std::uint8_t GrayImage::mirrored(int x, int y) const {
  return at(fold(x, width_), fold(y, height_));
}

BinaryImage::BinaryImage(int width, int height, bool fill) : width_(width), height_(height) {
  check_dims(width, height);
  bits_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
               fill ? 1 : 0);
}

std::size_t BinaryImage::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint8_t BinaryImage::neighbor_mask(int x, int y) const noexcept {
  std::uint8_t mask = 0;
  for (int i = 0; i < 8; ++i) {
    if (at(x + kNeighborDx[i], y + kNeighborDy[i])) mask |= static_cast<std::uint8_t>(1u << i);
  }
  return mask;
}

}  // namespace ridgekit
