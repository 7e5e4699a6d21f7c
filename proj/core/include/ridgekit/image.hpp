#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ridgekit {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// 8-bit single-channel raster, row-major.
class GrayImage {
 public:
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }

  std::uint8_t at(int x, int y) const { return data_[index(x, y)]; }
  std::uint8_t& at(int x, int y) { return data_[index(x, y)]; }

  /// Symmetric (edge-repeating) mirror access for coordinates outside the frame.
  std::uint8_t mirrored(int x, int y) const;

  std::span<const std::uint8_t> pixels() const noexcept { return data_; }
  std::span<std::uint8_t> pixels() noexcept { return data_; }

  bool contains(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> data_;
};

/// Ridge bitmap; true marks a ridge pixel. Reads outside the frame are false.
class BinaryImage {
 public:
  BinaryImage(int width, int height, bool fill = false);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  bool at(int x, int y) const noexcept {
    if (!contains(x, y)) return false;
    return bits_[index(x, y)] != 0;
  }
  void set(int x, int y, bool value) { bits_[index(x, y)] = value ? 1 : 0; }

  bool contains(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  std::size_t count() const noexcept;

  /// Neighbors of (x,y) in circular order starting east and running
  /// counter-clockwise on screen: E, NE, N, NW, W, SW, S, SE.
  std::uint8_t neighbor_mask(int x, int y) const noexcept;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

/// Offsets matching the bit order of BinaryImage::neighbor_mask (y grows downward).
inline constexpr int kNeighborDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
inline constexpr int kNeighborDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};

}  // namespace ridgekit
