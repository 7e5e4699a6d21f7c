#pragma once

#include <cstring>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ridgekit/error.hpp"
#include "ridgekit/image.hpp"

namespace ridgekit {

inline void PrintTo(const BinaryImage& b, std::ostream* os) {
  *os << b.width() << "x" << b.height() << "\n";
  for (int y = 0; y < b.height(); ++y) {
    for (int x = 0; x < b.width(); ++x) *os << (b.at(x, y) ? '#' : '.');
    *os << "\n";
  }
}

}  // namespace ridgekit

namespace ridgekit::testing {

inline GrayImage random_image(std::mt19937& rng, int w, int h, int lo = 0, int hi = 255) {
  std::uniform_int_distribution<int> v(lo, hi);
  GrayImage img(w, h);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(v(rng));
  return img;
}

inline BinaryImage from_rows(std::initializer_list<const char*> rows) {
  const int h = static_cast<int>(rows.size());
  const int w = static_cast<int>(std::strlen(*rows.begin()));
  BinaryImage b(w, h);
  int y = 0;
  for (const char* row : rows) {
    for (int x = 0; x < w; ++x) b.set(x, y, row[x] == '1' || row[x] == '#');
    ++y;
  }
  return b;
}

inline bool subset_of(const BinaryImage& a, const BinaryImage& b) {
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      if (a.at(x, y) && !b.at(x, y)) return false;
    }
  }
  return true;
}

// Union-find labelling of 8-connected components with at least `min_size`
// pixels; kept separate from the library's own flood fill.
inline int components_8(const BinaryImage& b, int min_size = 1) {
  const int w = b.width();
  const int h = b.height();
  std::vector<int> parent(static_cast<std::size_t>(w) * h);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!b.at(x, y)) continue;
      const int dxs[4] = {-1, -1, 0, 1};
      const int dys[4] = {0, -1, -1, -1};
      for (int k = 0; k < 4; ++k) {
        if (b.at(x + dxs[k], y + dys[k])) {
          parent[find(y * w + x)] = find((y + dys[k]) * w + x + dxs[k]);
        }
      }
    }
  }
  std::vector<int> size(parent.size(), 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (b.at(x, y)) ++size[find(y * w + x)];
    }
  }
  int n = 0;
  for (int s : size) n += s >= min_size ? 1 : 0;
  return n;
}

inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected ridgekit::Error";
  return ErrorCode::InvalidArgument;
}

}  // namespace ridgekit::testing
