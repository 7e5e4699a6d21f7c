#include "ridgekit/enhance.hpp"

#include <algorithm>
#include <cmath>

#include "ridgekit/error.hpp"

namespace ridgekit {

Histogram histogram(const GrayImage& img) {
  Histogram h;
  for (const auto v : img.pixels()) ++h.counts[v];
  h.total = img.size();
  return h;
}

namespace {

GrayImage remap(const GrayImage& img, const Histogram& h) {
  std::array<std::uint8_t, kGrayLevels> lut{};
  std::uint64_t cumulative = 0;
  for (int k = 0; k < kGrayLevels; ++k) {
    cumulative += h.counts[k];
    const double cdf = static_cast<double>(cumulative) / static_cast<double>(h.total);
    lut[k] = static_cast<std::uint8_t>(std::lround(255.0 * cdf));
  }
  GrayImage out = img;
  for (auto& v : out.pixels()) v = lut[v];
  return out;
}

}  // namespace

GrayImage equalize(const GrayImage& img) { return remap(img, histogram(img)); }

GrayImage equalize(const GrayImage& img, const BinaryImage& region) {
  Histogram h;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (region.at(x, y)) ++h.counts[img.at(x, y)];
    }
  }
  for (auto c : h.counts) h.total += c;
  if (h.total == 0) return equalize(img);
  return remap(img, h);
}

GrayImage adaptive_denoise(const GrayImage& img, int window) {
  if (window < 3 || window % 2 == 0) {
    throw Error(ErrorCode::BadWindow, "window must be odd and >= 3, got " + std::to_string(window));
  }
  const int w = img.width();
  const int h = img.height();
  const int half = window / 2;
  const double area = static_cast<double>(window) * window;

  std::vector<double> mean(img.size());
  std::vector<double> var(img.size());
  double var_sum = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double s = 0.0;
      double s2 = 0.0;
      for (int dy = -half; dy <= half; ++dy) {
        for (int dx = -half; dx <= half; ++dx) {
          const double v = img.mirrored(x + dx, y + dy);
          s += v;
          s2 += v * v;
        }
      }
      const auto i = static_cast<std::size_t>(y) * w + x;
      mean[i] = s / area;
      var[i] = std::max(0.0, s2 / area - mean[i] * mean[i]);
      var_sum += var[i];
    }
  }
  const double noise = var_sum / static_cast<double>(img.size());

  GrayImage out(w, h);
  auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const double denom = std::max(var[i], noise);
    const double gain = denom > 0.0 ? std::max(0.0, var[i] - noise) / denom : 0.0;
    const double v = mean[i] + gain * (src[i] - mean[i]);
    dst[i] = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
  }
  return out;
}

}  // namespace ridgekit
