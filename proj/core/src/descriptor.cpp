#include "ridgekit/descriptor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "ridgekit/error.hpp"

namespace ridgekit {

Polar to_polar(const CorePoint& core, const Minutia& m) noexcept {
  const double dx = m.x - core.x;
  const double dy = m.y - core.y;
  if (dx == 0.0 && dy == 0.0) return {0.0, 0.0};
  return {std::sqrt(dx * dx + dy * dy), std::atan2(dy, dx)};
}

ComplexSignature signature_from_polar(std::vector<Polar> points) {
  std::sort(points.begin(), points.end(), [](const Polar& a, const Polar& b) {
    if (a.theta != b.theta) return a.theta < b.theta;
    return a.r < b.r;
  });
  ComplexSignature sig;
  sig.values.reserve(points.size());
  for (const auto& p : points) sig.values.push_back(std::polar(p.r, p.theta));
  sig.polar = std::move(points);
  return sig;
}

ComplexSignature build_signature(const MinutiaeSet& set) {
  if (set.items.empty()) throw Error(ErrorCode::EmptyMinutiaeSet, "no minutiae to describe");
  std::vector<Polar> points;
  points.reserve(set.items.size());
  for (const auto& m : set.items) points.push_back(to_polar(set.core, m));
  return signature_from_polar(std::move(points));
}

namespace {

void fft_radix2(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    for (std::size_t k = 0; k < half; ++k) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(len);
      const std::complex<double> w(std::cos(angle), std::sin(angle));
      for (std::size_t i = 0; i < n; i += len) {
        const auto u = a[i + k];
        const auto v = a[i + k + half] * w;
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

}  // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  if (std::has_single_bit(n)) {
    auto a = x;
    fft_radix2(a);
    return a;
  }
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc;
    for (std::size_t j = 0; j < n; ++j) {
      const double angle =
          -2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n);
      acc += x[j] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[k] = acc;
  }
  return out;
}

Template fourier_template(const ComplexSignature& sig, const FourierOptions& opts) {
  if (opts.count < 1 || opts.count > opts.length) {
    throw Error(ErrorCode::BadDescriptorCount, "descriptor count " + std::to_string(opts.count) +
                                                   " must be in [1, " +
                                                   std::to_string(opts.length) + "]");
  }
  const auto length = static_cast<std::size_t>(opts.length);
  std::vector<std::complex<double>> padded(length);
  std::size_t used = sig.values.size();
  if (used <= length) {
    std::copy(sig.values.begin(), sig.values.end(), padded.begin());
  } else {
    // Keep the entries nearest the core, in signature order.
    std::vector<std::size_t> order(used);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(sig.values[a]) < std::abs(sig.values[b]);
    });
    order.resize(length);
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < length; ++i) padded[i] = sig.values[order[i]];
    used = length;
  }

  const auto spectrum = dft(padded);
  const double scale = opts.normalize ? 1.0 / std::max<double>(1.0, static_cast<double>(used)) : 1.0;

  Template t;
  t.signature_length = opts.length;
  t.descriptors.resize(static_cast<std::size_t>(opts.count));
  for (std::size_t k = 0; k < t.descriptors.size(); ++k) {
    const double v = opts.mode == DescriptorMode::Real ? spectrum[k].real() : std::abs(spectrum[k]);
    t.descriptors[k] = v * scale;
  }
  return t;
}

}  // namespace ridgekit
