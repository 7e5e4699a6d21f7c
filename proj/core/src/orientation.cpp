#include "ridgekit/orientation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "ridgekit/error.hpp"

namespace ridgekit {

OrientationField::OrientationField(int block, int bx, int by, double theta0, double coh0)
    : block_size(block),
      blocks_x(bx),
      blocks_y(by),
      theta(static_cast<std::size_t>(bx) * by, theta0),
      coherence(static_cast<std::size_t>(bx) * by, coh0) {}

double OrientationField::theta_at_pixel(int x, int y) const {
  const int bx = std::clamp(x / block_size, 0, blocks_x - 1);
  const int by = std::clamp(y / block_size, 0, blocks_y - 1);
  return theta_at(bx, by);
}

double wrap_half_turn(double angle) noexcept {
  double t = std::fmod(angle, std::numbers::pi);
  if (t < 0.0) t += std::numbers::pi;
  if (t >= std::numbers::pi) t -= std::numbers::pi;
  return t;
}

BlockGradients block_gradients(const GrayImage& img, int block_size) {
  if (block_size < 3) {
    throw Error(ErrorCode::ImageTooSmall, "block size must be >= 3");
  }
  if (img.width() < block_size || img.height() < block_size) {
    throw Error(ErrorCode::ImageTooSmall, "image smaller than one " + std::to_string(block_size) +
                                              "-pixel block");
  }
  BlockGradients g;
  g.block_size = block_size;
  g.blocks_x = (img.width() + block_size - 1) / block_size;
  g.blocks_y = (img.height() + block_size - 1) / block_size;
  const auto n = static_cast<std::size_t>(g.blocks_x) * g.blocks_y;

  // Sobel responses are integers, so the moments accumulate exactly.
  std::vector<std::int64_t> sxx(n, 0);
  std::vector<std::int64_t> syy(n, 0);
  std::vector<std::int64_t> sxy(n, 0);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      auto p = [&](int dx, int dy) { return static_cast<int>(img.mirrored(x + dx, y + dy)); };
      const int gx = (p(1, -1) + 2 * p(1, 0) + p(1, 1)) - (p(-1, -1) + 2 * p(-1, 0) + p(-1, 1));
      const int gy = (p(-1, 1) + 2 * p(0, 1) + p(1, 1)) - (p(-1, -1) + 2 * p(0, -1) + p(1, -1));
      const auto i = g.index(x / block_size, y / block_size);
      sxx[i] += static_cast<std::int64_t>(gx) * gx;
      syy[i] += static_cast<std::int64_t>(gy) * gy;
      sxy[i] += static_cast<std::int64_t>(gx) * gy;
    }
  }
  g.gxx.assign(sxx.begin(), sxx.end());
  g.gyy.assign(syy.begin(), syy.end());
  g.gxy.assign(sxy.begin(), sxy.end());
  return g;
}

OrientationField ridge_orientation(const BlockGradients& grads) {
  OrientationField f(grads.block_size, grads.blocks_x, grads.blocks_y);
  for (std::size_t i = 0; i < f.theta.size(); ++i) {
    const double gxx = grads.gxx[i];
    const double gyy = grads.gyy[i];
    const double gxy = grads.gxy[i];
    const double energy = gxx + gyy;
    if (energy <= 0.0) {
      f.theta[i] = 0.0;
      f.coherence[i] = 0.0;
      continue;
    }
    const double gradient_dir = 0.5 * std::atan2(2.0 * gxy, gxx - gyy);
    f.theta[i] = wrap_half_turn(gradient_dir + std::numbers::pi / 2.0);
    const double c = std::sqrt((gxx - gyy) * (gxx - gyy) + 4.0 * gxy * gxy) / energy;
    f.coherence[i] = std::min(1.0, c);
  }
  return f;
}

OrientationField smooth_orientation(const OrientationField& field, double sigma) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::InvalidArgument, "smoothing sigma must be > 0");
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
  for (int k = -radius; k <= radius; ++k) {
    kernel[static_cast<std::size_t>(k + radius)] = std::exp(-(k * k) / (2.0 * sigma * sigma));
  }

  const int bx = field.blocks_x;
  const int by = field.blocks_y;
  const auto n = field.theta.size();
  std::vector<double> c(n);
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = field.coherence[i] * std::cos(2.0 * field.theta[i]);
    s[i] = field.coherence[i] * std::sin(2.0 * field.theta[i]);
  }

  // Separable pass; weights are renormalized over the in-field support so the
  // border blocks keep a coherence in [0, 1].
  auto pass = [&](const std::vector<double>& in, bool horizontal) {
    std::vector<double> out(n, 0.0);
    for (int y = 0; y < by; ++y) {
      for (int x = 0; x < bx; ++x) {
        double acc = 0.0;
        double wsum = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          const int xx = horizontal ? x + k : x;
          const int yy = horizontal ? y : y + k;
          if (xx < 0 || yy < 0 || xx >= bx || yy >= by) continue;
          const double w = kernel[static_cast<std::size_t>(k + radius)];
          acc += w * in[field.index(xx, yy)];
          wsum += w;
        }
        out[field.index(x, y)] = acc / wsum;
      }
    }
    return out;
  };
  const auto cs = pass(pass(c, true), false);
  const auto ss = pass(pass(s, true), false);

  OrientationField out(field.block_size, bx, by);
  for (std::size_t i = 0; i < n; ++i) {
    out.theta[i] = wrap_half_turn(0.5 * std::atan2(ss[i], cs[i]));
    out.coherence[i] = std::min(1.0, std::hypot(cs[i], ss[i]));
  }
  return out;
}

}  // namespace ridgekit
