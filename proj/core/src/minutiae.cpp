#include "ridgekit/minutiae.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "ridgekit/error.hpp"
#include "ridgekit/ridgemap.hpp"

namespace ridgekit {

std::size_t MinutiaeSet::count(MinutiaKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [kind](const Minutia& m) { return m.kind == kind; }));
}

int crossing_number(const std::array<bool, 8>& p) noexcept {
  int sum = 0;
  for (int i = 0; i < 8; ++i) sum += std::abs(int{p[i]} - int{p[(i + 1) % 8]});
  return sum / 2;
}

int crossing_number(std::uint8_t mask) noexcept {
  std::array<bool, 8> p{};
  for (int i = 0; i < 8; ++i) p[i] = (mask >> i) & 1u;
  return crossing_number(p);
}

namespace {

// Distance from (x, y) to the nearest edge of the clipped ROI: the disc
// boundary or the frame.
double boundary_distance(const RoiMask& mask, int x, int y) {
  const double dx = x - mask.center().x;
  const double dy = y - mask.center().y;
  const double to_circle = mask.radius() - std::hypot(dx, dy);
  const double to_frame =
      std::min({double(x), double(y), double(mask.width() - 1 - x), double(mask.height() - 1 - y)});
  return std::min(to_circle, to_frame);
}

}  // namespace

MinutiaeSet extract_minutiae(const BinaryImage& skeleton, const RoiMask& mask,
                             const OrientationField& field, int margin) {
  if (has_thick_block(skeleton)) {
    throw Error(ErrorCode::NotThinned, "skeleton contains a 2x2 ridge block");
  }
  MinutiaeSet set;
  set.core = mask.center();
  set.radius = mask.radius();
  for (int y = 0; y < skeleton.height(); ++y) {
    for (int x = 0; x < skeleton.width(); ++x) {
      if (!skeleton.at(x, y) || !mask.inside(x, y)) continue;
      if (boundary_distance(mask, x, y) < margin) continue;
      const int cn = crossing_number(skeleton.neighbor_mask(x, y));
      if (cn != 1 && cn != 3) continue;
      set.items.push_back({x, y, cn == 1 ? MinutiaKind::Termination : MinutiaKind::Bifurcation,
                           field.theta_at_pixel(x, y)});
    }
  }
  return set;
}

MinutiaeSet remove_spurious(const MinutiaeSet& set, double min_distance) {
  if (!(min_distance > 0.0)) throw Error(ErrorCode::InvalidArgument, "prune distance must be > 0");
  MinutiaeSet out = set;
  const double limit2 = min_distance * min_distance;
  for (;;) {
    const auto n = out.items.size();
    std::vector<bool> marked(n, false);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dx = out.items[i].x - out.items[j].x;
        const double dy = out.items[i].y - out.items[j].y;
        if (dx * dx + dy * dy < limit2) {
          marked[i] = marked[j] = true;
          any = true;
        }
      }
    }
    if (!any) break;
    std::vector<Minutia> kept;
    for (std::size_t i = 0; i < n; ++i) {
      if (!marked[i]) kept.push_back(out.items[i]);
    }
    out.items = std::move(kept);
  }
  return out;
}

}  // namespace ridgekit
