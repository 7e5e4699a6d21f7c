#include "ridgekit/ridgemap.hpp"

#include <array>
#include <bit>
#include <cstdlib>
#include <vector>

namespace ridgekit {

namespace {

constexpr int kE = 0, kNE = 1, kN = 2, kNW = 3, kW = 4, kSW = 5, kS = 6, kSE = 7;

constexpr bool has(std::uint8_t mask, int bit) { return (mask >> bit) & 1u; }

constexpr int transitions(std::uint8_t mask) {
  int a = 0;
  for (int i = 0; i < 8; ++i) {
    if (!has(mask, i) && has(mask, (i + 1) % 8)) ++a;
  }
  return a;
}

// Zhang-Suen deletability for each neighborhood, per subiteration.
constexpr std::array<std::array<bool, 256>, 2> make_thinning_tables() {
  std::array<std::array<bool, 256>, 2> t{};
  for (int m = 0; m < 256; ++m) {
    const auto mask = static_cast<std::uint8_t>(m);
    const int b = std::popcount(mask);
    const bool common = b >= 2 && b <= 6 && transitions(mask) == 1;
    const bool n = has(mask, kN), e = has(mask, kE), s = has(mask, kS), w = has(mask, kW);
    t[0][m] = common && !(n && e && s) && !(e && s && w);
    t[1][m] = common && !(n && e && w) && !(n && s && w);
  }
  return t;
}

constexpr auto kThinning = make_thinning_tables();

// Simple point under (8, 4) connectivity: the ridge neighbors form one
// 8-connected group and exactly one 4-connected background group touches the
// center through a 4-neighbor.
constexpr int count_groups(std::uint8_t members, bool eight_connected, std::uint8_t must_touch) {
  std::uint8_t seen = 0;
  int groups = 0;
  for (int start = 0; start < 8; ++start) {
    if (!has(members, start) || has(seen, start)) continue;
    std::uint8_t group = static_cast<std::uint8_t>(1u << start);
    seen |= group;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < 8; ++i) {
        if (!has(members, i) || has(seen, i)) continue;
        for (int j = 0; j < 8; ++j) {
          if (!has(group, j)) continue;
          const int dx = kNeighborDx[i] - kNeighborDx[j];
          const int dy = kNeighborDy[i] - kNeighborDy[j];
          const int adx = dx < 0 ? -dx : dx;
          const int ady = dy < 0 ? -dy : dy;
          const bool adjacent = eight_connected ? (adx <= 1 && ady <= 1) : (adx + ady == 1);
          if (adjacent) {
            group |= static_cast<std::uint8_t>(1u << i);
            seen |= static_cast<std::uint8_t>(1u << i);
            grew = true;
            break;
          }
        }
      }
    }
    if ((group & must_touch) != 0) ++groups;
  }
  return groups;
}

constexpr std::array<bool, 256> make_simple_table() {
  std::array<bool, 256> t{};
  constexpr std::uint8_t kEdges = (1u << kE) | (1u << kN) | (1u << kW) | (1u << kS);
  for (int m = 0; m < 256; ++m) {
    const auto mask = static_cast<std::uint8_t>(m);
    const auto background = static_cast<std::uint8_t>(~mask);
    t[m] = count_groups(mask, true, 0xFF) == 1 && count_groups(background, false, kEdges) == 1;
  }
  return t;
}

constexpr auto kSimple = make_simple_table();

constexpr std::uint8_t bits(std::initializer_list<int> positions) {
  std::uint8_t m = 0;
  for (int p : positions) m |= static_cast<std::uint8_t>(1u << p);
  return m;
}

constexpr std::uint8_t kHorizontalH = bits({kNW, kN, kNE, kSW, kS, kSE});
constexpr std::uint8_t kVerticalH = bits({kNW, kW, kSW, kNE, kE, kSE});

std::vector<Point> ridge_pixels(const BinaryImage& bin) {
  std::vector<Point> pts;
  for (int y = 0; y < bin.height(); ++y) {
    for (int x = 0; x < bin.width(); ++x) {
      if (bin.at(x, y)) pts.push_back({x, y});
    }
  }
  return pts;
}

}  // namespace

BinaryImage binarize(const GrayImage& img, int threshold) {
  BinaryImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) out.set(x, y, img.at(x, y) < threshold);
  }
  return out;
}

BinaryImage binarize(const GrayImage& img, const RoiMask& mask, int threshold) {
  BinaryImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out.set(x, y, mask.inside(x, y) && img.at(x, y) < threshold);
    }
  }
  return out;
}

namespace {

bool zhang_suen_pass(BinaryImage& img, int pass, std::vector<Point>& candidates) {
  candidates.clear();
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (img.at(x, y) && kThinning[pass][img.neighbor_mask(x, y)]) candidates.push_back({x, y});
    }
  }
  bool changed = false;
  for (const auto& p : candidates) {
    if (kThinning[pass][img.neighbor_mask(p.x, p.y)]) {
      img.set(p.x, p.y, false);
      changed = true;
    }
  }
  return changed;
}

bool full_block(const BinaryImage& img, int x, int y) {
  return img.at(x, y) && img.at(x + 1, y) && img.at(x, y + 1) && img.at(x + 1, y + 1);
}

// True if the ridge neighbors of the (already cleared) pixel p still lie in a
// single 8-connected component of img.
bool neighbors_stay_connected(const BinaryImage& img, Point p) {
  std::vector<Point> targets;
  for (int k = 0; k < 8; ++k) {
    const Point q{p.x + kNeighborDx[k], p.y + kNeighborDy[k]};
    if (img.at(q.x, q.y)) targets.push_back(q);
  }
  if (targets.size() <= 1) return true;

  const int w = img.width();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * img.height(), 0);
  auto idx = [w](Point q) { return static_cast<std::size_t>(q.y) * w + q.x; };
  std::vector<Point> stack{targets.front()};
  seen[idx(targets.front())] = 1;
  std::size_t reached = 1;
  while (!stack.empty() && reached < targets.size()) {
    const Point c = stack.back();
    stack.pop_back();
    for (int k = 0; k < 8; ++k) {
      const Point q{c.x + kNeighborDx[k], c.y + kNeighborDy[k]};
      if (!img.at(q.x, q.y) || seen[idx(q)]) continue;
      seen[idx(q)] = 1;
      stack.push_back(q);
      if (std::abs(q.x - p.x) <= 1 && std::abs(q.y - p.y) <= 1) ++reached;
    }
  }
  return reached == targets.size();
}

// Removes one pixel from each remaining 2x2 block. Simple points go first; a
// block whose pixels each border a separate hole is broken at a pixel whose
// removal merges holes but keeps the ridge in one piece.
bool break_blocks(BinaryImage& img) {
  bool changed = false;
  for (int y = 0; y + 1 < img.height(); ++y) {
    for (int x = 0; x + 1 < img.width(); ++x) {
      if (!full_block(img, x, y)) continue;
      const Point block[4] = {{x, y}, {x + 1, y}, {x, y + 1}, {x + 1, y + 1}};
      bool done = false;
      for (const auto& p : block) {
        if (kSimple[img.neighbor_mask(p.x, p.y)]) {
          img.set(p.x, p.y, false);
          done = true;
          break;
        }
      }
      for (int i = 0; i < 4 && !done; ++i) {
        img.set(block[i].x, block[i].y, false);
        if (neighbors_stay_connected(img, block[i])) {
          done = true;
        } else {
          img.set(block[i].x, block[i].y, true);
        }
      }
      changed = changed || done;
    }
  }
  return changed;
}

}  // namespace

BinaryImage thin(const BinaryImage& bin) {
  BinaryImage img = bin;
  std::vector<Point> candidates;
  bool changed = true;
  while (changed) {
    changed = false;
    bool peeled = true;
    while (peeled) {
      peeled = zhang_suen_pass(img, 0, candidates);
      peeled = zhang_suen_pass(img, 1, candidates) || peeled;
    }
    // The transition-count rule keeps a pixel whose two ridge neighbors touch
    // only diagonally across an empty corner, which can leave 2x2 blocks.
    while (break_blocks(img)) changed = true;
  }
  return img;
}

BinaryImage clean(const BinaryImage& bin) {
  BinaryImage out = bin;
  for (const auto& p : ridge_pixels(bin)) {
    if (bin.neighbor_mask(p.x, p.y) == 0) out.set(p.x, p.y, false);
  }
  return out;
}

BinaryImage spur(const BinaryImage& bin, int iterations) {
  BinaryImage img = bin;
  std::vector<Point> endpoints;
  for (int it = 0; it < iterations; ++it) {
    endpoints.clear();
    for (const auto& p : ridge_pixels(img)) {
      if (std::popcount(img.neighbor_mask(p.x, p.y)) == 1) endpoints.push_back(p);
    }
    if (endpoints.empty()) break;
    for (const auto& p : endpoints) {
      if (std::popcount(img.neighbor_mask(p.x, p.y)) == 1) img.set(p.x, p.y, false);
    }
  }
  return img;
}

BinaryImage hbreak(const BinaryImage& bin) {
  BinaryImage img = bin;
  std::vector<Point> centers;
  do {
    centers.clear();
    for (const auto& p : ridge_pixels(img)) {
      const auto m = img.neighbor_mask(p.x, p.y);
      if (m == kHorizontalH || m == kVerticalH) centers.push_back(p);
    }
    for (const auto& p : centers) img.set(p.x, p.y, false);
  } while (!centers.empty());
  return img;
}

bool has_thick_block(const BinaryImage& bin) {
  for (int y = 0; y + 1 < bin.height(); ++y) {
    for (int x = 0; x + 1 < bin.width(); ++x) {
      if (bin.at(x, y) && bin.at(x + 1, y) && bin.at(x, y + 1) && bin.at(x + 1, y + 1)) {
        return true;
      }
    }
  }
  return false;
}

int count_components(const BinaryImage& bin, int min_size) {
  const int w = bin.width();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * bin.height(), 0);
  std::vector<Point> stack;
  int components = 0;
  for (int y = 0; y < bin.height(); ++y) {
    for (int x = 0; x < w; ++x) {
      if (!bin.at(x, y) || seen[static_cast<std::size_t>(y) * w + x]) continue;
      int size = 0;
      stack.push_back({x, y});
      seen[static_cast<std::size_t>(y) * w + x] = 1;
      while (!stack.empty()) {
        const auto p = stack.back();
        stack.pop_back();
        ++size;
        for (int i = 0; i < 8; ++i) {
          const int nx = p.x + kNeighborDx[i];
          const int ny = p.y + kNeighborDy[i];
          if (!bin.at(nx, ny)) continue;
          auto& s = seen[static_cast<std::size_t>(ny) * w + nx];
          if (!s) {
            s = 1;
            stack.push_back({nx, ny});
          }
        }
      }
      if (size >= min_size) ++components;
    }
  }
  return components;
}

}  // namespace ridgekit
