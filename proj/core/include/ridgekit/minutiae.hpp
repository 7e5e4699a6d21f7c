#pragma once

#include <array>
#include <vector>

#include "ridgekit/corepoint.hpp"
#include "ridgekit/image.hpp"
#include "ridgekit/orientation.hpp"

namespace ridgekit {

enum class MinutiaKind { Termination, Bifurcation };

struct Minutia {
  int x = 0;
  int y = 0;
  MinutiaKind kind = MinutiaKind::Termination;
  double angle = 0.0;  // local ridge orientation, [0, pi)

  friend bool operator==(const Minutia&, const Minutia&) = default;
};

struct MinutiaeSet {
  std::vector<Minutia> items;
  CorePoint core;
  int radius = 0;

  std::size_t count(MinutiaKind kind) const;
};

/// Half the summed absolute differences around the circular neighborhood
/// p[0..7] (p[8] wraps to p[0]).
int crossing_number(const std::array<bool, 8>& neighbors) noexcept;
int crossing_number(std::uint8_t neighbor_mask) noexcept;

/// Crossing-number scan of a thinned skeleton. Ridge pixels with CN 1 become
/// terminations, CN 3 bifurcations. Pixels closer than `margin` to the ROI
/// boundary (disc edge or frame edge) are skipped. Output is in (y, x) order.
/// Throws Error{NotThinned} if the skeleton contains a 2x2 ridge block.
MinutiaeSet extract_minutiae(const BinaryImage& skeleton, const RoiMask& mask,
                             const OrientationField& field, int margin = 10);

/// Drops both members of every pair closer than `min_distance`, repeated
/// until no such pair remains.
MinutiaeSet remove_spurious(const MinutiaeSet& set, double min_distance = 6.0);

}  // namespace ridgekit
