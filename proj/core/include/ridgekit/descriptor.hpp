#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ridgekit/corepoint.hpp"
#include "ridgekit/minutiae.hpp"

namespace ridgekit {

struct Polar {
  double r = 0.0;
  double theta = 0.0;  // (-pi, pi]
};

/// Distance and angle of a minutia measured from the core.
Polar to_polar(const CorePoint& core, const Minutia& m) noexcept;

/// Minutiae as z = r e^{i theta}, ordered by (theta, r) ascending.
struct ComplexSignature {
  std::vector<std::complex<double>> values;
  std::vector<Polar> polar;
};

/// Throws Error{EmptyMinutiaeSet}.
ComplexSignature build_signature(const MinutiaeSet& set);

/// Sorts (theta, r) pairs into a signature; the sort is the same one
/// build_signature applies.
ComplexSignature signature_from_polar(std::vector<Polar> points);

enum class DescriptorMode : std::uint8_t { Real, Magnitude };

struct TemplateId {
  std::uint32_t finger = 0;
  std::uint16_t impression = 0;

  friend auto operator<=>(const TemplateId&, const TemplateId&) = default;
};

struct Template {
  std::vector<double> descriptors;
  int signature_length = 0;  // L
  int radius = 0;            // R
  TemplateId id;

  int descriptor_count() const noexcept { return static_cast<int>(descriptors.size()); }
};

struct FourierOptions {
  int length = 128;  // L
  int count = 80;    // K
  DescriptorMode mode = DescriptorMode::Real;
  bool normalize = true;  // divide by max(1, |signature|)
};

/// Length-L DFT of the zero-padded signature; keeps coefficients 0..K-1.
/// Signatures longer than L keep their L entries nearest the core.
/// Throws Error{BadDescriptorCount} if K > L or K < 1.
Template fourier_template(const ComplexSignature& sig, const FourierOptions& opts);

/// Unnormalized forward DFT, X_k = sum_n x_n e^{-2 pi i k n / N}.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x);

}  // namespace ridgekit
