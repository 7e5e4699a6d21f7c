#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "ridgekit/descriptor.hpp"
#include "test_util.hpp"

using namespace ridgekit;
using ridgekit::testing::code_of;
using std::numbers::pi;
using cd = std::complex<double>;

namespace {

std::vector<cd> naive_dft(const std::vector<cd>& x) {
  const auto n = x.size();
  std::vector<cd> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      out[k] += x[j] * std::exp(cd(0.0, -2.0 * pi * double(k) * double(j) / double(n)));
    }
  }
  return out;
}

MinutiaeSet minutiae_around(CorePoint core, std::vector<std::pair<int, int>> offsets) {
  MinutiaeSet s;
  s.core = core;
  s.radius = 100;
  for (auto [dx, dy] : offsets) {
    s.items.push_back({core.x + dx, core.y + dy, MinutiaKind::Termination, 0.0});
  }
  return s;
}

std::vector<Polar> random_polar(std::mt19937& rng, int n, double theta_lo, double theta_hi) {
  std::uniform_real_distribution<double> r(1.0, 100.0);
  std::uniform_real_distribution<double> t(theta_lo, theta_hi);
  std::vector<Polar> pts;
  for (int i = 0; i < n; ++i) pts.push_back({r(rng), t(rng)});
  return pts;
}

FourierOptions options(int length, int count, DescriptorMode mode = DescriptorMode::Real,
                       bool normalize = true) {
  FourierOptions o;
  o.length = length;
  o.count = count;
  o.mode = mode;
  o.normalize = normalize;
  return o;
}

}  // namespace

TEST(ToPolar, Examples) {
  const auto a = to_polar(CorePoint{0, 0, 1}, Minutia{3, 4});
  EXPECT_DOUBLE_EQ(a.r, 5.0);
  EXPECT_DOUBLE_EQ(a.theta, std::atan2(4.0, 3.0));
  EXPECT_NEAR(a.theta, 0.9273, 1e-4);

  const auto b = to_polar(CorePoint{10, 10, 1}, Minutia{10, 10});
  EXPECT_EQ(b.r, 0.0);
  EXPECT_EQ(b.theta, 0.0);

  const auto c = to_polar(CorePoint{0, 0, 1}, Minutia{1, 1});
  EXPECT_DOUBLE_EQ(c.r, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(c.theta, pi / 4);

  EXPECT_DOUBLE_EQ(to_polar(CorePoint{0, 0, 1}, Minutia{-1, 0}).theta, pi);
}

TEST(BuildSignature, Examples) {
  const auto one = build_signature(minutiae_around({50, 50, 1}, {{5, 0}}));
  ASSERT_EQ(one.values.size(), 1u);
  EXPECT_EQ(one.values[0], cd(5.0, 0.0));

  const auto two = build_signature(minutiae_around({50, 50, 1}, {{3, 3}, {3, -3}}));
  ASSERT_EQ(two.polar.size(), 2u);
  EXPECT_DOUBLE_EQ(two.polar[0].theta, -pi / 4);
  EXPECT_DOUBLE_EQ(two.polar[1].theta, pi / 4);

  EXPECT_EQ(code_of([] { build_signature(MinutiaeSet{}); }), ErrorCode::EmptyMinutiaeSet);
}

TEST(BuildSignature, OrderedByThetaThenR) {
  const auto sig =
      build_signature(minutiae_around({0, 0, 1}, {{4, 4}, {-3, 0}, {2, 2}, {0, -7}, {1, 1}}));
  for (std::size_t i = 1; i < sig.polar.size(); ++i) {
    const auto& a = sig.polar[i - 1];
    const auto& b = sig.polar[i];
    EXPECT_TRUE(a.theta < b.theta || (a.theta == b.theta && a.r <= b.r));
  }
  EXPECT_DOUBLE_EQ(sig.polar[1].r, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(sig.polar[3].r, std::sqrt(32.0));
}

TEST(Dft, MatchesNaiveSum) {
  std::mt19937 rng(8);
  std::normal_distribution<double> g(0.0, 10.0);
  for (std::size_t n : {1u, 2u, 7u, 64u, 100u, 128u}) {
    std::vector<cd> x(n);
    for (auto& v : x) v = {g(rng), g(rng)};
    const auto fast = dft(x);
    const auto slow = naive_dft(x);
    ASSERT_EQ(fast.size(), n);
    for (std::size_t k = 0; k < n; ++k) EXPECT_LT(std::abs(fast[k] - slow[k]), 1e-9) << n;
  }
}

TEST(FourierTemplate, ZeroSignatureGivesZeros) {
  const auto t = fourier_template(ComplexSignature{}, options(128, 80));
  ASSERT_EQ(t.descriptor_count(), 80);
  for (double d : t.descriptors) EXPECT_EQ(d, 0.0);
}

TEST(FourierTemplate, SingleImpulse) {
  const auto sig = signature_from_polar({{5.0, 0.0}});
  const auto t = fourier_template(sig, options(128, 80));
  EXPECT_EQ(t.signature_length, 128);
  for (double d : t.descriptors) EXPECT_NEAR(d, 5.0, 1e-12);
}

TEST(FourierTemplate, MatchesOracleWithNormalization) {
  std::mt19937 rng(3);
  const auto sig = signature_from_polar(random_polar(rng, 37, -pi, pi));
  std::vector<cd> padded(128);
  std::copy(sig.values.begin(), sig.values.end(), padded.begin());
  const auto spectrum = naive_dft(padded);
  const auto real = fourier_template(sig, options(128, 120));
  const auto mag = fourier_template(sig, options(128, 120, DescriptorMode::Magnitude));
  const auto raw = fourier_template(sig, options(128, 120, DescriptorMode::Real, false));
  for (int k = 0; k < 120; ++k) {
    EXPECT_NEAR(real.descriptors[k], spectrum[k].real() / 37.0, 1e-9);
    EXPECT_NEAR(mag.descriptors[k], std::abs(spectrum[k]) / 37.0, 1e-9);
    EXPECT_NEAR(raw.descriptors[k], spectrum[k].real(), 1e-9);
  }
}

TEST(FourierTemplate, LongSignaturesKeepNearestEntries) {
  std::vector<Polar> pts;
  for (int i = 0; i < 10; ++i) pts.push_back({10.0 + i, -3.0 + 0.5 * i});
  const auto sig = signature_from_polar(pts);
  const auto t = fourier_template(sig, options(4, 4, DescriptorMode::Real, false));
  // r = 10..13 survive, in signature order.
  std::vector<cd> kept;
  for (int i = 0; i < 4; ++i) kept.push_back(std::polar(10.0 + i, -3.0 + 0.5 * i));
  const auto spectrum = naive_dft(kept);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(t.descriptors[k], spectrum[k].real(), 1e-9);
}

TEST(FourierTemplate, BadDescriptorCount) {
  const auto sig = signature_from_polar({{1.0, 0.0}});
  EXPECT_EQ(code_of([&] { fourier_template(sig, options(64, 80)); }),
            ErrorCode::BadDescriptorCount);
  EXPECT_EQ(code_of([&] { fourier_template(sig, options(64, 0)); }),
            ErrorCode::BadDescriptorCount);
}

TEST(FourierTemplate, TranslationGivesIdenticalTemplate) {
  const std::vector<std::pair<int, int>> offsets = {{12, -40}, {-33, 7}, {0, 55}, {61, 61},
                                                    {-5, -5},  {20, 1},  {-70, 0}};
  const auto base = fourier_template(build_signature(minutiae_around({200, 200, 1}, offsets)),
                                     options(128, 80));
  for (const auto [dx, dy] : {std::pair{13, -9}, {-150, 40}, {1000, 1000}}) {
    const auto moved = fourier_template(
        build_signature(minutiae_around({200 + dx, 200 + dy, 1}, offsets)), options(128, 80));
    EXPECT_EQ(moved.descriptors, base.descriptors);
  }
}

TEST(FourierTemplate, RotationPreservesMagnitudesOnly) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const double delta = 0.05 + 0.1 * trial;
    // Angles chosen so that no point crosses the +/-pi cut, keeping the
    // canonical order intact.
    const auto pts = random_polar(rng, 25, -pi + 1e-3, pi - delta - 1e-3);
    auto rotated = pts;
    for (auto& p : rotated) p.theta += delta;
    const auto a = signature_from_polar(pts);
    const auto b = signature_from_polar(rotated);
    for (const auto mode : {DescriptorMode::Magnitude, DescriptorMode::Real}) {
      const auto ta = fourier_template(a, options(128, 80, mode));
      const auto tb = fourier_template(b, options(128, 80, mode));
      double worst = 0.0;
      double largest = 0.0;
      for (int k = 0; k < 80; ++k) {
        worst = std::max(worst, std::abs(ta.descriptors[k] - tb.descriptors[k]));
        largest = std::max(largest, std::abs(ta.descriptors[k]));
      }
      if (mode == DescriptorMode::Magnitude) {
        EXPECT_LE(worst, 1e-9 * largest);
      } else {
        EXPECT_GT(worst, 1e-3 * largest);
      }
    }
  }
}

TEST(FourierTemplate, ScalingIsLinear) {
  std::mt19937 rng(5);
  const auto pts = random_polar(rng, 30, -pi, pi);
  const auto base = fourier_template(signature_from_polar(pts), options(128, 80));
  for (double a : {0.5, 2.0, 7.25}) {
    auto scaled = pts;
    for (auto& p : scaled) p.r *= a;
    const auto t = fourier_template(signature_from_polar(scaled), options(128, 80));
    for (int k = 0; k < 80; ++k) {
      EXPECT_NEAR(t.descriptors[k], a * base.descriptors[k], 1e-9 * (1.0 + std::abs(a * base.descriptors[k])));
    }
  }
}

TEST(FourierTemplate, InputOrderDoesNotMatter) {
  auto set = minutiae_around({100, 100, 1}, {{5, 9}, {-20, 3}, {14, -14}, {0, 30}, {-7, -7},
                                             {40, 2}, {3, 5}, {-30, 30}});
  const auto ref = fourier_template(build_signature(set), options(128, 80));
  std::mt19937 rng(1);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(set.items.begin(), set.items.end(), rng);
    EXPECT_EQ(fourier_template(build_signature(set), options(128, 80)).descriptors,
              ref.descriptors);
  }
}
