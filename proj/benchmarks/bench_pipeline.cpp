#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ridgekit/ridgekit.hpp"

using namespace ridgekit;

namespace {

// Concentric ridges with a little noise; enough structure for every stage.
GrayImage whorl(int w, int h) {
  GrayImage img(w, h);
  std::mt19937 rng(3);
  std::normal_distribution<double> noise(0.0, 8.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double r = std::hypot(x - w / 2.0, y - h / 2.0);
      const double v = 128.0 + 100.0 * std::cos(2.0 * std::numbers::pi * r / 9.0) + noise(rng);
      img.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
  }
  return img;
}

const GrayImage& sample() {
  static const GrayImage img = whorl(388, 374);
  return img;
}

void BM_Equalize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(equalize(sample()));
}
BENCHMARK(BM_Equalize);

void BM_OrientationField(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(smooth_orientation(ridge_orientation(block_gradients(sample(), 10))));
  }
}
BENCHMARK(BM_OrientationField);

void BM_Thin(benchmark::State& state) {
  const BinaryImage bin = binarize(sample());
  for (auto _ : state) benchmark::DoNotOptimize(thin(bin));
}
BENCHMARK(BM_Thin);

void BM_Prepare(benchmark::State& state) {
  const PipelineConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(prepare(sample(), cfg));
}
BENCHMARK(BM_Prepare)->Unit(benchmark::kMillisecond);

void BM_EnrollImage(benchmark::State& state) {
  const PipelineConfig cfg;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(enroll_image(sample(), cfg));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_EnrollImage)->Unit(benchmark::kMillisecond);

void BM_Dft(benchmark::State& state) {
  std::vector<std::complex<double>> x(static_cast<std::size_t>(state.range(0)));
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& v : x) v = {u(rng), u(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(dft(x));
}
BENCHMARK(BM_Dft)->Arg(80)->Arg(120);

void BM_Identify(benchmark::State& state) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  std::vector<Template> gallery(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < gallery.size(); ++i) {
    gallery[i].id = {static_cast<std::uint32_t>(100 + i), 1};
    gallery[i].descriptors.resize(80);
    for (auto& d : gallery[i].descriptors) d = u(rng);
  }
  const Template probe = gallery.back();
  for (auto _ : state) benchmark::DoNotOptimize(identify(probe, gallery, 75.0));
}
BENCHMARK(BM_Identify)->Arg(80)->Arg(800);

}  // namespace

BENCHMARK_MAIN();
