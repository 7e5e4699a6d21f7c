#include "ridgekit/pipeline.hpp"

#include "ridgekit/enhance.hpp"
#include "ridgekit/error.hpp"
#include "ridgekit/imageio.hpp"
#include "ridgekit/ridgemap.hpp"

namespace ridgekit {

namespace {

bool near_background(const BinaryImage& foreground, int x, int y, int margin) {
  for (int dy = -margin; dy <= margin; ++dy) {
    for (int dx = -margin; dx <= margin; ++dx) {
      const int xx = x + dx;
      const int yy = y + dy;
      if (foreground.contains(xx, yy) && !foreground.at(xx, yy)) return true;
    }
  }
  return false;
}

}  // namespace

PreparedImage prepare(const GrayImage& raw, const PipelineConfig& cfg) {
  cfg.validate();
  auto resized = resize(raw, cfg.working_size, cfg.working_size);
  auto blocks = foreground_blocks(resized, cfg.block_size, cfg.foreground_ratio);
  auto foreground = foreground_pixels(blocks, cfg.block_size, resized.width(), resized.height());
  auto equalized = equalize(resized, foreground);
  auto enhanced = adaptive_denoise(equalized, cfg.denoise_window);
  auto orientation = analyze_orientation(enhanced, std::move(blocks), cfg);
  std::optional<CorePoint> core;
  try {
    core = locate_core(orientation.strength, orientation.foreground, cfg.block_size,
                       enhanced.width(), enhanced.height(), cfg.core_threshold);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoCoreFound) throw;
  }
  return {std::move(resized),  std::move(foreground),  std::move(equalized),
          std::move(enhanced), std::move(orientation), core};
}

RidgeStages extract_ridges(const PreparedImage& prepared, const PipelineConfig& cfg) {
  if (!prepared.core) throw Error(ErrorCode::NoCoreFound, "no singular point detected");
  auto roi = extract_roi(prepared.enhanced, *prepared.core, cfg.radius);
  auto binary = binarize(roi.image, roi.mask, cfg.binarize_threshold);
  for (int y = 0; y < binary.height(); ++y) {
    for (int x = 0; x < binary.width(); ++x) {
      if (!prepared.foreground.at(x, y)) binary.set(x, y, false);
    }
  }
  auto thinned = thin(binary);
  auto morphed = spur(hbreak(clean(thinned)), cfg.spur_iterations);
  auto raw = extract_minutiae(morphed, roi.mask, prepared.orientation.smoothed, cfg.boundary_margin);
  std::erase_if(raw.items, [&](const Minutia& m) {
    return near_background(prepared.foreground, m.x, m.y, cfg.boundary_margin);
  });
  auto minutiae = remove_spurious(raw, cfg.prune_distance);
  return {std::move(roi),     std::move(binary), std::move(thinned), std::move(morphed),
          std::move(raw),     std::move(minutiae)};
}

Template make_template(const MinutiaeSet& minutiae, const PipelineConfig& cfg, TemplateId id) {
  const auto opts = cfg.fourier();
  Template t = fourier_template(
      minutiae.items.empty() ? ComplexSignature{} : build_signature(minutiae), opts);
  t.radius = minutiae.radius;
  t.id = id;
  return t;
}

Template enroll_image(const GrayImage& raw, const PipelineConfig& cfg, TemplateId id) {
  const auto prepared = prepare(raw, cfg);
  const auto stages = extract_ridges(prepared, cfg);
  return make_template(stages.minutiae, cfg, id);
}

}  // namespace ridgekit
