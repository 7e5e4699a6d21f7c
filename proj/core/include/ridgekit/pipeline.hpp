#pragma once

#include <optional>

#include "ridgekit/config.hpp"
#include "ridgekit/corepoint.hpp"
#include "ridgekit/descriptor.hpp"
#include "ridgekit/image.hpp"
#include "ridgekit/minutiae.hpp"

namespace ridgekit {

/// Everything up to and including core detection; independent of the ROI radius.
struct PreparedImage {
  GrayImage resized;
  BinaryImage foreground;  // fingerprint contact area
  GrayImage equalized;
  GrayImage enhanced;
  CoreDetection orientation;
  std::optional<CorePoint> core;  // empty when no core was found
};

/// Resize, segment, equalize over the contact area, denoise and run the
/// orientation analysis. Core detection failures are recorded as an empty
/// `core`, not thrown.
PreparedImage prepare(const GrayImage& raw, const PipelineConfig& cfg);

struct RidgeStages {
  RoiImage roi;
  BinaryImage binary;
  BinaryImage thinned;
  BinaryImage morphed;
  MinutiaeSet raw_minutiae;
  MinutiaeSet minutiae;
};

/// ROI extraction through spurious-minutiae removal at radius cfg.radius.
/// Background pixels never become ridges, and minutiae closer than the
/// boundary margin to the background are dropped along with the disc-edge ones.
/// Throws Error{NoCoreFound} if `prepared` has no core.
RidgeStages extract_ridges(const PreparedImage& prepared, const PipelineConfig& cfg);

/// Template from a final minutiae set. An empty set yields an all-zero
/// descriptor vector so that poor images still enroll deterministically.
Template make_template(const MinutiaeSet& minutiae, const PipelineConfig& cfg,
                       TemplateId id = {});

/// Full chain from a loaded raster to a template.
Template enroll_image(const GrayImage& raw, const PipelineConfig& cfg, TemplateId id = {});

}  // namespace ridgekit
