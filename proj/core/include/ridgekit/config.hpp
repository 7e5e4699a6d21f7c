#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ridgekit/descriptor.hpp"

namespace ridgekit {

struct PipelineConfig {
  int working_size = 400;
  int denoise_window = 3;
  int block_size = 10;
  double smoothing_sigma = 1.0;
  double core_threshold = 0.3;
  double foreground_ratio = 0.2;
  int radius = 100;
  int binarize_threshold = 160;
  int spur_iterations = 8;
  double prune_distance = 6.0;
  int boundary_margin = 10;
  int signature_length = 128;
  int descriptor_count = 80;
  DescriptorMode descriptor_mode = DescriptorMode::Real;
  bool normalize_descriptors = true;
  double match_threshold = 75.0;

  /// Throws Error{BadConfig} on any violated constraint.
  void validate() const;

  FourierOptions fourier() const;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

/// Applies one `key = value` setting. Throws Error{BadConfig} for unknown
/// keys or unparsable values.
void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value);

/// Flat `key = value` text; `#` starts a comment.
PipelineConfig parse_config(std::string_view text, PipelineConfig base = {});
PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base = {});
std::string format_config(const PipelineConfig& cfg);
void save_config(const PipelineConfig& cfg, const std::filesystem::path& path);

std::string_view to_string(DescriptorMode mode) noexcept;

}  // namespace ridgekit
