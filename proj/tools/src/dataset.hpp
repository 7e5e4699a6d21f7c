#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "ridgekit/descriptor.hpp"

namespace ridgekit::cli {

struct DatasetImage {
  TemplateId id;
  std::filesystem::path path;
};

/// Parses FVC-style names such as `101_3.tif` into (101, 3).
std::optional<TemplateId> parse_image_id(const std::filesystem::path& path);

/// Raster files named `<finger>_<impression>.<ext>` in `dir`, ordered by id.
/// Throws Error{FileNotFound} if `dir` is not a directory.
std::vector<DatasetImage> scan_dataset(const std::filesystem::path& dir);

}  // namespace ridgekit::cli
