#include "dataset.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "ridgekit/error.hpp"

namespace ridgekit::cli {

namespace fs = std::filesystem;

namespace {

template <typename T>
bool parse_number(std::string_view text, T& out) {
  if (text.empty()) return false;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && end == text.data() + text.size();
}

bool is_raster(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".tif" || ext == ".tiff" || ext == ".png" || ext == ".pgm";
}

}  // namespace

std::optional<TemplateId> parse_image_id(const fs::path& path) {
  const std::string stem = path.stem().string();
  const auto sep = stem.find('_');
  if (sep == std::string::npos) return std::nullopt;
  TemplateId id;
  if (!parse_number(std::string_view(stem).substr(0, sep), id.finger)) return std::nullopt;
  if (!parse_number(std::string_view(stem).substr(sep + 1), id.impression)) return std::nullopt;
  return id;
}

std::vector<DatasetImage> scan_dataset(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::FileNotFound, "dataset directory " + dir.string() + " not found");
  }
  std::vector<DatasetImage> images;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || !is_raster(entry.path())) continue;
    if (const auto id = parse_image_id(entry.path())) images.push_back({*id, entry.path()});
  }
  std::sort(images.begin(), images.end(), [](const DatasetImage& a, const DatasetImage& b) {
    return a.id != b.id ? a.id < b.id : a.path < b.path;
  });
  return images;
}

}  // namespace ridgekit::cli
