#include "ridgekit/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "ridgekit/error.hpp"

namespace ridgekit {

namespace fs = std::filesystem;

std::string_view to_string(DescriptorMode mode) noexcept {
  return mode == DescriptorMode::Real ? "real" : "magnitude";
}

void PipelineConfig::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::BadConfig, what);
  };
  require(working_size >= 32, "working_size must be >= 32");
  require(denoise_window >= 3 && denoise_window % 2 == 1, "denoise_window must be odd and >= 3");
  require(block_size >= 3, "block_size must be >= 3");
  require(smoothing_sigma > 0.0, "smoothing_sigma must be > 0");
  require(core_threshold >= 0.0 && core_threshold <= 1.0, "core_threshold must be in [0, 1]");
  require(foreground_ratio >= 0.0, "foreground_ratio must be >= 0");
  require(radius > 0, "radius must be > 0");
  require(binarize_threshold >= 0 && binarize_threshold <= 255,
          "binarize_threshold must be in [0, 255]");
  require(spur_iterations >= 0, "spur_iterations must be >= 0");
  require(prune_distance > 0.0, "prune_distance must be > 0");
  require(boundary_margin >= 0, "boundary_margin must be >= 0");
  require(signature_length >= 1, "signature_length must be >= 1");
  require(descriptor_count >= 1 && descriptor_count <= signature_length,
          "descriptor_count must be in [1, signature_length]");
  require(match_threshold >= 0.0, "match_threshold must be >= 0");
}

FourierOptions PipelineConfig::fourier() const {
  return {signature_length, descriptor_count, descriptor_mode, normalize_descriptors};
}

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::BadConfig, "bad value for " + std::string(key) + ": '" +
                                          std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw Error(ErrorCode::BadConfig, "bad boolean for " + std::string(key));
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

using Setter = std::function<void(PipelineConfig&, std::string_view, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> t;
    auto int_field = [](int PipelineConfig::*field) -> Setter {
      return [field](PipelineConfig& c, std::string_view k, std::string_view v) {
        c.*field = parse_number<int>(k, v);
      };
    };
    auto double_field = [](double PipelineConfig::*field) -> Setter {
      return [field](PipelineConfig& c, std::string_view k, std::string_view v) {
        c.*field = parse_number<double>(k, v);
      };
    };
    t["working_size"] = int_field(&PipelineConfig::working_size);
    t["denoise_window"] = int_field(&PipelineConfig::denoise_window);
    t["block_size"] = int_field(&PipelineConfig::block_size);
    t["smoothing_sigma"] = double_field(&PipelineConfig::smoothing_sigma);
    t["core_threshold"] = double_field(&PipelineConfig::core_threshold);
    t["foreground_ratio"] = double_field(&PipelineConfig::foreground_ratio);
    t["radius"] = int_field(&PipelineConfig::radius);
    t["binarize_threshold"] = int_field(&PipelineConfig::binarize_threshold);
    t["spur_iterations"] = int_field(&PipelineConfig::spur_iterations);
    t["prune_distance"] = double_field(&PipelineConfig::prune_distance);
    t["boundary_margin"] = int_field(&PipelineConfig::boundary_margin);
    t["signature_length"] = int_field(&PipelineConfig::signature_length);
    t["descriptor_count"] = int_field(&PipelineConfig::descriptor_count);
    t["match_threshold"] = double_field(&PipelineConfig::match_threshold);
    t["descriptor_mode"] = [](PipelineConfig& c, std::string_view k, std::string_view v) {
      if (v == "real") {
        c.descriptor_mode = DescriptorMode::Real;
      } else if (v == "magnitude") {
        c.descriptor_mode = DescriptorMode::Magnitude;
      } else {
        throw Error(ErrorCode::BadConfig, "bad value for " + std::string(k) + ": '" +
                                              std::string(v) + "'");
      }
    };
    t["normalize_descriptors"] = [](PipelineConfig& c, std::string_view k, std::string_view v) {
      c.normalize_descriptors = parse_bool(k, v);
    };
    return t;
  }();
  return table;
}

}  // namespace

void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value) {
  const auto it = setters().find(key);
  if (it == setters().end()) throw Error(ErrorCode::BadConfig, "unknown key '" + std::string(key) + "'");
  it->second(cfg, key, value);
}

PipelineConfig parse_config(std::string_view text, PipelineConfig base) {
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::BadConfig, "line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

PipelineConfig load_config(const fs::path& path, PipelineConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadConfig, "cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), base);
}

std::string format_config(const PipelineConfig& c) {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out.append(key).append(" = ").append(value).append("\n");
  };
  line("working_size", std::to_string(c.working_size));
  line("denoise_window", std::to_string(c.denoise_window));
  line("block_size", std::to_string(c.block_size));
  line("smoothing_sigma", format_double(c.smoothing_sigma));
  line("core_threshold", format_double(c.core_threshold));
  line("foreground_ratio", format_double(c.foreground_ratio));
  line("radius", std::to_string(c.radius));
  line("binarize_threshold", std::to_string(c.binarize_threshold));
  line("spur_iterations", std::to_string(c.spur_iterations));
  line("prune_distance", format_double(c.prune_distance));
  line("boundary_margin", std::to_string(c.boundary_margin));
  line("signature_length", std::to_string(c.signature_length));
  line("descriptor_count", std::to_string(c.descriptor_count));
  line("descriptor_mode", std::string(to_string(c.descriptor_mode)));
  line("normalize_descriptors", c.normalize_descriptors ? "true" : "false");
  line("match_threshold", format_double(c.match_threshold));
  return out;
}

void save_config(const PipelineConfig& cfg, const fs::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << format_config(cfg);
}

}  // namespace ridgekit
