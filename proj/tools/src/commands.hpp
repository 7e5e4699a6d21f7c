#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ridgekit/config.hpp"

namespace ridgekit::cli {

enum ExitCode : int { kSuccess = 0, kNoMatch = 1, kFailure = 2 };

/// Configuration sources, lowest precedence first: built-in defaults, the
/// file named by RIDGEKIT_CONFIG, the --config file, then individual flags.
struct ConfigOptions {
  std::optional<std::filesystem::path> config_file;
  std::optional<int> radius;
  std::optional<int> descriptors;
  std::optional<double> threshold;
};

/// `env_config` is the value of RIDGEKIT_CONFIG, or null. Throws Error{BadConfig}.
PipelineConfig resolve_config(const ConfigOptions& opts, const char* env_config);

struct EnrollOptions {
  std::vector<std::filesystem::path> images;
  std::filesystem::path db;
  std::optional<std::uint32_t> finger;
  std::optional<std::uint16_t> impression;
};

struct VerifyOptions {
  std::filesystem::path probe;
  std::filesystem::path gallery;  // template file
};

struct IdentifyOptions {
  std::filesystem::path probe;
  std::filesystem::path db;
};

struct EvaluateOptions {
  std::filesystem::path dataset;
  std::filesystem::path out;
  std::vector<int> radii;        // empty: the configured radius
  std::vector<int> descriptors;  // empty: the configured count
  int steps = 200;
};

struct InspectOptions {
  std::filesystem::path image;
  std::filesystem::path out;
  std::string stage = "minutiae";
};

/// Stage names accepted by `inspect --stage`, in pipeline order.
const std::vector<std::string>& inspect_stages();

int run_enroll(const EnrollOptions& opts, const PipelineConfig& cfg, std::ostream& out,
               std::ostream& err);
int run_verify(const VerifyOptions& opts, const PipelineConfig& cfg, std::ostream& out,
               std::ostream& err);
int run_identify(const IdentifyOptions& opts, const PipelineConfig& cfg, std::ostream& out,
                 std::ostream& err);
int run_evaluate(const EvaluateOptions& opts, const PipelineConfig& cfg, std::ostream& out,
                 std::ostream& err);
int run_inspect(const InspectOptions& opts, const PipelineConfig& cfg, std::ostream& out,
                std::ostream& err);

}  // namespace ridgekit::cli
