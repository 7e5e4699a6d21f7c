#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ridgekit {

enum class ErrorCode {
  FileNotFound,
  UnsupportedFormat,
  CorruptImage,
  ZeroDimension,
  BadWindow,
  ImageTooSmall,
  FieldTooSmall,
  NoCoreFound,
  BadRadius,
  NotThinned,
  EmptyMinutiaeSet,
  BadDescriptorCount,
  IoError,
  BadMagic,
  VersionMismatch,
  ChecksumMismatch,
  IncompatibleTemplates,
  EmptyDatabase,
  InsufficientData,
  InvalidArgument,
  BadConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// batch drivers can log and continue on per-image errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ridgekit
