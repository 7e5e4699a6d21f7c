#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ridgekit/descriptor.hpp"

namespace ridgekit {

// Template file, little-endian:
//   "FPTL" | version u16 | K u16 | L u16 | R u16 | finger u32 |
//   impression u16 | reserved u16 | K x float64 | CRC-32 of all preceding bytes
inline constexpr std::uint16_t kTemplateVersion = 1;
inline constexpr std::size_t kTemplateHeaderSize = 20;

std::vector<std::uint8_t> encode_template(const Template& t);
/// Throws Error{BadMagic | VersionMismatch | ChecksumMismatch}.
Template decode_template(std::span<const std::uint8_t> bytes);

/// Atomic write (temporary file, then rename). Throws Error{IoError}.
void save_template(const Template& t, const std::filesystem::path& path);
Template load_template(const std::filesystem::path& path);

std::string template_filename(const TemplateId& id);

struct DatabaseEntry {
  TemplateId id;
  std::string filename;
};

/// A directory of template files indexed by db.tsv.
class TemplateDatabase {
 public:
  explicit TemplateDatabase(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }

  /// Reads db.tsv; a missing index yields an empty list.
  std::vector<DatabaseEntry> entries() const;
  std::vector<Template> load_all() const;

  /// Writes the template file and adds or replaces its index row.
  void put(const Template& t);
  void put_all(const std::vector<Template>& templates);

 private:
  void write_index(const std::vector<DatabaseEntry>& entries) const;

  std::filesystem::path dir_;
};

}  // namespace ridgekit
