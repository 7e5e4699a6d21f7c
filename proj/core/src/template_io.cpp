#include "ridgekit/template_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "ridgekit/error.hpp"

namespace ridgekit {

namespace fs = std::filesystem;

namespace {

class Writer {
 public:
  void u16(std::uint16_t v) { put(v, 2); }
  void u32(std::uint32_t v) { put(v, 4); }
  void f64(double v) { put(std::bit_cast<std::uint64_t>(v), 8); }
  void bytes(std::string_view s) { buf_.insert(buf_.end(), s.begin(), s.end()); }
  std::vector<std::uint8_t>& buffer() { return buf_; }

 private:
  void put(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> buf_;
};

std::uint64_t get_le(std::span<const std::uint8_t> b, std::size_t pos, int n) {
  std::uint64_t v = 0;
  for (int i = 0; i < n; ++i) v |= static_cast<std::uint64_t>(b[pos + i]) << (8 * i);
  return v;
}

std::uint32_t crc_of(std::span<const std::uint8_t> b) {
  return static_cast<std::uint32_t>(
      crc32(crc32(0L, Z_NULL, 0), b.data(), static_cast<uInt>(b.size())));
}

std::uint16_t narrow16(int v, const char* what) {
  if (v < 0 || v > 0xFFFF) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " does not fit in 16 bits");
  }
  return static_cast<std::uint16_t>(v);
}

}  // namespace

std::vector<std::uint8_t> encode_template(const Template& t) {
  Writer w;
  w.bytes("FPTL");
  w.u16(kTemplateVersion);
  w.u16(narrow16(t.descriptor_count(), "descriptor count"));
  w.u16(narrow16(t.signature_length, "signature length"));
  w.u16(narrow16(t.radius, "radius"));
  w.u32(t.id.finger);
  w.u16(t.id.impression);
  w.u16(0);
  for (double d : t.descriptors) w.f64(d);
  auto& buf = w.buffer();
  w.u32(crc_of(buf));
  return std::move(buf);
}

Template decode_template(std::span<const std::uint8_t> b) {
  if (b.size() < 4 || std::memcmp(b.data(), "FPTL", 4) != 0) {
    throw Error(ErrorCode::BadMagic, "not a template file");
  }
  if (b.size() < kTemplateHeaderSize + 4) {
    throw Error(ErrorCode::ChecksumMismatch, "template file truncated");
  }
  const auto version = static_cast<std::uint16_t>(get_le(b, 4, 2));
  const auto count = static_cast<std::size_t>(get_le(b, 6, 2));
  const std::size_t expected = kTemplateHeaderSize + 8 * count + 4;
  if (b.size() != expected) {
    throw Error(ErrorCode::ChecksumMismatch, "template size " + std::to_string(b.size()) +
                                                 " does not match header (" +
                                                 std::to_string(expected) + ")");
  }
  const auto stored = static_cast<std::uint32_t>(get_le(b, expected - 4, 4));
  if (stored != crc_of(b.first(expected - 4))) {
    throw Error(ErrorCode::ChecksumMismatch, "template CRC mismatch");
  }
  if (version != kTemplateVersion) {
    throw Error(ErrorCode::VersionMismatch, "template version " + std::to_string(version));
  }
  Template t;
  t.signature_length = static_cast<int>(get_le(b, 8, 2));
  t.radius = static_cast<int>(get_le(b, 10, 2));
  t.id.finger = static_cast<std::uint32_t>(get_le(b, 12, 4));
  t.id.impression = static_cast<std::uint16_t>(get_le(b, 16, 2));
  t.descriptors.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    t.descriptors[k] = std::bit_cast<double>(get_le(b, kTemplateHeaderSize + 8 * k, 8));
  }
  return t;
}

namespace {

void write_atomically(const fs::path& path, std::span<const std::uint8_t> bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::IoError, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "rename to " + path.string() + ": " + ec.message());
}

}  // namespace

void save_template(const Template& t, const fs::path& path) {
  write_atomically(path, encode_template(t));
}

Template load_template(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                        std::istreambuf_iterator<char>()};
  return decode_template(bytes);
}

std::string template_filename(const TemplateId& id) {
  return std::to_string(id.finger) + "_" + std::to_string(id.impression) + ".fptl";
}

TemplateDatabase::TemplateDatabase(fs::path dir) : dir_(std::move(dir)) {}

std::vector<DatabaseEntry> TemplateDatabase::entries() const {
  std::vector<DatabaseEntry> out;
  std::ifstream in(dir_ / "db.tsv");
  if (!in) return out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::istringstream row(line);
    DatabaseEntry e;
    unsigned long finger = 0;
    unsigned long impression = 0;
    if (!(row >> finger >> impression >> e.filename) || impression > 0xFFFF) {
      throw Error(ErrorCode::IoError, "malformed db.tsv row: " + line);
    }
    e.id = {static_cast<std::uint32_t>(finger), static_cast<std::uint16_t>(impression)};
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Template> TemplateDatabase::load_all() const {
  std::vector<Template> out;
  for (const auto& e : entries()) out.push_back(load_template(dir_ / e.filename));
  return out;
}

void TemplateDatabase::write_index(const std::vector<DatabaseEntry>& entries) const {
  std::string text = "finger_id\timpression_id\tfile\n";
  for (const auto& e : entries) {
    text += std::to_string(e.id.finger) + "\t" + std::to_string(e.id.impression) + "\t" +
            e.filename + "\n";
  }
  write_atomically(dir_ / "db.tsv",
                   std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

void TemplateDatabase::put(const Template& t) { put_all({t}); }

void TemplateDatabase::put_all(const std::vector<Template>& templates) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir_.string() + ": " + ec.message());
  auto index = entries();
  for (const auto& t : templates) {
    const auto name = template_filename(t.id);
    save_template(t, dir_ / name);
    std::erase_if(index, [&](const DatabaseEntry& e) { return e.id == t.id; });
    index.push_back({t.id, name});
  }
  std::sort(index.begin(), index.end(),
            [](const DatabaseEntry& a, const DatabaseEntry& b) { return a.id < b.id; });
  write_index(index);
}

}  // namespace ridgekit
