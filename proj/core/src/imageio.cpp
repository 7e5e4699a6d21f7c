#include "ridgekit/imageio.hpp"

#include <png.h>
#include <tiffio.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>

#include "ridgekit/error.hpp"

namespace ridgekit {

namespace fs = std::filesystem;

namespace {

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool starts_with(std::span<const std::uint8_t> bytes, std::string_view magic) {
  return bytes.size() >= magic.size() &&
         std::memcmp(bytes.data(), magic.data(), magic.size()) == 0;
}

GrayImage decode_png(const fs::path& path, std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw Error(ErrorCode::CorruptImage, path.string() + ": " + image.message);
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const int channels = color ? 3 : 1;
  const auto w = static_cast<int>(image.width);
  const auto h = static_cast<int>(image.height);
  std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buf.data(), 0, nullptr)) {
    png_image_free(&image);
    throw Error(ErrorCode::CorruptImage, path.string() + ": " + image.message);
  }
  if (channels == 1) return GrayImage(w, h, std::move(buf));
  GrayImage out(w, h);
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    const unsigned sum = buf[3 * i] + buf[3 * i + 1] + buf[3 * i + 2];
    px[i] = static_cast<std::uint8_t>((sum + 1) / 3);
  }
  return out;
}

GrayImage decode_tiff(const fs::path& path) {
  TIFFSetWarningHandler(nullptr);
  TIFFSetErrorHandler(nullptr);
  std::unique_ptr<TIFF, decltype(&TIFFClose)> tif(TIFFOpen(path.string().c_str(), "r"),
                                                  &TIFFClose);
  if (!tif) throw Error(ErrorCode::CorruptImage, path.string() + ": unreadable TIFF");
  std::uint32_t w = 0;
  std::uint32_t h = 0;
  TIFFGetField(tif.get(), TIFFTAG_IMAGEWIDTH, &w);
  TIFFGetField(tif.get(), TIFFTAG_IMAGELENGTH, &h);
  if (w == 0 || h == 0) throw Error(ErrorCode::CorruptImage, path.string() + ": empty TIFF");
  std::vector<std::uint32_t> rgba(static_cast<std::size_t>(w) * h);
  if (!TIFFReadRGBAImageOriented(tif.get(), w, h, rgba.data(), ORIENTATION_TOPLEFT, 0)) {
    throw Error(ErrorCode::CorruptImage, path.string() + ": TIFF decode failed");
  }
  GrayImage out(static_cast<int>(w), static_cast<int>(h));
  auto px = out.pixels();
  for (std::size_t i = 0; i < rgba.size(); ++i) {
    const unsigned sum = TIFFGetR(rgba[i]) + TIFFGetG(rgba[i]) + TIFFGetB(rgba[i]);
    px[i] = static_cast<std::uint8_t>((sum + 1) / 3);
  }
  return out;
}

}  // namespace

GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
  if (!starts_with(bytes, "P5")) throw Error(ErrorCode::UnsupportedFormat, "not a binary PGM");
  std::size_t pos = 2;
  auto next_token = [&]() -> long {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(bytes[pos])) {
        ++pos;
      } else {
        break;
      }
    }
    long value = 0;
    std::size_t digits = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos] - '0');
      if (value > 1'000'000) throw Error(ErrorCode::CorruptImage, "PGM header value too large");
      ++pos;
      ++digits;
    }
    if (digits == 0) throw Error(ErrorCode::CorruptImage, "malformed PGM header");
    return value;
  };
  const long w = next_token();
  const long h = next_token();
  const long maxval = next_token();
  if (w < 1 || h < 1) throw Error(ErrorCode::CorruptImage, "PGM has zero dimension");
  if (maxval != 255) throw Error(ErrorCode::UnsupportedFormat, "only 8-bit PGM is supported");
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
    throw Error(ErrorCode::CorruptImage, "malformed PGM header");
  }
  ++pos;
  const auto n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  if (bytes.size() - pos < n) throw Error(ErrorCode::CorruptImage, "truncated PGM raster");
  return GrayImage(static_cast<int>(w), static_cast<int>(h),
                   std::vector<std::uint8_t>(bytes.begin() + static_cast<long>(pos),
                                             bytes.begin() + static_cast<long>(pos + n)));
}

GrayImage load_grayscale(const fs::path& path) {
  if (!fs::exists(path)) throw Error(ErrorCode::FileNotFound, path.string());
  const auto bytes = read_file(path);
  if (starts_with(bytes, "P5")) return decode_pgm(bytes);
  if (starts_with(bytes, "\x89PNG")) return decode_png(path, bytes);
  if (starts_with(bytes, "II*") || starts_with(bytes, std::string_view("MM\0*", 4))) {
    return decode_tiff(path);
  }
  throw Error(ErrorCode::UnsupportedFormat, path.string());
}

void save_pgm(const GrayImage& img, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  const auto px = img.pixels();
  out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
  if (!out) throw Error(ErrorCode::IoError, "short write to " + path.string());
}

GrayImage resize(const GrayImage& img, int width, int height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::ZeroDimension, "resize target must be at least 1x1");
  }
  if (width == img.width() && height == img.height()) return img;

  const double sx = static_cast<double>(img.width()) / width;
  const double sy = static_cast<double>(img.height()) / height;
  const int max_x = img.width() - 1;
  const int max_y = img.height() - 1;

  GrayImage out(width, height);
  for (int y = 0; y < height; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, static_cast<double>(max_y));
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, max_y);
    const double wy = fy - y0;
    for (int x = 0; x < width; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, static_cast<double>(max_x));
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, max_x);
      const double wx = fx - x0;
      const double top = img.at(x0, y0) * (1.0 - wx) + img.at(x1, y0) * wx;
      const double bottom = img.at(x0, y1) * (1.0 - wx) + img.at(x1, y1) * wx;
      const double v = top * (1.0 - wy) + bottom * wy;
      out.at(x, y) = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  }
  return out;
}

}  // namespace ridgekit
