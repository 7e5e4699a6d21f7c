#include "raster_io.hpp"

#include <png.h>
#include <tiffio.h>
#include <unistd.h>

#include <atomic>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace ridgekit::testing {

namespace fs = std::filesystem;

void write_png_gray(const GrayImage& img, const fs::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&image, path.string().c_str(), 0, img.pixels().data(), 0, nullptr)) {
    throw std::runtime_error("png write failed: " + path.string());
  }
}

void write_png_rgb(int width, int height, std::uint8_t r, std::uint8_t g, std::uint8_t b,
                   const fs::path& path) {
  std::vector<std::uint8_t> buf;
  for (int i = 0; i < width * height; ++i) {
    buf.push_back(r);
    buf.push_back(g);
    buf.push_back(b);
  }
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(width);
  image.height = static_cast<png_uint_32>(height);
  image.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&image, path.string().c_str(), 0, buf.data(), 0, nullptr)) {
    throw std::runtime_error("png write failed: " + path.string());
  }
}

void write_tiff_gray(const GrayImage& img, const fs::path& path) {
  TIFF* tif = TIFFOpen(path.string().c_str(), "w");
  if (!tif) throw std::runtime_error("tiff open failed: " + path.string());
  TIFFSetField(tif, TIFFTAG_IMAGEWIDTH, static_cast<std::uint32_t>(img.width()));
  TIFFSetField(tif, TIFFTAG_IMAGELENGTH, static_cast<std::uint32_t>(img.height()));
  TIFFSetField(tif, TIFFTAG_SAMPLESPERPIXEL, 1);
  TIFFSetField(tif, TIFFTAG_BITSPERSAMPLE, 8);
  TIFFSetField(tif, TIFFTAG_PHOTOMETRIC, PHOTOMETRIC_MINISBLACK);
  TIFFSetField(tif, TIFFTAG_PLANARCONFIG, PLANARCONFIG_CONTIG);
  TIFFSetField(tif, TIFFTAG_ROWSPERSTRIP, 1);
  for (int y = 0; y < img.height(); ++y) {
    auto row = const_cast<std::uint8_t*>(img.pixels().data() + static_cast<std::size_t>(y) * img.width());
    if (TIFFWriteScanline(tif, row, static_cast<std::uint32_t>(y), 0) < 0) {
      TIFFClose(tif);
      throw std::runtime_error("tiff write failed: " + path.string());
    }
  }
  TIFFClose(tif);
}

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          ("ridgekit-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

}  // namespace ridgekit::testing
