#include "entrothresh/image.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

#include "entrothresh/error.hpp"
#include "file_io.hpp"

#ifdef ENTROTHRESH_HAVE_PNG
#include <png.h>
#endif

namespace entrothresh {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::FileNotFound: return "file not found";
    case ErrorCode::MalformedHeader: return "malformed header";
    case ErrorCode::UnsupportedFormat: return "unsupported format";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown error";
}

namespace {

void check_dimensions(std::uint32_t width, std::uint32_t height,
                      std::size_t pixel_count) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "image dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
  if (pixel_count != static_cast<std::size_t>(width) * height) {
    throw Error(ErrorCode::InvalidArgument,
                "pixel buffer holds " + std::to_string(pixel_count) +
                    " values, expected " +
                    std::to_string(static_cast<std::size_t>(width) * height));
  }
}

}  // namespace

GrayImage::GrayImage(std::uint32_t width, std::uint32_t height,
                     std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dimensions(width_, height_, pixels_.size());
}

BiLevelImage::BiLevelImage(std::uint32_t width, std::uint32_t height,
                           std::vector<Tone> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dimensions(width_, height_, pixels_.size());
  for (Tone t : pixels_) {
    if (t != Tone::Black && t != Tone::White) {
      throw Error(ErrorCode::InvalidArgument,
                  "bi-level pixel is neither black nor white");
    }
  }
}

BiLevelImage BiLevelImage::inverted() const {
  std::vector<Tone> out(pixels_.size());
  std::transform(pixels_.begin(), pixels_.end(), out.begin(), [](Tone t) {
    return t == Tone::Black ? Tone::White : Tone::Black;
  });
  return BiLevelImage(width_, height_, std::move(out));
}

Histogram::Histogram(const Counts& counts) : counts_(counts) {
  for (std::uint64_t c : counts_) total_ += c;
  if (total_ == 0) {
    throw Error(ErrorCode::Domain, "histogram has no samples");
  }
  const double n = static_cast<double>(total_);
  for (int i = 0; i < kGrayLevels; ++i) {
    frequencies_[i] = static_cast<double>(counts_[i]) / n;
  }
}

int Histogram::occupied_levels() const noexcept {
  return static_cast<int>(std::count_if(counts_.begin(), counts_.end(),
                                        [](std::uint64_t c) { return c > 0; }));
}

Histogram build_histogram(const GrayImage& img) {
  Histogram::Counts counts{};
  for (std::uint8_t v : img.pixels()) ++counts[v];
  return Histogram(counts);
}

// ---------------------------------------------------------------------------
// PGM

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments that run to end of line.
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' &&
               bytes_[pos_] != '\r') {
          ++pos_;
        }
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t read_uint(const char* what) {
    skip_separators();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 0xFFFFFFFFull) {
        throw Error(ErrorCode::MalformedHeader,
                    std::string("PGM ") + what + " is out of range");
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw Error(ErrorCode::MalformedHeader,
                  std::string("PGM header is missing the ") + what);
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void expect_single_whitespace() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw Error(ErrorCode::MalformedHeader,
                  "PGM maxval must be followed by a whitespace byte");
    }
    ++pos_;
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw Error(ErrorCode::FileNotFound, "no such file: " + path.string());
  }
  if (std::filesystem::is_directory(path, ec)) {
    throw Error(ErrorCode::UnsupportedFormat,
                "path is a directory: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open " + path.string());
  }
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

template <typename Image, typename ToByte>
std::vector<std::uint8_t> encode_raster(const Image& img, ToByte to_byte) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + img.size());
  for (auto v : img.pixels()) out.push_back(to_byte(v));
  return out;
}

#ifdef ENTROTHRESH_HAVE_PNG
GrayImage decode_png(const std::filesystem::path& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    throw Error(ErrorCode::MalformedHeader,
                std::string("PNG decode failed: ") + image.message);
  }
  image.format = PNG_FORMAT_RGB;
  if (image.width == 0 || image.height == 0) {
    png_image_free(&image);
    throw Error(ErrorCode::MalformedHeader, "PNG has zero width or height");
  }
  std::vector<std::uint8_t> rgb(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, rgb.data(), 0, nullptr)) {
    std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::MalformedHeader, "PNG decode failed: " + msg);
  }
  std::vector<std::uint8_t> gray(static_cast<std::size_t>(image.width) *
                                 image.height);
  for (std::size_t i = 0; i < gray.size(); ++i) {
    gray[i] = to_grayscale(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
  }
  return GrayImage(image.width, image.height, std::move(gray));
}
#endif

constexpr std::uint8_t kPngSignature[] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};

}  // namespace

GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2) {
    throw Error(ErrorCode::MalformedHeader, "file too short for a PGM header");
  }
  if (bytes[0] != 'P') {
    throw Error(ErrorCode::MalformedHeader, "missing PGM magic number");
  }
  if (bytes[1] != '5') {
    throw Error(ErrorCode::UnsupportedFormat,
                std::string("only binary PGM (P5) is supported, got P") +
                    static_cast<char>(bytes[1]));
  }
  HeaderReader reader(bytes.subspan(2));
  const auto width = reader.read_uint("width");
  const auto height = reader.read_uint("height");
  const auto maxval = reader.read_uint("maxval");
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::MalformedHeader, "PGM width and height must be positive");
  }
  if (maxval == 0 || maxval > 65535) {
    throw Error(ErrorCode::MalformedHeader,
                "PGM maxval " + std::to_string(maxval) + " is out of range");
  }
  if (maxval != 255) {
    throw Error(ErrorCode::UnsupportedFormat,
                "PGM maxval " + std::to_string(maxval) +
                    " is not supported, only 255");
  }
  reader.expect_single_whitespace();
  const std::size_t offset = 2 + reader.position();
  const std::size_t expected = static_cast<std::size_t>(width) * height;
  if (bytes.size() - offset < expected) {
    throw Error(ErrorCode::MalformedHeader,
                "PGM raster truncated: expected " + std::to_string(expected) +
                    " bytes, found " + std::to_string(bytes.size() - offset));
  }
  auto raster = bytes.subspan(offset, expected);
  return GrayImage(static_cast<std::uint32_t>(width),
                   static_cast<std::uint32_t>(height),
                   std::vector<std::uint8_t>(raster.begin(), raster.end()));
}

GrayImage load_image(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  if (bytes.empty()) {
    throw Error(ErrorCode::MalformedHeader, "empty file: " + path.string());
  }
  if (bytes.size() >= sizeof kPngSignature &&
      std::equal(std::begin(kPngSignature), std::end(kPngSignature),
                 bytes.begin())) {
#ifdef ENTROTHRESH_HAVE_PNG
    return decode_png(path);
#else
    throw Error(ErrorCode::UnsupportedFormat,
                "PNG input requires a build with libpng: " + path.string());
#endif
  }
  if (bytes[0] != 'P') {
    throw Error(ErrorCode::UnsupportedFormat,
                "unrecognized image format: " + path.string());
  }
  return decode_pgm(bytes);
}

bool png_supported() noexcept {
#ifdef ENTROTHRESH_HAVE_PNG
  return true;
#else
  return false;
#endif
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
  return encode_raster(img, [](std::uint8_t v) { return v; });
}

std::vector<std::uint8_t> encode_pgm(const BiLevelImage& img) {
  return encode_raster(img, [](Tone t) -> std::uint8_t {
    return t == Tone::White ? 255 : 0;
  });
}

void write_gray(const GrayImage& img, const std::filesystem::path& path) {
  detail::write_file_atomic(path, encode_pgm(img));
}

void write_bilevel(const BiLevelImage& img, const std::filesystem::path& path) {
  detail::write_file_atomic(path, encode_pgm(img));
}

}  // namespace entrothresh
