#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace entrothresh {

inline constexpr int kGrayLevels = 256;

// Row-major 8-bit grayscale raster. Width and height are always positive.
class GrayImage {
 public:
  GrayImage(std::uint32_t width, std::uint32_t height,
            std::vector<std::uint8_t> pixels);

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::uint8_t at(std::uint32_t x, std::uint32_t y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::vector<std::uint8_t> pixels_;
};

enum class Tone : std::uint8_t { Black = 0, White = 1 };

class BiLevelImage {
 public:
  BiLevelImage(std::uint32_t width, std::uint32_t height,
               std::vector<Tone> pixels);

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  std::span<const Tone> pixels() const noexcept { return pixels_; }
  Tone at(std::uint32_t x, std::uint32_t y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }

  // Swaps black and white everywhere.
  BiLevelImage inverted() const;

  friend bool operator==(const BiLevelImage&, const BiLevelImage&) = default;

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::vector<Tone> pixels_;
};

// Gray-level counts N_i, their total N and the frequencies f_i = N_i / N.
class Histogram {
 public:
  using Counts = std::array<std::uint64_t, kGrayLevels>;

  // Throws Domain when every count is zero.
  explicit Histogram(const Counts& counts);

  const Counts& counts() const noexcept { return counts_; }
  std::uint64_t count(int level) const { return counts_.at(level); }
  std::uint64_t total() const noexcept { return total_; }
  const std::array<double, kGrayLevels>& frequencies() const noexcept {
    return frequencies_;
  }
  double frequency(int level) const { return frequencies_.at(level); }
  int occupied_levels() const noexcept;

  friend bool operator==(const Histogram& a, const Histogram& b) {
    return a.counts_ == b.counts_;
  }

 private:
  Counts counts_{};
  std::uint64_t total_ = 0;
  std::array<double, kGrayLevels> frequencies_{};
};

// PGM P5 is always supported. PNG is available when the library was built
// with libpng (see png_supported()).
GrayImage load_image(const std::filesystem::path& path);

// Parses an in-memory P5 stream.
GrayImage decode_pgm(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_pgm(const GrayImage& img);
std::vector<std::uint8_t> encode_pgm(const BiLevelImage& img);

void write_gray(const GrayImage& img, const std::filesystem::path& path);

// Black is written as 0, white as 255.
void write_bilevel(const BiLevelImage& img, const std::filesystem::path& path);

bool png_supported() noexcept;

// BT.601 luma, rounded half up: round(0.299 r + 0.587 g + 0.114 b).
constexpr std::uint8_t to_grayscale(std::uint8_t r, std::uint8_t g,
                                    std::uint8_t b) noexcept {
  // Weights scaled by 1000 so the half-up rounding is exact.
  const std::uint32_t scaled = 299u * r + 587u * g + 114u * b + 500u;
  const std::uint32_t level = scaled / 1000u;
  return static_cast<std::uint8_t>(level > 255u ? 255u : level);
}

Histogram build_histogram(const GrayImage& img);

}  // namespace entrothresh
