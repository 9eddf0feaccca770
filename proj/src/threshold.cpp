#include "entrothresh/threshold.hpp"

#include <string>
#include <vector>

#include "entrothresh/error.hpp"

namespace entrothresh {

namespace {

void check_threshold(int t) {
  if (t < kMinThreshold || t > kMaxThreshold) {
    throw Error(ErrorCode::Domain, "threshold " + std::to_string(t) +
                                       " is outside [0, 254]");
  }
}

// Class entries are N_i / N_class, taken straight from the integer counts so
// that scaling every count by the same factor leaves them bit-identical.
ClassDistribution make_class(const Histogram& h, int lo, int hi,
                             std::uint64_t class_count) {
  std::vector<double> probs;
  probs.reserve(static_cast<std::size_t>(hi - lo + 1));
  const double denom = static_cast<double>(class_count);
  for (int i = lo; i <= hi; ++i) {
    probs.push_back(static_cast<double>(h.count(i)) / denom);
  }
  return ClassDistribution{
      lo, hi, denom / static_cast<double>(h.total()),
      Distribution(std::move(probs))};
}

double entropy_of(const Distribution& d, const EntropyFunctional& f) {
  switch (f.kind()) {
    case EntropyKind::Shannon: return shannon_entropy(d);
    case EntropyKind::Tsallis: return tsallis_entropy(d, f.index());
    case EntropyKind::Kaniadakis: return kaniadakis_entropy(d, f.index());
  }
  throw Error(ErrorCode::InvalidArgument, "unknown entropy kind");
}

}  // namespace

std::optional<std::pair<ClassDistribution, ClassDistribution>> split(
    const Histogram& h, int t) {
  check_threshold(t);
  std::uint64_t count_a = 0;
  for (int i = 0; i <= t; ++i) count_a += h.count(i);
  const std::uint64_t count_b = h.total() - count_a;
  if (count_a == 0 || count_b == 0) return std::nullopt;
  return std::make_pair(make_class(h, 0, t, count_a),
                        make_class(h, t + 1, kGrayLevels - 1, count_b));
}

std::optional<ClassEntropies> total_entropy(const Histogram& h, int t,
                                            const EntropyFunctional& f) {
  auto classes = split(h, t);
  if (!classes) return std::nullopt;
  const Distribution& a = classes->first.dist;
  const Distribution& b = classes->second.dist;
  const double s_a = entropy_of(a, f);
  const double s_b = entropy_of(b, f);
  switch (f.kind()) {
    case EntropyKind::Shannon:
      return ClassEntropies{s_a + s_b, s_a, s_b};
    case EntropyKind::Tsallis:
      return ClassEntropies{tsallis_compose(s_a, s_b, f.index()), s_a, s_b};
    case EntropyKind::Kaniadakis: {
      const double co_a = coentropy(a, f.index());
      const double co_b = coentropy(b, f.index());
      return ClassEntropies{kaniadakis_compose(s_a, co_a, s_b, co_b), s_a, s_b};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown entropy kind");
}

ThresholdResult optimize_threshold(const Histogram& h,
                                   const EntropyFunctional& f) {
  std::optional<ThresholdResult> best;
  for (int t = kMinThreshold; t <= kMaxThreshold; ++t) {
    const auto e = total_entropy(h, t, f);
    if (!e) continue;
    // Strict comparison keeps the smallest t among equal maxima.
    if (!best || e->total > best->total_entropy) {
      best = ThresholdResult{t, e->total, e->a, e->b};
    }
  }
  if (!best) {
    throw Error(ErrorCode::Infeasible,
                "no feasible threshold: the image has a single gray level");
  }
  return *best;
}

BiLevelImage binarize(const GrayImage& img, int t) {
  check_threshold(t);
  std::vector<Tone> out;
  out.reserve(img.size());
  for (std::uint8_t v : img.pixels()) {
    out.push_back(v > t ? Tone::White : Tone::Black);
  }
  return BiLevelImage(img.width(), img.height(), std::move(out));
}

std::optional<Connectivity> connectivity_from_int(int n) noexcept {
  if (n == 4) return Connectivity::Four;
  if (n == 8) return Connectivity::Eight;
  return std::nullopt;
}

std::uint64_t edge_pixel_count(const BiLevelImage& img,
                               Connectivity connectivity) {
  static constexpr int kOffsets4[][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  static constexpr int kOffsets8[][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                         {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
  const std::span<const int[2]> offsets =
      connectivity == Connectivity::Four ? std::span<const int[2]>(kOffsets4)
                                         : std::span<const int[2]>(kOffsets8);
  const auto w = static_cast<std::int64_t>(img.width());
  const auto h = static_cast<std::int64_t>(img.height());
  std::uint64_t edges = 0;
  for (std::int64_t y = 0; y < h; ++y) {
    for (std::int64_t x = 0; x < w; ++x) {
      const Tone here = img.at(static_cast<std::uint32_t>(x),
                               static_cast<std::uint32_t>(y));
      for (const auto& d : offsets) {
        const std::int64_t nx = x + d[0];
        const std::int64_t ny = y + d[1];
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
        if (img.at(static_cast<std::uint32_t>(nx),
                   static_cast<std::uint32_t>(ny)) != here) {
          ++edges;
          break;
        }
      }
    }
  }
  return edges;
}

}  // namespace entrothresh
