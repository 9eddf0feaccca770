#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "entrothresh/entropy.hpp"
#include "entrothresh/image.hpp"

namespace entrothresh {

inline constexpr int kMinThreshold = 0;
inline constexpr int kMaxThreshold = 254;

// One side of a bi-level split: the tones in [lo, hi], their total frequency
// `mass` and the within-class distribution f_i / mass.
struct ClassDistribution {
  int lo;
  int hi;
  double mass;
  Distribution dist;
};

struct ThresholdResult {
  int threshold;
  double total_entropy;
  double entropy_a;
  double entropy_b;

  friend bool operator==(const ThresholdResult&, const ThresholdResult&) = default;
};

// Dark class A = [0, t], bright class B = [t + 1, 255]. Returns nullopt when
// either class is empty. Domain error for t outside [0, 254].
std::optional<std::pair<ClassDistribution, ClassDistribution>> split(
    const Histogram& h, int t);

struct ClassEntropies {
  double total;
  double a;
  double b;
};

// Combined entropy of the split at t under `f`, or nullopt when infeasible.
std::optional<ClassEntropies> total_entropy(const Histogram& h, int t,
                                            const EntropyFunctional& f);

// Exhaustive scan over the feasible thresholds in [0, 254]; the smallest
// maximizing t wins. Throws Infeasible when the histogram has a single
// occupied tone.
ThresholdResult optimize_threshold(const Histogram& h,
                                   const EntropyFunctional& f);

// pixel > t becomes white, pixel <= t black.
BiLevelImage binarize(const GrayImage& img, int t);

enum class Connectivity { Four = 4, Eight = 8 };

std::optional<Connectivity> connectivity_from_int(int n) noexcept;

// Pixels with at least one in-image neighbour of the opposite tone.
std::uint64_t edge_pixel_count(const BiLevelImage& img,
                               Connectivity connectivity = Connectivity::Four);

}  // namespace entrothresh
