#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "entrothresh/entropy.hpp"
#include "entrothresh/image.hpp"
#include "entrothresh/threshold.hpp"

namespace entrothresh {

struct SweepRow {
  double index;
  int threshold;
  std::uint64_t edge_pixels;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

// Rows ordered by strictly increasing index. Only Tsallis and Kaniadakis
// tables exist; Shannon has no index to sweep.
class SweepTable {
 public:
  SweepTable(EntropyKind kind, std::vector<SweepRow> rows);

  EntropyKind kind() const noexcept { return kind_; }
  std::span<const SweepRow> rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const SweepRow& operator[](std::size_t i) const { return rows_[i]; }

  friend bool operator==(const SweepTable&, const SweepTable&) = default;

 private:
  EntropyKind kind_;
  std::vector<SweepRow> rows_;
};

enum class IndexPolicy {
  // Indices strictly inside (0, 1).
  OpenUnitInterval,
  // Any index the functional accepts: q > 0, q != 1; 0 < |kappa| < 1.
  Extended,
};

// {0.01, 0.05, 0.1, 0.15, 0.2, 0.3, ..., 0.9, 0.99}
std::vector<double> default_grid();

struct SweepOptions {
  Connectivity connectivity = Connectivity::Four;
  IndexPolicy policy = IndexPolicy::OpenUnitInterval;
  bool parallel = true;
};

// Optimizes, binarizes and counts edge pixels once per index. Indices may be
// given in any order; the table is sorted ascending. Duplicate or invalid
// indices raise InvalidArgument/Domain naming the value; a single-tone image
// raises Infeasible.
SweepTable sweep(const GrayImage& img, EntropyKind kind,
                 std::span<const double> indices,
                 const SweepOptions& options = {});

// Row with the most edge pixels; ties go to the smallest index.
const SweepRow& select_best(const SweepTable& table);

struct Jump {
  double index_before;
  double index_after;
  int threshold_before;
  int threshold_after;

  friend bool operator==(const Jump&, const Jump&) = default;
};

struct TransitionReport {
  std::vector<Jump> jumps;
};

inline constexpr int kDefaultJumpTolerance = 20;

// Adjacent rows whose thresholds differ by more than `jump_tolerance`.
TransitionReport detect_transitions(const SweepTable& table,
                                    int jump_tolerance = kDefaultJumpTolerance);

struct MirrorPair {
  double index;         // x, looked up in the Tsallis table
  double mirror_index;  // 1 - x, looked up in the Kaniadakis table
  int difference;       // threshold_T(x) - threshold_K(1 - x)
};

// For every grid index x whose complement 1 - x is also on the grid.
// The two tables must cover the same grid.
std::vector<MirrorPair> mirror_check(const SweepTable& tsallis,
                                     const SweepTable& kaniadakis);

}  // namespace entrothresh
