#include "entrothresh/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <sstream>
#include <string>

#include "entrothresh/error.hpp"

namespace entrothresh {

namespace {

constexpr double kGridMatchTolerance = 1e-9;

std::string format_index(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_index(EntropyKind kind, double index, IndexPolicy policy) {
  if (policy == IndexPolicy::OpenUnitInterval && !(index > 0.0 && index < 1.0)) {
    throw Error(ErrorCode::Domain,
                "entropic index " + format_index(index) +
                    " is outside (0, 1); extended indices must be enabled "
                    "explicitly");
  }
  const bool ok = kind == EntropyKind::Tsallis ? valid_tsallis_index(index)
                                               : valid_kaniadakis_index(index);
  if (!ok) {
    throw Error(ErrorCode::Domain, std::string("entropic index ") +
                                       format_index(index) + " is not valid for " +
                                       to_string(kind));
  }
}

SweepRow run_index(const GrayImage& img, const Histogram& hist,
                   EntropyKind kind, double index, Connectivity connectivity) {
  const auto result =
      optimize_threshold(hist, EntropyFunctional::make(kind, index));
  const auto edges =
      edge_pixel_count(binarize(img, result.threshold), connectivity);
  return SweepRow{index, result.threshold, edges};
}

}  // namespace

SweepTable::SweepTable(EntropyKind kind, std::vector<SweepRow> rows)
    : kind_(kind), rows_(std::move(rows)) {
  if (kind_ == EntropyKind::Shannon) {
    throw Error(ErrorCode::InvalidArgument,
                "sweep tables are defined for Tsallis or Kaniadakis only");
  }
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (!(rows_[i - 1].index < rows_[i].index)) {
      throw Error(ErrorCode::InvalidArgument,
                  "sweep indices must be strictly increasing, got " +
                      format_index(rows_[i - 1].index) + " then " +
                      format_index(rows_[i].index));
    }
  }
}

std::vector<double> default_grid() {
  return {0.01, 0.05, 0.1, 0.15, 0.2, 0.3, 0.4,
          0.5,  0.6,  0.7, 0.8,  0.9, 0.99};
}

SweepTable sweep(const GrayImage& img, EntropyKind kind,
                 std::span<const double> indices, const SweepOptions& options) {
  if (kind == EntropyKind::Shannon) {
    throw Error(ErrorCode::InvalidArgument,
                "Shannon entropy has no index to sweep");
  }
  if (indices.empty()) {
    throw Error(ErrorCode::InvalidArgument, "index grid is empty");
  }
  std::vector<double> grid(indices.begin(), indices.end());
  for (double x : grid) check_index(kind, x, options.policy);
  std::sort(grid.begin(), grid.end());
  if (auto dup = std::adjacent_find(grid.begin(), grid.end());
      dup != grid.end()) {
    throw Error(ErrorCode::InvalidArgument,
                "duplicate entropic index " + format_index(*dup));
  }

  const Histogram hist = build_histogram(img);
  if (hist.occupied_levels() < 2) {
    throw Error(ErrorCode::Infeasible,
                "no feasible threshold: the image has a single gray level");
  }

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  if (options.parallel && grid.size() > 1) {
    std::vector<std::future<SweepRow>> pending;
    pending.reserve(grid.size());
    for (double x : grid) {
      pending.push_back(std::async(std::launch::async, run_index, std::cref(img),
                                   std::cref(hist), kind, x,
                                   options.connectivity));
    }
    for (auto& f : pending) rows.push_back(f.get());
  } else {
    for (double x : grid) {
      rows.push_back(run_index(img, hist, kind, x, options.connectivity));
    }
  }
  return SweepTable(kind, std::move(rows));
}

const SweepRow& select_best(const SweepTable& table) {
  if (table.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cannot select from an empty table");
  }
  const auto rows = table.rows();
  // max_element returns the first maximum, which is the smallest index.
  return *std::max_element(rows.begin(), rows.end(),
                           [](const SweepRow& a, const SweepRow& b) {
                             return a.edge_pixels < b.edge_pixels;
                           });
}

TransitionReport detect_transitions(const SweepTable& table,
                                    int jump_tolerance) {
  if (jump_tolerance < 0) {
    throw Error(ErrorCode::InvalidArgument, "jump tolerance must be >= 0");
  }
  TransitionReport report;
  const auto rows = table.rows();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& before = rows[i - 1];
    const auto& after = rows[i];
    if (std::abs(after.threshold - before.threshold) > jump_tolerance) {
      report.jumps.push_back(
          Jump{before.index, after.index, before.threshold, after.threshold});
    }
  }
  return report;
}

std::vector<MirrorPair> mirror_check(const SweepTable& tsallis,
                                     const SweepTable& kaniadakis) {
  if (tsallis.kind() != EntropyKind::Tsallis ||
      kaniadakis.kind() != EntropyKind::Kaniadakis) {
    throw Error(ErrorCode::InvalidArgument,
                "mirror_check expects a Tsallis and a Kaniadakis table");
  }
  if (tsallis.size() != kaniadakis.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "mirror_check tables cover different grids");
  }
  for (std::size_t i = 0; i < tsallis.size(); ++i) {
    if (std::abs(tsallis[i].index - kaniadakis[i].index) > kGridMatchTolerance) {
      throw Error(ErrorCode::InvalidArgument,
                  "mirror_check tables cover different grids at " +
                      format_index(tsallis[i].index));
    }
  }
  std::vector<MirrorPair> pairs;
  for (const auto& row : tsallis.rows()) {
    const double complement = 1.0 - row.index;
    const auto k_rows = kaniadakis.rows();
    auto it = std::find_if(k_rows.begin(), k_rows.end(), [&](const SweepRow& r) {
      return std::abs(r.index - complement) <= kGridMatchTolerance;
    });
    if (it == k_rows.end()) continue;
    pairs.push_back(
        MirrorPair{row.index, it->index, row.threshold - it->threshold});
  }
  return pairs;
}

}  // namespace entrothresh
