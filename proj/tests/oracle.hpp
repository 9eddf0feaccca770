#pragma once

// Test-only reference implementations. They work from raw frequencies with
// std::pow and the textbook forms of each entropy, and share no code with
// the library's thresholding path.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Freqs = std::array<double, 256>;
using Counts = std::array<std::uint64_t, 256>;

enum class Kind { Shannon, Tsallis, Kaniadakis };

inline Freqs normalize(const Counts& counts) {
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  Freqs f{};
  for (int i = 0; i < 256; ++i) f[i] = static_cast<double>(counts[i]) / total;
  return f;
}

// Total entropy of the split at t, or nullopt when a class is empty.
inline std::optional<double> naive_total(const Freqs& f, int t, Kind kind,
                                         double index) {
  double pa = 0.0;
  double pb = 0.0;
  bool any_a = false;
  bool any_b = false;
  for (int i = 0; i <= t; ++i) {
    pa += f[i];
    any_a = any_a || f[i] > 0.0;
  }
  for (int i = t + 1; i < 256; ++i) {
    pb += f[i];
    any_b = any_b || f[i] > 0.0;
  }
  if (!any_a || !any_b) return std::nullopt;

  auto class_terms = [&](int lo, int hi, double mass, double& s, double& co) {
    s = 0.0;
    co = 0.0;
    double sum_q = 0.0;
    for (int i = lo; i <= hi; ++i) {
      if (f[i] <= 0.0) continue;
      const double p = f[i] / mass;
      switch (kind) {
        case Kind::Shannon:
          s -= p * std::log(p);
          break;
        case Kind::Tsallis:
          sum_q += std::pow(p, index);
          break;
        case Kind::Kaniadakis:
          s += std::pow(p, 1.0 + index) - std::pow(p, 1.0 - index);
          co += std::pow(p, 1.0 + index) + std::pow(p, 1.0 - index);
          break;
      }
    }
    if (kind == Kind::Tsallis) s = (1.0 - sum_q) / (index - 1.0);
    if (kind == Kind::Kaniadakis) {
      s = -s / (2.0 * index);
      co = co / 2.0;
    }
  };

  double sa, coa, sb, cob;
  class_terms(0, t, pa, sa, coa);
  class_terms(t + 1, 255, pb, sb, cob);
  switch (kind) {
    case Kind::Shannon: return sa + sb;
    case Kind::Tsallis: return sa + sb + (1.0 - index) * sa * sb;
    case Kind::Kaniadakis: return sa * cob + sb * coa;
  }
  return std::nullopt;
}

// Argmax over t in [0, 254], smallest t on ties. -1 when nothing is feasible.
inline int naive_scan(const Freqs& f, Kind kind, double index) {
  int best_t = -1;
  double best = -std::numeric_limits<double>::infinity();
  for (int t = 0; t <= 254; ++t) {
    const auto v = naive_total(f, t, kind, index);
    if (v && *v > best) {
      best = *v;
      best_t = t;
    }
  }
  return best_t;
}

// Two discretized Gaussian bumps scaled to integer counts.
inline Counts bimodal(double mean1, double sigma1, double weight1, double mean2,
                      double sigma2, double weight2, double scale = 100000.0) {
  Counts c{};
  for (int i = 0; i < 256; ++i) {
    const double z1 = (i - mean1) / sigma1;
    const double z2 = (i - mean2) / sigma2;
    const double v = weight1 * std::exp(-0.5 * z1 * z1) +
                     weight2 * std::exp(-0.5 * z2 * z2);
    c[i] = static_cast<std::uint64_t>(std::llround(v * scale));
  }
  return c;
}

// Histogram with modes at 60 (narrow, heavy) and 170 (wide, light). Its
// Tsallis optimum jumps by ~58 gray levels between q = 0.6 and q = 0.7.
inline Counts competing_modes() { return bimodal(60, 8, 5.0, 170, 20, 1.0); }

inline std::vector<double> random_distribution(std::mt19937_64& rng,
                                               std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& v : p) {
    v = u(rng);
    total += v;
  }
  for (auto& v : p) v /= total;
  return p;
}

// 256-bin counts with a random sparse support of 2..64 occupied bins.
inline Counts random_sparse_counts(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> support(2, 64);
  std::uniform_int_distribution<int> bin(0, 255);
  std::uniform_int_distribution<std::uint64_t> count(1, 5000);
  Counts c{};
  const int k = support(rng);
  int placed = 0;
  while (placed < k) {
    auto& slot = c[bin(rng)];
    if (slot == 0) {
      slot = count(rng);
      ++placed;
    }
  }
  return c;
}

}  // namespace oracle
