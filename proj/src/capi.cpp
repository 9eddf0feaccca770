#include "entrothresh/entrothresh.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "entrothresh/entropy.hpp"
#include "entrothresh/error.hpp"
#include "entrothresh/image.hpp"
#include "entrothresh/report.hpp"
#include "entrothresh/sweep.hpp"
#include "entrothresh/threshold.hpp"

struct et_image {
  entrothresh::GrayImage value;
};
struct et_bilevel {
  entrothresh::BiLevelImage value;
};
struct et_histogram {
  entrothresh::Histogram value;
};
struct et_sweep_table {
  entrothresh::SweepTable value;
};

namespace {

using namespace entrothresh;

thread_local std::string g_last_error;

et_status fail(et_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

et_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return ET_ERR_INVALID_ARGUMENT;
    case ErrorCode::Domain: return ET_ERR_DOMAIN;
    case ErrorCode::FileNotFound: return ET_ERR_FILE_NOT_FOUND;
    case ErrorCode::MalformedHeader: return ET_ERR_MALFORMED;
    case ErrorCode::UnsupportedFormat: return ET_ERR_UNSUPPORTED_FORMAT;
    case ErrorCode::Infeasible: return ET_ERR_INFEASIBLE;
    case ErrorCode::Io: return ET_ERR_IO;
  }
  return ET_ERR_INTERNAL;
}

// Runs `body` and turns any escaping exception into a status.
template <typename Body>
et_status guarded(Body body) noexcept {
  try {
    body();
    return ET_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ET_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ET_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ET_ERR_INTERNAL, "unknown failure");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

std::optional<EntropyKind> kind_of(et_entropy_kind kind) {
  switch (kind) {
    case ET_SHANNON: return EntropyKind::Shannon;
    case ET_TSALLIS: return EntropyKind::Tsallis;
    case ET_KANIADAKIS: return EntropyKind::Kaniadakis;
  }
  return std::nullopt;
}

EntropyKind require_kind(et_entropy_kind kind) {
  auto k = kind_of(kind);
  require(k.has_value(), "unknown entropy kind");
  return *k;
}

et_entropy_kind to_c(EntropyKind kind) {
  switch (kind) {
    case EntropyKind::Shannon: return ET_SHANNON;
    case EntropyKind::Tsallis: return ET_TSALLIS;
    case EntropyKind::Kaniadakis: return ET_KANIADAKIS;
  }
  return ET_SHANNON;
}

EntropyFunctional functional_of(et_functional f) {
  return EntropyFunctional::make(require_kind(f.kind), f.index);
}

Connectivity require_connectivity(int n) {
  auto c = connectivity_from_int(n);
  require(c.has_value(), "connectivity must be 4 or 8");
  return *c;
}

Distribution distribution_of(const double* probs, size_t n) {
  require(probs != nullptr || n == 0, "probability pointer is null");
  return Distribution(std::vector<double>(probs, probs + n));
}

et_sweep_row to_c(const SweepRow& r) {
  return et_sweep_row{r.index, r.threshold, r.edge_pixels};
}

template <typename T, typename Src, typename Convert>
void copy_out(const std::vector<Src>& src, T* out, size_t capacity,
              size_t* count, Convert convert) {
  require(count != nullptr, "count pointer is null");
  require(out != nullptr || capacity == 0, "output pointer is null");
  *count = src.size();
  const size_t n = std::min(capacity, src.size());
  for (size_t i = 0; i < n; ++i) out[i] = convert(src[i]);
}

ReportTables tables_of(const et_sweep_table* tsallis,
                       const et_sweep_table* kaniadakis) {
  ReportTables tables;
  if (tsallis) tables.tsallis = tsallis->value;
  if (kaniadakis) tables.kaniadakis = kaniadakis->value;
  return tables;
}

}  // namespace

extern "C" {

const char* et_version(void) { return "1.0.0"; }

const char* et_last_error(void) { return g_last_error.c_str(); }

const char* et_status_string(et_status status) {
  switch (status) {
    case ET_OK: return "ok";
    case ET_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ET_ERR_DOMAIN: return "domain error";
    case ET_ERR_FILE_NOT_FOUND: return "file not found";
    case ET_ERR_MALFORMED: return "malformed input";
    case ET_ERR_UNSUPPORTED_FORMAT: return "unsupported format";
    case ET_ERR_INFEASIBLE: return "infeasible";
    case ET_ERR_IO: return "i/o error";
    case ET_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int et_png_supported(void) { return png_supported() ? 1 : 0; }

et_status et_image_load(const char* path, et_image** out) {
  return guarded([&] {
    require(path && out, "null argument to et_image_load");
    *out = new et_image{load_image(path)};
  });
}

et_status et_image_create(uint32_t width, uint32_t height,
                          const uint8_t* pixels, et_image** out) {
  return guarded([&] {
    require(pixels && out, "null argument to et_image_create");
    const size_t n = static_cast<size_t>(width) * height;
    *out = new et_image{
        GrayImage(width, height, std::vector<uint8_t>(pixels, pixels + n))};
  });
}

void et_image_free(et_image* img) { delete img; }

et_status et_image_size(const et_image* img, uint32_t* width,
                        uint32_t* height) {
  return guarded([&] {
    require(img && width && height, "null argument to et_image_size");
    *width = img->value.width();
    *height = img->value.height();
  });
}

const uint8_t* et_image_pixels(const et_image* img) {
  return img ? img->value.pixels().data() : nullptr;
}

uint8_t et_to_grayscale(uint8_t r, uint8_t g, uint8_t b) {
  return to_grayscale(r, g, b);
}

et_status et_binarize(const et_image* img, int threshold, et_bilevel** out) {
  return guarded([&] {
    require(img && out, "null argument to et_binarize");
    *out = new et_bilevel{binarize(img->value, threshold)};
  });
}

void et_bilevel_free(et_bilevel* img) { delete img; }

et_status et_bilevel_size(const et_bilevel* img, uint32_t* width,
                          uint32_t* height) {
  return guarded([&] {
    require(img && width && height, "null argument to et_bilevel_size");
    *width = img->value.width();
    *height = img->value.height();
  });
}

et_status et_bilevel_pixels(const et_bilevel* img, uint8_t* out,
                            size_t capacity) {
  return guarded([&] {
    require(img && out, "null argument to et_bilevel_pixels");
    const auto px = img->value.pixels();
    require(capacity >= px.size(), "output buffer too small");
    for (size_t i = 0; i < px.size(); ++i) {
      out[i] = px[i] == Tone::White ? 1 : 0;
    }
  });
}

et_status et_bilevel_write(const et_bilevel* img, const char* path) {
  return guarded([&] {
    require(img && path, "null argument to et_bilevel_write");
    write_bilevel(img->value, path);
  });
}

et_status et_edge_pixel_count(const et_bilevel* img, int connectivity,
                              uint64_t* out) {
  return guarded([&] {
    require(img && out, "null argument to et_edge_pixel_count");
    *out = edge_pixel_count(img->value, require_connectivity(connectivity));
  });
}

et_status et_histogram_build(const et_image* img, et_histogram** out) {
  return guarded([&] {
    require(img && out, "null argument to et_histogram_build");
    *out = new et_histogram{build_histogram(img->value)};
  });
}

et_status et_histogram_from_counts(const uint64_t counts[256],
                                   et_histogram** out) {
  return guarded([&] {
    require(counts && out, "null argument to et_histogram_from_counts");
    Histogram::Counts c{};
    std::copy(counts, counts + kGrayLevels, c.begin());
    *out = new et_histogram{Histogram(c)};
  });
}

void et_histogram_free(et_histogram* h) { delete h; }

et_status et_histogram_counts(const et_histogram* h, uint64_t counts[256]) {
  return guarded([&] {
    require(h && counts, "null argument to et_histogram_counts");
    std::copy(h->value.counts().begin(), h->value.counts().end(), counts);
  });
}

et_status et_histogram_frequencies(const et_histogram* h, double freqs[256]) {
  return guarded([&] {
    require(h && freqs, "null argument to et_histogram_frequencies");
    std::copy(h->value.frequencies().begin(), h->value.frequencies().end(),
              freqs);
  });
}

et_status et_total_entropy(const et_histogram* h, int threshold,
                           et_functional f, int* feasible, double* out) {
  return guarded([&] {
    require(h && feasible && out, "null argument to et_total_entropy");
    const auto e = total_entropy(h->value, threshold, functional_of(f));
    *feasible = e ? 1 : 0;
    if (e) *out = e->total;
  });
}

et_status et_optimize_threshold(const et_histogram* h, et_functional f,
                                et_threshold_result* out) {
  return guarded([&] {
    require(h && out, "null argument to et_optimize_threshold");
    const auto r = optimize_threshold(h->value, functional_of(f));
    *out = et_threshold_result{r.threshold, r.total_entropy, r.entropy_a,
                               r.entropy_b};
  });
}

et_status et_q_log(double x, double q, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = q_log(x, q);
  });
}

et_status et_kappa_log(double x, double kappa, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = kappa_log(x, kappa);
  });
}

et_status et_shannon_entropy(const double* probs, size_t n, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = shannon_entropy(distribution_of(probs, n));
  });
}

et_status et_tsallis_entropy(const double* probs, size_t n, double q,
                             double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = tsallis_entropy(distribution_of(probs, n), q);
  });
}

et_status et_kaniadakis_entropy(const double* probs, size_t n, double kappa,
                                double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = kaniadakis_entropy(distribution_of(probs, n), kappa);
  });
}

et_status et_coentropy(const double* probs, size_t n, double kappa,
                       double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = coentropy(distribution_of(probs, n), kappa);
  });
}

double et_tsallis_compose(double s_a, double s_b, double q) {
  return tsallis_compose(s_a, s_b, q);
}

double et_kaniadakis_compose(double s_a, double co_a, double s_b, double co_b) {
  return kaniadakis_compose(s_a, co_a, s_b, co_b);
}

et_status et_log_multiplicity(const uint64_t* counts, size_t n, double* out) {
  return guarded([&] {
    require(out != nullptr && (counts != nullptr || n == 0),
            "null argument to et_log_multiplicity");
    *out = log_multiplicity(std::span<const uint64_t>(counts, n));
  });
}

size_t et_default_grid(double* out, size_t capacity) {
  const auto grid = default_grid();
  if (out) std::copy_n(grid.begin(), std::min(capacity, grid.size()), out);
  return grid.size();
}

et_status et_sweep(const et_image* img, et_entropy_kind kind,
                   const double* indices, size_t n, int connectivity,
                   int allow_extended, et_sweep_table** out) {
  return guarded([&] {
    require(img && out && (indices || n == 0), "null argument to et_sweep");
    SweepOptions options;
    options.connectivity = require_connectivity(connectivity);
    options.policy = allow_extended ? IndexPolicy::Extended
                                    : IndexPolicy::OpenUnitInterval;
    *out = new et_sweep_table{
        sweep(img->value, require_kind(kind),
              std::span<const double>(indices, n), options)};
  });
}

et_status et_sweep_table_create(et_entropy_kind kind, const et_sweep_row* rows,
                                size_t n, et_sweep_table** out) {
  return guarded([&] {
    require(out && (rows || n == 0), "null argument to et_sweep_table_create");
    std::vector<SweepRow> v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      v.push_back(SweepRow{rows[i].index, rows[i].threshold, rows[i].edge_pixels});
    }
    *out = new et_sweep_table{SweepTable(require_kind(kind), std::move(v))};
  });
}

void et_sweep_table_free(et_sweep_table* t) { delete t; }

et_entropy_kind et_sweep_table_kind(const et_sweep_table* t) {
  return t ? to_c(t->value.kind()) : ET_SHANNON;
}

size_t et_sweep_table_size(const et_sweep_table* t) {
  return t ? t->value.size() : 0;
}

et_status et_sweep_table_row(const et_sweep_table* t, size_t i,
                             et_sweep_row* out) {
  return guarded([&] {
    require(t && out, "null argument to et_sweep_table_row");
    require(i < t->value.size(), "row index out of range");
    *out = to_c(t->value[i]);
  });
}

int et_sweep_table_equal(const et_sweep_table* a, const et_sweep_table* b) {
  if (!a || !b) return a == b;
  return a->value == b->value ? 1 : 0;
}

et_status et_select_best(const et_sweep_table* t, et_sweep_row* out) {
  return guarded([&] {
    require(t && out, "null argument to et_select_best");
    *out = to_c(select_best(t->value));
  });
}

et_status et_detect_transitions(const et_sweep_table* t, int jump_tolerance,
                                et_jump* out, size_t capacity, size_t* count) {
  return guarded([&] {
    require(t != nullptr, "null table");
    const auto report = detect_transitions(t->value, jump_tolerance);
    copy_out(report.jumps, out, capacity, count, [](const Jump& j) {
      return et_jump{j.index_before, j.index_after, j.threshold_before,
                     j.threshold_after};
    });
  });
}

et_status et_mirror_check(const et_sweep_table* tsallis,
                          const et_sweep_table* kaniadakis,
                          et_mirror_pair* out, size_t capacity, size_t* count) {
  return guarded([&] {
    require(tsallis && kaniadakis, "null table");
    const auto pairs = mirror_check(tsallis->value, kaniadakis->value);
    copy_out(pairs, out, capacity, count, [](const MirrorPair& p) {
      return et_mirror_pair{p.index, p.mirror_index, p.difference};
    });
  });
}

et_status et_write_csv(const et_sweep_table* tsallis,
                       const et_sweep_table* kaniadakis, const char* path) {
  return guarded([&] {
    require(path != nullptr, "null path");
    emit_csv(tables_of(tsallis, kaniadakis), path);
  });
}

et_status et_format_csv(const et_sweep_table* tsallis,
                        const et_sweep_table* kaniadakis, char* out,
                        size_t capacity, size_t* length) {
  return guarded([&] {
    require(length && (out || capacity == 0), "null argument to et_format_csv");
    const std::string text = format_csv(tables_of(tsallis, kaniadakis));
    *length = text.size();
    if (capacity > 0) {
      const size_t n = std::min(capacity - 1, text.size());
      std::memcpy(out, text.data(), n);
      out[n] = '\0';
    }
  });
}

et_status et_read_csv(const char* path, et_sweep_table** tsallis,
                      et_sweep_table** kaniadakis) {
  return guarded([&] {
    require(path && tsallis && kaniadakis, "null argument to et_read_csv");
    auto tables = read_csv(path);
    *tsallis = tables.tsallis ? new et_sweep_table{std::move(*tables.tsallis)}
                              : nullptr;
    *kaniadakis = tables.kaniadakis
                      ? new et_sweep_table{std::move(*tables.kaniadakis)}
                      : nullptr;
  });
}

size_t et_format_index(double index, char* out, size_t capacity) {
  const std::string s = format_index(index);
  if (out && capacity > 0) {
    const size_t n = std::min(capacity - 1, s.size());
    std::memcpy(out, s.data(), n);
    out[n] = '\0';
  }
  return s.size();
}

}  // extern "C"
