/*
 * C interface to the entrothresh library.
 *
 * All objects are opaque handles created by et_*_create / et_*_load style
 * functions and released with the matching et_*_free. Every fallible call
 * returns an et_status; on failure et_last_error() returns a message for the
 * calling thread that stays valid until that thread's next failing call.
 */
#ifndef ENTROTHRESH_H
#define ENTROTHRESH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ENTROTHRESH_BUILDING)
#define ET_API __declspec(dllexport)
#else
#define ET_API __declspec(dllimport)
#endif
#else
#define ET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum et_status {
  ET_OK = 0,
  ET_ERR_INVALID_ARGUMENT = 1,
  ET_ERR_DOMAIN = 2,
  ET_ERR_FILE_NOT_FOUND = 3,
  ET_ERR_MALFORMED = 4,
  ET_ERR_UNSUPPORTED_FORMAT = 5,
  ET_ERR_INFEASIBLE = 6,
  ET_ERR_IO = 7,
  ET_ERR_INTERNAL = 8
} et_status;

typedef enum et_entropy_kind {
  ET_SHANNON = 0,
  ET_TSALLIS = 1,
  ET_KANIADAKIS = 2
} et_entropy_kind;

typedef struct et_image et_image;
typedef struct et_bilevel et_bilevel;
typedef struct et_histogram et_histogram;
typedef struct et_sweep_table et_sweep_table;

typedef struct et_functional {
  et_entropy_kind kind;
  double index; /* q or kappa; ignored for ET_SHANNON */
} et_functional;

typedef struct et_threshold_result {
  int threshold;
  double total_entropy;
  double entropy_a;
  double entropy_b;
} et_threshold_result;

typedef struct et_sweep_row {
  double index;
  int threshold;
  uint64_t edge_pixels;
} et_sweep_row;

typedef struct et_jump {
  double index_before;
  double index_after;
  int threshold_before;
  int threshold_after;
} et_jump;

typedef struct et_mirror_pair {
  double index;
  double mirror_index;
  int difference;
} et_mirror_pair;

ET_API const char* et_version(void);
ET_API const char* et_last_error(void);
ET_API const char* et_status_string(et_status status);
ET_API int et_png_supported(void);

/* Images */

ET_API et_status et_image_load(const char* path, et_image** out);
ET_API et_status et_image_create(uint32_t width, uint32_t height,
                                 const uint8_t* pixels, et_image** out);
ET_API void et_image_free(et_image* img);
ET_API et_status et_image_size(const et_image* img, uint32_t* width,
                               uint32_t* height);
/* Borrowed pointer, valid for the lifetime of img. */
ET_API const uint8_t* et_image_pixels(const et_image* img);
ET_API uint8_t et_to_grayscale(uint8_t r, uint8_t g, uint8_t b);

ET_API et_status et_binarize(const et_image* img, int threshold,
                             et_bilevel** out);
ET_API void et_bilevel_free(et_bilevel* img);
ET_API et_status et_bilevel_size(const et_bilevel* img, uint32_t* width,
                                 uint32_t* height);
/* Writes width*height bytes, 0 for black and 1 for white. */
ET_API et_status et_bilevel_pixels(const et_bilevel* img, uint8_t* out,
                                   size_t capacity);
ET_API et_status et_bilevel_write(const et_bilevel* img, const char* path);
/* connectivity is 4 or 8 */
ET_API et_status et_edge_pixel_count(const et_bilevel* img, int connectivity,
                                     uint64_t* out);

/* Histograms */

ET_API et_status et_histogram_build(const et_image* img, et_histogram** out);
ET_API et_status et_histogram_from_counts(const uint64_t counts[256],
                                          et_histogram** out);
ET_API void et_histogram_free(et_histogram* h);
ET_API et_status et_histogram_counts(const et_histogram* h,
                                     uint64_t counts[256]);
ET_API et_status et_histogram_frequencies(const et_histogram* h,
                                          double freqs[256]);

/* Thresholding */

/* An empty class at threshold is not an error: *feasible is set to 0 and
 * *out is left untouched. */
ET_API et_status et_total_entropy(const et_histogram* h, int threshold,
                                  et_functional f, int* feasible,
                                  double* out);
ET_API et_status et_optimize_threshold(const et_histogram* h, et_functional f,
                                       et_threshold_result* out);

/* Entropy kernel over raw probability vectors */

ET_API et_status et_q_log(double x, double q, double* out);
ET_API et_status et_kappa_log(double x, double kappa, double* out);
ET_API et_status et_shannon_entropy(const double* probs, size_t n, double* out);
ET_API et_status et_tsallis_entropy(const double* probs, size_t n, double q,
                                    double* out);
ET_API et_status et_kaniadakis_entropy(const double* probs, size_t n,
                                       double kappa, double* out);
ET_API et_status et_coentropy(const double* probs, size_t n, double kappa,
                              double* out);
ET_API double et_tsallis_compose(double s_a, double s_b, double q);
ET_API double et_kaniadakis_compose(double s_a, double co_a, double s_b,
                                    double co_b);
ET_API et_status et_log_multiplicity(const uint64_t* counts, size_t n,
                                     double* out);

/* Index sweeps */

/* Copies up to capacity default grid values; returns the full grid length. */
ET_API size_t et_default_grid(double* out, size_t capacity);

/* allow_extended = 0 restricts indices to (0, 1). connectivity is 4 or 8. */
ET_API et_status et_sweep(const et_image* img, et_entropy_kind kind,
                          const double* indices, size_t n, int connectivity,
                          int allow_extended, et_sweep_table** out);
ET_API et_status et_sweep_table_create(et_entropy_kind kind,
                                       const et_sweep_row* rows, size_t n,
                                       et_sweep_table** out);
ET_API void et_sweep_table_free(et_sweep_table* t);
ET_API et_entropy_kind et_sweep_table_kind(const et_sweep_table* t);
ET_API size_t et_sweep_table_size(const et_sweep_table* t);
ET_API et_status et_sweep_table_row(const et_sweep_table* t, size_t i,
                                    et_sweep_row* out);
ET_API int et_sweep_table_equal(const et_sweep_table* a,
                                const et_sweep_table* b);

ET_API et_status et_select_best(const et_sweep_table* t, et_sweep_row* out);

/* Writes up to capacity jumps; *count receives the total number found. */
ET_API et_status et_detect_transitions(const et_sweep_table* t,
                                       int jump_tolerance, et_jump* out,
                                       size_t capacity, size_t* count);
ET_API et_status et_mirror_check(const et_sweep_table* tsallis,
                                 const et_sweep_table* kaniadakis,
                                 et_mirror_pair* out, size_t capacity,
                                 size_t* count);

/* Reports. Either table may be NULL, not both. */

ET_API et_status et_write_csv(const et_sweep_table* tsallis,
                              const et_sweep_table* kaniadakis,
                              const char* path);
/* Renders the CSV into out (NUL-terminated when capacity > 0). *length
 * receives the full length excluding the terminator; call with capacity 0
 * to size the buffer. */
ET_API et_status et_format_csv(const et_sweep_table* tsallis,
                               const et_sweep_table* kaniadakis, char* out,
                               size_t capacity, size_t* length);
/* Tables absent from the file are returned as NULL. */
ET_API et_status et_read_csv(const char* path, et_sweep_table** tsallis,
                             et_sweep_table** kaniadakis);
/* Shortest round-trip rendering of an index; returns the length written
 * (excluding the terminator), truncating to capacity - 1. */
ET_API size_t et_format_index(double index, char* out, size_t capacity);

#ifdef __cplusplus
}
#endif

#endif /* ENTROTHRESH_H */
