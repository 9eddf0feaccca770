/* Compiled as C to keep entrothresh.h valid C. */
#include <stdio.h>
#include <string.h>

#include "entrothresh/entrothresh.h"

int main(void) {
  et_image* img = NULL;
  et_sweep_table* ts = NULL;
  et_sweep_row best;
  double grid[16];
  size_t n = et_default_grid(grid, 16);

  if (et_image_load(ENTROTHRESH_FIXTURE_DIR "/two_tone.pgm", &img) != ET_OK) {
    fprintf(stderr, "load: %s\n", et_last_error());
    return 1;
  }
  if (et_sweep(img, ET_TSALLIS, grid, n, 4, 0, &ts) != ET_OK ||
      et_select_best(ts, &best) != ET_OK) {
    fprintf(stderr, "sweep: %s\n", et_last_error());
    return 1;
  }
  if (best.threshold != 10 || et_sweep_table_size(ts) != n) return 1;
  if (et_image_load("/nonexistent.pgm", &img) != ET_ERR_FILE_NOT_FOUND) return 1;
  if (strcmp(et_status_string(ET_OK), "ok") != 0) return 1;
  et_sweep_table_free(ts);
  et_image_free(img);
  return 0;
}
