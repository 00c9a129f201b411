#ifndef PHOTONET_H
#define PHOTONET_H

/* C interface to the photonet event-by-event optics simulator.
 *
 * The library routes single messengers ("photons") through networks of
 * adaptive processing units and tallies detector statistics for two preset
 * experiments: a polarizer sweep (malus) and a two-arm interferometer with a
 * delayed modulator choice (wheeler).  Sweep results are returned behind an
 * opaque handle; rows, CSV and SVG renderings are read out through the
 * functions below.
 *
 * All functions returning pn_status leave a human-readable detail message in
 * thread-local storage, retrievable via pn_last_error().  A pn_sweep handle
 * may be used from one thread at a time; everything else is stateless.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pn_status {
  PN_OK = 0,
  PN_ERR_INVALID_ARGUMENT = 1,
  PN_ERR_CONFIG = 2,
  PN_ERR_STRUCTURE = 3,
  PN_ERR_IO = 4,
  PN_ERR_INTERNAL = 5
} pn_status;

typedef enum pn_rng_mode {
  PN_RNG_PSEUDO = 0,    /* splitmix64 */
  PN_RNG_SYSTEMATIC = 1 /* golden-ratio Weyl sequence */
} pn_rng_mode;

/* Interferometer configuration.  OPEN/CLOSED fix the modulator for a whole
 * run; RANDOM draws the per-event choice after each messenger has passed the
 * input beam splitter and tallies the two conditions into separate rows.
 * NA labels rows of sweeps without a modulator. */
typedef enum pn_config {
  PN_CONFIG_OPEN = 0,
  PN_CONFIG_CLOSED = 1,
  PN_CONFIG_RANDOM = 2,
  PN_CONFIG_NA = 3
} pn_config;

/* warmup value meaning "use the default for the start mode":
 * 0 events for warm start, 1000 for cold start. */
#define PN_WARMUP_AUTO UINT64_MAX

#define PN_DEFAULT_SEED 12345

typedef struct pn_sweep pn_sweep; /* opaque sweep-result handle */

typedef struct pn_malus_params {
  double alpha;             /* learning parameter, 0 < alpha < 1 */
  uint64_t events_per_point;
  double theta_start_deg;   /* polarizer angle grid */
  double theta_step_deg;
  uint32_t n_points;
  uint64_t seed;
  int rng_mode;             /* pn_rng_mode */
  int cold_start;           /* nonzero: reinitialize learning machines per point */
  uint64_t warmup;          /* untallied leading events per point, or PN_WARMUP_AUTO */
} pn_malus_params;

typedef struct pn_wheeler_params {
  double alpha;
  uint64_t events_per_point;
  double phi_start_deg;     /* interferometer phase grid */
  double phi_step_deg;
  uint32_t n_points;
  int config;               /* pn_config: OPEN, CLOSED or RANDOM */
  uint64_t seed;
  int rng_mode;
  int cold_start;
  uint64_t warmup;
} pn_wheeler_params;

typedef struct pn_sweep_row {
  double setting_deg; /* theta or phi of the sweep point */
  int config;         /* pn_config: OPEN, CLOSED or NA */
  uint64_t n;         /* tallied events: n0 + n1 + n_exceptional */
  uint64_t n0;        /* detector D0 count */
  uint64_t n1;        /* detector D1 count */
  uint64_t n_exceptional;
  double f0;          /* n0 / (n0 + n1) */
  double f1;          /* 1 - f0 */
  double oracle_p0;   /* amplitude-model prediction for f0 */
} pn_sweep_row;

/* Fill a params struct with the default experiment (alpha 0.99, 10000 events
 * per point, 15-degree grid, warm start, pseudo-random mode). */
void pn_malus_params_init(pn_malus_params* params);
void pn_wheeler_params_init(pn_wheeler_params* params);

/* Run a sweep.  On PN_OK, *out_sweep owns the result table and must be
 * released with pn_sweep_free. */
pn_status pn_run_malus_sweep(const pn_malus_params* params, pn_sweep** out_sweep);
pn_status pn_run_wheeler_sweep(const pn_wheeler_params* params, pn_sweep** out_sweep);

void pn_sweep_free(pn_sweep* sweep);

size_t pn_sweep_row_count(const pn_sweep* sweep);
pn_status pn_sweep_get_row(const pn_sweep* sweep, size_t index, pn_sweep_row* out_row);

/* Write the table as CSV (header plus one row per sweep point, reals with six
 * decimals).  Path "-" writes to stdout.  Byte-deterministic for a given
 * table. */
pn_status pn_sweep_write_csv(const pn_sweep* sweep, const char* path);

/* Render the table as a self-contained SVG plot. */
pn_status pn_sweep_write_svg(const pn_sweep* sweep, const char* path);

/* Run the built-in consistency checks (amplitude-model equivalence plus the
 * per-module invariants).  Returns the number of failed checks; prints one
 * line per check to stdout when verbose is nonzero, failures always. */
int pn_selftest(int verbose);

const char* pn_status_name(pn_status status);
const char* pn_last_error(void);
const char* pn_version(void);

#ifdef __cplusplus
}
#endif

#endif /* PHOTONET_H */
