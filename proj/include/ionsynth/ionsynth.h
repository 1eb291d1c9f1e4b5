// Copyright 2026 The ionsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the ionsynth pulse compiler and simulator.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return an is_status; on failure a
 * human-readable message is available from is_last_error() on the same
 * thread until the next call. Strings returned through char** are allocated
 * by the library and must be released with is_string_free().
 */
#ifndef IONSYNTH_IONSYNTH_H_
#define IONSYNTH_IONSYNTH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(IONSYNTH_BUILDING_LIBRARY)
#    define IONSYNTH_API __declspec(dllexport)
#  else
#    define IONSYNTH_API __declspec(dllimport)
#  endif
#else
#  define IONSYNTH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 2..4 double as the CLI exit codes. */
typedef enum is_status {
  IS_OK = 0,
  IS_ERR_FAILED = 1,        /* a check ran and failed (selftest) */
  IS_ERR_INVALID_INPUT = 2, /* malformed or out-of-range input */
  IS_ERR_PLANNER = 3,       /* planning failed */
  IS_ERR_SIMULATOR = 4,     /* simulation failed */
  IS_ERR_NULL_ARGUMENT = 5,
  IS_ERR_INTERNAL = 6
} is_status;

/* Simulation tiers; combine as a bitmask in is_run_options.tiers. */
typedef enum is_tier {
  IS_TIER_IDEAL = 1,
  IS_TIER_RESONANT = 2,
  IS_TIER_FULL = 4
} is_tier;

typedef struct is_target is_target;
typedef struct is_trap is_trap;
typedef struct is_sequence is_sequence;
typedef struct is_result is_result;

typedef struct is_pulse {
  int m;
  int n;
  double detuning;
  double laser_phase;
  double duration;
  double coeff_re;
  double coeff_im;
} is_pulse;

typedef struct is_run_options {
  unsigned tiers;         /* bitmask of is_tier, nonzero */
  double zero_tol;        /* coefficients with |c| <= zero_tol get no pulse */
  double min_gap;         /* <= 0: 10 * omega */
  int spectrum_margin;    /* extra sideband orders in the spectral check */
  double duration_budget; /* per-pulse duration flag; <= 0 disables */
  double gap;             /* idle time between pulses, full tier */
} is_run_options;

IONSYNTH_API void is_run_options_init(is_run_options* options);

IONSYNTH_API const char* is_version(void);
IONSYNTH_API const char* is_status_name(is_status status);
IONSYNTH_API const char* is_last_error(void);
IONSYNTH_API void is_string_free(char* str);

/* Target state: {"M", "N", "coeffs": [{"m","n","re","im"}]} */
IONSYNTH_API is_status is_target_parse(const char* json, is_target** out);
IONSYNTH_API is_status is_target_load(const char* path, is_target** out);
IONSYNTH_API is_status is_target_random(int M, int N, uint64_t seed, is_target** out);
IONSYNTH_API is_status is_target_dims(const is_target* target, int* M, int* N);
IONSYNTH_API is_status is_target_to_json(const is_target* target, char** out);
IONSYNTH_API void is_target_free(is_target* target);

/* Trap: {nu_x, nu_y, eta_x, eta_y, omega, omega_0, cap_margin}; missing keys default. */
IONSYNTH_API is_status is_trap_default(is_trap** out);
IONSYNTH_API is_status is_trap_parse(const char* json, is_trap** out);
IONSYNTH_API is_status is_trap_load(const char* path, is_trap** out);
IONSYNTH_API is_status is_trap_to_json(const is_trap* trap, char** out);
IONSYNTH_API void is_trap_free(is_trap* trap);

IONSYNTH_API is_status is_plan(const is_target* target, const is_trap* trap, double zero_tol,
                               is_sequence** out);
IONSYNTH_API is_status is_sequence_parse(const char* json, is_sequence** out);
IONSYNTH_API size_t is_sequence_size(const is_sequence* seq);
IONSYNTH_API is_status is_sequence_pulse(const is_sequence* seq, size_t index, is_pulse* out);
IONSYNTH_API is_status is_sequence_total_duration(const is_sequence* seq, double* out);
IONSYNTH_API is_status is_sequence_to_json(const is_sequence* seq, char** out);
IONSYNTH_API void is_sequence_free(is_sequence* seq);

IONSYNTH_API is_status is_simulate(const is_sequence* seq, const is_target* target,
                                   const is_trap* trap, is_tier tier, is_result** out);
IONSYNTH_API is_status is_result_fidelity(const is_result* result, double* out);
IONSYNTH_API is_status is_result_to_json(const is_result* result, char** out);
IONSYNTH_API void is_result_free(is_result* result);

/* Plan, simulate every requested tier and assemble the JSON report. Either
 * output pointer may be NULL. */
IONSYNTH_API is_status is_synthesize(const is_target* target, const is_trap* trap,
                                     const is_run_options* options, char** report_json,
                                     char** summary_text);

IONSYNTH_API is_status is_spectrum(const is_trap* trap, int M, int N, double min_gap, int margin,
                                   char** out);
IONSYNTH_API is_status is_compare(int M, int N, char** out);

/* Random-target self test. trap may be NULL for the default trap. Returns
 * IS_ERR_FAILED (with the summary still written) when any trial fails. */
IONSYNTH_API is_status is_selftest(int M, int N, int trials, uint64_t seed, int include_full,
                                   const is_trap* trap, char** out);

#ifdef __cplusplus
}
#endif

#endif /* IONSYNTH_IONSYNTH_H_ */
