/*
  Copyright (c) 2026 the wmisolve authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

/* C interface of the wmisolve shared library. Handles are opaque; every
 * function returns a status code and reports details through an optional
 * error string (free it with wmi_string_free). */

#ifndef WMISOLVE_WMI_H
#define WMISOLVE_WMI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wmi_problem_s wmi_problem;
typedef struct wmi_result_s wmi_result;

typedef enum wmi_status_e {
  WMI_OK = 0,
  WMI_ERR_PARSE = 1,
  WMI_ERR_UNBOUNDED = 2,
  WMI_ERR_INVALID_ARG = 3,
  WMI_ERR_TOO_LARGE = 4,
  WMI_ERR_ZERO_ACCEPTANCE = 5,
  WMI_ERR_RUNTIME = 6
} wmi_status;

typedef struct wmi_run_config_s {
  const char* algorithm;   /* "pa" | "sae" | "oracle" */
  const char* integrator;  /* "exact" | "mc" */
  uint64_t samples;        /* mc only */
  uint64_t seed;           /* mc only */
  int workers;
  int emit_breakdown;      /* nonzero: per-assignment breakdown in the JSON */
  int emit_timing;         /* nonzero: wall_ms field in the JSON */
  const char* decision_order; /* optional comma-separated Boolean atom names */
} wmi_run_config;

const char* wmi_version(void);

/* Fills a config with the defaults (sae, exact, 10000 samples, seed 0,
 * 1 worker, no breakdown, timing on). */
void wmi_run_config_init(wmi_run_config* config);

/* Parses a problem document. On failure returns a status code and, when
 * err_msg is non-NULL, an explanation (with line and column for syntax
 * errors). */
wmi_status wmi_problem_parse(const char* text, wmi_problem** out, char** err_msg);
void wmi_problem_free(wmi_problem* problem);

/* Round-trip printer for a parsed problem. */
wmi_status wmi_problem_print(const wmi_problem* problem, char** out, char** err_msg);

wmi_status wmi_run(const wmi_problem* problem, const wmi_run_config* config, wmi_result** out,
                   char** err_msg);
void wmi_result_free(wmi_result* result);

/* Full JSON report of a run. */
wmi_status wmi_result_json(const wmi_result* result, char** out, char** err_msg);
/* Exact value as "p/q" (exact runs) or a decimal rendering (mc runs). */
wmi_status wmi_result_value_str(const wmi_result* result, char** out, char** err_msg);
double wmi_result_value_double(const wmi_result* result);
uint64_t wmi_result_n_integrals(const wmi_result* result);

/* Synthetic problem generators; out receives the problem document. "prodite"
 * uses n; "tree" uses depth, n_bools, n_reals. */
wmi_status wmi_generate(const char* kind, int n, int depth, int n_bools, int n_reals,
                        uint64_t seed, char** out, char** err_msg);

/* Demographic-parity showcase on the bundled programs ("fair" | "unfair");
 * n_seeds runs with seeds seed, seed+1, ... and the MC backend. */
wmi_status wmi_fairness(const char* variant, uint64_t samples, uint64_t seed, uint32_t n_seeds,
                        char** out_json, char** err_msg);

/* Bundled example problems ("example5", "example9", "example11", "fair",
 * "unfair"); NULL for unknown names. Do not free. */
const char* wmi_fixture(const char* name);

/* Fixture acceptance subset; out receives one PASS/FAIL line per check.
 * Returns WMI_OK when everything passed. */
wmi_status wmi_selftest(char** out, char** err_msg);

void wmi_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
