// Copyright 2026 The gqc Authors
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

/* C interface to the gqc library. Every call returns a gqc_status; on failure
 * gqc_last_error() describes the problem for the calling thread. Strings
 * returned through char** are owned by the caller and released with
 * gqc_string_free. */
#ifndef GQC_GQC_H
#define GQC_GQC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gqc_status {
    GQC_OK = 0,
    GQC_INVALID_ARGUMENT = 1,
    GQC_DOMAIN = 2,
    GQC_UNSUPPORTED_DIMENSION = 3,
    GQC_DEGENERATE_ELEMENT = 4,
    GQC_VALIDATION = 5,
    GQC_UNREACHABLE = 6,
    GQC_RESOURCE_CAP = 7,
    GQC_PARSE = 8,
    GQC_COMPILE = 9,
    GQC_CERTIFICATION = 10,
    GQC_IO = 11,
    GQC_INTERNAL = 12
} gqc_status;

typedef struct gqc_circuit gqc_circuit;
typedef struct gqc_program gqc_program;
typedef struct gqc_state gqc_state;

const char *gqc_last_error(void);
const char *gqc_status_name(gqc_status status);
void gqc_string_free(char *s);

/* ---- pulse schedules ---- */

/* Writes the schedule text for an l-peak over Z_d; *exact is 0 when the peak is
 * unreachable (the text then carries the reason and witness). */
gqc_status gqc_solve_peak(int n_sites, int d, int64_t u, int64_t v, int site, int *exact, int64_t *kappa,
                          char **schedule_text);
gqc_status gqc_solve_peak_cv(int n_sites, double u, double v, int site, int *exact, double *kappa,
                             char **schedule_text);
gqc_status gqc_op_count(int n_sites, int m, int *out);
/* Primitive count of one run of the localized-gate protocol. */
gqc_status gqc_single_run_core_cost(int n_sites, int d, int64_t u, int64_t v, int site, size_t *out);

/* ---- circuits and programs ---- */

typedef enum gqc_gate_kind { GQC_GATE_UNITARY = 0, GQC_GATE_ROTATION = 1, GQC_GATE_ENTANGLE = 2 } gqc_gate_kind;

typedef struct gqc_gate_info {
    gqc_gate_kind kind;
    int site;
    int64_t a;
    int64_t b;
    int antisymmetric;
    int64_t u;
    double angle;
} gqc_gate_info;

gqc_status gqc_circuit_parse(const char *text, int d, const char *base_dir, gqc_circuit **out);
gqc_status gqc_circuit_size(const gqc_circuit *circuit, size_t *out);
gqc_status gqc_circuit_gate(const gqc_circuit *circuit, size_t index, gqc_gate_info *out);
void gqc_circuit_free(gqc_circuit *circuit);

typedef struct gqc_compile_options {
    double tolerance;   /* <= 0 selects 1e-4 */
    int trotter_slices; /* 0 selects automatically */
    int max_slices;     /* <= 0 selects 4096 */
    int ancilla;        /* nonzero: ancilla-interleaved entangler */
} gqc_compile_options;

gqc_status gqc_compile(const gqc_circuit *circuit, int n_sites, int d, const gqc_compile_options *options,
                       gqc_program **out);
gqc_status gqc_program_parse(const char *text, gqc_program **out);
gqc_status gqc_program_format(const gqc_program *program, char **out);
gqc_status gqc_program_shape(const gqc_program *program, int *d, int *n_sites);
gqc_status gqc_program_cost(const gqc_program *program, size_t *out);
gqc_status gqc_program_num_gates(const gqc_program *program, size_t *out);
gqc_status gqc_program_gate(const gqc_program *program, size_t index, size_t *cost, char **source);
/* Rebuilds the logical circuit from the program's provenance comments. */
gqc_status gqc_program_circuit(const gqc_program *program, const char *base_dir, gqc_circuit **out);
void gqc_program_free(gqc_program *program);

typedef struct gqc_verify_report {
    int trials;
    double min_fidelity;
    double mean_fidelity;
} gqc_verify_report;

gqc_status gqc_verify(const gqc_program *program, const gqc_circuit *circuit, int trials, uint64_t seed, int ancilla,
                      gqc_verify_report *out);

/* ---- states and readout ---- */

gqc_status gqc_state_read(const char *path, gqc_state **out);
gqc_status gqc_state_write_binary(const gqc_state *state, const char *path);
gqc_status gqc_state_format_text(const gqc_state *state, char **out);
gqc_status gqc_state_shape(const gqc_state *state, int *d, int *n_sites, int *two_chain);
void gqc_state_free(gqc_state *state);

/* Exact distribution (d entries) of data site `site` after the swap readout,
 * plus `shots` samples as per-outcome counts (d entries). Single-chain states
 * get a fresh |0...0> ancilla chain. */
gqc_status gqc_readout(const gqc_state *state, int site, int64_t shots, uint64_t seed, double *distribution,
                       int64_t *counts);

/* ---- continuous variables ---- */

typedef struct gqc_cv_options {
    int grid_points;    /* <= 0 selects 10000 */
    int coordinate_window; /* nonzero: |alpha q| < pi instead of |alpha f(q)| < pi */
    int rms;            /* nonzero: root-mean-square instead of sup */
} gqc_cv_options;

gqc_status gqc_cv_error(int power, double alpha, int n_max, const gqc_cv_options *options, double *out);
gqc_status gqc_cv_table(int power, int n_max, char **out);

/* ---- universality ---- */

typedef struct gqc_witness {
    int d;
    int s;
    int j, k, p, q;
    double left;
    double right;
    double margin;
} gqc_witness;

gqc_status gqc_universality_witness(int d, double coupling, gqc_witness *out);

#ifdef __cplusplus
}
#endif

#endif  // GQC_GQC_H
