/* Copyright 2026 the maskinlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the maskinlab shared library.
 *
 * All functions return a maskin_status; resources are opaque handles freed
 * with the matching *_free call. On failure, maskin_last_error() returns a
 * thread-local description of the most recent error.
 */

#ifndef MASKINLAB_H
#define MASKINLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef int maskin_status;

/* Status values; the CLI uses them directly as exit codes. */
#define MASKIN_OK 0
#define MASKIN_CHECK_FAILED 1   /* checks ran and did not pass */
#define MASKIN_ERR_INPUT 2      /* parse or validation failure */
#define MASKIN_ERR_BUDGET 3     /* configured size budget exceeded */
#define MASKIN_ERR_NUMERIC 4    /* numerical integrity violated */
#define MASKIN_ERR_INTERNAL 5

typedef struct maskin_experiment maskin_experiment;
typedef struct maskin_report maskin_report;

const char* maskin_version(void);

/* Thread-local message for the most recent failing call; empty otherwise. */
const char* maskin_last_error(void);

/* --- experiment configs ------------------------------------------------ */

maskin_status maskin_experiment_load_file(const char* path, maskin_experiment** out);
maskin_status maskin_experiment_load_text(const char* json_text, maskin_experiment** out);
void maskin_experiment_free(maskin_experiment* exp);

/* Serialized (normalized) form of a loaded experiment; valid until the
 * experiment is freed. */
const char* maskin_experiment_json(const maskin_experiment* exp);

maskin_status maskin_experiment_set_seed(maskin_experiment* exp, unsigned long long seed);
maskin_status maskin_experiment_set_z_cap(maskin_experiment* exp, long long z_cap);
maskin_status maskin_experiment_set_grid(maskin_experiment* exp, int theta_steps, int phi_steps);
maskin_status maskin_experiment_set_true_state(maskin_experiment* exp, const char* state_name);

/* --- commands ----------------------------------------------------------- */

/* Axioms (monotonicity, no-veto) plus agreement-condition certification. */
maskin_status maskin_run_check(const maskin_experiment* exp, maskin_report** out);

/* Staged analysis: axioms, certification, equilibrium verification, one
 * protocol round, displacement verdict. sweep_count > 1 additionally runs
 * the round for that many consecutive seeds and reports outcome
 * frequencies. */
maskin_status maskin_run_analysis(const maskin_experiment* exp, int sweep_count,
                                  maskin_report** out);

/* Exhaustive Nash-equilibrium outcome enumeration under the integer cap. */
maskin_status maskin_run_equilibria(const maskin_experiment* exp, maskin_report** out);

/* Pipeline timings for agent counts n_min..n_max. Needs no experiment. */
maskin_status maskin_run_bench(int n_min, int n_max, int repetitions, maskin_report** out);

/* --- reports ------------------------------------------------------------ */

/* 1 when every check in the report passed, else 0. */
int maskin_report_passed(const maskin_report* report);

/* Human-readable rendering; valid until the report is freed. */
const char* maskin_report_text(const maskin_report* report);

/* Line-delimited JSON records; valid until the report is freed. */
const char* maskin_report_jsonl(const maskin_report* report);

void maskin_report_free(maskin_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MASKINLAB_H */
