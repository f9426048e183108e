/* Copyright 2026 The qcsim Authors
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

/* C interface to the qcsim state-vector simulator.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching _destroy function. Functions return a qcs_status; on failure
 * qcs_last_error() describes the problem (per thread, valid until the next
 * call on that thread). Strings returned through char** are allocated by the
 * library and released with qcs_string_free.
 *
 * Qubit i is bit i of a basis index. Matrices are row-major.
 */
#ifndef QCSIM_QCSIM_H
#define QCSIM_QCSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QCS_API __declspec(dllexport)
#else
#define QCS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    QCS_OK = 0,
    QCS_ERR_ARGUMENT = 1,
    QCS_ERR_PARSE = 2,
    QCS_ERR_INVALID_MAP = 3,
    QCS_ERR_ALLOCATION = 4,
    QCS_ERR_IO = 5,
    QCS_ERR_INTERNAL = 6
} qcs_status;

typedef struct {
    double re;
    double im;
} qcs_complex;

typedef struct qcs_state qcs_state;
typedef struct qcs_density qcs_density;
typedef struct qcs_gate qcs_gate;
typedef struct qcs_circuit qcs_circuit;
typedef struct qcs_observable qcs_observable;

/* Predicate over the classical registers for adaptive gates. Nonzero means
 * apply the inner gate. */
typedef int (*qcs_condition_fn)(const long *registers, size_t count, void *user_data);

QCS_API const char *qcs_version(void);
QCS_API const char *qcs_last_error(void);
QCS_API void qcs_string_free(char *text);

/* Threading. threads <= 0 restores the OpenMP default. */
QCS_API qcs_status qcs_set_num_threads(int threads);
QCS_API int qcs_get_num_threads(void);
QCS_API qcs_status qcs_set_parallel_threshold(unsigned qubits);
QCS_API unsigned qcs_get_parallel_threshold(void);

/* ---- State vectors ---- */
QCS_API qcs_status qcs_state_create(unsigned num_qubits, qcs_state **out);
QCS_API qcs_status qcs_state_copy(const qcs_state *state, qcs_state **out);
QCS_API void qcs_state_destroy(qcs_state *state);
QCS_API unsigned qcs_state_num_qubits(const qcs_state *state);
QCS_API uint64_t qcs_state_dim(const qcs_state *state);
QCS_API qcs_status qcs_state_set_zero(qcs_state *state);
QCS_API qcs_status qcs_state_set_basis(qcs_state *state, uint64_t basis);
QCS_API qcs_status qcs_state_set_haar_random(qcs_state *state, uint64_t seed);
QCS_API qcs_status qcs_state_load(qcs_state *state, const qcs_complex *values, uint64_t count);
QCS_API qcs_status qcs_state_get_amplitudes(const qcs_state *state, qcs_complex *out,
                                            uint64_t count);
QCS_API qcs_status qcs_state_squared_norm(const qcs_state *state, double *out);
QCS_API qcs_status qcs_state_normalize(qcs_state *state, double squared_norm);
/* pattern[i] is 0, 1 or 2 (either) for qubit i. */
QCS_API qcs_status qcs_state_marginal_probability(const qcs_state *state, const int *pattern,
                                                  size_t count, double *out);
QCS_API qcs_status qcs_state_sampling(const qcs_state *state, size_t shots, uint64_t seed,
                                      uint64_t *out);
QCS_API qcs_status qcs_state_inner_product(const qcs_state *bra, const qcs_state *ket,
                                           qcs_complex *out);
QCS_API qcs_status qcs_state_multiply_coef(qcs_state *state, qcs_complex coef);
QCS_API qcs_status qcs_state_add_state(qcs_state *state, const qcs_state *other);
QCS_API qcs_status qcs_state_tensor_product(const qcs_state *low, const qcs_state *high,
                                            qcs_state **out);
QCS_API qcs_status qcs_state_permutate_qubit(const qcs_state *state, const unsigned *order,
                                             size_t count, qcs_state **out);
QCS_API qcs_status qcs_state_drop_qubit(const qcs_state *state, const unsigned *targets,
                                        const int *values, size_t count, qcs_state **out);
QCS_API qcs_status qcs_state_get_classical_value(const qcs_state *state, long address,
                                                 long *out);
QCS_API qcs_status qcs_state_set_classical_value(qcs_state *state, long address, long value);

/* ---- Density matrices ---- */
QCS_API qcs_status qcs_density_create(unsigned num_qubits, qcs_density **out);
QCS_API qcs_status qcs_density_from_state(const qcs_state *state, qcs_density **out);
QCS_API void qcs_density_destroy(qcs_density *rho);
QCS_API unsigned qcs_density_num_qubits(const qcs_density *rho);
QCS_API qcs_status qcs_density_load(qcs_density *rho, const qcs_complex *values, uint64_t count);
QCS_API qcs_status qcs_density_get_elements(const qcs_density *rho, qcs_complex *out,
                                            uint64_t count);
QCS_API qcs_status qcs_density_trace(const qcs_density *rho, qcs_complex *out);

/* ---- Gates ----
 * Named constructors take qubits in argument order (control before target
 * for CNOT) and parameters as angles, probabilities or a register address. */
QCS_API qcs_status qcs_gate_named(const char *name, const unsigned *qubits, size_t num_qubits,
                                  const double *params, size_t num_params, qcs_gate **out);
QCS_API qcs_status qcs_gate_dense(const unsigned *targets, size_t num_targets,
                                  const qcs_complex *matrix, qcs_gate **out);
QCS_API qcs_status qcs_gate_sparse(const unsigned *targets, size_t num_targets,
                                   const uint64_t *rows, const uint64_t *cols,
                                   const qcs_complex *values, size_t count, qcs_gate **out);
QCS_API qcs_status qcs_gate_diagonal(const unsigned *targets, size_t num_targets,
                                     const qcs_complex *diagonal, qcs_gate **out);
QCS_API qcs_status qcs_gate_permutation(const unsigned *targets, size_t num_targets,
                                        const uint64_t *table, qcs_gate **out);
/* ids: 0 = I, 1 = X, 2 = Y, 3 = Z */
QCS_API qcs_status qcs_gate_pauli(const unsigned *targets, const int *ids, size_t count,
                                  qcs_gate **out);
/* exp(i * angle * P / 2) */
QCS_API qcs_status qcs_gate_pauli_rotation(const unsigned *targets, const int *ids, size_t count,
                                           double angle, int parametric, qcs_gate **out);
QCS_API qcs_status qcs_gate_random_unitary(const unsigned *targets, size_t count, uint64_t seed,
                                           qcs_gate **out);
QCS_API qcs_status qcs_gate_cptp(const qcs_gate *const *kraus, size_t count, qcs_gate **out);
QCS_API qcs_status qcs_gate_instrument(const qcs_gate *const *kraus, size_t count,
                                       long register_address, qcs_gate **out);
QCS_API qcs_status qcs_gate_probabilistic(const double *probs, const qcs_gate *const *gates,
                                          size_t count, qcs_gate **out);
QCS_API qcs_status qcs_gate_adaptive(const qcs_gate *inner, qcs_condition_fn condition,
                                     void *user_data, qcs_gate **out);
QCS_API qcs_status qcs_gate_add_control(const qcs_gate *gate, unsigned qubit, int value,
                                        qcs_gate **out);
QCS_API qcs_status qcs_gate_copy(const qcs_gate *gate, qcs_gate **out);
QCS_API void qcs_gate_destroy(qcs_gate *gate);
QCS_API qcs_status qcs_gate_is_parametric(const qcs_gate *gate, int *out);
QCS_API qcs_status qcs_gate_get_angle(const qcs_gate *gate, double *out);
QCS_API qcs_status qcs_gate_set_angle(qcs_gate *gate, double angle);
/* Qubits of the dense form: targets, then controls. */
QCS_API qcs_status qcs_gate_num_qubits(const qcs_gate *gate, size_t *out);
QCS_API qcs_status qcs_gate_get_qubits(const qcs_gate *gate, unsigned *out, size_t count);
/* Dense matrix over qcs_gate_get_qubits order, 4^count entries. */
QCS_API qcs_status qcs_gate_get_matrix(const qcs_gate *gate, qcs_complex *out, uint64_t count);
QCS_API qcs_status qcs_gate_merge(const qcs_gate *first, const qcs_gate *second, qcs_gate **out);
QCS_API qcs_status qcs_gate_commutation_check(const qcs_gate *a, const qcs_gate *b, int *out);
/* branch receives the Kraus or probabilistic branch taken, -1 otherwise. */
QCS_API qcs_status qcs_gate_update_state(const qcs_gate *gate, qcs_state *state, uint64_t seed,
                                         long *branch);
QCS_API qcs_status qcs_gate_update_density(const qcs_gate *gate, qcs_density *rho);
QCS_API qcs_status qcs_gate_to_json(const qcs_gate *gate, char **out);
QCS_API qcs_status qcs_gate_from_json(const char *text, qcs_gate **out);

/* ---- Circuits ---- */
QCS_API qcs_status qcs_circuit_create(unsigned num_qubits, qcs_circuit **out);
QCS_API qcs_status qcs_circuit_copy(const qcs_circuit *circuit, qcs_circuit **out);
QCS_API void qcs_circuit_destroy(qcs_circuit *circuit);
QCS_API unsigned qcs_circuit_num_qubits(const qcs_circuit *circuit);
QCS_API qcs_status qcs_circuit_gate_count(const qcs_circuit *circuit, size_t *out);
/* The circuit stores a copy of the gate. */
QCS_API qcs_status qcs_circuit_add_gate(qcs_circuit *circuit, const qcs_gate *gate);
QCS_API qcs_status qcs_circuit_insert_gate(qcs_circuit *circuit, const qcs_gate *gate,
                                           size_t position);
QCS_API qcs_status qcs_circuit_add_parametric_gate(qcs_circuit *circuit, const qcs_gate *gate);
QCS_API qcs_status qcs_circuit_insert_parametric_gate(qcs_circuit *circuit,
                                                      const qcs_gate *gate, size_t position);
QCS_API qcs_status qcs_circuit_remove_gate(qcs_circuit *circuit, size_t position);
QCS_API qcs_status qcs_circuit_get_gate(const qcs_circuit *circuit, size_t position,
                                        qcs_gate **out);
QCS_API qcs_status qcs_circuit_depth(const qcs_circuit *circuit, size_t *out);
QCS_API qcs_status qcs_circuit_parameter_count(const qcs_circuit *circuit, size_t *out);
QCS_API qcs_status qcs_circuit_get_parameter(const qcs_circuit *circuit, size_t index,
                                             double *out);
QCS_API qcs_status qcs_circuit_set_parameter(qcs_circuit *circuit, size_t index, double angle);
QCS_API qcs_status qcs_circuit_parameter_position(const qcs_circuit *circuit, size_t index,
                                                  size_t *out);
QCS_API qcs_status qcs_circuit_update_state(const qcs_circuit *circuit, qcs_state *state,
                                            uint64_t seed);
QCS_API qcs_status qcs_circuit_update_density(const qcs_circuit *circuit, qcs_density *rho);
QCS_API qcs_status qcs_circuit_to_json(const qcs_circuit *circuit, char **out);
QCS_API qcs_status qcs_circuit_from_json(const char *text, qcs_circuit **out);
QCS_API qcs_status qcs_circuit_optimize_light(qcs_circuit *circuit, size_t *merges);
QCS_API qcs_status qcs_circuit_optimize_heavy(qcs_circuit *circuit, unsigned block_size,
                                              size_t *merges);
QCS_API qcs_status qcs_circuit_merge_all(const qcs_circuit *circuit, qcs_gate **out);
/* family: "cz-ladder", "cz-ladder-commuting" or "cnot-ring" */
QCS_API qcs_status qcs_circuit_generate(const char *family, unsigned num_qubits, unsigned depth,
                                        uint64_t seed, qcs_circuit **out);
QCS_API qcs_status qcs_circuit_add_observable_rotation(qcs_circuit *circuit,
                                                       const qcs_observable *observable,
                                                       double angle, unsigned slices);

/* ---- Observables ----
 * hermitian != 0 restricts coefficients to real values. */
QCS_API qcs_status qcs_observable_create(unsigned num_qubits, int hermitian,
                                         qcs_observable **out);
QCS_API void qcs_observable_destroy(qcs_observable *observable);
QCS_API qcs_status qcs_observable_add_term(qcs_observable *observable, qcs_complex coef,
                                           const char *pauli_string);
QCS_API qcs_status qcs_observable_from_openfermion(const char *text, qcs_observable **out);
QCS_API qcs_status qcs_observable_from_json(const char *text, qcs_observable **out);
QCS_API qcs_status qcs_observable_to_json(const qcs_observable *observable, char **out);
QCS_API unsigned qcs_observable_num_qubits(const qcs_observable *observable);
QCS_API qcs_status qcs_observable_term_count(const qcs_observable *observable, size_t *out);
QCS_API qcs_status qcs_observable_expectation(const qcs_observable *observable,
                                              const qcs_state *state, qcs_complex *out);
QCS_API qcs_status qcs_observable_transition_amplitude(const qcs_observable *observable,
                                                       const qcs_state *bra,
                                                       const qcs_state *ket, qcs_complex *out);

/* ---- Benchmarks ----
 * config keys: family, nqubits (array), depth, repeats, optimization
 * ("none" | "light" | "heavy"), block_size, include_opt_time, seed. */
QCS_API qcs_status qcs_run_benchmark(const char *config_json, char **report_json);
/* Same report rendered as CSV. */
QCS_API qcs_status qcs_report_to_csv(const char *report_json, char **csv);
QCS_API qcs_status qcs_measure_dense_gate_time(unsigned num_qubits, unsigned repeats,
                                               double *seconds);

#ifdef __cplusplus
}
#endif

#endif /* QCSIM_QCSIM_H */
