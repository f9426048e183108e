// Copyright 2026 The qcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qcsim/qcsim.h"

#include "qcsim/apply.hpp"
#include "qcsim/bench.hpp"
#include "qcsim/circuit_json.hpp"
#include "qcsim/gates.hpp"
#include "qcsim/observable.hpp"
#include "qcsim/optimizer.hpp"
#include "qcsim/parallel.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

struct qcs_state {
    qcsim::StateVector value;
};
struct qcs_density {
    qcsim::DensityMatrix value;
};
struct qcs_gate {
    qcsim::Gate value;
};
struct qcs_circuit {
    qcsim::ParametricCircuit value;
};
struct qcs_observable {
    std::unique_ptr<qcsim::GeneralOperator> value;
};

namespace {

using namespace qcsim;

thread_local std::string g_last_error;

qcs_status fail(qcs_status status, const char *message) {
    g_last_error = message;
    return status;
}

template <class F> qcs_status guard(F &&body) {
    try {
        body();
        g_last_error.clear();
        return QCS_OK;
    } catch (const ParseError &e) {
        return fail(QCS_ERR_PARSE, e.what());
    } catch (const InvalidMapError &e) {
        return fail(QCS_ERR_INVALID_MAP, e.what());
    } catch (const ArgumentError &e) {
        return fail(QCS_ERR_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(QCS_ERR_ALLOCATION, "allocation failed");
    } catch (const std::length_error &) {
        return fail(QCS_ERR_ALLOCATION, "allocation failed");
    } catch (const nlohmann::json::exception &e) {
        return fail(QCS_ERR_PARSE, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(QCS_ERR_ARGUMENT, e.what());
    } catch (const std::out_of_range &e) {
        return fail(QCS_ERR_ARGUMENT, e.what());
    } catch (const std::exception &e) {
        return fail(QCS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QCS_ERR_INTERNAL, "unknown error");
    }
}

template <class T> void require(const T *p, const char *what) {
    if (p == nullptr)
        throw ArgumentError(std::string(what) + " is null");
}

Complex to_cpp(qcs_complex c) { return {c.re, c.im}; }
qcs_complex to_c(Complex c) { return {c.real(), c.imag()}; }

std::vector<Qubit> qubit_list(const unsigned *qubits, size_t count) {
    if (count > 0)
        require(qubits, "qubit array");
    return {qubits, qubits + count};
}

std::vector<Complex> complex_list(const qcs_complex *values, uint64_t count) {
    if (count > 0)
        require(values, "value array");
    std::vector<Complex> out(count);
    for (uint64_t i = 0; i < count; ++i)
        out[i] = to_cpp(values[i]);
    return out;
}

std::vector<Gate> gate_list(const qcs_gate *const *gates, size_t count) {
    if (count > 0)
        require(gates, "gate array");
    std::vector<Gate> out;
    for (size_t i = 0; i < count; ++i) {
        require(gates[i], "gate");
        out.push_back(gates[i]->value);
    }
    return out;
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void check_count(uint64_t got, uint64_t want) {
    if (got != want)
        throw ArgumentError("buffer holds " + std::to_string(got) + " entries, expected " +
                            std::to_string(want));
}

template <class T> void emit(T **out, T *value) {
    std::unique_ptr<T> owned(value);
    require(out, "output pointer");
    *out = owned.release();
}

void emit_gate(qcs_gate **out, Gate g) { emit(out, new qcs_gate{std::move(g)}); }
void emit_state(qcs_state **out, StateVector s) { emit(out, new qcs_state{std::move(s)}); }

ParametricCircuit to_parametric(const Circuit &c) {
    ParametricCircuit out(c.num_qubits());
    for (const Gate &g : c.gates()) {
        if (g.is_parametric())
            out.add_parametric_gate(g);
        else
            out.add_gate(g);
    }
    return out;
}

} // namespace

extern "C" {

const char *qcs_version(void) { return kVersion; }
const char *qcs_last_error(void) { return g_last_error.c_str(); }
void qcs_string_free(char *text) { std::free(text); }

qcs_status qcs_set_num_threads(int threads) {
    return guard([&] { set_num_threads(threads); });
}
int qcs_get_num_threads(void) { return num_threads(); }
qcs_status qcs_set_parallel_threshold(unsigned qubits) {
    return guard([&] { set_parallel_threshold(qubits); });
}
unsigned qcs_get_parallel_threshold(void) { return parallel_threshold(); }

/* ---- State vectors ---- */

qcs_status qcs_state_create(unsigned num_qubits, qcs_state **out) {
    return guard([&] { emit_state(out, StateVector(num_qubits)); });
}

qcs_status qcs_state_copy(const qcs_state *state, qcs_state **out) {
    return guard([&] {
        require(state, "state");
        emit_state(out, state->value);
    });
}

void qcs_state_destroy(qcs_state *state) { delete state; }
unsigned qcs_state_num_qubits(const qcs_state *state) { return state ? state->value.num_qubits() : 0; }
uint64_t qcs_state_dim(const qcs_state *state) { return state ? state->value.dim() : 0; }

qcs_status qcs_state_set_zero(qcs_state *state) {
    return guard([&] {
        require(state, "state");
        state->value.set_zero_state();
    });
}

qcs_status qcs_state_set_basis(qcs_state *state, uint64_t basis) {
    return guard([&] {
        require(state, "state");
        state->value.set_computational_basis(basis);
    });
}

qcs_status qcs_state_set_haar_random(qcs_state *state, uint64_t seed) {
    return guard([&] {
        require(state, "state");
        state->value.set_haar_random(seed);
    });
}

qcs_status qcs_state_load(qcs_state *state, const qcs_complex *values, uint64_t count) {
    return guard([&] {
        require(state, "state");
        state->value.load(complex_list(values, count));
    });
}

qcs_status qcs_state_get_amplitudes(const qcs_state *state, qcs_complex *out, uint64_t count) {
    return guard([&] {
        require(state, "state");
        require(out, "output buffer");
        check_count(count, state->value.dim());
        const auto amps = state->value.amplitudes();
        for (uint64_t i = 0; i < count; ++i)
            out[i] = to_c(amps[i]);
    });
}

qcs_status qcs_state_squared_norm(const qcs_state *state, double *out) {
    return guard([&] {
        require(state, "state");
        require(out, "output pointer");
        *out = state->value.squared_norm();
    });
}

qcs_status qcs_state_normalize(qcs_state *state, double squared_norm) {
    return guard([&] {
        require(state, "state");
        state->value.normalize(squared_norm);
    });
}

qcs_status qcs_state_marginal_probability(const qcs_state *state, const int *pattern,
                                          size_t count, double *out) {
    return guard([&] {
        require(state, "state");
        require(out, "output pointer");
        if (count > 0)
            require(pattern, "pattern");
        *out = state->value.marginal_probability(std::span<const int>(pattern, count));
    });
}

qcs_status qcs_state_sampling(const qcs_state *state, size_t shots, uint64_t seed, uint64_t *out) {
    return guard([&] {
        require(state, "state");
        if (shots > 0)
            require(out, "output buffer");
        const auto samples = state->value.sampling(shots, seed);
        std::copy(samples.begin(), samples.end(), out);
    });
}

qcs_status qcs_state_inner_product(const qcs_state *bra, const qcs_state *ket, qcs_complex *out) {
    return guard([&] {
        require(bra, "bra");
        require(ket, "ket");
        require(out, "output pointer");
        *out = to_c(inner_product(bra->value, ket->value));
    });
}

qcs_status qcs_state_multiply_coef(qcs_state *state, qcs_complex coef) {
    return guard([&] {
        require(state, "state");
        state->value.multiply_coef(to_cpp(coef));
    });
}

qcs_status qcs_state_add_state(qcs_state *state, const qcs_state *other) {
    return guard([&] {
        require(state, "state");
        require(other, "other state");
        state->value.add_state(other->value);
    });
}

qcs_status qcs_state_tensor_product(const qcs_state *low, const qcs_state *high, qcs_state **out) {
    return guard([&] {
        require(low, "low state");
        require(high, "high state");
        emit_state(out, tensor_product(low->value, high->value));
    });
}

qcs_status qcs_state_permutate_qubit(const qcs_state *state, const unsigned *order, size_t count,
                                     qcs_state **out) {
    return guard([&] {
        require(state, "state");
        emit_state(out, permutate_qubit(state->value, qubit_list(order, count)));
    });
}

qcs_status qcs_state_drop_qubit(const qcs_state *state, const unsigned *targets,
                                const int *values, size_t count, qcs_state **out) {
    return guard([&] {
        require(state, "state");
        if (count > 0)
            require(values, "values");
        emit_state(out, drop_qubit(state->value, qubit_list(targets, count),
                                   std::span<const int>(values, count)));
    });
}

qcs_status qcs_state_get_classical_value(const qcs_state *state, long address, long *out) {
    return guard([&] {
        require(state, "state");
        require(out, "output pointer");
        *out = state->value.get_classical_value(address);
    });
}

qcs_status qcs_state_set_classical_value(qcs_state *state, long address, long value) {
    return guard([&] {
        require(state, "state");
        state->value.set_classical_value(address, value);
    });
}

/* ---- Density matrices ---- */

qcs_status qcs_density_create(unsigned num_qubits, qcs_density **out) {
    return guard([&] { emit(out, new qcs_density{DensityMatrix(num_qubits)}); });
}

qcs_status qcs_density_from_state(const qcs_state *state, qcs_density **out) {
    return guard([&] {
        require(state, "state");
        emit(out, new qcs_density{DensityMatrix::from_pure(state->value)});
    });
}

void qcs_density_destroy(qcs_density *rho) { delete rho; }
unsigned qcs_density_num_qubits(const qcs_density *rho) { return rho ? rho->value.num_qubits() : 0; }

qcs_status qcs_density_load(qcs_density *rho, const qcs_complex *values, uint64_t count) {
    return guard([&] {
        require(rho, "density matrix");
        rho->value.load(complex_list(values, count));
    });
}

qcs_status qcs_density_get_elements(const qcs_density *rho, qcs_complex *out, uint64_t count) {
    return guard([&] {
        require(rho, "density matrix");
        require(out, "output buffer");
        const auto elements = rho->value.elements();
        check_count(count, elements.size());
        for (uint64_t i = 0; i < count; ++i)
            out[i] = to_c(elements[i]);
    });
}

qcs_status qcs_density_trace(const qcs_density *rho, qcs_complex *out) {
    return guard([&] {
        require(rho, "density matrix");
        require(out, "output pointer");
        *out = to_c(rho->value.trace());
    });
}

/* ---- Gates ---- */

qcs_status qcs_gate_named(const char *name, const unsigned *qubits, size_t num_qubits,
                          const double *params, size_t num_params, qcs_gate **out) {
    return guard([&] {
        require(name, "name");
        if (num_params > 0)
            require(params, "parameter array");
        const auto q = qubit_list(qubits, num_qubits);
        emit_gate(out, gates::named_gate(name, q, std::span<const double>(params, num_params)));
    });
}

qcs_status qcs_gate_dense(const unsigned *targets, size_t num_targets, const qcs_complex *matrix,
                          qcs_gate **out) {
    return guard([&] {
        if (num_targets > 30)
            throw ArgumentError("too many target qubits");
        const auto d = static_cast<Eigen::Index>(dim_of(static_cast<unsigned>(num_targets)));
        require(matrix, "matrix");
        GateMatrix m(d, d);
        for (Eigen::Index r = 0; r < d; ++r)
            for (Eigen::Index c = 0; c < d; ++c)
                m(r, c) = to_cpp(matrix[r * d + c]);
        emit_gate(out, Gate::dense(qubit_list(targets, num_targets), std::move(m)));
    });
}

qcs_status qcs_gate_sparse(const unsigned *targets, size_t num_targets, const uint64_t *rows,
                           const uint64_t *cols, const qcs_complex *values, size_t count,
                           qcs_gate **out) {
    return guard([&] {
        if (count > 0) {
            require(rows, "rows");
            require(cols, "cols");
            require(values, "values");
        }
        std::vector<SparseEntry> entries;
        for (size_t i = 0; i < count; ++i)
            entries.push_back({rows[i], cols[i], to_cpp(values[i])});
        emit_gate(out, Gate::sparse(qubit_list(targets, num_targets), std::move(entries)));
    });
}

qcs_status qcs_gate_diagonal(const unsigned *targets, size_t num_targets,
                             const qcs_complex *diagonal, qcs_gate **out) {
    return guard([&] {
        if (num_targets > 30)
            throw ArgumentError("too many target qubits");
        const Index d = dim_of(static_cast<unsigned>(num_targets));
        emit_gate(out, Gate::diagonal(qubit_list(targets, num_targets), complex_list(diagonal, d)));
    });
}

qcs_status qcs_gate_permutation(const unsigned *targets, size_t num_targets, const uint64_t *table,
                                qcs_gate **out) {
    return guard([&] {
        if (num_targets > 30)
            throw ArgumentError("too many target qubits");
        const Index d = dim_of(static_cast<unsigned>(num_targets));
        require(table, "table");
        emit_gate(out, Gate::permutation_table(qubit_list(targets, num_targets),
                                               std::vector<Index>(table, table + d)));
    });
}

qcs_status qcs_gate_pauli(const unsigned *targets, const int *ids, size_t count, qcs_gate **out) {
    return guard([&] {
        if (count > 0)
            require(ids, "ids");
        emit_gate(out, Gate::pauli(qubit_list(targets, count), std::vector<int>(ids, ids + count)));
    });
}

qcs_status qcs_gate_pauli_rotation(const unsigned *targets, const int *ids, size_t count,
                                   double angle, int parametric, qcs_gate **out) {
    return guard([&] {
        if (count > 0)
            require(ids, "ids");
        auto q = qubit_list(targets, count);
        std::vector<int> p(ids, ids + count);
        emit_gate(out, parametric
                           ? gates::ParametricPauliRotation(std::move(q), std::move(p), angle)
                           : Gate::pauli_rotation(std::move(q), std::move(p), angle));
    });
}

qcs_status qcs_gate_random_unitary(const unsigned *targets, size_t count, uint64_t seed,
                                   qcs_gate **out) {
    return guard([&] { emit_gate(out, gates::RandomUnitary(qubit_list(targets, count), seed)); });
}

qcs_status qcs_gate_cptp(const qcs_gate *const *kraus, size_t count, qcs_gate **out) {
    return guard([&] { emit_gate(out, Gate::cptp(gate_list(kraus, count))); });
}

qcs_status qcs_gate_instrument(const qcs_gate *const *kraus, size_t count, long register_address,
                               qcs_gate **out) {
    return guard(
        [&] { emit_gate(out, Gate::instrument(gate_list(kraus, count), register_address)); });
}

qcs_status qcs_gate_probabilistic(const double *probs, const qcs_gate *const *gates, size_t count,
                                  qcs_gate **out) {
    return guard([&] {
        if (count > 0)
            require(probs, "probabilities");
        emit_gate(out, Gate::probabilistic(std::vector<double>(probs, probs + count),
                                           gate_list(gates, count)));
    });
}

qcs_status qcs_gate_adaptive(const qcs_gate *inner, qcs_condition_fn condition, void *user_data,
                             qcs_gate **out) {
    return guard([&] {
        require(inner, "inner gate");
        if (condition == nullptr)
            throw ArgumentError("condition is null");
        auto predicate = [condition, user_data](const std::vector<long> &regs) {
            return condition(regs.data(), regs.size(), user_data) != 0;
        };
        emit_gate(out, Gate::adaptive(inner->value, predicate));
    });
}

qcs_status qcs_gate_add_control(const qcs_gate *gate, unsigned qubit, int value, qcs_gate **out) {
    return guard([&] {
        require(gate, "gate");
        emit_gate(out, gate->value.add_control(qubit, value));
    });
}

qcs_status qcs_gate_copy(const qcs_gate *gate, qcs_gate **out) {
    return guard([&] {
        require(gate, "gate");
        emit_gate(out, gate->value);
    });
}

void qcs_gate_destroy(qcs_gate *gate) { delete gate; }

qcs_status qcs_gate_is_parametric(const qcs_gate *gate, int *out) {
    return guard([&] {
        require(gate, "gate");
        require(out, "output pointer");
        *out = gate->value.is_parametric() ? 1 : 0;
    });
}

qcs_status qcs_gate_get_angle(const qcs_gate *gate, double *out) {
    return guard([&] {
        require(gate, "gate");
        require(out, "output pointer");
        *out = gate->value.angle();
    });
}

qcs_status qcs_gate_set_angle(qcs_gate *gate, double angle) {
    return guard([&] {
        require(gate, "gate");
        gate->value.set_angle(angle);
    });
}

qcs_status qcs_gate_num_qubits(const qcs_gate *gate, size_t *out) {
    return guard([&] {
        require(gate, "gate");
        require(out, "output pointer");
        *out = gate->value.qubits().size();
    });
}

qcs_status qcs_gate_get_qubits(const qcs_gate *gate, unsigned *out, size_t count) {
    return guard([&] {
        require(gate, "gate");
        const auto q = gate->value.qubits();
        check_count(count, q.size());
        if (count > 0)
            require(out, "output buffer");
        std::copy(q.begin(), q.end(), out);
    });
}

qcs_status qcs_gate_get_matrix(const qcs_gate *gate, qcs_complex *out, uint64_t count) {
    return guard([&] {
        require(gate, "gate");
        require(out, "output buffer");
        const DenseForm form = dense_form(gate->value);
        check_count(count, static_cast<uint64_t>(form.matrix.size()));
        const auto d = form.matrix.rows();
        for (Eigen::Index r = 0; r < d; ++r)
            for (Eigen::Index c = 0; c < d; ++c)
                out[r * d + c] = to_c(form.matrix(r, c));
    });
}

qcs_status qcs_gate_merge(const qcs_gate *first, const qcs_gate *second, qcs_gate **out) {
    return guard([&] {
        require(first, "first gate");
        require(second, "second gate");
        emit_gate(out, merge(first->value, second->value));
    });
}

qcs_status qcs_gate_commutation_check(const qcs_gate *a, const qcs_gate *b, int *out) {
    return guard([&] {
        require(a, "first gate");
        require(b, "second gate");
        require(out, "output pointer");
        *out = commutation_check(a->value, b->value) ? 1 : 0;
    });
}

qcs_status qcs_gate_update_state(const qcs_gate *gate, qcs_state *state, uint64_t seed,
                                 long *branch) {
    return guard([&] {
        require(gate, "gate");
        require(state, "state");
        Random rng(seed);
        const long b = update_state(gate->value, state->value, rng);
        if (branch != nullptr)
            *branch = b;
    });
}

qcs_status qcs_gate_update_density(const qcs_gate *gate, qcs_density *rho) {
    return guard([&] {
        require(gate, "gate");
        require(rho, "density matrix");
        update_density(gate->value, rho->value);
    });
}

qcs_status qcs_gate_to_json(const qcs_gate *gate, char **out) {
    return guard([&] {
        require(gate, "gate");
        require(out, "output pointer");
        *out = copy_string(gate_to_json(gate->value).dump());
    });
}

qcs_status qcs_gate_from_json(const char *text, qcs_gate **out) {
    return guard([&] {
        require(text, "text");
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError(e.what(), static_cast<long>(e.byte));
        }
        emit_gate(out, gate_from_json(doc));
    });
}

/* ---- Circuits ---- */

qcs_status qcs_circuit_create(unsigned num_qubits, qcs_circuit **out) {
    return guard([&] { emit(out, new qcs_circuit{ParametricCircuit(num_qubits)}); });
}

qcs_status qcs_circuit_copy(const qcs_circuit *circuit, qcs_circuit **out) {
    return guard([&] {
        require(circuit, "circuit");
        emit(out, new qcs_circuit{circuit->value});
    });
}

void qcs_circuit_destroy(qcs_circuit *circuit) { delete circuit; }
unsigned qcs_circuit_num_qubits(const qcs_circuit *circuit) {
    return circuit ? circuit->value.num_qubits() : 0;
}

qcs_status qcs_circuit_gate_count(const qcs_circuit *circuit, size_t *out) {
    return guard([&] {
        require(circuit, "circuit");
        require(out, "output pointer");
        *out = circuit->value.gate_count();
    });
}

qcs_status qcs_circuit_add_gate(qcs_circuit *circuit, const qcs_gate *gate) {
    return guard([&] {
        require(circuit, "circuit");
        require(gate, "gate");
        circuit->value.add_gate(gate->value);
    });
}

qcs_status qcs_circuit_insert_gate(qcs_circuit *circuit, const qcs_gate *gate, size_t position) {
    return guard([&] {
        require(circuit, "circuit");
        require(gate, "gate");
        circuit->value.add_gate(gate->value, position);
    });
}

qcs_status qcs_circuit_add_parametric_gate(qcs_circuit *circuit, const qcs_gate *gate) {
    return guard([&] {
        require(circuit, "circuit");
        require(gate, "gate");
        circuit->value.add_parametric_gate(gate->value);
    });
}

qcs_status qcs_circuit_insert_parametric_gate(qcs_circuit *circuit, const qcs_gate *gate,
                                              size_t position) {
    return guard([&] {
        require(circuit, "circuit");
        require(gate, "gate");
        circuit->value.add_parametric_gate(gate->value, position);
    });
}

qcs_status qcs_circuit_remove_gate(qcs_circuit *circuit, size_t position) {
    return guard([&] {
        require(circuit, "circuit");
        circuit->value.remove_gate(position);
    });
}

qcs_status qcs_circuit_get_gate(const qcs_circuit *circuit, size_t position, qcs_gate **out) {
    return guard([&] {
        require(circuit, "circuit");
        emit_gate(out, circuit->value.get_gate(position));
    });
}

qcs_status qcs_circuit_depth(const qcs_circuit *circuit, size_t *out) {
    return guard([&] {
        require(circuit, "circuit");
        require(out, "output pointer");
        *out = circuit->value.calculate_depth();
    });
}

qcs_status qcs_circuit_parameter_count(const qcs_circuit *circuit, size_t *out) {
    return guard([&] {
        require(circuit, "circuit");
        require(out, "output pointer");
        *out = circuit->value.parameter_count();
    });
}

qcs_status qcs_circuit_get_parameter(const qcs_circuit *circuit, size_t index, double *out) {
    return guard([&] {
        require(circuit, "circuit");
        require(out, "output pointer");
        *out = circuit->value.get_parameter(index);
    });
}

qcs_status qcs_circuit_set_parameter(qcs_circuit *circuit, size_t index, double angle) {
    return guard([&] {
        require(circuit, "circuit");
        circuit->value.set_parameter(index, angle);
    });
}

qcs_status qcs_circuit_parameter_position(const qcs_circuit *circuit, size_t index, size_t *out) {
    return guard([&] {
        require(circuit, "circuit");
        require(out, "output pointer");
        *out = circuit->value.get_parametric_gate_position(index);
    });
}

qcs_status qcs_circuit_update_state(const qcs_circuit *circuit, qcs_state *state, uint64_t seed) {
    return guard([&] {
        require(circuit, "circuit");
        require(state, "state");
        circuit->value.update_state(state->value, seed);
    });
}

qcs_status qcs_circuit_update_density(const qcs_circuit *circuit, qcs_density *rho) {
    return guard([&] {
        require(circuit, "circuit");
        require(rho, "density matrix");
        circuit->value.update_density(rho->value);
    });
}

qcs_status qcs_circuit_to_json(const qcs_circuit *circuit, char **out) {
    return guard([&] {
        require(circuit, "circuit");
        require(out, "output pointer");
        *out = copy_string(serialize_circuit(circuit->value));
    });
}

qcs_status qcs_circuit_from_json(const char *text, qcs_circuit **out) {
    return guard([&] {
        require(text, "text");
        emit(out, new qcs_circuit{to_parametric(parse_circuit(text))});
    });
}

qcs_status qcs_circuit_optimize_light(qcs_circuit *circuit, size_t *merges) {
    return guard([&] {
        require(circuit, "circuit");
        const std::size_t m = optimize_light(circuit->value);
        if (merges != nullptr)
            *merges = m;
    });
}

qcs_status qcs_circuit_optimize_heavy(qcs_circuit *circuit, unsigned block_size, size_t *merges) {
    return guard([&] {
        require(circuit, "circuit");
        const std::size_t m = optimize_heavy(circuit->value, block_size);
        if (merges != nullptr)
            *merges = m;
    });
}

qcs_status qcs_circuit_merge_all(const qcs_circuit *circuit, qcs_gate **out) {
    return guard([&] {
        require(circuit, "circuit");
        emit_gate(out, merge_all(circuit->value));
    });
}

qcs_status qcs_circuit_generate(const char *family, unsigned num_qubits, unsigned depth,
                                uint64_t seed, qcs_circuit **out) {
    return guard([&] {
        require(family, "family");
        const auto f = parse_family(family);
        if (!f)
            throw ArgumentError(std::string("unknown circuit family '") + family + "'");
        emit(out,
             new qcs_circuit{to_parametric(generate_circuit(*f, num_qubits, depth, seed))});
    });
}

qcs_status qcs_circuit_add_observable_rotation(qcs_circuit *circuit,
                                               const qcs_observable *observable, double angle,
                                               unsigned slices) {
    return guard([&] {
        require(circuit, "circuit");
        require(observable, "observable");
        add_observable_rotation(circuit->value, *observable->value, angle, slices);
    });
}

/* ---- Observables ---- */

qcs_status qcs_observable_create(unsigned num_qubits, int hermitian, qcs_observable **out) {
    return guard([&] {
        std::unique_ptr<GeneralOperator> op;
        if (hermitian)
            op = std::make_unique<Observable>(num_qubits);
        else
            op = std::make_unique<GeneralOperator>(num_qubits);
        emit(out, new qcs_observable{std::move(op)});
    });
}

void qcs_observable_destroy(qcs_observable *observable) { delete observable; }

qcs_status qcs_observable_add_term(qcs_observable *observable, qcs_complex coef,
                                   const char *pauli_string) {
    return guard([&] {
        require(observable, "observable");
        require(pauli_string, "Pauli string");
        observable->value->add_term(to_cpp(coef), pauli_string);
    });
}

qcs_status qcs_observable_from_openfermion(const char *text, qcs_observable **out) {
    return guard([&] {
        require(text, "text");
        emit(out, new qcs_observable{
                      std::make_unique<GeneralOperator>(parse_openfermion_text(text))});
    });
}

qcs_status qcs_observable_from_json(const char *text, qcs_observable **out) {
    return guard([&] {
        require(text, "text");
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError(e.what(), static_cast<long>(e.byte));
        }
        emit(out,
             new qcs_observable{std::make_unique<GeneralOperator>(operator_from_json(doc))});
    });
}

qcs_status qcs_observable_to_json(const qcs_observable *observable, char **out) {
    return guard([&] {
        require(observable, "observable");
        require(out, "output pointer");
        *out = copy_string(operator_to_json(*observable->value).dump());
    });
}

unsigned qcs_observable_num_qubits(const qcs_observable *observable) {
    return observable ? observable->value->num_qubits() : 0;
}

qcs_status qcs_observable_term_count(const qcs_observable *observable, size_t *out) {
    return guard([&] {
        require(observable, "observable");
        require(out, "output pointer");
        *out = observable->value->term_count();
    });
}

qcs_status qcs_observable_expectation(const qcs_observable *observable, const qcs_state *state,
                                      qcs_complex *out) {
    return guard([&] {
        require(observable, "observable");
        require(state, "state");
        require(out, "output pointer");
        *out = to_c(observable->value->GeneralOperator::expectation_value(state->value));
    });
}

qcs_status qcs_observable_transition_amplitude(const qcs_observable *observable,
                                               const qcs_state *bra, const qcs_state *ket,
                                               qcs_complex *out) {
    return guard([&] {
        require(observable, "observable");
        require(bra, "bra");
        require(ket, "ket");
        require(out, "output pointer");
        *out = to_c(observable->value->transition_amplitude(bra->value, ket->value));
    });
}

/* ---- Benchmarks ---- */

qcs_status qcs_run_benchmark(const char *config_json, char **report_json) {
    return guard([&] {
        require(config_json, "config");
        require(report_json, "output pointer");
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(config_json);
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError(e.what(), static_cast<long>(e.byte));
        }
        const TimingReport report = run_benchmark(config_from_json(doc));
        *report_json = copy_string(report_to_json(report).dump());
    });
}

qcs_status qcs_report_to_csv(const char *report_json, char **csv) {
    return guard([&] {
        require(report_json, "report");
        require(csv, "output pointer");
        *csv = copy_string(report_json_to_csv(nlohmann::json::parse(report_json)));
    });
}

qcs_status qcs_measure_dense_gate_time(unsigned num_qubits, unsigned repeats, double *seconds) {
    return guard([&] {
        require(seconds, "output pointer");
        *seconds = measure_dense_gate_time(num_qubits, repeats);
    });
}

} // extern "C"
