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
#pragma once

// Update kernels for basic gates.
//
// Every kernel works on a raw amplitude span of 2^n entries so the same code
// serves state vectors and (viewed as 2n-qubit vectors) density matrices.
// For a target list M the loop runs over B0, the indices with zero bits at
// every target and control, computed on the fly from the loop counter; for
// each element the 2^m amplitudes at B0 + B1 are gathered, transformed and
// written back. Distinct loop iterations touch disjoint amplitudes, which is
// what makes the outer loop safe to run in parallel.

#include "qcsim/gate.hpp"
#include "qcsim/types.hpp"

#include <span>

namespace qcsim::kernel {

void apply_dense(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                 std::span<const Control> controls, const GateMatrix &matrix);
void apply_sparse(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                  std::span<const Control> controls, std::span<const SparseEntry> entries);
void apply_diagonal(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                    std::span<const Control> controls, std::span<const Complex> diagonal);
void apply_permutation(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                       std::span<const Control> controls, std::span<const Index> table);
void apply_pauli(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                 std::span<const Control> controls, std::span<const int> ids);
/// exp(i * angle * P / 2) = cos(angle/2) I + i sin(angle/2) P
void apply_pauli_rotation(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                          std::span<const Control> controls, std::span<const int> ids,
                          double angle);

void apply_x(std::span<Complex> state, unsigned n, Qubit target);
void apply_y(std::span<Complex> state, unsigned n, Qubit target);
void apply_z(std::span<Complex> state, unsigned n, Qubit target);
void apply_h(std::span<Complex> state, unsigned n, Qubit target);
void apply_cnot(std::span<Complex> state, unsigned n, Qubit control, Qubit target);
void apply_cz(std::span<Complex> state, unsigned n, Qubit a, Qubit b);
void apply_swap(std::span<Complex> state, unsigned n, Qubit a, Qubit b);

} // namespace qcsim::kernel

namespace qcsim {

/// Applies a basic gate to raw amplitudes, dispatching on payload structure.
/// Every qubit index of the gate is shifted up by `offset`.
void apply_basic(const Gate &gate, std::span<Complex> state, unsigned n, Qubit offset = 0);

/// Applies the elementwise complex conjugate of a basic gate's matrix. Used
/// for the right-hand factor of rho -> K rho K^dagger.
void apply_basic_conjugate(const Gate &gate, std::span<Complex> state, unsigned n,
                           Qubit offset = 0);

} // namespace qcsim
