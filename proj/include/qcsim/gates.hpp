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

// Named gate constructors.
//
// Rotation convention: RX(t) = exp(i t X / 2), and likewise for RY, RZ and
// PauliRotation. This is the opposite sign of several other simulators.
//
// Fixed global phases: S = diag(1, i), T = diag(1, e^{i pi/4}),
// sqrtX = 1/2 [[1+i, 1-i], [1-i, 1+i]], sqrtY = (1+i)/2 [[1, -1], [1, 1]].
// U1/U2/U3 follow the OpenQASM definitions.

#include "qcsim/gate.hpp"

#include <optional>
#include <span>
#include <string>

namespace qcsim::gates {

Gate Identity(Qubit target);
Gate X(Qubit target);
Gate Y(Qubit target);
Gate Z(Qubit target);
Gate H(Qubit target);
Gate S(Qubit target);
Gate Sdag(Qubit target);
Gate T(Qubit target);
Gate Tdag(Qubit target);
Gate sqrtX(Qubit target);
Gate sqrtXdag(Qubit target);
Gate sqrtY(Qubit target);
Gate sqrtYdag(Qubit target);
Gate P0(Qubit target);
Gate P1(Qubit target);

Gate RX(Qubit target, double angle);
Gate RY(Qubit target, double angle);
Gate RZ(Qubit target, double angle);
Gate U1(Qubit target, double lambda);
Gate U2(Qubit target, double phi, double lambda);
Gate U3(Qubit target, double theta, double phi, double lambda);

Gate CNOT(Qubit control, Qubit target);
Gate CZ(Qubit a, Qubit b);
Gate SWAP(Qubit a, Qubit b);
Gate TOFFOLI(Qubit control1, Qubit control2, Qubit target);
Gate FREDKIN(Qubit control, Qubit target1, Qubit target2);

Gate DenseMatrix(std::vector<Qubit> targets, GateMatrix matrix);
Gate SparseMatrix(std::vector<Qubit> targets, std::vector<SparseEntry> entries);
Gate DiagonalMatrix(std::vector<Qubit> targets, std::vector<Complex> diagonal);
Gate ReversibleBoolean(std::vector<Qubit> targets, const std::function<Index(Index, Index)> &f);
Gate Pauli(std::vector<Qubit> targets, std::vector<int> ids);
Gate PauliRotation(std::vector<Qubit> targets, std::vector<int> ids, double angle);
/// Haar-random unitary on the targets.
Gate RandomUnitary(std::vector<Qubit> targets, std::uint64_t seed);
GateMatrix random_unitary_matrix(unsigned num_qubits, Random &rng);

Gate ParametricRX(Qubit target, double angle);
Gate ParametricRY(Qubit target, double angle);
Gate ParametricRZ(Qubit target, double angle);
Gate ParametricPauliRotation(std::vector<Qubit> targets, std::vector<int> ids, double angle);

/// Z-basis measurement storing the outcome in `register_address`.
Gate Measurement(Qubit target, long register_address);
Gate BitFlipNoise(Qubit target, double prob);
Gate DephasingNoise(Qubit target, double prob);
/// X, Y, Z each with probability prob / 3.
Gate DepolarizingNoise(Qubit target, double prob);
/// Each of the 15 non-identity two-qubit Paulis with probability prob / 15.
Gate TwoQubitDepolarizingNoise(Qubit a, Qubit b, double prob);
/// K0 = [[1, 0], [0, sqrt(1-g)]], K1 = [[0, sqrt(g)], [0, 0]]
Gate AmplitudeDampingNoise(Qubit target, double gamma);

/// Shape of a constructor that can be built by name.
struct NamedGateInfo {
    unsigned num_targets;  ///< qubits that end up as targets
    unsigned num_controls; ///< qubits that end up as controls (listed first)
    unsigned num_params;
};

std::optional<NamedGateInfo> named_gate_info(const std::string &name);

/// Builds a fixed-arity named gate. `qubits` follow the constructor argument
/// order (e.g. control then target for CNOT); `params` are angles, noise
/// probabilities or, for Measurement, the register address.
Gate named_gate(const std::string &name, std::span<const Qubit> qubits,
                std::span<const double> params);

} // namespace qcsim::gates
