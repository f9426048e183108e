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
#include "qcsim/circuit.hpp"

#include "qcsim/apply.hpp"

#include <algorithm>
#include <string>

namespace qcsim {

Circuit::Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0)
        throw ArgumentError("circuit needs at least one qubit");
}

void Circuit::check_fits(const Gate &gate) const { check_gate_fits(gate, num_qubits_); }

const Gate &Circuit::gate(std::size_t position) const {
    if (position >= gates_.size())
        throw ArgumentError("gate position " + std::to_string(position) + " out of range");
    return gates_[position];
}

void Circuit::add_gate(Gate gate) { add_gate(std::move(gate), gates_.size()); }

void Circuit::add_gate(Gate gate, std::size_t position) {
    if (position > gates_.size())
        throw ArgumentError("insert position " + std::to_string(position) + " out of range");
    check_fits(gate);
    gates_.insert(gates_.begin() + static_cast<std::ptrdiff_t>(position), std::move(gate));
    on_insert(position);
}

void Circuit::remove_gate(std::size_t position) {
    if (position >= gates_.size())
        throw ArgumentError("gate position " + std::to_string(position) + " out of range");
    gates_.erase(gates_.begin() + static_cast<std::ptrdiff_t>(position));
    on_remove(position);
}

Gate Circuit::get_gate(std::size_t position) const { return gate(position); }

void Circuit::update_state(StateVector &state, Random &rng) const {
    if (state.num_qubits() != num_qubits_)
        throw ArgumentError("state has " + std::to_string(state.num_qubits()) +
                            " qubits, circuit has " + std::to_string(num_qubits_));
    for (const Gate &g : gates_)
        qcsim::update_state(g, state, rng);
}

void Circuit::update_state(StateVector &state, std::uint64_t seed) const {
    Random rng(seed);
    update_state(state, rng);
}

void Circuit::update_density(DensityMatrix &rho) const {
    if (rho.num_qubits() != num_qubits_)
        throw ArgumentError("density matrix has " + std::to_string(rho.num_qubits()) +
                            " qubits, circuit has " + std::to_string(num_qubits_));
    for (const Gate &g : gates_)
        qcsim::update_density(g, rho);
}

std::size_t Circuit::calculate_depth() const {
    std::vector<std::size_t> layer(num_qubits_, 0);
    std::size_t depth = 0;
    for (const Gate &g : gates_) {
        const auto qubits = g.qubits();
        std::size_t next = 0;
        for (Qubit q : qubits)
            next = std::max(next, layer[q]);
        ++next;
        for (Qubit q : qubits)
            layer[q] = next;
        depth = std::max(depth, next);
    }
    return depth;
}

void ParametricCircuit::add_parametric_gate(Gate gate) {
    add_parametric_gate(std::move(gate), gate_count());
}

void ParametricCircuit::add_parametric_gate(Gate gate, std::size_t position) {
    if (!gate.is_parametric())
        throw ArgumentError("add_parametric_gate needs a parametric gate");
    add_gate(std::move(gate), position);
    positions_.push_back(position);
}

void ParametricCircuit::check_index(std::size_t index) const {
    if (index >= positions_.size())
        throw ArgumentError("parameter index " + std::to_string(index) + " out of range");
}

double ParametricCircuit::get_parameter(std::size_t index) const {
    check_index(index);
    return gate(positions_[index]).angle();
}

void ParametricCircuit::set_parameter(std::size_t index, double angle) {
    check_index(index);
    mutable_gate(positions_[index]).set_angle(angle);
}

std::size_t ParametricCircuit::get_parametric_gate_position(std::size_t index) const {
    check_index(index);
    return positions_[index];
}

void ParametricCircuit::on_insert(std::size_t position) {
    for (auto &p : positions_)
        if (p >= position)
            ++p;
}

void ParametricCircuit::on_remove(std::size_t position) {
    std::erase(positions_, position);
    for (auto &p : positions_)
        if (p > position)
            --p;
}

} // namespace qcsim
