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

#include "qcsim/gate.hpp"
#include "qcsim/state.hpp"

#include <cstddef>
#include <vector>

namespace qcsim {

/// Ordered gate list executed front to back.
class Circuit {
  public:
    explicit Circuit(unsigned num_qubits);
    virtual ~Circuit() = default;
    Circuit(const Circuit &) = default;
    Circuit &operator=(const Circuit &) = default;

    unsigned num_qubits() const { return num_qubits_; }
    std::size_t gate_count() const { return gates_.size(); }
    const std::vector<Gate> &gates() const { return gates_; }
    const Gate &gate(std::size_t position) const;

    void add_gate(Gate gate);
    /// Inserts before `position` (0 <= position <= count).
    void add_gate(Gate gate, std::size_t position);
    void remove_gate(std::size_t position);
    /// Independent copy of the gate at `position`.
    Gate get_gate(std::size_t position) const;

    void update_state(StateVector &state, Random &rng) const;
    void update_state(StateVector &state, std::uint64_t seed) const;
    void update_density(DensityMatrix &rho) const;

    /// ASAP layer count; every target and control qubit is occupied.
    std::size_t calculate_depth() const;

  protected:
    virtual void on_insert(std::size_t /*position*/) {}
    virtual void on_remove(std::size_t /*position*/) {}
    Gate &mutable_gate(std::size_t position) { return gates_[position]; }

  private:
    void check_fits(const Gate &gate) const;

    unsigned num_qubits_;
    std::vector<Gate> gates_;
};

/// Circuit whose parametric rotations are addressed by parameter index, in
/// the order they were added.
class ParametricCircuit : public Circuit {
  public:
    using Circuit::Circuit;

    /// `gate` must be parametric.
    void add_parametric_gate(Gate gate);
    void add_parametric_gate(Gate gate, std::size_t position);

    std::size_t parameter_count() const { return positions_.size(); }
    double get_parameter(std::size_t index) const;
    void set_parameter(std::size_t index, double angle);
    std::size_t get_parametric_gate_position(std::size_t index) const;

  protected:
    void on_insert(std::size_t position) override;
    void on_remove(std::size_t position) override;

  private:
    void check_index(std::size_t index) const;

    std::vector<std::size_t> positions_;
};

} // namespace qcsim
