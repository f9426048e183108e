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

#include "qcsim/types.hpp"

#include <functional>
#include <span>
#include <vector>

namespace qcsim {

/// Growable integer array attached to a quantum state. Unwritten addresses
/// read as zero.
class ClassicalRegisters {
  public:
    long get(long address) const;
    void set(long address, long value);
    const std::vector<long> &values() const { return values_; }
    void clear() { values_.clear(); }

  private:
    std::vector<long> values_;
};

/// Marginal-probability pattern entry that matches both 0 and 1.
inline constexpr int kWildcard = 2;

/// Pure state of n qubits: 2^n double-precision amplitudes. Bit i of a basis
/// index is the value of qubit i.
class StateVector {
  public:
    /// Zero state |0...0>. Throws ArgumentError for n == 0 or n > 62.
    explicit StateVector(unsigned num_qubits);

    unsigned num_qubits() const { return num_qubits_; }
    Index dim() const { return amplitudes_.size(); }

    std::span<Complex> amplitudes() { return amplitudes_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::vector<Complex> get_vector() const { return amplitudes_; }

    void set_zero_state();
    void set_computational_basis(Index basis);
    void set_haar_random(std::uint64_t seed);
    void set_haar_random(Random &rng);

    void load(std::span<const Complex> values);
    void load(const StateVector &other);

    double squared_norm() const;
    /// Divides every amplitude by sqrt(squared_norm).
    void normalize(double squared_norm);

    /// Probability of observing `pattern` (0, 1 or kWildcard per qubit,
    /// entry i addressing qubit i).
    double marginal_probability(std::span<const int> pattern) const;

    /// Z-basis samples. Builds the cumulative distribution once and binary
    /// searches per shot.
    std::vector<Index> sampling(std::size_t count, std::uint64_t seed) const;
    std::vector<Index> sampling(std::size_t count, Random &rng) const;

    void multiply_coef(Complex coef);
    void add_state(const StateVector &other);
    void multiply_elementwise_function(const std::function<Complex(Index)> &func);

    long get_classical_value(long address) const { return registers_.get(address); }
    void set_classical_value(long address, long value) { registers_.set(address, value); }
    ClassicalRegisters &registers() { return registers_; }
    const ClassicalRegisters &registers() const { return registers_; }

  private:
    unsigned num_qubits_;
    std::vector<Complex> amplitudes_;
    ClassicalRegisters registers_;
};

/// sum_x conj(bra_x) ket_x
Complex inner_product(const StateVector &bra, const StateVector &ket);

/// |a> (x) |b> with `a` on the lower qubit indices.
StateVector tensor_product(const StateVector &low, const StateVector &high);

/// New qubit i carries old qubit order[i].
StateVector permutate_qubit(const StateVector &state, std::span<const Qubit> order);

/// Projects each target onto its value and removes it. The result is not
/// renormalized; its squared norm is the probability of the projection.
StateVector drop_qubit(const StateVector &state, std::span<const Qubit> targets,
                       std::span<const int> values);

/// Mixed state of n qubits, stored row-major as a 2^n x 2^n matrix.
///
/// The flat element array is laid out like a 2n-qubit state vector whose low
/// n bits index the column and high n bits the row, which is how the gate
/// kernels address it.
class DensityMatrix {
  public:
    /// |0...0><0...0|. Throws ArgumentError for n == 0 or n > 31.
    explicit DensityMatrix(unsigned num_qubits);
    static DensityMatrix from_pure(const StateVector &state);

    unsigned num_qubits() const { return num_qubits_; }
    Index dim() const { return dim_of(num_qubits_); }

    Complex get(Index row, Index col) const { return elements_[row * dim() + col]; }
    void set(Index row, Index col, Complex value) { elements_[row * dim() + col] = value; }

    std::span<Complex> elements() { return elements_; }
    std::span<const Complex> elements() const { return elements_; }

    void set_zero_state();
    void load(std::span<const Complex> row_major);
    Complex trace() const;
    /// Largest |rho - rho^dagger| element.
    double hermiticity_error() const;

    ClassicalRegisters &registers() { return registers_; }
    const ClassicalRegisters &registers() const { return registers_; }

  private:
    unsigned num_qubits_;
    std::vector<Complex> elements_;
    ClassicalRegisters registers_;
};

} // namespace qcsim
