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

#include <Eigen/Core>

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qcsim {

/// Row-major dense gate matrix. Local index bit j refers to the j-th entry of
/// the owning gate's target list.
using GateMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Pauli basis a gate is block-diagonal in on one qubit. `Any` means the gate
/// acts as identity there; `None` means no claim.
enum class CommuteBasis : std::uint8_t { None, X, Y, Z, Any };

struct Control {
    Qubit qubit;
    int value;
    bool operator==(const Control &) const = default;
};

struct SparseEntry {
    Index row;
    Index col;
    Complex value;
};

/// Pauli ids: 0 = I, 1 = X, 2 = Y, 3 = Z.
enum PauliId : int { kPauliI = 0, kPauliX = 1, kPauliY = 2, kPauliZ = 3 };

class Gate;

struct DensePayload {
    GateMatrix matrix;
};
struct SparsePayload {
    std::vector<SparseEntry> entries;
};
struct DiagonalPayload {
    std::vector<Complex> diagonal;
};
/// table[z] = f(z), a bijection over [0, 2^m).
struct PermutationPayload {
    std::vector<Index> table;
};
struct PauliPayload {
    std::vector<int> ids;
};
/// exp(i * angle * P / 2)
struct PauliRotationPayload {
    std::vector<int> ids;
    double angle;
};
struct CptpPayload {
    std::vector<Gate> kraus;
};
struct InstrumentPayload {
    std::vector<Gate> kraus;
    long register_address;
};
/// Branch i applies gates[i] with probability probs[i]; the remainder
/// 1 - sum(probs) applies identity.
struct ProbabilisticPayload {
    std::vector<double> probs;
    std::vector<Gate> gates;
};
using ClassicalCondition = std::function<bool(const std::vector<long> &)>;
struct AdaptivePayload {
    std::shared_ptr<const Gate> inner;
    ClassicalCondition condition;
};

enum class GateKind {
    Dense,
    Sparse,
    Diagonal,
    Permutation,
    Pauli,
    PauliRotation,
    Cptp,
    Instrument,
    Probabilistic,
    Adaptive,
};

/// Dedicated update routines for the most common named gates.
enum class FastPath { None, X, Y, Z, H, CNOT, CZ, SWAP };

/// A quantum operation: either a basic gate |psi> -> K|psi> described by a
/// structured gate matrix on `targets()` (optionally controlled), or a
/// quantum map built from basic gates.
///
/// Gates are values; copying is cheap for small payloads and copies never
/// alias. The only post-construction mutation is the angle of a parametric
/// rotation.
class Gate {
  public:
    static Gate dense(std::vector<Qubit> targets, GateMatrix matrix);
    /// Duplicate (row, col) entries and out-of-range entries are rejected.
    static Gate sparse(std::vector<Qubit> targets, std::vector<SparseEntry> entries);
    static Gate diagonal(std::vector<Qubit> targets, std::vector<Complex> diagonal);
    /// `f(index, dim)` returns the image of each local basis index; it is
    /// probed over all 2^m inputs and must be a bijection.
    static Gate permutation(std::vector<Qubit> targets,
                            const std::function<Index(Index, Index)> &f);
    static Gate permutation_table(std::vector<Qubit> targets, std::vector<Index> table);
    static Gate pauli(std::vector<Qubit> targets, std::vector<int> ids);
    static Gate pauli_rotation(std::vector<Qubit> targets, std::vector<int> ids, double angle);

    /// Requires sum_i K_i^dagger K_i = I within 1e-8.
    static Gate cptp(std::vector<Gate> kraus);
    static Gate instrument(std::vector<Gate> kraus, long register_address);
    /// Requires probs >= 0 with sum <= 1 (within 1e-12).
    static Gate probabilistic(std::vector<double> probs, std::vector<Gate> gates);
    static Gate adaptive(Gate inner, ClassicalCondition condition);

    GateKind kind() const { return kind_; }
    bool is_basic() const;
    bool is_map() const { return !is_basic(); }
    /// Basic and non-parametric: may be fused by the circuit optimizer.
    bool is_mergeable() const { return is_basic() && !parametric_; }

    const std::vector<Qubit> &targets() const { return targets_; }
    const std::vector<Control> &controls() const { return controls_; }
    /// Targets followed by control qubits.
    std::vector<Qubit> qubits() const;
    Index target_dim() const { return dim_of(static_cast<unsigned>(targets_.size())); }

    /// Returns a copy acting only where `qubit` equals `value`. Controlled
    /// qubits commute in the Z basis. Rejects overlap with existing targets
    /// or controls and map gates.
    Gate add_control(Qubit qubit, int value) const;

    /// Commutation basis on `qubit`; Any for qubits the gate does not touch.
    CommuteBasis commute_basis(Qubit qubit) const;
    void set_commute_basis(Qubit qubit, CommuteBasis basis);

    const std::string &name() const { return name_; }
    const std::vector<double> &params() const { return params_; }
    FastPath fast_path() const { return fast_path_; }

    bool is_parametric() const { return parametric_; }
    double angle() const;
    void set_angle(double angle);

    /// Tag this gate as a named constructor result (used for serialization
    /// and the specialized update routines).
    Gate &set_name(std::string name, std::vector<double> params = {}, FastPath fast = FastPath::None);
    Gate &set_parametric(bool parametric);

    template <class T> const T &payload() const { return std::get<T>(payload_); }

  private:
    using Payload = std::variant<DensePayload, SparsePayload, DiagonalPayload, PermutationPayload,
                                 PauliPayload, PauliRotationPayload, CptpPayload, InstrumentPayload,
                                 ProbabilisticPayload, AdaptivePayload>;

    Gate(GateKind kind, std::vector<Qubit> targets, Payload payload, std::string name);
    void init_commutation(CommuteBasis basis);

    GateKind kind_;
    std::vector<Qubit> targets_;
    std::vector<Control> controls_;
    Payload payload_;
    std::vector<std::pair<Qubit, CommuteBasis>> commutation_;
    std::string name_;
    std::vector<double> params_;
    FastPath fast_path_ = FastPath::None;
    bool parametric_ = false;
};

/// Matrix of a basic gate over its own qubit list: local bit j is
/// `qubits[j]`, with targets first and controls after them.
struct DenseForm {
    std::vector<Qubit> qubits;
    GateMatrix matrix;
};

/// Densifies a basic gate, expanding controls into identity/payload blocks.
DenseForm dense_form(const Gate &gate);

/// Embeds `form` into the larger ordered qubit list `space` (which must
/// contain every qubit of `form`) as form (x) I.
GateMatrix expand_matrix(const DenseForm &form, std::span<const Qubit> space);

std::string to_string(GateKind kind);
std::string to_string(CommuteBasis basis);

} // namespace qcsim
