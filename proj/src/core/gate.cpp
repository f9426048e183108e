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
#include "qcsim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qcsim {
namespace {

constexpr unsigned kMaxTargets = 30;
constexpr double kCompletenessTolerance = 1e-8;

void check_targets(const std::vector<Qubit> &targets) {
    if (targets.size() > kMaxTargets)
        throw ArgumentError("too many target qubits");
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (targets[i] == targets[j])
                throw ArgumentError("duplicate target qubit " + std::to_string(targets[i]));
}

void check_pauli_ids(const std::vector<Qubit> &targets, const std::vector<int> &ids) {
    if (ids.size() != targets.size())
        throw ArgumentError("Pauli id count must equal target count");
    for (int id : ids)
        if (id < 0 || id > 3)
            throw ArgumentError("Pauli id " + std::to_string(id) + " not in {0,1,2,3}");
}

CommuteBasis basis_of_pauli(int id) {
    switch (id) {
    case kPauliX:
        return CommuteBasis::X;
    case kPauliY:
        return CommuteBasis::Y;
    case kPauliZ:
        return CommuteBasis::Z;
    default:
        return CommuteBasis::Any;
    }
}

// Entry (row, col) of a single-qubit Pauli matrix.
Complex pauli_entry(int id, unsigned row, unsigned col) {
    switch (id) {
    case kPauliI:
        return row == col ? 1.0 : 0.0;
    case kPauliX:
        return row != col ? 1.0 : 0.0;
    case kPauliY:
        if (row == col)
            return 0.0;
        return row == 0 ? Complex(0, -1) : Complex(0, 1);
    default:
        if (row != col)
            return 0.0;
        return row == 0 ? 1.0 : -1.0;
    }
}

GateMatrix pauli_matrix(const std::vector<int> &ids) {
    const Index d = dim_of(static_cast<unsigned>(ids.size()));
    GateMatrix m(d, d);
    for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c) {
            Complex v = 1.0;
            for (std::size_t j = 0; j < ids.size() && v != Complex{}; ++j)
                v *= pauli_entry(ids[j], (r >> j) & 1U, (c >> j) & 1U);
            m(r, c) = v;
        }
    return m;
}

std::vector<Qubit> union_targets(const std::vector<Gate> &gates) {
    std::set<Qubit> all;
    for (const auto &g : gates)
        for (Qubit q : g.qubits())
            all.insert(q);
    return {all.begin(), all.end()};
}

void check_basic(const std::vector<Gate> &gates, const char *what) {
    if (gates.empty())
        throw ArgumentError(std::string(what) + " needs at least one operator");
    for (const auto &g : gates)
        if (!g.is_basic())
            throw ArgumentError(std::string(what) + " operators must be basic gates");
}

} // namespace

Gate::Gate(GateKind kind, std::vector<Qubit> targets, Payload payload, std::string name)
    : kind_(kind), targets_(std::move(targets)), payload_(std::move(payload)), name_(std::move(name)) {}

void Gate::init_commutation(CommuteBasis basis) {
    commutation_.clear();
    for (Qubit q : targets_)
        commutation_.emplace_back(q, basis);
}

Gate Gate::dense(std::vector<Qubit> targets, GateMatrix matrix) {
    check_targets(targets);
    const Index d = dim_of(static_cast<unsigned>(targets.size()));
    if (static_cast<Index>(matrix.rows()) != d || static_cast<Index>(matrix.cols()) != d)
        throw ArgumentError("dense matrix must be " + std::to_string(d) + "x" + std::to_string(d));
    Gate g(GateKind::Dense, std::move(targets), DensePayload{std::move(matrix)}, "DenseMatrix");
    g.init_commutation(CommuteBasis::None);
    return g;
}

Gate Gate::sparse(std::vector<Qubit> targets, std::vector<SparseEntry> entries) {
    check_targets(targets);
    const Index d = dim_of(static_cast<unsigned>(targets.size()));
    std::set<std::pair<Index, Index>> seen;
    for (const auto &e : entries) {
        if (e.row >= d || e.col >= d)
            throw ArgumentError("sparse entry out of range");
        if (!seen.emplace(e.row, e.col).second)
            throw ArgumentError("duplicate sparse entry (" + std::to_string(e.row) + ", " +
                                std::to_string(e.col) + ")");
    }
    Gate g(GateKind::Sparse, std::move(targets), SparsePayload{std::move(entries)}, "SparseMatrix");
    g.init_commutation(CommuteBasis::None);
    return g;
}

Gate Gate::diagonal(std::vector<Qubit> targets, std::vector<Complex> diagonal) {
    check_targets(targets);
    if (diagonal.size() != dim_of(static_cast<unsigned>(targets.size())))
        throw ArgumentError("diagonal length must be 2^m");
    Gate g(GateKind::Diagonal, std::move(targets), DiagonalPayload{std::move(diagonal)},
           "DiagonalMatrix");
    g.init_commutation(CommuteBasis::Z);
    return g;
}

Gate Gate::permutation(std::vector<Qubit> targets, const std::function<Index(Index, Index)> &f) {
    check_targets(targets);
    const Index d = dim_of(static_cast<unsigned>(targets.size()));
    std::vector<Index> table(d);
    for (Index z = 0; z < d; ++z)
        table[z] = f(z, d);
    return permutation_table(std::move(targets), std::move(table));
}

Gate Gate::permutation_table(std::vector<Qubit> targets, std::vector<Index> table) {
    check_targets(targets);
    const Index d = dim_of(static_cast<unsigned>(targets.size()));
    if (table.size() != d)
        throw ArgumentError("permutation table length must be 2^m");
    std::vector<bool> hit(d, false);
    for (Index z = 0; z < d; ++z) {
        if (table[z] >= d || hit[table[z]])
            throw ArgumentError("permutation function is not a bijection (input " +
                                std::to_string(z) + ")");
        hit[table[z]] = true;
    }
    Gate g(GateKind::Permutation, std::move(targets), PermutationPayload{std::move(table)},
           "ReversibleBoolean");
    g.init_commutation(CommuteBasis::None);
    return g;
}

Gate Gate::pauli(std::vector<Qubit> targets, std::vector<int> ids) {
    check_targets(targets);
    check_pauli_ids(targets, ids);
    Gate g(GateKind::Pauli, std::move(targets), PauliPayload{ids}, "Pauli");
    g.commutation_.clear();
    for (std::size_t j = 0; j < ids.size(); ++j)
        g.commutation_.emplace_back(g.targets_[j], basis_of_pauli(ids[j]));
    return g;
}

Gate Gate::pauli_rotation(std::vector<Qubit> targets, std::vector<int> ids, double angle) {
    check_targets(targets);
    check_pauli_ids(targets, ids);
    if (!std::isfinite(angle))
        throw ArgumentError("rotation angle must be finite");
    Gate g(GateKind::PauliRotation, std::move(targets), PauliRotationPayload{ids, angle},
           "PauliRotation");
    g.commutation_.clear();
    for (std::size_t j = 0; j < ids.size(); ++j)
        g.commutation_.emplace_back(g.targets_[j], basis_of_pauli(ids[j]));
    return g;
}

Gate Gate::cptp(std::vector<Gate> kraus) {
    check_basic(kraus, "CPTP");
    auto space = union_targets(kraus);
    const Index d = dim_of(static_cast<unsigned>(space.size()));
    GateMatrix sum = GateMatrix::Zero(d, d);
    for (const auto &k : kraus) {
        const GateMatrix m = expand_matrix(dense_form(k), space);
        sum += m.adjoint() * m;
    }
    const double err = (sum - GateMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (err > kCompletenessTolerance)
        throw ArgumentError("Kraus operators violate sum K^dagger K = I (deviation " +
                            std::to_string(err) + ")");
    Gate g(GateKind::Cptp, std::move(space), CptpPayload{std::move(kraus)}, "CPTP");
    g.init_commutation(CommuteBasis::None);
    return g;
}

Gate Gate::instrument(std::vector<Gate> kraus, long register_address) {
    if (register_address < 0)
        throw ArgumentError("negative classical register address");
    Gate base = cptp(std::move(kraus));
    auto ops = std::get<CptpPayload>(base.payload_).kraus;
    Gate g(GateKind::Instrument, base.targets_, InstrumentPayload{std::move(ops), register_address},
           "Instrument");
    g.init_commutation(CommuteBasis::None);
    return g;
}

Gate Gate::probabilistic(std::vector<double> probs, std::vector<Gate> gates) {
    check_basic(gates, "Probabilistic");
    if (probs.size() != gates.size())
        throw ArgumentError("probability count must equal gate count");
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0))
            throw ArgumentError("probabilities must be non-negative");
        total += p;
    }
    if (total > 1.0 + 1e-12)
        throw ArgumentError("probabilities sum to " + std::to_string(total) + " > 1");
    auto space = union_targets(gates);
    Gate g(GateKind::Probabilistic, std::move(space),
           ProbabilisticPayload{std::move(probs), std::move(gates)}, "Probabilistic");
    g.init_commutation(CommuteBasis::None);
    return g;
}

Gate Gate::adaptive(Gate inner, ClassicalCondition condition) {
    if (!condition)
        throw ArgumentError("adaptive gate needs a condition");
    auto space = inner.qubits();
    Gate g(GateKind::Adaptive, std::move(space),
           AdaptivePayload{std::make_shared<const Gate>(std::move(inner)), std::move(condition)},
           "Adaptive");
    g.init_commutation(CommuteBasis::None);
    return g;
}

bool Gate::is_basic() const {
    switch (kind_) {
    case GateKind::Cptp:
    case GateKind::Instrument:
    case GateKind::Probabilistic:
    case GateKind::Adaptive:
        return false;
    default:
        return true;
    }
}

std::vector<Qubit> Gate::qubits() const {
    std::vector<Qubit> out = targets_;
    for (const auto &c : controls_)
        out.push_back(c.qubit);
    return out;
}

Gate Gate::add_control(Qubit qubit, int value) const {
    if (!is_basic())
        throw ArgumentError("controls can only be added to basic gates");
    if (value != 0 && value != 1)
        throw ArgumentError("control value must be 0 or 1");
    if (std::find(targets_.begin(), targets_.end(), qubit) != targets_.end())
        throw ArgumentError("control qubit " + std::to_string(qubit) + " is already a target");
    for (const auto &c : controls_)
        if (c.qubit == qubit)
            throw ArgumentError("control qubit " + std::to_string(qubit) + " is already a control");
    Gate g = *this;
    g.controls_.push_back({qubit, value});
    g.commutation_.emplace_back(qubit, CommuteBasis::Z);
    g.fast_path_ = FastPath::None;
    return g;
}

CommuteBasis Gate::commute_basis(Qubit qubit) const {
    for (const auto &[q, b] : commutation_)
        if (q == qubit)
            return b;
    return CommuteBasis::Any;
}

void Gate::set_commute_basis(Qubit qubit, CommuteBasis basis) {
    for (auto &[q, b] : commutation_)
        if (q == qubit) {
            b = basis;
            return;
        }
    throw ArgumentError("qubit " + std::to_string(qubit) + " is not acted on by this gate");
}

double Gate::angle() const {
    if (kind_ != GateKind::PauliRotation)
        throw ArgumentError("gate has no rotation angle");
    return std::get<PauliRotationPayload>(payload_).angle;
}

void Gate::set_angle(double angle) {
    if (!parametric_)
        throw ArgumentError("only parametric gates can change their angle");
    if (!std::isfinite(angle))
        throw ArgumentError("rotation angle must be finite");
    std::get<PauliRotationPayload>(payload_).angle = angle;
    if (!params_.empty())
        params_.back() = angle;
}

Gate &Gate::set_name(std::string name, std::vector<double> params, FastPath fast) {
    name_ = std::move(name);
    params_ = std::move(params);
    fast_path_ = fast;
    return *this;
}

Gate &Gate::set_parametric(bool parametric) {
    if (parametric && kind_ != GateKind::PauliRotation)
        throw ArgumentError("only Pauli rotations can be parametric");
    parametric_ = parametric;
    return *this;
}

DenseForm dense_form(const Gate &gate) {
    if (!gate.is_basic())
        throw ArgumentError("quantum maps have no single gate matrix");
    const Index d = gate.target_dim();
    GateMatrix k;
    switch (gate.kind()) {
    case GateKind::Dense:
        k = gate.payload<DensePayload>().matrix;
        break;
    case GateKind::Sparse:
        k = GateMatrix::Zero(d, d);
        for (const auto &e : gate.payload<SparsePayload>().entries)
            k(e.row, e.col) = e.value;
        break;
    case GateKind::Diagonal: {
        k = GateMatrix::Zero(d, d);
        const auto &diag = gate.payload<DiagonalPayload>().diagonal;
        for (Index i = 0; i < d; ++i)
            k(i, i) = diag[i];
        break;
    }
    case GateKind::Permutation: {
        k = GateMatrix::Zero(d, d);
        const auto &table = gate.payload<PermutationPayload>().table;
        for (Index z = 0; z < d; ++z)
            k(table[z], z) = 1.0;
        break;
    }
    case GateKind::Pauli:
        k = pauli_matrix(gate.payload<PauliPayload>().ids);
        break;
    case GateKind::PauliRotation: {
        const auto &p = gate.payload<PauliRotationPayload>();
        k = std::cos(p.angle / 2) * GateMatrix::Identity(d, d) +
            kI * std::sin(p.angle / 2) * pauli_matrix(p.ids);
        break;
    }
    default:
        break;
    }

    DenseForm form{gate.qubits(), {}};
    const auto &controls = gate.controls();
    if (controls.empty()) {
        form.matrix = std::move(k);
        return form;
    }
    const unsigned m = static_cast<unsigned>(gate.targets().size());
    Index active = 0;
    for (std::size_t j = 0; j < controls.size(); ++j)
        if (controls[j].value == 1)
            active |= Index{1} << j;
    const Index full = dim_of(static_cast<unsigned>(form.qubits.size()));
    form.matrix = GateMatrix::Zero(full, full);
    for (Index high = 0; high < dim_of(static_cast<unsigned>(controls.size())); ++high) {
        const Index offset = high << m;
        if (high == active)
            form.matrix.block(offset, offset, d, d) = k;
        else
            form.matrix.block(offset, offset, d, d) = GateMatrix::Identity(d, d);
    }
    return form;
}

GateMatrix expand_matrix(const DenseForm &form, std::span<const Qubit> space) {
    std::vector<unsigned> pos(form.qubits.size());
    Index form_mask = 0;
    for (std::size_t j = 0; j < form.qubits.size(); ++j) {
        auto it = std::find(space.begin(), space.end(), form.qubits[j]);
        if (it == space.end())
            throw ArgumentError("expansion space does not contain qubit " +
                                std::to_string(form.qubits[j]));
        pos[j] = static_cast<unsigned>(it - space.begin());
        form_mask |= Index{1} << pos[j];
    }
    auto spread = [&](Index z) {
        Index x = 0;
        for (std::size_t j = 0; j < pos.size(); ++j)
            x |= ((z >> j) & 1U) << pos[j];
        return x;
    };
    auto gather = [&](Index x) {
        Index z = 0;
        for (std::size_t j = 0; j < pos.size(); ++j)
            z |= ((x >> pos[j]) & 1U) << j;
        return z;
    };
    const Index d = dim_of(static_cast<unsigned>(space.size()));
    const Index local = dim_of(static_cast<unsigned>(pos.size()));
    GateMatrix out = GateMatrix::Zero(d, d);
    for (Index col = 0; col < d; ++col) {
        const Index rest = col & ~form_mask;
        const Index c = gather(col);
        for (Index r = 0; r < local; ++r) {
            const Complex v = form.matrix(r, c);
            if (v != Complex{})
                out(rest | spread(r), col) = v;
        }
    }
    return out;
}

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::Dense:
        return "Dense";
    case GateKind::Sparse:
        return "Sparse";
    case GateKind::Diagonal:
        return "Diagonal";
    case GateKind::Permutation:
        return "Permutation";
    case GateKind::Pauli:
        return "Pauli";
    case GateKind::PauliRotation:
        return "PauliRotation";
    case GateKind::Cptp:
        return "CPTP";
    case GateKind::Instrument:
        return "Instrument";
    case GateKind::Probabilistic:
        return "Probabilistic";
    case GateKind::Adaptive:
        return "Adaptive";
    }
    return "?";
}

std::string to_string(CommuteBasis basis) {
    switch (basis) {
    case CommuteBasis::None:
        return "none";
    case CommuteBasis::X:
        return "X";
    case CommuteBasis::Y:
        return "Y";
    case CommuteBasis::Z:
        return "Z";
    case CommuteBasis::Any:
        return "any";
    }
    return "?";
}

} // namespace qcsim
