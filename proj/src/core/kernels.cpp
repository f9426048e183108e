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
#include "qcsim/kernels.hpp"

#include "qcsim/index_decomposition.hpp"
#include "qcsim/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

namespace qcsim::kernel {
namespace {

// B0 enumeration restricted to the control pattern plus the B1 offsets.
struct Layout {
    ZeroBitInserter insert;
    Index control_mask = 0;
    Index outer_count = 0;
    std::vector<Index> inner;

    Index base(Index k) const { return insert(k) | control_mask; }
};

void check_size(std::span<Complex> state, unsigned n) {
    if (state.size() != dim_of(n))
        throw ArgumentError("amplitude span does not have 2^n entries");
}

Layout make_layout(unsigned n, std::span<const Qubit> targets, std::span<const Control> controls) {
    std::vector<Qubit> fixed;
    Index used = 0;
    auto claim = [&](Qubit q, const char *role) {
        if (q >= n)
            throw ArgumentError(std::string(role) + " qubit " + std::to_string(q) +
                                " out of range for " + std::to_string(n) + " qubits");
        if ((used >> q) & 1U)
            throw ArgumentError("qubit " + std::to_string(q) + " used twice in one gate");
        used |= Index{1} << q;
        fixed.push_back(q);
    };
    for (Qubit q : targets)
        claim(q, "target");
    Layout layout;
    for (const auto &c : controls) {
        claim(c.qubit, "control");
        if (c.value != 0 && c.value != 1)
            throw ArgumentError("control value must be 0 or 1");
        if (c.value == 1)
            layout.control_mask |= Index{1} << c.qubit;
    }
    layout.insert = ZeroBitInserter(fixed);
    layout.outer_count = dim_of(n - static_cast<unsigned>(fixed.size()));
    const Index m = targets.size();
    layout.inner.resize(dim_of(static_cast<unsigned>(m)));
    for (Index z = 0; z < layout.inner.size(); ++z) {
        Index x = 0;
        for (Index j = 0; j < m; ++j)
            if ((z >> j) & 1U)
                x |= Index{1} << targets[j];
        layout.inner[z] = x;
    }
    return layout;
}

int worker_count(unsigned n) { return use_parallel(n) ? num_threads() : 1; }

template <class Body> void for_each_outer(Index count, unsigned n, Body &&body) {
    const bool parallel = use_parallel(n);
#pragma omp parallel for schedule(static) if (parallel)
    for (Index k = 0; k < count; ++k)
        body(k);
}

// Sign and phase bookkeeping for a Pauli string:
//   P|y> = coef(y) |y ^ flip>,  coef(y) = i^{#Y} (-1)^{popcount(y & phase_mask)}
struct PauliMasks {
    Index flip = 0;
    Index phase_mask = 0;
    Complex global = 1.0;

    Complex coef(Index y) const { return (std::popcount(y & phase_mask) & 1) ? -global : global; }
};

PauliMasks pauli_masks(std::span<const Qubit> targets, std::span<const int> ids) {
    if (ids.size() != targets.size())
        throw ArgumentError("Pauli id count must equal target count");
    PauliMasks masks;
    int y_count = 0;
    for (std::size_t j = 0; j < ids.size(); ++j) {
        const Index bit = Index{1} << targets[j];
        switch (ids[j]) {
        case kPauliI:
            break;
        case kPauliX:
            masks.flip |= bit;
            break;
        case kPauliY:
            masks.flip |= bit;
            masks.phase_mask |= bit;
            ++y_count;
            break;
        case kPauliZ:
            masks.phase_mask |= bit;
            break;
        default:
            throw ArgumentError("Pauli id " + std::to_string(ids[j]) + " not in {0,1,2,3}");
        }
    }
    static constexpr Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    masks.global = kPowers[y_count % 4];
    return masks;
}

// Pairs (x, x ^ flip) with the pivot bit of x clear, restricted to controls.
Layout pair_layout(unsigned n, std::span<const Qubit> targets, std::span<const Control> controls,
                   Index flip) {
    Layout full = make_layout(n, targets, controls); // validation only
    std::vector<Qubit> fixed;
    for (const auto &c : controls)
        fixed.push_back(c.qubit);
    if (flip != 0)
        fixed.push_back(static_cast<Qubit>(std::countr_zero(flip)));
    Layout layout;
    layout.control_mask = full.control_mask;
    layout.insert = ZeroBitInserter(fixed);
    layout.outer_count = dim_of(n - static_cast<unsigned>(fixed.size()));
    return layout;
}

} // namespace

void apply_dense(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                 std::span<const Control> controls, const GateMatrix &matrix) {
    check_size(state, n);
    const Layout layout = make_layout(n, targets, controls);
    const Index dm = layout.inner.size();
    if (static_cast<Index>(matrix.rows()) != dm || static_cast<Index>(matrix.cols()) != dm)
        throw ArgumentError("gate matrix dimension does not match target count");
    Complex *psi = state.data();
    const Complex *mat = matrix.data();
    const Index *b1 = layout.inner.data();

    if (dm == 1) {
        const Complex c = mat[0];
        for_each_outer(layout.outer_count, n, [&](Index k) { psi[layout.base(k)] *= c; });
        return;
    }
    if (dm == 2) {
        const Index off = b1[1];
        const Complex m00 = mat[0], m01 = mat[1], m10 = mat[2], m11 = mat[3];
        for_each_outer(layout.outer_count, n, [&](Index k) {
            const Index i0 = layout.base(k);
            const Complex a = psi[i0];
            const Complex b = psi[i0 | off];
            psi[i0] = m00 * a + m01 * b;
            psi[i0 | off] = m10 * a + m11 * b;
        });
        return;
    }
    if (dm == 4) {
        const Index o1 = b1[1], o2 = b1[2], o3 = b1[3];
        for_each_outer(layout.outer_count, n, [&](Index k) {
            const Index i0 = layout.base(k);
            const Complex v0 = psi[i0], v1 = psi[i0 | o1], v2 = psi[i0 | o2], v3 = psi[i0 | o3];
            psi[i0] = mat[0] * v0 + mat[1] * v1 + mat[2] * v2 + mat[3] * v3;
            psi[i0 | o1] = mat[4] * v0 + mat[5] * v1 + mat[6] * v2 + mat[7] * v3;
            psi[i0 | o2] = mat[8] * v0 + mat[9] * v1 + mat[10] * v2 + mat[11] * v3;
            psi[i0 | o3] = mat[12] * v0 + mat[13] * v1 + mat[14] * v2 + mat[15] * v3;
        });
        return;
    }

    // One gathered 2^m temporary per worker, allocated once per application.
    std::vector<Complex> buffer(static_cast<std::size_t>(worker_count(n)) * dm);
    Complex *buf = buffer.data();
    for_each_outer(layout.outer_count, n, [&](Index k) {
        Complex *in = buf + static_cast<std::size_t>(worker_index()) * dm;
        const Index base = layout.base(k);
        for (Index i = 0; i < dm; ++i)
            in[i] = psi[base | b1[i]];
        for (Index r = 0; r < dm; ++r) {
            const Complex *row = mat + r * dm;
            Complex acc{};
            for (Index c = 0; c < dm; ++c)
                acc += row[c] * in[c];
            psi[base | b1[r]] = acc;
        }
    });
}

void apply_sparse(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                  std::span<const Control> controls, std::span<const SparseEntry> entries) {
    check_size(state, n);
    const Layout layout = make_layout(n, targets, controls);
    const Index dm = layout.inner.size();
    for (const auto &e : entries)
        if (e.row >= dm || e.col >= dm)
            throw ArgumentError("sparse entry out of range");
    Complex *psi = state.data();
    const Index *b1 = layout.inner.data();
    std::vector<Complex> buffer(static_cast<std::size_t>(worker_count(n)) * 2 * dm);
    Complex *buf = buffer.data();
    for_each_outer(layout.outer_count, n, [&](Index k) {
        Complex *in = buf + static_cast<std::size_t>(worker_index()) * 2 * dm;
        Complex *out = in + dm;
        const Index base = layout.base(k);
        for (Index i = 0; i < dm; ++i) {
            in[i] = psi[base | b1[i]];
            out[i] = Complex{};
        }
        for (const auto &e : entries)
            out[e.row] += e.value * in[e.col];
        for (Index i = 0; i < dm; ++i)
            psi[base | b1[i]] = out[i];
    });
}

void apply_diagonal(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                    std::span<const Control> controls, std::span<const Complex> diagonal) {
    check_size(state, n);
    const Layout layout = make_layout(n, targets, controls);
    const Index dm = layout.inner.size();
    if (diagonal.size() != dm)
        throw ArgumentError("diagonal length does not match target count");
    Complex *psi = state.data();
    const Index *b1 = layout.inner.data();
    const Complex *diag = diagonal.data();
    for_each_outer(layout.outer_count, n, [&](Index k) {
        const Index base = layout.base(k);
        for (Index i = 0; i < dm; ++i)
            psi[base | b1[i]] *= diag[i];
    });
}

void apply_permutation(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                       std::span<const Control> controls, std::span<const Index> table) {
    check_size(state, n);
    const Layout layout = make_layout(n, targets, controls);
    const Index dm = layout.inner.size();
    if (table.size() != dm)
        throw ArgumentError("permutation table length does not match target count");
    Complex *psi = state.data();
    const Index *b1 = layout.inner.data();
    const Index *f = table.data();
    std::vector<Complex> buffer(static_cast<std::size_t>(worker_count(n)) * dm);
    Complex *buf = buffer.data();
    for_each_outer(layout.outer_count, n, [&](Index k) {
        Complex *in = buf + static_cast<std::size_t>(worker_index()) * dm;
        const Index base = layout.base(k);
        for (Index z = 0; z < dm; ++z)
            in[z] = psi[base | b1[z]];
        for (Index z = 0; z < dm; ++z)
            psi[base | b1[f[z]]] = in[z];
    });
}

void apply_pauli(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                 std::span<const Control> controls, std::span<const int> ids) {
    check_size(state, n);
    const PauliMasks masks = pauli_masks(targets, ids);
    const Layout layout = pair_layout(n, targets, controls, masks.flip);
    Complex *psi = state.data();
    if (masks.flip == 0) {
        for_each_outer(layout.outer_count, n, [&](Index k) {
            const Index x = layout.base(k);
            psi[x] *= masks.coef(x);
        });
        return;
    }
    for_each_outer(layout.outer_count, n, [&](Index k) {
        const Index x = layout.base(k);
        const Index y = x ^ masks.flip;
        const Complex a = psi[x];
        const Complex b = psi[y];
        psi[x] = masks.coef(y) * b;
        psi[y] = masks.coef(x) * a;
    });
}

void apply_pauli_rotation(std::span<Complex> state, unsigned n, std::span<const Qubit> targets,
                          std::span<const Control> controls, std::span<const int> ids,
                          double angle) {
    check_size(state, n);
    const PauliMasks masks = pauli_masks(targets, ids);
    const Layout layout = pair_layout(n, targets, controls, masks.flip);
    const double c = std::cos(angle / 2);
    const Complex is = kI * std::sin(angle / 2);
    Complex *psi = state.data();
    if (masks.flip == 0) {
        for_each_outer(layout.outer_count, n, [&](Index k) {
            const Index x = layout.base(k);
            psi[x] *= c + is * masks.coef(x);
        });
        return;
    }
    for_each_outer(layout.outer_count, n, [&](Index k) {
        const Index x = layout.base(k);
        const Index y = x ^ masks.flip;
        const Complex a = psi[x];
        const Complex b = psi[y];
        psi[x] = c * a + is * masks.coef(y) * b;
        psi[y] = c * b + is * masks.coef(x) * a;
    });
}

namespace {

void check_qubit(unsigned n, Qubit q) {
    if (q >= n)
        throw ArgumentError("qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(n) + " qubits");
}

void check_pair(unsigned n, Qubit a, Qubit b) {
    check_qubit(n, a);
    check_qubit(n, b);
    if (a == b)
        throw ArgumentError("two-qubit gate needs distinct qubits");
}

} // namespace

void apply_x(std::span<Complex> state, unsigned n, Qubit target) {
    check_size(state, n);
    check_qubit(n, target);
    const ZeroBitInserter insert({target});
    const Index bit = Index{1} << target;
    Complex *psi = state.data();
    for_each_outer(dim_of(n - 1), n, [&](Index k) {
        const Index i = insert(k);
        std::swap(psi[i], psi[i | bit]);
    });
}

void apply_y(std::span<Complex> state, unsigned n, Qubit target) {
    check_size(state, n);
    check_qubit(n, target);
    const ZeroBitInserter insert({target});
    const Index bit = Index{1} << target;
    Complex *psi = state.data();
    for_each_outer(dim_of(n - 1), n, [&](Index k) {
        const Index i = insert(k);
        const Complex a = psi[i];
        psi[i] = -kI * psi[i | bit];
        psi[i | bit] = kI * a;
    });
}

void apply_z(std::span<Complex> state, unsigned n, Qubit target) {
    check_size(state, n);
    check_qubit(n, target);
    const ZeroBitInserter insert({target});
    const Index bit = Index{1} << target;
    Complex *psi = state.data();
    for_each_outer(dim_of(n - 1), n, [&](Index k) { psi[insert(k) | bit] *= -1.0; });
}

void apply_h(std::span<Complex> state, unsigned n, Qubit target) {
    check_size(state, n);
    check_qubit(n, target);
    const ZeroBitInserter insert({target});
    const Index bit = Index{1} << target;
    const double s = 1.0 / std::sqrt(2.0);
    Complex *psi = state.data();
    for_each_outer(dim_of(n - 1), n, [&](Index k) {
        const Index i = insert(k);
        const Complex a = psi[i];
        const Complex b = psi[i | bit];
        psi[i] = s * (a + b);
        psi[i | bit] = s * (a - b);
    });
}

void apply_cnot(std::span<Complex> state, unsigned n, Qubit control, Qubit target) {
    check_size(state, n);
    check_pair(n, control, target);
    const ZeroBitInserter insert({control, target});
    const Index cbit = Index{1} << control;
    const Index tbit = Index{1} << target;
    Complex *psi = state.data();
    for_each_outer(dim_of(n - 2), n, [&](Index k) {
        const Index i = insert(k) | cbit;
        std::swap(psi[i], psi[i | tbit]);
    });
}

void apply_cz(std::span<Complex> state, unsigned n, Qubit a, Qubit b) {
    check_size(state, n);
    check_pair(n, a, b);
    const ZeroBitInserter insert({a, b});
    const Index both = (Index{1} << a) | (Index{1} << b);
    Complex *psi = state.data();
    for_each_outer(dim_of(n - 2), n, [&](Index k) { psi[insert(k) | both] *= -1.0; });
}

void apply_swap(std::span<Complex> state, unsigned n, Qubit a, Qubit b) {
    check_size(state, n);
    check_pair(n, a, b);
    const ZeroBitInserter insert({a, b});
    const Index abit = Index{1} << a;
    const Index bbit = Index{1} << b;
    Complex *psi = state.data();
    for_each_outer(dim_of(n - 2), n, [&](Index k) {
        const Index i = insert(k);
        std::swap(psi[i | abit], psi[i | bbit]);
    });
}

} // namespace qcsim::kernel

namespace qcsim {
namespace {

struct ShiftedQubits {
    std::vector<Qubit> targets;
    std::vector<Control> controls;
};

ShiftedQubits shift_qubits(const Gate &gate, Qubit offset) {
    ShiftedQubits s{gate.targets(), gate.controls()};
    for (auto &q : s.targets)
        q += offset;
    for (auto &c : s.controls)
        c.qubit += offset;
    return s;
}

bool try_fast_path(const Gate &gate, std::span<Complex> state, unsigned n, Qubit offset) {
    const auto &t = gate.targets();
    switch (gate.fast_path()) {
    case FastPath::X:
        kernel::apply_x(state, n, t[0] + offset);
        return true;
    case FastPath::Y:
        kernel::apply_y(state, n, t[0] + offset);
        return true;
    case FastPath::Z:
        kernel::apply_z(state, n, t[0] + offset);
        return true;
    case FastPath::H:
        kernel::apply_h(state, n, t[0] + offset);
        return true;
    case FastPath::CNOT:
        kernel::apply_cnot(state, n, gate.controls()[0].qubit + offset, t[0] + offset);
        return true;
    case FastPath::CZ:
        kernel::apply_cz(state, n, t[0] + offset, t[1] + offset);
        return true;
    case FastPath::SWAP:
        kernel::apply_swap(state, n, t[0] + offset, t[1] + offset);
        return true;
    case FastPath::None:
        break;
    }
    return false;
}

} // namespace

void apply_basic(const Gate &gate, std::span<Complex> state, unsigned n, Qubit offset) {
    if (!gate.is_basic())
        throw ArgumentError("apply_basic called with a quantum map");
    if (try_fast_path(gate, state, n, offset))
        return;
    const ShiftedQubits shifted = shift_qubits(gate, offset);
    const auto &t = shifted.targets;
    const auto &c = shifted.controls;
    switch (gate.kind()) {
    case GateKind::Dense:
        kernel::apply_dense(state, n, t, c, gate.payload<DensePayload>().matrix);
        break;
    case GateKind::Sparse:
        kernel::apply_sparse(state, n, t, c, gate.payload<SparsePayload>().entries);
        break;
    case GateKind::Diagonal:
        kernel::apply_diagonal(state, n, t, c, gate.payload<DiagonalPayload>().diagonal);
        break;
    case GateKind::Permutation:
        kernel::apply_permutation(state, n, t, c, gate.payload<PermutationPayload>().table);
        break;
    case GateKind::Pauli:
        kernel::apply_pauli(state, n, t, c, gate.payload<PauliPayload>().ids);
        break;
    case GateKind::PauliRotation: {
        const auto &p = gate.payload<PauliRotationPayload>();
        kernel::apply_pauli_rotation(state, n, t, c, p.ids, p.angle);
        break;
    }
    default:
        break;
    }
}

void apply_basic_conjugate(const Gate &gate, std::span<Complex> state, unsigned n,
                           Qubit offset) {
    if (!gate.is_basic())
        throw ArgumentError("apply_basic_conjugate called with a quantum map");
    const ShiftedQubits shifted = shift_qubits(gate, offset);
    const auto &t = shifted.targets;
    const auto &c = shifted.controls;
    switch (gate.kind()) {
    case GateKind::Dense: {
        const GateMatrix conj = gate.payload<DensePayload>().matrix.conjugate();
        kernel::apply_dense(state, n, t, c, conj);
        break;
    }
    case GateKind::Sparse: {
        auto entries = gate.payload<SparsePayload>().entries;
        for (auto &e : entries)
            e.value = std::conj(e.value);
        kernel::apply_sparse(state, n, t, c, entries);
        break;
    }
    case GateKind::Diagonal: {
        auto diag = gate.payload<DiagonalPayload>().diagonal;
        for (auto &v : diag)
            v = std::conj(v);
        kernel::apply_diagonal(state, n, t, c, diag);
        break;
    }
    case GateKind::Permutation:
        apply_basic(gate, state, n, offset);
        break;
    case GateKind::Pauli: {
        // conj(P) = (-1)^{#Y} P
        const auto &ids = gate.payload<PauliPayload>().ids;
        kernel::apply_pauli(state, n, t, c, ids);
        if (std::count(ids.begin(), ids.end(), kPauliY) % 2 == 1) {
            const std::vector<Complex> minus_one{-1.0};
            kernel::apply_diagonal(state, n, {}, c, minus_one);
        }
        break;
    }
    case GateKind::PauliRotation: {
        // conj(exp(i a P / 2)) = exp(-i a conj(P) / 2) = exp(i a' P / 2), a' = -(-1)^{#Y} a
        const auto &p = gate.payload<PauliRotationPayload>();
        const bool odd_y = std::count(p.ids.begin(), p.ids.end(), kPauliY) % 2 == 1;
        kernel::apply_pauli_rotation(state, n, t, c, p.ids, odd_y ? p.angle : -p.angle);
        break;
    }
    default:
        break;
    }
}

} // namespace qcsim
