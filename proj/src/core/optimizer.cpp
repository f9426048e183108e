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
#include "qcsim/optimizer.hpp"

#include <algorithm>
#include <string>

namespace qcsim {
namespace {

std::vector<Qubit> sorted_qubits(const Gate &g) {
    auto q = g.qubits();
    std::sort(q.begin(), q.end());
    return q;
}

std::vector<Qubit> qubit_union(const std::vector<Qubit> &a, const std::vector<Qubit> &b) {
    std::vector<Qubit> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool shares_qubit(const std::vector<Qubit> &a, const std::vector<Qubit> &b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

bool nested(const std::vector<Qubit> &a, const std::vector<Qubit> &b) {
    return std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
           std::includes(b.begin(), b.end(), a.begin(), a.end());
}

CommuteBasis merged_basis(CommuteBasis a, CommuteBasis b) {
    if (a == CommuteBasis::Any)
        return b;
    if (b == CommuteBasis::Any || a == b)
        return a;
    return CommuteBasis::None;
}

void replace_pair(Circuit &circuit, std::size_t keep, std::size_t drop, Gate merged) {
    circuit.remove_gate(drop);
    if (drop < keep)
        --keep;
    circuit.remove_gate(keep);
    circuit.add_gate(std::move(merged), keep);
}

} // namespace

Gate merge(const Gate &g1, const Gate &g2) {
    if (!g1.is_mergeable() || !g2.is_mergeable())
        throw ArgumentError("only non-parametric basic gates can be merged");
    const auto space = qubit_union(sorted_qubits(g1), sorted_qubits(g2));
    const GateMatrix m1 = expand_matrix(dense_form(g1), space);
    const GateMatrix m2 = expand_matrix(dense_form(g2), space);
    Gate merged = Gate::dense(space, m2 * m1);
    for (Qubit q : space)
        merged.set_commute_basis(q, merged_basis(g1.commute_basis(q), g2.commute_basis(q)));
    return merged;
}

Gate merge_all(const Circuit &circuit) {
    if (circuit.gate_count() == 0)
        return Gate::dense({}, GateMatrix::Identity(1, 1));
    const auto &gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i)
        if (!gates[i].is_mergeable())
            throw ArgumentError("gate at position " + std::to_string(i) + " cannot be merged");
    if (gates.size() == 1)
        return merge(gates[0], Gate::dense({}, GateMatrix::Identity(1, 1)));
    Gate acc = merge(gates[0], gates[1]);
    for (std::size_t i = 2; i < gates.size(); ++i)
        acc = merge(acc, gates[i]);
    return acc;
}

bool commutation_check(const Gate &g1, const Gate &g2) {
    for (Qubit q : g1.qubits()) {
        const auto other = g2.qubits();
        if (std::find(other.begin(), other.end(), q) == other.end())
            continue;
        const CommuteBasis a = g1.commute_basis(q);
        const CommuteBasis b = g2.commute_basis(q);
        if (a == CommuteBasis::Any || b == CommuteBasis::Any)
            continue;
        if (a != b || a == CommuteBasis::None)
            return false;
    }
    return true;
}

std::size_t optimize_light(Circuit &circuit) {
    std::size_t merges = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t i = 0;
        while (i + 1 < circuit.gate_count()) {
            const Gate &a = circuit.gate(i);
            const Gate &b = circuit.gate(i + 1);
            if (a.is_mergeable() && b.is_mergeable() && nested(sorted_qubits(a), sorted_qubits(b))) {
                replace_pair(circuit, i, i + 1, merge(a, b));
                ++merges;
                changed = true;
            } else {
                ++i;
            }
        }
    }
    return merges;
}

std::size_t optimize_heavy(Circuit &circuit, unsigned block_size) {
    if (block_size == 0)
        throw ArgumentError("block size must be at least 1");
    std::size_t merges = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < circuit.gate_count(); ++i) {
            const Gate &g = circuit.gate(i);
            if (!g.is_mergeable())
                continue;
            const auto qi = sorted_qubits(g);
            if (qi.size() > block_size)
                continue;
            // Slide gate i right past commuting gates until it meets a partner.
            for (std::size_t j = i + 1; j < circuit.gate_count(); ++j) {
                const Gate &h = circuit.gate(j);
                if (!h.is_mergeable())
                    break;
                const auto qj = sorted_qubits(h);
                if (shares_qubit(qi, qj) && qubit_union(qi, qj).size() <= block_size) {
                    Gate merged = merge(g, h);
                    replace_pair(circuit, j, i, std::move(merged));
                    ++merges;
                    changed = true;
                    break;
                }
                if (!commutation_check(g, h))
                    break;
            }
        }
    }
    return merges;
}

} // namespace qcsim
