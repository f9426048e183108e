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
#include "qcsim/apply.hpp"

#include "qcsim/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace qcsim {
namespace {

std::span<const Gate> branches(const Gate &gate) {
    if (gate.kind() == GateKind::Cptp)
        return gate.payload<CptpPayload>().kraus;
    return gate.payload<InstrumentPayload>().kraus;
}

double squared_norm(std::span<const Complex> v) {
    double sum = 0.0;
    for (const Complex &a : v)
        sum += std::norm(a);
    return sum;
}

long sample_kraus(std::span<const Gate> kraus, StateVector &state, Random &rng) {
    const unsigned n = state.num_qubits();
    const std::vector<Complex> &input = state.get_vector();
    const double total = squared_norm(input);
    const double threshold = rng.uniform() * total;

    std::vector<Complex> work(input.size());
    std::vector<Complex> fallback;
    long fallback_index = kNoBranch;
    double fallback_prob = 0.0;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < kraus.size(); ++i) {
        std::copy(input.begin(), input.end(), work.begin());
        apply_basic(kraus[i], work, n);
        const double p = squared_norm(work);
        cumulative += p;
        if (p <= 0.0)
            continue;
        if (threshold < cumulative || i + 1 == kraus.size()) {
            state.load(work);
            state.multiply_coef(std::sqrt(total / p));
            return static_cast<long>(i);
        }
        fallback.swap(work);
        work.resize(input.size());
        fallback_index = static_cast<long>(i);
        fallback_prob = p;
    }
    // Rounding left the threshold uncrossed and the last branch is empty.
    if (fallback_index == kNoBranch)
        throw InvalidMapError("every Kraus branch has zero probability");
    state.load(fallback);
    state.multiply_coef(std::sqrt(total / fallback_prob));
    return fallback_index;
}

long sample_probabilistic(const ProbabilisticPayload &map, Random &rng) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    for (std::size_t i = 0; i < map.probs.size(); ++i) {
        cumulative += map.probs[i];
        if (u < cumulative)
            return static_cast<long>(i);
    }
    return kNoBranch;
}

void conjugate_by(const Gate &k, std::span<Complex> elements, unsigned n) {
    apply_basic(k, elements, 2 * n, n);
    apply_basic_conjugate(k, elements, 2 * n, 0);
}

void kraus_sum(std::span<const Gate> kraus, DensityMatrix &rho) {
    const unsigned n = rho.num_qubits();
    const auto input = rho.elements();
    const std::vector<Complex> original(input.begin(), input.end());
    std::vector<Complex> sum(original.size(), Complex{});
    std::vector<Complex> work(original.size());
    for (const Gate &k : kraus) {
        work = original;
        conjugate_by(k, work, n);
        for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] += work[i];
    }
    rho.load(sum);
}

void mixture(const ProbabilisticPayload &map, DensityMatrix &rho) {
    const unsigned n = rho.num_qubits();
    const auto input = rho.elements();
    const std::vector<Complex> original(input.begin(), input.end());
    double remainder = 1.0;
    for (double p : map.probs)
        remainder -= p;
    remainder = std::max(remainder, 0.0);
    std::vector<Complex> sum(original.size());
    for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] = remainder * original[i];
    std::vector<Complex> work(original.size());
    for (std::size_t b = 0; b < map.gates.size(); ++b) {
        if (map.probs[b] == 0.0)
            continue;
        work = original;
        conjugate_by(map.gates[b], work, n);
        for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] += map.probs[b] * work[i];
    }
    rho.load(sum);
}

} // namespace

void check_gate_fits(const Gate &gate, unsigned num_qubits) {
    for (Qubit q : gate.qubits())
        if (q >= num_qubits)
            throw ArgumentError("gate acts on qubit " + std::to_string(q) + " of a " +
                                std::to_string(num_qubits) + "-qubit state");
    switch (gate.kind()) {
    case GateKind::Cptp:
    case GateKind::Instrument:
        for (const Gate &k : branches(gate))
            check_gate_fits(k, num_qubits);
        break;
    case GateKind::Probabilistic:
        for (const Gate &g : gate.payload<ProbabilisticPayload>().gates)
            check_gate_fits(g, num_qubits);
        break;
    case GateKind::Adaptive:
        check_gate_fits(*gate.payload<AdaptivePayload>().inner, num_qubits);
        break;
    default:
        break;
    }
}

long update_state(const Gate &gate, StateVector &state, Random &rng) {
    check_gate_fits(gate, state.num_qubits());
    switch (gate.kind()) {
    case GateKind::Cptp:
        return sample_kraus(branches(gate), state, rng);
    case GateKind::Instrument: {
        const long index = sample_kraus(branches(gate), state, rng);
        state.set_classical_value(gate.payload<InstrumentPayload>().register_address, index);
        return index;
    }
    case GateKind::Probabilistic: {
        const auto &map = gate.payload<ProbabilisticPayload>();
        const long index = sample_probabilistic(map, rng);
        if (index != kNoBranch)
            apply_basic(map.gates[static_cast<std::size_t>(index)], state.amplitudes(),
                        state.num_qubits());
        return index;
    }
    case GateKind::Adaptive: {
        const auto &adaptive = gate.payload<AdaptivePayload>();
        if (!adaptive.condition(state.registers().values()))
            return kNoBranch;
        return update_state(*adaptive.inner, state, rng);
    }
    default:
        apply_basic(gate, state.amplitudes(), state.num_qubits());
        return kNoBranch;
    }
}

void update_density(const Gate &gate, DensityMatrix &rho) {
    check_gate_fits(gate, rho.num_qubits());
    switch (gate.kind()) {
    case GateKind::Cptp:
    case GateKind::Instrument:
        kraus_sum(branches(gate), rho);
        break;
    case GateKind::Probabilistic:
        mixture(gate.payload<ProbabilisticPayload>(), rho);
        break;
    case GateKind::Adaptive: {
        const auto &adaptive = gate.payload<AdaptivePayload>();
        if (adaptive.condition(rho.registers().values()))
            update_density(*adaptive.inner, rho);
        break;
    }
    default:
        conjugate_by(gate, rho.elements(), rho.num_qubits());
        break;
    }
}

} // namespace qcsim
