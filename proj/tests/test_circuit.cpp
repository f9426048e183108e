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
#include "oracle.hpp"

#include "qcsim/apply.hpp"
#include "qcsim/circuit.hpp"
#include "qcsim/gates.hpp"
#include "qcsim/kernels.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace qcsim;

namespace {

Gate random_basic_gate(unsigned n, std::mt19937_64 &rng) {
    const Qubit a = static_cast<Qubit>(rng() % n);
    const Qubit b = static_cast<Qubit>((a + 1 + rng() % (n - 1)) % n);
    const double t = std::uniform_real_distribution<double>(0, 6.28)(rng);
    switch (rng() % 6) {
    case 0:
        return gates::H(a);
    case 1:
        return gates::CNOT(a, b);
    case 2:
        return gates::RX(a, t);
    case 3:
        return gates::CZ(a, b);
    case 4:
        return gates::RandomUnitary({a, b}, rng());
    default:
        return gates::U3(b, t, 0.2, -t);
    }
}

} // namespace

TEST(Circuit, ListSemantics) {
    Circuit c(4);
    c.add_gate(gates::H(0));
    c.add_gate(gates::X(1));
    c.add_gate(gates::Z(2));
    EXPECT_EQ(c.gate_count(), 3U);
    c.add_gate(gates::CNOT(2, 3), 1);
    EXPECT_EQ(c.gate(1).name(), "CNOT");
    EXPECT_EQ(c.gate(2).name(), "X");
    c.remove_gate(0);
    EXPECT_EQ(c.gate_count(), 3U);
    EXPECT_EQ(c.gate(0).name(), "CNOT");

    EXPECT_THROW(c.add_gate(gates::X(4)), ArgumentError);
    EXPECT_THROW(c.add_gate(gates::X(0), 5), ArgumentError);
    EXPECT_THROW(c.remove_gate(3), ArgumentError);
    EXPECT_THROW(c.get_gate(3), ArgumentError);
    EXPECT_THROW(c.add_gate(Gate::probabilistic({0.5}, {gates::X(7)})), ArgumentError);
    EXPECT_THROW(Circuit(0), ArgumentError);
}

TEST(Circuit, GetGateReturnsCopy) {
    ParametricCircuit c(1);
    c.add_parametric_gate(gates::ParametricRX(0, 0.1));
    Gate copy = c.get_gate(0);
    copy.set_angle(2.0);
    EXPECT_DOUBLE_EQ(c.get_parameter(0), 0.1);
    EXPECT_DOUBLE_EQ(c.gate(0).angle(), 0.1);
}

TEST(Circuit, BellState) {
    Circuit c(2);
    c.add_gate(gates::H(0));
    c.add_gate(gates::CNOT(0, 1));
    StateVector s(2);
    c.update_state(s, 1);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s.amplitudes()[0] - r), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s.amplitudes()[3] - r), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s.amplitudes()[1]), 0.0, 1e-12);
    EXPECT_EQ(c.calculate_depth(), 2U);

    Circuit empty(2);
    StateVector t(2);
    t.set_haar_random(3);
    const auto before = t.get_vector();
    empty.update_state(t, 1);
    EXPECT_EQ(t.get_vector(), before);
    EXPECT_EQ(empty.calculate_depth(), 0U);

    StateVector wrong(3);
    EXPECT_THROW(c.update_state(wrong, 1), ArgumentError);
    DensityMatrix wrong_rho(3);
    EXPECT_THROW(c.update_density(wrong_rho), ArgumentError);
}

TEST(Circuit, MatchesGateByGateApplication) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned n = 2 + trial % 4;
        Circuit c(n);
        for (int g = 0; g < 8; ++g)
            c.add_gate(random_basic_gate(n, rng));
        StateVector a(n);
        a.set_haar_random(trial);
        StateVector b = a;
        c.update_state(a, 1);
        for (const Gate &g : c.gates())
            apply_basic(g, b.amplitudes(), n);
        EXPECT_EQ(a.get_vector(), b.get_vector());

        // Density path agrees with the pure path for unitary circuits.
        StateVector p(n);
        p.set_haar_random(trial);
        DensityMatrix rho = DensityMatrix::from_pure(p);
        c.update_density(rho);
        const oracle::Vector v = oracle::to_vector(a);
        EXPECT_LT((oracle::to_matrix(rho) - v * v.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Circuit, ExecutionIsLinearInConcatenation) {
    std::mt19937_64 rng(20);
    for (unsigned n = 2; n <= 5; ++n) {
        Circuit c1(n), c2(n), both(n);
        for (int g = 0; g < 6; ++g) {
            const Gate x = random_basic_gate(n, rng);
            const Gate y = random_basic_gate(n, rng);
            c1.add_gate(x);
            c2.add_gate(y);
        }
        for (const Gate &g : c1.gates())
            both.add_gate(g);
        for (const Gate &g : c2.gates())
            both.add_gate(g);
        StateVector a(n);
        a.set_haar_random(n);
        StateVector b = a;
        both.update_state(a, 1);
        c1.update_state(b, 1);
        c2.update_state(b, 1);
        for (Index x = 0; x < a.dim(); ++x)
            EXPECT_LT(std::abs(a.amplitudes()[x] - b.amplitudes()[x]), 1e-12);
    }
}

TEST(Circuit, SeededMapsAreReproducible) {
    Circuit c(3);
    c.add_gate(gates::H(0));
    c.add_gate(gates::H(1));
    c.add_gate(gates::DepolarizingNoise(0, 0.5));
    c.add_gate(gates::Measurement(0, 0));
    c.add_gate(gates::Measurement(1, 1));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        StateVector a(3), b(3);
        c.update_state(a, seed);
        c.update_state(b, seed);
        EXPECT_EQ(a.get_vector(), b.get_vector());
        EXPECT_EQ(a.registers().values(), b.registers().values());
    }
}

TEST(Circuit, Depth) {
    Circuit par(2);
    par.add_gate(gates::H(0));
    par.add_gate(gates::H(1));
    EXPECT_EQ(par.calculate_depth(), 1U);

    Circuit seq(1);
    seq.add_gate(gates::H(0));
    seq.add_gate(gates::X(0));
    EXPECT_EQ(seq.calculate_depth(), 2U);

    // Controls occupy their qubit.
    Circuit ctrl(3);
    ctrl.add_gate(gates::X(0).add_control(2, 1));
    ctrl.add_gate(gates::H(2));
    EXPECT_EQ(ctrl.calculate_depth(), 2U);

    Circuit mixed(4);
    mixed.add_gate(gates::H(0));
    mixed.add_gate(gates::CNOT(0, 1));
    mixed.add_gate(gates::H(3));
    mixed.add_gate(gates::CNOT(1, 2));
    mixed.add_gate(gates::CNOT(2, 3));
    EXPECT_EQ(mixed.calculate_depth(), 4U);
}

TEST(Circuit, DepthInvariantUnderDisjointSwap) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 5;
        Circuit c(n);
        for (int g = 0; g < 12; ++g)
            c.add_gate(random_basic_gate(n, rng));
        for (std::size_t i = 0; i + 1 < c.gate_count(); ++i) {
            const auto qa = c.gate(i).qubits();
            const auto qb = c.gate(i + 1).qubits();
            bool disjoint = true;
            for (Qubit q : qa)
                disjoint = disjoint && std::find(qb.begin(), qb.end(), q) == qb.end();
            if (!disjoint)
                continue;
            Circuit swapped = c;
            const Gate moved = swapped.get_gate(i);
            swapped.remove_gate(i);
            swapped.add_gate(moved, i + 1);
            EXPECT_EQ(swapped.calculate_depth(), c.calculate_depth());
        }
    }
}

TEST(ParametricCircuit, ParameterTable) {
    ParametricCircuit c(3);
    c.add_parametric_gate(gates::ParametricRX(0, 0.1));
    c.add_gate(gates::H(1));
    c.add_parametric_gate(gates::ParametricRY(1, 0.2));
    c.add_parametric_gate(gates::ParametricPauliRotation({0, 1, 2}, {1, 2, 3}, 0.3));
    EXPECT_EQ(c.parameter_count(), 3U);
    EXPECT_EQ(c.gate_count(), 4U);
    EXPECT_DOUBLE_EQ(c.get_parameter(2), 0.3);
    EXPECT_EQ(c.get_parametric_gate_position(1), 2U);

    c.add_gate(gates::X(2), 0);
    EXPECT_EQ(c.get_parametric_gate_position(0), 1U);
    EXPECT_EQ(c.get_parametric_gate_position(1), 3U);
    c.remove_gate(0);
    EXPECT_EQ(c.get_parametric_gate_position(0), 0U);

    c.set_parameter(1, 1.5);
    EXPECT_DOUBLE_EQ(c.gate(2).angle(), 1.5);
    EXPECT_THROW(c.get_parameter(3), ArgumentError);
    EXPECT_THROW(c.set_parameter(7, 0.0), ArgumentError);
    EXPECT_THROW(c.get_parametric_gate_position(3), ArgumentError);
    EXPECT_THROW(c.add_parametric_gate(gates::RX(0, 0.1)), ArgumentError);

    // Removing a parametric gate drops its parameter.
    c.remove_gate(0);
    EXPECT_EQ(c.parameter_count(), 2U);
    EXPECT_DOUBLE_EQ(c.get_parameter(0), 1.5);
    EXPECT_EQ(c.get_parametric_gate_position(0), 1U);
}

TEST(ParametricCircuit, SetParameterChangesExecution) {
    ParametricCircuit c(1);
    c.add_parametric_gate(gates::ParametricRX(0, 0.1));
    c.set_parameter(0, std::numbers::pi);
    StateVector a(1), b(1);
    c.update_state(a, 1);
    apply_basic(gates::RX(0, std::numbers::pi), b.amplitudes(), 1);
    EXPECT_EQ(a.get_vector(), b.get_vector());
}

TEST(ParametricCircuit, TableStaysInSyncUnderRandomEdits) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        ParametricCircuit c(3);
        // Model: list of angles, NaN for fixed gates.
        std::vector<double> model;
        for (int step = 0; step < 60; ++step) {
            const auto op = rng() % 3;
            const std::size_t pos = c.gate_count() == 0 ? 0 : rng() % (c.gate_count() + 1);
            if (op == 0) {
                const double angle = 0.01 * static_cast<double>(step + 100 * trial);
                c.add_parametric_gate(gates::ParametricRZ(static_cast<Qubit>(rng() % 3), angle), pos);
                model.insert(model.begin() + static_cast<long>(pos), angle);
            } else if (op == 1) {
                c.add_gate(gates::H(static_cast<Qubit>(rng() % 3)), pos);
                model.insert(model.begin() + static_cast<long>(pos), std::nan(""));
            } else if (c.gate_count() > 0) {
                const std::size_t victim = rng() % c.gate_count();
                c.remove_gate(victim);
                model.erase(model.begin() + static_cast<long>(victim));
            }
            ASSERT_EQ(c.gate_count(), model.size());
            std::size_t params = 0;
            for (double a : model)
                params += std::isnan(a) ? 0 : 1;
            ASSERT_EQ(c.parameter_count(), params);
            for (std::size_t k = 0; k < c.parameter_count(); ++k) {
                const std::size_t p = c.get_parametric_gate_position(k);
                ASSERT_LT(p, model.size());
                ASSERT_FALSE(std::isnan(model[p]));
                ASSERT_DOUBLE_EQ(c.get_parameter(k), model[p]);
                ASSERT_TRUE(c.gate(p).is_parametric());
            }
        }
    }
}
