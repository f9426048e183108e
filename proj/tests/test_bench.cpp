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
#include "qcsim/bench.hpp"
#include "qcsim/circuit_json.hpp"
#include "qcsim/optimizer.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

using namespace qcsim;

namespace {

std::size_t count_named(const Circuit &c, const std::string &name) {
    std::size_t count = 0;
    for (const Gate &g : c.gates())
        count += g.name() == name;
    return count;
}

std::size_t count_rotations(const Circuit &c) {
    return count_named(c, "RX") + count_named(c, "RY") + count_named(c, "RZ");
}

} // namespace

TEST(Generators, CzLadderCounts) {
    for (unsigned n = 2; n <= 20; ++n)
        for (unsigned depth = 0; depth <= 10; ++depth) {
            const Circuit c = generate_cz_ladder(n, depth, 1);
            ASSERT_EQ(count_rotations(c), 3 * n * (depth + 1)) << n << "," << depth;
            // Layer l has floor((n - 1 - l % 2 + 1) / 2) pairs starting at parity l % 2.
            std::size_t cz = 0;
            for (unsigned layer = 0; layer < depth; ++layer)
                for (unsigned q = layer % 2; q + 1 < n; q += 2)
                    ++cz;
            ASSERT_EQ(count_named(c, "CZ"), cz);
            ASSERT_EQ(c.gate_count(), count_rotations(c) + cz);

            const Circuit commuting = generate_cz_ladder(n, depth, 1, true);
            ASSERT_EQ(count_rotations(commuting), n * (depth + 1));
            ASSERT_EQ(count_named(commuting, "RZ"), n * (depth + 1));
        }
    EXPECT_EQ(generate_cz_ladder(4, 0, 3).gate_count(), 12U);
    EXPECT_EQ(generate_cz_ladder(4, 2, 3).gate_count(), 39U);
    EXPECT_THROW(generate_cz_ladder(1, 2, 0), ArgumentError);
}

TEST(Generators, CzLadderLayout) {
    const Circuit c = generate_cz_ladder(5, 2, 4);
    // Layer 0 rotations, CZ(0,1) CZ(2,3), layer 1, CZ(1,2) CZ(3,4), layer 2.
    std::vector<std::pair<Qubit, Qubit>> pairs;
    for (const Gate &g : c.gates())
        if (g.name() == "CZ")
            pairs.emplace_back(g.qubits()[0], g.qubits()[1]);
    ASSERT_EQ(pairs.size(), 4U);
    auto sorted = [](std::pair<Qubit, Qubit> p) {
        return std::make_pair(std::min(p.first, p.second), std::max(p.first, p.second));
    };
    EXPECT_EQ(sorted(pairs[0]), std::make_pair(0U, 1U));
    EXPECT_EQ(sorted(pairs[1]), std::make_pair(2U, 3U));
    EXPECT_EQ(sorted(pairs[2]), std::make_pair(1U, 2U));
    EXPECT_EQ(sorted(pairs[3]), std::make_pair(3U, 4U));
    EXPECT_EQ(c.gate(0).name(), "RZ");
    EXPECT_EQ(c.gate(1).name(), "RX");
    EXPECT_EQ(c.gate(2).name(), "RZ");
    for (const Gate &g : c.gates())
        if (g.name() != "CZ") {
            EXPECT_GE(g.params()[0], 0.0);
            EXPECT_LT(g.params()[0], 2 * std::numbers::pi);
        }
}

TEST(Generators, CnotRingCounts) {
    for (unsigned n = 2; n <= 20; ++n) {
        const Circuit c = generate_cnot_ring(n, 2);
        ASSERT_EQ(count_rotations(c), 31 * n);
        ASSERT_EQ(count_named(c, "CNOT"), 10 * n);
        ASSERT_EQ(c.gate_count(), 41 * n);
    }
    EXPECT_EQ(generate_cnot_ring(2, 0).gate_count(), 82U);
    const Circuit c = generate_cnot_ring(3, 0);
    for (const Gate &g : c.gates())
        if (g.name() == "CNOT") {
            const Qubit target = g.targets()[0];
            EXPECT_EQ(g.controls()[0].qubit, (target + 1) % 3);
        }
    EXPECT_EQ(c.gate(0).name(), "RX");
    EXPECT_EQ(c.gates().back().name(), "RX");
    EXPECT_THROW(generate_cnot_ring(1, 0), ArgumentError);
}

TEST(Generators, Deterministic) {
    for (const auto family : {CircuitFamily::CzLadder, CircuitFamily::CzLadderCommuting, CircuitFamily::CnotRing}) {
        const auto a = serialize_circuit(generate_circuit(family, 5, 3, 11));
        EXPECT_EQ(a, serialize_circuit(generate_circuit(family, 5, 3, 11)));
        EXPECT_NE(a, serialize_circuit(generate_circuit(family, 5, 3, 12)));
    }
}

TEST(Names, RoundTrip) {
    for (const auto f : {CircuitFamily::CzLadder, CircuitFamily::CzLadderCommuting, CircuitFamily::CnotRing})
        EXPECT_EQ(parse_family(to_string(f)), f);
    for (const auto o : {Optimization::None, Optimization::Light, Optimization::Heavy})
        EXPECT_EQ(parse_optimization(to_string(o)), o);
    EXPECT_EQ(to_string(CircuitFamily::CzLadderCommuting), "cz-ladder-commuting");
    EXPECT_FALSE(parse_family("ring").has_value());
    EXPECT_FALSE(parse_optimization("turbo").has_value());
}

TEST(RunBenchmark, ReportShape) {
    BenchConfig config;
    config.family = CircuitFamily::CzLadder;
    config.nqubits = {4, 7, 8};
    config.depth = 3;
    config.repeats = 5;
    config.optimization = Optimization::Light;
    config.include_opt_time = true;
    const TimingReport report = run_benchmark(config);
    ASSERT_EQ(report.points.size(), 3U);
    for (const auto &p : report.points) {
        EXPECT_TRUE(p.error.empty());
        EXPECT_EQ(p.times.size(), 5U);
        for (double t : p.times)
            EXPECT_GT(t, 0.0);
        EXPECT_LE(p.min, p.median);
        EXPECT_GE(p.optimization_time, 0.0);
        EXPECT_DOUBLE_EQ(p.headline, p.min + p.optimization_time);
        EXPECT_EQ(p.gates_before, generate_cz_ladder(p.num_qubits, 3, 0).gate_count());
        if (p.num_qubits >= 7)
            EXPECT_LT(p.gates_after, p.gates_before);
    }

    const auto doc = report_to_json(report);
    EXPECT_EQ(doc["config"]["family"], "cz-ladder");
    EXPECT_EQ(doc["config"]["optimization"], "light");
    EXPECT_EQ(doc["points"].size(), 3U);
    EXPECT_TRUE(doc["environment"].contains("version"));
    EXPECT_TRUE(doc["environment"].contains("threads"));

    const std::string csv = report_to_csv(report);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line.rfind("family,nqubits,depth,optimization", 0), 0U);
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) {
            ++rows;
            EXPECT_EQ(line.rfind("cz-ladder,", 0), 0U);
        }
    EXPECT_EQ(rows, 3);
    EXPECT_EQ(report_json_to_csv(doc), csv);

    const BenchConfig again = config_from_json(doc["config"]);
    EXPECT_EQ(again.nqubits, config.nqubits);
    EXPECT_EQ(again.optimization, Optimization::Light);
    EXPECT_TRUE(again.include_opt_time);
}

TEST(RunBenchmark, PerPointFailuresDoNotAbort) {
    BenchConfig config;
    config.family = CircuitFamily::CnotRing;
    config.nqubits = {1, 3};
    config.repeats = 1;
    const TimingReport report = run_benchmark(config);
    ASSERT_EQ(report.points.size(), 2U);
    EXPECT_FALSE(report.points[0].error.empty());
    EXPECT_TRUE(report.points[1].error.empty());
    EXPECT_EQ(report.points[1].gates_before, 123U);
    EXPECT_TRUE(report_to_json(report)["points"][0].contains("error"));
}

TEST(RunBenchmark, InvalidConfigs) {
    BenchConfig config;
    EXPECT_THROW(run_benchmark(config), ArgumentError);
    config.nqubits = {3};
    config.repeats = 0;
    EXPECT_THROW(run_benchmark(config), ArgumentError);
    config.repeats = 1;
    config.optimization = Optimization::Heavy;
    config.block_size = 0;
    EXPECT_THROW(run_benchmark(config), ArgumentError);
    EXPECT_THROW(config_from_json(nlohmann::json::array()), ParseError);
    EXPECT_THROW(config_from_json(nlohmann::json{{"family", "nope"}}), ArgumentError);
    EXPECT_THROW(config_from_json(nlohmann::json{{"depth", "deep"}}), ParseError);
}

TEST(RunBenchmark, HeavyReducesCommutingLadder) {
    BenchConfig config;
    config.family = CircuitFamily::CzLadderCommuting;
    config.nqubits = {8};
    config.depth = 10;
    config.repeats = 1;
    config.optimization = Optimization::Heavy;
    config.block_size = 2;
    const auto heavy = run_benchmark(config);
    config.optimization = Optimization::Light;
    const auto light = run_benchmark(config);
    EXPECT_LT(heavy.points[0].gates_after, light.points[0].gates_after);
}

TEST(DenseGateTiming, PositiveAndGrowing) {
    const double small = measure_dense_gate_time(10, 5);
    const double large = measure_dense_gate_time(18, 5);
    EXPECT_GT(small, 0.0);
    EXPECT_GT(large, small);
    EXPECT_THROW(measure_dense_gate_time(4, 0), ArgumentError);
}
