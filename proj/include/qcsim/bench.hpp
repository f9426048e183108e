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

#include "qcsim/circuit.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qcsim {

inline constexpr const char *kVersion = "0.1.0";

enum class CircuitFamily { CzLadder, CzLadderCommuting, CnotRing };
enum class Optimization { None, Light, Heavy };

std::optional<CircuitFamily> parse_family(std::string_view name);
std::string to_string(CircuitFamily family);
std::optional<Optimization> parse_optimization(std::string_view name);
std::string to_string(Optimization opt);

/// depth + 1 layers of RZ RX RZ per qubit with uniform angles in [0, 2 pi),
/// separated by CZ(i, i+1) layers starting at i = layer % 2. The commuting
/// variant uses one RZ per qubit per layer.
Circuit generate_cz_ladder(unsigned num_qubits, unsigned depth, std::uint64_t seed,
                           bool commuting = false);

/// Eleven RZ RX RZ rotation layers interleaved with ten CNOT layers
/// (target i, control (i + 1) mod n). The leading RZ of the first layer and
/// the trailing RZ of the last layer are omitted: 31n rotations, 10n CNOTs.
Circuit generate_cnot_ring(unsigned num_qubits, std::uint64_t seed);

Circuit generate_circuit(CircuitFamily family, unsigned num_qubits, unsigned depth,
                         std::uint64_t seed);

struct BenchConfig {
    CircuitFamily family = CircuitFamily::CzLadder;
    std::vector<unsigned> nqubits;
    unsigned depth = 10;
    unsigned repeats = 5;
    Optimization optimization = Optimization::None;
    unsigned block_size = 2;
    bool include_opt_time = false;
    std::uint64_t seed = 0;
};

struct TimingPoint {
    unsigned num_qubits = 0;
    std::size_t gates_before = 0;
    std::size_t gates_after = 0;
    double optimization_time = 0.0;
    std::vector<double> times;
    double min = 0.0;
    double median = 0.0;
    double mean = 0.0;
    /// min, plus optimization_time when the config asks for it.
    double headline = 0.0;
    std::string error;
};

struct TimingReport {
    BenchConfig config;
    std::vector<TimingPoint> points;
    nlohmann::json environment;
};

/// Times circuit execution on a fresh zero state for each n. A failure at
/// one n (typically allocation) is recorded in that point and the sweep
/// continues.
TimingReport run_benchmark(const BenchConfig &config);

nlohmann::json environment_stamp();
nlohmann::json report_to_json(const TimingReport &report);
std::string report_to_csv(const TimingReport &report);
/// CSV rendering of a report produced by report_to_json.
std::string report_json_to_csv(const nlohmann::json &report);
/// Inverse of the "config" block of report_to_json; missing keys keep their
/// defaults.
BenchConfig config_from_json(const nlohmann::json &doc);

/// Minimum wall time of one random single-qubit dense gate on qubit 0 of an
/// n-qubit state.
double measure_dense_gate_time(unsigned num_qubits, unsigned repeats);

} // namespace qcsim
