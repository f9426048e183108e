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

#include "qcsim/gates.hpp"
#include "qcsim/kernels.hpp"
#include "qcsim/optimizer.hpp"
#include "qcsim/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <new>
#include <numbers>
#include <numeric>
#include <sstream>

namespace qcsim {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double random_angle(Random &rng) { return rng.uniform() * 2.0 * std::numbers::pi; }

void check_width(unsigned n) {
    if (n < 2)
        throw ArgumentError("benchmark circuits need at least 2 qubits");
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

} // namespace

std::optional<CircuitFamily> parse_family(std::string_view name) {
    if (name == "cz-ladder")
        return CircuitFamily::CzLadder;
    if (name == "cz-ladder-commuting")
        return CircuitFamily::CzLadderCommuting;
    if (name == "cnot-ring")
        return CircuitFamily::CnotRing;
    return std::nullopt;
}

std::string to_string(CircuitFamily family) {
    switch (family) {
    case CircuitFamily::CzLadder:
        return "cz-ladder";
    case CircuitFamily::CzLadderCommuting:
        return "cz-ladder-commuting";
    case CircuitFamily::CnotRing:
        return "cnot-ring";
    }
    return "?";
}

std::optional<Optimization> parse_optimization(std::string_view name) {
    if (name == "none")
        return Optimization::None;
    if (name == "light")
        return Optimization::Light;
    if (name == "heavy")
        return Optimization::Heavy;
    return std::nullopt;
}

std::string to_string(Optimization opt) {
    switch (opt) {
    case Optimization::None:
        return "none";
    case Optimization::Light:
        return "light";
    case Optimization::Heavy:
        return "heavy";
    }
    return "?";
}

Circuit generate_cz_ladder(unsigned n, unsigned depth, std::uint64_t seed, bool commuting) {
    check_width(n);
    Random rng(seed);
    Circuit circuit(n);
    for (unsigned layer = 0; layer <= depth; ++layer) {
        for (Qubit q = 0; q < n; ++q) {
            if (commuting) {
                circuit.add_gate(gates::RZ(q, random_angle(rng)));
                continue;
            }
            const double a1 = random_angle(rng);
            const double a2 = random_angle(rng);
            const double a3 = random_angle(rng);
            circuit.add_gate(gates::RZ(q, a1));
            circuit.add_gate(gates::RX(q, a2));
            circuit.add_gate(gates::RZ(q, a3));
        }
        if (layer == depth)
            break;
        for (Qubit q = layer % 2; q + 1 < n; q += 2)
            circuit.add_gate(gates::CZ(q, q + 1));
    }
    return circuit;
}

Circuit generate_cnot_ring(unsigned n, std::uint64_t seed) {
    check_width(n);
    constexpr unsigned kCnotLayers = 10;
    Random rng(seed);
    Circuit circuit(n);
    for (unsigned layer = 0; layer <= kCnotLayers; ++layer) {
        for (Qubit q = 0; q < n; ++q) {
            const double a1 = random_angle(rng);
            const double a2 = random_angle(rng);
            const double a3 = random_angle(rng);
            if (layer != 0)
                circuit.add_gate(gates::RZ(q, a1));
            circuit.add_gate(gates::RX(q, a2));
            if (layer != kCnotLayers)
                circuit.add_gate(gates::RZ(q, a3));
        }
        if (layer == kCnotLayers)
            break;
        for (Qubit q = 0; q < n; ++q)
            circuit.add_gate(gates::CNOT((q + 1) % n, q));
    }
    return circuit;
}

Circuit generate_circuit(CircuitFamily family, unsigned n, unsigned depth, std::uint64_t seed) {
    switch (family) {
    case CircuitFamily::CzLadder:
        return generate_cz_ladder(n, depth, seed, false);
    case CircuitFamily::CzLadderCommuting:
        return generate_cz_ladder(n, depth, seed, true);
    case CircuitFamily::CnotRing:
        return generate_cnot_ring(n, seed);
    }
    throw ArgumentError("unknown circuit family");
}

nlohmann::json environment_stamp() {
    char stamp[32] = {};
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return {
        {"version", kVersion},
        {"compiler", __VERSION__},
        {"threads", num_threads()},
        {"parallel_threshold", parallel_threshold()},
        {"timestamp", stamp},
    };
}

TimingReport run_benchmark(const BenchConfig &config) {
    if (config.nqubits.empty())
        throw ArgumentError("no qubit counts given");
    if (config.repeats == 0)
        throw ArgumentError("repeats must be at least 1");
    if (config.optimization == Optimization::Heavy && config.block_size == 0)
        throw ArgumentError("block size must be at least 1");
    for (unsigned n : config.nqubits)
        if (n == 0)
            throw ArgumentError("qubit counts must be positive");

    TimingReport report{config, {}, environment_stamp()};
    for (unsigned n : config.nqubits) {
        TimingPoint point;
        point.num_qubits = n;
        try {
            Circuit circuit = generate_circuit(config.family, n, config.depth, config.seed);
            point.gates_before = circuit.gate_count();
            const auto opt_start = Clock::now();
            if (config.optimization == Optimization::Light)
                optimize_light(circuit);
            else if (config.optimization == Optimization::Heavy)
                optimize_heavy(circuit, config.block_size);
            point.optimization_time =
                config.optimization == Optimization::None ? 0.0 : seconds_since(opt_start);
            point.gates_after = circuit.gate_count();

            StateVector state(n);
            Random rng(config.seed);
            for (unsigned r = 0; r < config.repeats; ++r) {
                state.set_zero_state();
                const auto start = Clock::now();
                circuit.update_state(state, rng);
                point.times.push_back(seconds_since(start));
            }
            point.min = *std::min_element(point.times.begin(), point.times.end());
            point.median = median_of(point.times);
            point.mean = std::accumulate(point.times.begin(), point.times.end(), 0.0) /
                         static_cast<double>(point.times.size());
            point.headline =
                point.min + (config.include_opt_time ? point.optimization_time : 0.0);
        } catch (const std::bad_alloc &) {
            point.error = "allocation failed";
        } catch (const std::length_error &) {
            point.error = "allocation failed";
        } catch (const std::exception &e) {
            point.error = e.what();
        }
        report.points.push_back(std::move(point));
    }
    return report;
}

nlohmann::json report_to_json(const TimingReport &report) {
    const BenchConfig &c = report.config;
    nlohmann::json points = nlohmann::json::array();
    for (const auto &p : report.points) {
        nlohmann::json j = {
            {"nqubits", p.num_qubits},
            {"gates_before", p.gates_before},
            {"gates_after", p.gates_after},
            {"optimization_time", p.optimization_time},
            {"times", p.times},
            {"min", p.min},
            {"median", p.median},
            {"mean", p.mean},
            {"headline", p.headline},
        };
        if (!p.error.empty())
            j["error"] = p.error;
        points.push_back(std::move(j));
    }
    return {
        {"config",
         {{"family", to_string(c.family)},
          {"nqubits", c.nqubits},
          {"depth", c.depth},
          {"repeats", c.repeats},
          {"optimization", to_string(c.optimization)},
          {"block_size", c.block_size},
          {"include_opt_time", c.include_opt_time},
          {"seed", c.seed}}},
        {"environment", report.environment},
        {"points", points},
    };
}

std::string report_to_csv(const TimingReport &report) {
    return report_json_to_csv(report_to_json(report));
}

std::string report_json_to_csv(const nlohmann::json &report) {
    std::ostringstream out;
    out.precision(9);
    out << "family,nqubits,depth,optimization,block_size,repeats,gates_before,gates_after,"
           "optimization_time,min,median,mean,headline,error\n";
    const auto &c = report.at("config");
    for (const auto &p : report.at("points"))
        out << c.at("family").get<std::string>() << ',' << p.at("nqubits").get<unsigned>() << ','
            << c.at("depth").get<unsigned>() << ',' << c.at("optimization").get<std::string>()
            << ',' << c.at("block_size").get<unsigned>() << ','
            << c.at("repeats").get<unsigned>() << ',' << p.at("gates_before").get<std::size_t>()
            << ',' << p.at("gates_after").get<std::size_t>() << ','
            << p.at("optimization_time").get<double>() << ',' << p.at("min").get<double>() << ','
            << p.at("median").get<double>() << ',' << p.at("mean").get<double>() << ','
            << p.at("headline").get<double>() << ',' << p.value("error", std::string()) << '\n';
    return out.str();
}

BenchConfig config_from_json(const nlohmann::json &doc) {
    if (!doc.is_object())
        throw ParseError("benchmark config must be an object");
    BenchConfig c;
    try {
        if (doc.contains("family")) {
            const auto f = parse_family(doc.at("family").get<std::string>());
            if (!f)
                throw ArgumentError("unknown circuit family");
            c.family = *f;
        }
        if (doc.contains("nqubits")) {
            const auto &n = doc.at("nqubits");
            c.nqubits = n.is_array() ? n.get<std::vector<unsigned>>()
                                     : std::vector<unsigned>{n.get<unsigned>()};
        }
        if (doc.contains("optimization")) {
            const auto o = parse_optimization(doc.at("optimization").get<std::string>());
            if (!o)
                throw ArgumentError("optimization must be none, light or heavy");
            c.optimization = *o;
        }
        c.depth = doc.value("depth", c.depth);
        c.repeats = doc.value("repeats", c.repeats);
        c.block_size = doc.value("block_size", c.block_size);
        c.include_opt_time = doc.value("include_opt_time", c.include_opt_time);
        c.seed = doc.value("seed", c.seed);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(e.what());
    }
    return c;
}

double measure_dense_gate_time(unsigned num_qubits, unsigned repeats) {
    if (repeats == 0)
        throw ArgumentError("repeats must be at least 1");
    Random rng(num_qubits);
    const Gate gate = Gate::dense({0}, gates::random_unitary_matrix(1, rng));
    StateVector state(num_qubits);
    double best = 0.0;
    for (unsigned r = 0; r < repeats; ++r) {
        const auto start = Clock::now();
        apply_basic(gate, state.amplitudes(), num_qubits);
        const double t = seconds_since(start);
        best = r == 0 ? t : std::min(best, t);
    }
    return best;
}

} // namespace qcsim
