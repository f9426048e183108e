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
// Command-line front end. Talks to the simulator only through the C API.

#include "qcsim/qcsim.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct CliError {
    int status;
    std::string message;
};

void check(qcs_status status) {
    if (status != QCS_OK)
        throw CliError{status, qcs_last_error()};
}

struct CircuitDeleter {
    void operator()(qcs_circuit *c) const { qcs_circuit_destroy(c); }
};
struct StateDeleter {
    void operator()(qcs_state *s) const { qcs_state_destroy(s); }
};
using CircuitPtr = std::unique_ptr<qcs_circuit, CircuitDeleter>;
using StatePtr = std::unique_ptr<qcs_state, StateDeleter>;

std::string take_string(char *text) {
    std::string out(text);
    qcs_string_free(text);
    return out;
}

std::string read_file(const std::string &path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in)
        throw CliError{QCS_ERR_IO, "cannot open '" + path + "'"};
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw CliError{QCS_ERR_IO, "cannot write '" + path + "'"};
    out << text;
    if (!text.empty() && text.back() != '\n')
        out << '\n';
}

std::vector<unsigned> parse_range(const std::string &text) {
    auto to_unsigned = [&](const std::string &s) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != s.size() || s.empty() || s[0] == '-')
            throw CliError{QCS_ERR_ARGUMENT, "bad qubit count '" + text + "'"};
        return static_cast<unsigned>(v);
    };
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        return {to_unsigned(text)};
    const unsigned lo = to_unsigned(text.substr(0, colon));
    const unsigned hi = to_unsigned(text.substr(colon + 1));
    if (lo > hi)
        throw CliError{QCS_ERR_ARGUMENT, "empty qubit range '" + text + "'"};
    std::vector<unsigned> out;
    for (unsigned n = lo; n <= hi; ++n)
        out.push_back(n);
    return out;
}

CircuitPtr load_circuit(const std::string &path) {
    const std::string text = read_file(path);
    qcs_circuit *raw = nullptr;
    check(qcs_circuit_from_json(text.c_str(), &raw));
    return CircuitPtr(raw);
}

std::string circuit_json(const qcs_circuit *c) {
    char *text = nullptr;
    check(qcs_circuit_to_json(c, &text));
    return take_string(text);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qcsim: state-vector quantum circuit simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qcs_version()));

    int threads = 0;
    std::string output;
    app.add_option("--threads", threads, "Worker threads (0 keeps the default)");
    app.add_option("-o,--output", output, "Output file (default stdout)");

    // bench
    auto *bench = app.add_subcommand("bench", "Time generated circuits over a range of sizes");
    std::string family = "cz-ladder";
    std::string nqubits = "4:10";
    unsigned depth = 10;
    unsigned repeats = 5;
    std::string opt = "none";
    unsigned block_size = 2;
    std::uint64_t seed = 0;
    std::string format = "json";
    bool include_opt_time = false;
    for (auto *cmd : {bench}) {
        cmd->add_option("--family", family, "cz-ladder | cz-ladder-commuting | cnot-ring")
            ->check(CLI::IsMember({"cz-ladder", "cz-ladder-commuting", "cnot-ring"}));
        cmd->add_option("--nqubits", nqubits, "Qubit count N or range A:B");
        cmd->add_option("--depth", depth, "Rotation layers minus one (cz-ladder)");
        cmd->add_option("--repeats", repeats, "Timed runs per size")->check(CLI::PositiveNumber);
        cmd->add_option("--opt", opt, "none | light | heavy")
            ->check(CLI::IsMember({"none", "light", "heavy"}));
        cmd->add_option("--block-size", block_size, "Largest fused gate for heavy")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "Generator seed");
        cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_flag("--include-opt-time", include_opt_time,
                      "Add optimization time to the headline figure");
        cmd->add_option("--threads", threads, "Worker threads (0 keeps the default)");
        cmd->add_option("-o,--output", output, "Output file (default stdout)");
    }

    // generate
    auto *generate = app.add_subcommand("generate", "Write a benchmark circuit as JSON");
    unsigned gen_n = 4;
    generate->add_option("--family", family, "cz-ladder | cz-ladder-commuting | cnot-ring")
        ->check(CLI::IsMember({"cz-ladder", "cz-ladder-commuting", "cnot-ring"}));
    generate->add_option("--nqubits", gen_n, "Qubit count")->check(CLI::PositiveNumber);
    generate->add_option("--depth", depth, "Rotation layers minus one (cz-ladder)");
    generate->add_option("--seed", seed, "Generator seed");
    generate->add_option("-o,--output", output, "Output file (default stdout)");

    // run
    auto *run = app.add_subcommand("run", "Execute a circuit file on |0...0>");
    std::string input;
    std::size_t shots = 0;
    run->add_option("circuit", input, "Circuit JSON file ('-' for stdin)")->required();
    run->add_option("--shots", shots, "Sample this many outcomes instead of amplitudes");
    run->add_option("--seed", seed, "Seed for measurements, noise and sampling");
    run->add_option("--threads", threads, "Worker threads (0 keeps the default)");
    run->add_option("-o,--output", output, "Output file (default stdout)");

    // optimize
    auto *optimize = app.add_subcommand("optimize", "Fuse gates of a circuit file");
    optimize->add_option("circuit", input, "Circuit JSON file ('-' for stdin)")->required();
    optimize->add_option("--opt", opt, "light | heavy")->check(CLI::IsMember({"light", "heavy"}));
    optimize->add_option("--block-size", block_size, "Largest fused gate for heavy")
        ->check(CLI::PositiveNumber);
    optimize->add_option("-o,--output", output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << json{{"error", {{"status", QCS_ERR_ARGUMENT}, {"message", e.what()}}}}.dump()
                  << '\n';
        return QCS_ERR_ARGUMENT;
    }

    try {
        if (threads != 0)
            check(qcs_set_num_threads(threads));

        if (*bench) {
            const json config = {
                {"family", family},        {"nqubits", parse_range(nqubits)},
                {"depth", depth},          {"repeats", repeats},
                {"optimization", opt},     {"block_size", block_size},
                {"include_opt_time", include_opt_time}, {"seed", seed},
            };
            char *report = nullptr;
            check(qcs_run_benchmark(config.dump().c_str(), &report));
            std::string text = take_string(report);
            if (format == "csv") {
                char *csv = nullptr;
                check(qcs_report_to_csv(text.c_str(), &csv));
                text = take_string(csv);
            } else {
                text = json::parse(text).dump(2);
            }
            write_output(output, text);
        } else if (*generate) {
            qcs_circuit *raw = nullptr;
            check(qcs_circuit_generate(family.c_str(), gen_n, depth, seed, &raw));
            CircuitPtr circuit(raw);
            write_output(output, circuit_json(circuit.get()));
        } else if (*run) {
            CircuitPtr circuit = load_circuit(input);
            qcs_state *raw = nullptr;
            check(qcs_state_create(qcs_circuit_num_qubits(circuit.get()), &raw));
            StatePtr state(raw);
            check(qcs_circuit_update_state(circuit.get(), state.get(), seed));
            json result = {{"num_qubits", qcs_state_num_qubits(state.get())}};
            if (shots > 0) {
                std::vector<std::uint64_t> samples(shots);
                check(qcs_state_sampling(state.get(), shots, seed, samples.data()));
                result["samples"] = samples;
            } else {
                std::vector<qcs_complex> amps(qcs_state_dim(state.get()));
                check(qcs_state_get_amplitudes(state.get(), amps.data(), amps.size()));
                json list = json::array();
                for (const auto &a : amps)
                    list.push_back({a.re, a.im});
                result["amplitudes"] = list;
            }
            write_output(output, result.dump());
        } else if (*optimize) {
            CircuitPtr circuit = load_circuit(input);
            std::size_t merges = 0;
            if (opt == "heavy")
                check(qcs_circuit_optimize_heavy(circuit.get(), block_size, &merges));
            else
                check(qcs_circuit_optimize_light(circuit.get(), &merges));
            write_output(output, circuit_json(circuit.get()));
        }
    } catch (const CliError &e) {
        std::cerr << json{{"error", {{"status", e.status}, {"message", e.message}}}}.dump() << '\n';
        return e.status;
    } catch (const std::exception &e) {
        std::cerr << json{{"error", {{"status", QCS_ERR_INTERNAL}, {"message", e.what()}}}}.dump()
                  << '\n';
        return QCS_ERR_INTERNAL;
    }
    return 0;
}
