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
#include "qcsim/circuit_json.hpp"

#include "qcsim/gates.hpp"

#include <cmath>
#include <sstream>

namespace qcsim {
namespace {

using nlohmann::json;

constexpr const char *kPauliLetters = "IXYZ";

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

[[noreturn]] void fail(const std::string &what, long position) { throw ParseError(what, position); }

const json &field(const json &doc, const char *key, long position) {
    if (!doc.is_object() || !doc.contains(key))
        fail(std::string("missing field '") + key + "'", position);
    return doc.at(key);
}

double number(const json &v, long position) {
    if (!v.is_number())
        fail("expected a number", position);
    return v.get<double>();
}

Complex complex_value(const json &v, long position) {
    if (!v.is_array() || v.size() != 2)
        fail("complex numbers are [re, im] pairs", position);
    return {number(v[0], position), number(v[1], position)};
}

template <class T> T unsigned_value(const json &v, long position) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail("expected a non-negative integer", position);
    return static_cast<T>(v.get<unsigned long long>());
}

template <class T> std::vector<T> unsigned_list(const json &v, long position) {
    if (!v.is_array())
        fail("expected an array", position);
    std::vector<T> out;
    for (const auto &x : v)
        out.push_back(unsigned_value<T>(x, position));
    return out;
}

std::vector<int> pauli_ids(const json &v, long position) {
    std::vector<int> ids;
    for (unsigned id : unsigned_list<unsigned>(v, position))
        ids.push_back(static_cast<int>(id));
    return ids;
}

std::vector<Gate> gate_list(const json &v, long position) {
    if (!v.is_array())
        fail("expected an array of gates", position);
    std::vector<Gate> out;
    for (const auto &g : v)
        out.push_back(gate_from_json(g, position));
    return out;
}

json gate_list_json(std::span<const Gate> gates) {
    json out = json::array();
    for (const auto &g : gates)
        out.push_back(gate_to_json(g));
    return out;
}

bool is_named(const Gate &gate) {
    return gate.name() == "ParametricPauliRotation" || gates::named_gate_info(gate.name());
}

} // namespace

json gate_to_json(const Gate &gate) {
    json doc;
    doc["targets"] = gate.targets();
    json controls = json::array();
    for (const auto &c : gate.controls())
        controls.push_back({{"qubit", c.qubit}, {"value", c.value}});
    doc["controls"] = controls;

    if (gate.name() == "ParametricPauliRotation") {
        const auto &p = gate.payload<PauliRotationPayload>();
        doc["kind"] = gate.name();
        doc["pauli_ids"] = p.ids;
        doc["angle"] = p.angle;
        return doc;
    }
    if (is_named(gate)) {
        doc["kind"] = gate.name();
        doc["params"] = gate.params();
        return doc;
    }
    switch (gate.kind()) {
    case GateKind::Dense: {
        const auto &m = gate.payload<DensePayload>().matrix;
        json rows = json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                row.push_back(complex_json(m(r, c)));
            rows.push_back(row);
        }
        doc["kind"] = "DenseMatrix";
        doc["matrix"] = rows;
        break;
    }
    case GateKind::Sparse: {
        json entries = json::array();
        for (const auto &e : gate.payload<SparsePayload>().entries)
            entries.push_back({{"row", e.row}, {"col", e.col}, {"value", complex_json(e.value)}});
        doc["kind"] = "SparseMatrix";
        doc["entries"] = entries;
        break;
    }
    case GateKind::Diagonal: {
        json diag = json::array();
        for (Complex v : gate.payload<DiagonalPayload>().diagonal)
            diag.push_back(complex_json(v));
        doc["kind"] = "DiagonalMatrix";
        doc["diagonal"] = diag;
        break;
    }
    case GateKind::Permutation:
        doc["kind"] = "ReversibleBoolean";
        doc["table"] = gate.payload<PermutationPayload>().table;
        break;
    case GateKind::Pauli:
        doc["kind"] = "Pauli";
        doc["pauli_ids"] = gate.payload<PauliPayload>().ids;
        break;
    case GateKind::PauliRotation: {
        const auto &p = gate.payload<PauliRotationPayload>();
        doc["kind"] = "PauliRotation";
        doc["pauli_ids"] = p.ids;
        doc["angle"] = p.angle;
        break;
    }
    case GateKind::Cptp:
        doc["kind"] = "CPTP";
        doc["kraus"] = gate_list_json(gate.payload<CptpPayload>().kraus);
        break;
    case GateKind::Instrument: {
        const auto &p = gate.payload<InstrumentPayload>();
        doc["kind"] = "Instrument";
        doc["kraus"] = gate_list_json(p.kraus);
        doc["register"] = p.register_address;
        break;
    }
    case GateKind::Probabilistic: {
        const auto &p = gate.payload<ProbabilisticPayload>();
        doc["kind"] = "Probabilistic";
        doc["probs"] = p.probs;
        doc["gates"] = gate_list_json(p.gates);
        break;
    }
    case GateKind::Adaptive:
        throw ArgumentError("adaptive gates cannot be serialized");
    }
    return doc;
}

Gate gate_from_json(const json &doc, long position) {
    if (!doc.is_object())
        fail("gate entry must be an object", position);
    const json &kind_field = field(doc, "kind", position);
    if (!kind_field.is_string())
        fail("gate kind must be a string", position);
    const std::string kind = kind_field.get<std::string>();
    const auto targets = unsigned_list<Qubit>(field(doc, "targets", position), position);

    std::vector<Control> controls;
    if (doc.contains("controls")) {
        const json &cs = doc.at("controls");
        if (!cs.is_array())
            fail("controls must be an array", position);
        for (const auto &c : cs)
            controls.push_back({unsigned_value<Qubit>(field(c, "qubit", position), position),
                                static_cast<int>(unsigned_value<unsigned>(
                                    field(c, "value", position), position))});
    }

    try {
        std::size_t used_controls = 0;
        Gate gate = [&]() -> Gate {
            if (const auto info = gates::named_gate_info(kind)) {
                if (targets.size() != info->num_targets || controls.size() < info->num_controls)
                    fail(kind + " has the wrong number of qubits", position);
                std::vector<double> params;
                if (doc.contains("params"))
                    for (const auto &p : doc.at("params"))
                        params.push_back(number(p, position));
                std::vector<Qubit> qubits;
                for (unsigned c = 0; c < info->num_controls; ++c)
                    qubits.push_back(controls[c].qubit);
                qubits.insert(qubits.end(), targets.begin(), targets.end());
                used_controls = info->num_controls;
                return gates::named_gate(kind, qubits, params);
            }
            if (kind == "DenseMatrix") {
                const json &rows = field(doc, "matrix", position);
                if (!rows.is_array())
                    fail("matrix must be a list of rows", position);
                const auto d = static_cast<Eigen::Index>(rows.size());
                GateMatrix m(d, d);
                for (Eigen::Index r = 0; r < d; ++r) {
                    const json &row = rows[static_cast<std::size_t>(r)];
                    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
                        fail("matrix must be square", position);
                    for (Eigen::Index c = 0; c < d; ++c)
                        m(r, c) = complex_value(row[static_cast<std::size_t>(c)], position);
                }
                return Gate::dense(targets, std::move(m));
            }
            if (kind == "SparseMatrix") {
                std::vector<SparseEntry> entries;
                for (const auto &e : field(doc, "entries", position))
                    entries.push_back({unsigned_value<Index>(field(e, "row", position), position),
                                       unsigned_value<Index>(field(e, "col", position), position),
                                       complex_value(field(e, "value", position), position)});
                return Gate::sparse(targets, std::move(entries));
            }
            if (kind == "DiagonalMatrix") {
                std::vector<Complex> diag;
                const json &values = field(doc, "diagonal", position);
                if (!values.is_array())
                    fail("diagonal must be an array", position);
                for (const auto &v : values)
                    diag.push_back(complex_value(v, position));
                return Gate::diagonal(targets, std::move(diag));
            }
            if (kind == "ReversibleBoolean")
                return Gate::permutation_table(
                    targets, unsigned_list<Index>(field(doc, "table", position), position));
            if (kind == "Pauli")
                return Gate::pauli(targets, pauli_ids(field(doc, "pauli_ids", position), position));
            if (kind == "PauliRotation" || kind == "ParametricPauliRotation") {
                auto ids = pauli_ids(field(doc, "pauli_ids", position), position);
                const double angle = number(field(doc, "angle", position), position);
                if (kind == "PauliRotation")
                    return Gate::pauli_rotation(targets, std::move(ids), angle);
                return gates::ParametricPauliRotation(targets, std::move(ids), angle);
            }
            if (kind == "CPTP")
                return Gate::cptp(gate_list(field(doc, "kraus", position), position));
            if (kind == "Instrument")
                return Gate::instrument(
                    gate_list(field(doc, "kraus", position), position),
                    unsigned_value<long>(field(doc, "register", position), position));
            if (kind == "Probabilistic") {
                std::vector<double> probs;
                const json &ps = field(doc, "probs", position);
                if (!ps.is_array())
                    fail("probs must be an array", position);
                for (const auto &p : ps)
                    probs.push_back(number(p, position));
                return Gate::probabilistic(std::move(probs),
                                           gate_list(field(doc, "gates", position), position));
            }
            fail("unknown gate kind '" + kind + "'", position);
        }();
        for (std::size_t c = used_controls; c < controls.size(); ++c)
            gate = gate.add_control(controls[c].qubit, controls[c].value);
        return gate;
    } catch (const ArgumentError &e) {
        fail(e.what(), position);
    } catch (const json::exception &e) {
        fail(e.what(), position);
    }
}

json circuit_to_json(const Circuit &circuit) {
    json doc;
    doc["num_qubits"] = circuit.num_qubits();
    doc["gates"] = gate_list_json(circuit.gates());
    return doc;
}

Circuit circuit_from_json(const json &doc) {
    const unsigned n = unsigned_value<unsigned>(field(doc, "num_qubits", -1), -1);
    if (n == 0)
        fail("num_qubits must be positive", -1);
    const json &gates = field(doc, "gates", -1);
    if (!gates.is_array())
        fail("gates must be an array", -1);
    Circuit circuit(n);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const long pos = static_cast<long>(i);
        Gate g = gate_from_json(gates[i], pos);
        try {
            circuit.add_gate(std::move(g));
        } catch (const ArgumentError &e) {
            fail(e.what(), pos);
        }
    }
    return circuit;
}

std::string serialize_circuit(const Circuit &circuit, int indent) {
    return circuit_to_json(circuit).dump(indent);
}

Circuit parse_circuit(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(e.what(), static_cast<long>(e.byte));
    }
    return circuit_from_json(doc);
}

json operator_to_json(const GeneralOperator &op) {
    json terms = json::array();
    for (const auto &t : op.terms()) {
        std::ostringstream pauli;
        for (std::size_t j = 0; j < t.qubits.size(); ++j)
            pauli << (j ? " " : "") << kPauliLetters[t.ids[j]] << ' ' << t.qubits[j];
        terms.push_back({{"coef", complex_json(t.coef)}, {"pauli", pauli.str()}});
    }
    return {{"num_qubits", op.num_qubits()}, {"terms", terms}};
}

GeneralOperator operator_from_json(const json &doc) {
    const unsigned n = unsigned_value<unsigned>(field(doc, "num_qubits", -1), -1);
    if (n == 0)
        fail("num_qubits must be positive", -1);
    const json &terms = field(doc, "terms", -1);
    if (!terms.is_array())
        fail("terms must be an array", -1);
    GeneralOperator op(n);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const long pos = static_cast<long>(i);
        const json &pauli = field(terms[i], "pauli", pos);
        if (!pauli.is_string())
            fail("pauli must be a string", pos);
        try {
            op.add_term(parse_pauli_string(pauli.get<std::string>(),
                                           complex_value(field(terms[i], "coef", pos), pos)));
        } catch (const ArgumentError &e) {
            fail(e.what(), pos);
        } catch (const ParseError &e) {
            fail(e.what(), pos);
        }
    }
    return op;
}

} // namespace qcsim
