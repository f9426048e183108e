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

// JSON encoding of circuits and operators.
//
// {"num_qubits": n, "gates": [{"kind": ..., "targets": [...],
//   "controls": [{"qubit": q, "value": v}], ...payload}]}
//
// Complex numbers are [re, im] pairs. Payload fields by kind:
//   named gates (X, CNOT, RX, DepolarizingNoise, ...): "params"
//   DenseMatrix: "matrix" (list of rows)
//   SparseMatrix: "entries" [{"row", "col", "value"}]
//   DiagonalMatrix: "diagonal"
//   ReversibleBoolean: "table"
//   Pauli: "pauli_ids"; PauliRotation, ParametricPauliRotation: "pauli_ids", "angle"
//   CPTP: "kraus" (gate objects); Instrument: "kraus", "register"
//   Probabilistic: "probs", "gates"
// Adaptive gates carry a host-language predicate and cannot be encoded.

#include "qcsim/circuit.hpp"
#include "qcsim/observable.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace qcsim {

nlohmann::json gate_to_json(const Gate &gate);
/// `position` is reported in ParseError for malformed entries.
Gate gate_from_json(const nlohmann::json &doc, long position = -1);

nlohmann::json circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(const nlohmann::json &doc);

std::string serialize_circuit(const Circuit &circuit, int indent = -1);
/// Throws ParseError; the position is the byte offset for syntax errors and
/// the gate index for schema errors.
Circuit parse_circuit(std::string_view text);

/// {"num_qubits": n, "terms": [{"coef": [re, im], "pauli": "X 0 Z 1"}]}
nlohmann::json operator_to_json(const GeneralOperator &op);
GeneralOperator operator_from_json(const nlohmann::json &doc);

} // namespace qcsim
