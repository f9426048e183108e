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
#include "qcsim/gate.hpp"

namespace qcsim {

/// Dense gate equal to applying g1 then g2, acting on the sorted union of
/// both gates' targets and controls.
Gate merge(const Gate &g1, const Gate &g2);

/// Left fold of merge over the whole circuit. An empty circuit yields an
/// identity gate with no targets.
Gate merge_all(const Circuit &circuit);

/// True when the gates provably commute: on each shared qubit their bases
/// agree (and are not None) or one side is Any. May return false for gates
/// that happen to commute.
bool commutation_check(const Gate &g1, const Gate &g2);

/// Merges neighbouring gates whose qubit sets are nested, until nothing
/// changes. Returns the number of merges performed.
std::size_t optimize_light(Circuit &circuit);

/// Moves gates past provably commuting neighbours to fuse gates that share
/// a qubit, keeping every fused gate within `block_size` qubits. Returns the
/// number of merges performed.
std::size_t optimize_heavy(Circuit &circuit, unsigned block_size);

} // namespace qcsim
