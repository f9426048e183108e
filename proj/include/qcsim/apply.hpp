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

// Applying arbitrary gates, quantum maps included, to states.

#include "qcsim/gate.hpp"
#include "qcsim/state.hpp"

namespace qcsim {

/// Branch value returned for basic gates and for the identity remainder of a
/// probabilistic map or a skipped adaptive gate.
inline constexpr long kNoBranch = -1;

/// Applies `gate` to a pure state. CPTP maps and instruments pick branch i
/// with probability |K_i psi|^2 and renormalize; instruments also store i in
/// their classical register. Returns the branch index taken.
long update_state(const Gate &gate, StateVector &state, Random &rng);

/// Deterministic density-matrix update: rho -> sum_i K_i rho K_i^dagger for
/// CPTP maps and instruments, the probability-weighted mixture for
/// probabilistic maps.
void update_density(const Gate &gate, DensityMatrix &rho);

/// Throws ArgumentError unless every qubit of `gate` (and of any gate nested
/// inside it) is below `num_qubits`.
void check_gate_fits(const Gate &gate, unsigned num_qubits);

} // namespace qcsim
