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

// Process-wide threading knobs for the update and reduction loops.
//
// Loops over basis indices are chunked statically across worker threads.
// Dispatch is serial whenever the state has fewer qubits than the parallel
// threshold (default 13), since the fork/join overhead dominates there.
//
// The worker count is taken from QCSIM_NUM_THREADS at first use, falling back
// to the OpenMP default (which honours OMP_NUM_THREADS).

namespace qcsim {

inline constexpr unsigned kDefaultParallelThreshold = 13;

void set_num_threads(int threads);
int num_threads();

void set_parallel_threshold(unsigned qubits);
unsigned parallel_threshold();

/// True when a loop over a state of `qubits` qubits should run in parallel.
bool use_parallel(unsigned qubits);

/// Index of the calling worker inside a parallel region, 0 outside.
int worker_index();

} // namespace qcsim
