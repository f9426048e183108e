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
#include "qcsim/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcsim {
namespace {

std::atomic<unsigned> g_threshold{kDefaultParallelThreshold};
std::once_flag g_env_once;

void read_environment() {
    std::call_once(g_env_once, [] {
        if (const char *env = std::getenv("QCSIM_NUM_THREADS")) {
            const int value = std::atoi(env);
            if (value > 0) {
#ifdef _OPENMP
                omp_set_num_threads(value);
#endif
            }
        }
    });
}

} // namespace

void set_num_threads(int threads) {
    read_environment();
    if (threads < 1)
        threads = 1;
#ifdef _OPENMP
    omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

int num_threads() {
    read_environment();
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_parallel_threshold(unsigned qubits) { g_threshold.store(qubits); }

unsigned parallel_threshold() { return g_threshold.load(); }

bool use_parallel(unsigned qubits) { return qubits >= g_threshold.load() && num_threads() > 1; }

int worker_index() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

} // namespace qcsim
