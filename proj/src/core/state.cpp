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
#include "qcsim/state.hpp"

#include "qcsim/index_decomposition.hpp"
#include "qcsim/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace qcsim {
namespace {

constexpr unsigned kMaxStateQubits = 62;

void check_qubit_count(unsigned n, unsigned max) {
    if (n == 0)
        throw ArgumentError("qubit count must be at least 1");
    if (n > max)
        throw ArgumentError("qubit count " + std::to_string(n) + " exceeds the supported maximum " +
                            std::to_string(max));
}

void check_same_size(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits())
        throw ArgumentError("qubit count mismatch: " + std::to_string(a.num_qubits()) + " vs " +
                            std::to_string(b.num_qubits()));
}

} // namespace

long ClassicalRegisters::get(long address) const {
    if (address < 0)
        throw ArgumentError("negative classical register address");
    const auto a = static_cast<std::size_t>(address);
    return a < values_.size() ? values_[a] : 0;
}

void ClassicalRegisters::set(long address, long value) {
    if (address < 0)
        throw ArgumentError("negative classical register address");
    const auto a = static_cast<std::size_t>(address);
    if (a >= values_.size())
        values_.resize(a + 1, 0);
    values_[a] = value;
}

StateVector::StateVector(unsigned num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits, kMaxStateQubits);
    amplitudes_.assign(dim_of(num_qubits), Complex{});
    amplitudes_[0] = 1.0;
}

void StateVector::set_zero_state() { set_computational_basis(0); }

void StateVector::set_computational_basis(Index basis) {
    if (basis >= dim())
        throw ArgumentError("basis index " + std::to_string(basis) + " out of range");
    std::fill(amplitudes_.begin(), amplitudes_.end(), Complex{});
    amplitudes_[basis] = 1.0;
}

void StateVector::set_haar_random(std::uint64_t seed) {
    Random rng(seed);
    set_haar_random(rng);
}

void StateVector::set_haar_random(Random &rng) {
    for (auto &a : amplitudes_) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = Complex(re, im);
    }
    normalize(squared_norm());
}

void StateVector::load(std::span<const Complex> values) {
    if (values.size() != amplitudes_.size())
        throw ArgumentError("cannot load " + std::to_string(values.size()) + " amplitudes into a " +
                            std::to_string(dim()) + "-dimensional state");
    std::copy(values.begin(), values.end(), amplitudes_.begin());
}

void StateVector::load(const StateVector &other) {
    check_same_size(*this, other);
    amplitudes_ = other.amplitudes_;
    registers_ = other.registers_;
}

double StateVector::squared_norm() const {
    const Index d = dim();
    const Complex *a = amplitudes_.data();
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) if (use_parallel(num_qubits_))
    for (Index i = 0; i < d; ++i)
        sum += std::norm(a[i]);
    return sum;
}

void StateVector::normalize(double squared_norm) {
    if (!(squared_norm > 0.0))
        throw ArgumentError("normalize requires a positive squared norm");
    multiply_coef(1.0 / std::sqrt(squared_norm));
}

double StateVector::marginal_probability(std::span<const int> pattern) const {
    if (pattern.size() != num_qubits_)
        throw ArgumentError("marginal pattern length " + std::to_string(pattern.size()) +
                            " does not match qubit count " + std::to_string(num_qubits_));
    std::vector<Qubit> fixed;
    Index value_mask = 0;
    for (Qubit q = 0; q < num_qubits_; ++q) {
        const int v = pattern[q];
        if (v == 0 || v == 1) {
            fixed.push_back(q);
            if (v == 1)
                value_mask |= Index{1} << q;
        } else if (v != kWildcard) {
            throw ArgumentError("marginal pattern entry must be 0, 1 or 2 (wildcard)");
        }
    }
    const ZeroBitInserter insert(fixed);
    const Index count = dim_of(num_qubits_ - static_cast<unsigned>(fixed.size()));
    const Complex *a = amplitudes_.data();
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) if (use_parallel(num_qubits_))
    for (Index k = 0; k < count; ++k)
        sum += std::norm(a[insert(k) | value_mask]);
    return sum;
}

std::vector<Index> StateVector::sampling(std::size_t count, std::uint64_t seed) const {
    Random rng(seed);
    return sampling(count, rng);
}

std::vector<Index> StateVector::sampling(std::size_t count, Random &rng) const {
    std::vector<Index> samples;
    if (count == 0)
        return samples;
    std::vector<double> cumulative(amplitudes_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        acc += std::norm(amplitudes_[i]);
        cumulative[i] = acc;
    }
    samples.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end())
            --it;
        samples.push_back(static_cast<Index>(it - cumulative.begin()));
    }
    return samples;
}

void StateVector::multiply_coef(Complex coef) {
    const Index d = dim();
    Complex *a = amplitudes_.data();
#pragma omp parallel for if (use_parallel(num_qubits_))
    for (Index i = 0; i < d; ++i)
        a[i] *= coef;
}

void StateVector::add_state(const StateVector &other) {
    check_same_size(*this, other);
    const Index d = dim();
    Complex *a = amplitudes_.data();
    const Complex *b = other.amplitudes_.data();
#pragma omp parallel for if (use_parallel(num_qubits_))
    for (Index i = 0; i < d; ++i)
        a[i] += b[i];
}

void StateVector::multiply_elementwise_function(const std::function<Complex(Index)> &func) {
    // The callable may not be thread-safe, so this loop stays serial.
    for (Index i = 0; i < dim(); ++i)
        amplitudes_[i] *= func(i);
}

Complex inner_product(const StateVector &bra, const StateVector &ket) {
    check_same_size(bra, ket);
    const Index d = bra.dim();
    const Complex *a = bra.amplitudes().data();
    const Complex *b = ket.amplitudes().data();
    double re = 0.0, im = 0.0;
#pragma omp parallel for reduction(+ : re, im) if (use_parallel(bra.num_qubits()))
    for (Index i = 0; i < d; ++i) {
        const Complex v = std::conj(a[i]) * b[i];
        re += v.real();
        im += v.imag();
    }
    return {re, im};
}

StateVector tensor_product(const StateVector &low, const StateVector &high) {
    StateVector out(low.num_qubits() + high.num_qubits());
    auto dst = out.amplitudes();
    const auto a = low.amplitudes();
    const auto b = high.amplitudes();
    for (Index j = 0; j < b.size(); ++j)
        for (Index i = 0; i < a.size(); ++i)
            dst[(j << low.num_qubits()) | i] = a[i] * b[j];
    return out;
}

StateVector permutate_qubit(const StateVector &state, std::span<const Qubit> order) {
    const unsigned n = state.num_qubits();
    if (order.size() != n)
        throw ArgumentError("permutation length must equal the qubit count");
    std::vector<bool> seen(n, false);
    for (Qubit q : order) {
        if (q >= n || seen[q])
            throw ArgumentError("qubit order is not a permutation of 0..n-1");
        seen[q] = true;
    }
    StateVector out(n);
    auto dst = out.amplitudes();
    const auto src = state.amplitudes();
    for (Index y = 0; y < src.size(); ++y) {
        Index x = 0;
        for (unsigned i = 0; i < n; ++i)
            x |= ((y >> i) & 1U) << order[i];
        dst[y] = src[x];
    }
    return out;
}

StateVector drop_qubit(const StateVector &state, std::span<const Qubit> targets,
                       std::span<const int> values) {
    const unsigned n = state.num_qubits();
    if (targets.size() != values.size())
        throw ArgumentError("drop_qubit needs one projection value per target");
    if (targets.size() >= n)
        throw ArgumentError("drop_qubit must leave at least one qubit");
    Index value_mask = 0;
    std::vector<Qubit> fixed(targets.begin(), targets.end());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] >= n)
            throw ArgumentError("drop target out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (targets[i] == targets[j])
                throw ArgumentError("duplicate drop target");
        if (values[i] != 0 && values[i] != 1)
            throw ArgumentError("projection values must be 0 or 1");
        if (values[i] == 1)
            value_mask |= Index{1} << targets[i];
    }
    const ZeroBitInserter insert(fixed);
    StateVector out(n - static_cast<unsigned>(targets.size()));
    auto dst = out.amplitudes();
    const auto src = state.amplitudes();
    for (Index k = 0; k < dst.size(); ++k)
        dst[k] = src[insert(k) | value_mask];
    return out;
}

DensityMatrix::DensityMatrix(unsigned num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits, kMaxStateQubits / 2);
    elements_.assign(dim() * dim(), Complex{});
    elements_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_pure(const StateVector &state) {
    DensityMatrix rho(state.num_qubits());
    const auto psi = state.amplitudes();
    const Index d = rho.dim();
    for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c)
            rho.elements_[r * d + c] = psi[r] * std::conj(psi[c]);
    rho.registers_ = state.registers();
    return rho;
}

void DensityMatrix::set_zero_state() {
    std::fill(elements_.begin(), elements_.end(), Complex{});
    elements_[0] = 1.0;
}

void DensityMatrix::load(std::span<const Complex> row_major) {
    if (row_major.size() != elements_.size())
        throw ArgumentError("density matrix load size mismatch");
    std::copy(row_major.begin(), row_major.end(), elements_.begin());
}

Complex DensityMatrix::trace() const {
    Complex t{};
    for (Index i = 0; i < dim(); ++i)
        t += get(i, i);
    return t;
}

double DensityMatrix::hermiticity_error() const {
    double worst = 0.0;
    for (Index r = 0; r < dim(); ++r)
        for (Index c = r; c < dim(); ++c)
            worst = std::max(worst, std::abs(get(r, c) - std::conj(get(c, r))));
    return worst;
}

} // namespace qcsim
