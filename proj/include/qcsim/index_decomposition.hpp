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

#include "qcsim/types.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace qcsim {

/// Enumerates the n-bit indices that are zero on a fixed set of bit positions.
///
/// The k-th such index is produced from the loop counter by opening a zero
/// bit at every fixed position (lowest first), so no index list is stored.
class ZeroBitInserter {
  public:
    ZeroBitInserter() = default;
    explicit ZeroBitInserter(std::vector<Qubit> positions) {
        std::sort(positions.begin(), positions.end());
        low_masks_.reserve(positions.size());
        for (Qubit p : positions)
            low_masks_.push_back((Index{1} << p) - 1);
    }

    Index operator()(Index k) const {
        for (Index low : low_masks_) {
            const Index lower = k & low;
            k = lower | ((k ^ lower) << 1);
        }
        return k;
    }

    std::size_t width() const { return low_masks_.size(); }

  private:
    std::vector<Index> low_masks_;
};

/// Index-set decomposition of a gate's target list M over n qubits.
///
/// outer(k) enumerates B0 (indices with zeros at every target), inner()
/// is B1 ordered so that inner()[i] == spread(i), i.e. bit j of i is placed at
/// qubit M[j]. gather() and spread() are mutually inverse on B1.
class IndexDecomposition {
  public:
    IndexDecomposition(unsigned num_qubits, std::span<const Qubit> targets)
        : num_qubits_(num_qubits), targets_(targets.begin(), targets.end()),
          inserter_(targets_) {
        for (std::size_t i = 0; i < targets_.size(); ++i) {
            if (targets_[i] >= num_qubits)
                throw ArgumentError("target qubit " + std::to_string(targets_[i]) +
                                    " out of range for " + std::to_string(num_qubits) +
                                    " qubits");
            for (std::size_t j = 0; j < i; ++j)
                if (targets_[i] == targets_[j])
                    throw ArgumentError("duplicate target qubit " + std::to_string(targets_[i]));
            mask_ |= Index{1} << targets_[i];
        }
        const Index count = dim_of(static_cast<unsigned>(targets_.size()));
        inner_.resize(count);
        for (Index i = 0; i < count; ++i)
            inner_[i] = spread(i);
    }

    Index outer_count() const { return dim_of(num_qubits_ - static_cast<unsigned>(targets_.size())); }
    Index outer(Index k) const { return inserter_(k); }
    const std::vector<Index> &inner() const { return inner_; }
    Index target_mask() const { return mask_; }

    /// s: local index z in [0, 2^m) -> element of B1.
    Index spread(Index z) const {
        Index x = 0;
        for (std::size_t j = 0; j < targets_.size(); ++j)
            if ((z >> j) & 1U)
                x |= Index{1} << targets_[j];
        return x;
    }

    /// r: full index -> local index of its target bits.
    Index gather(Index x) const {
        Index z = 0;
        for (std::size_t j = 0; j < targets_.size(); ++j)
            z |= ((x >> targets_[j]) & 1U) << j;
        return z;
    }

  private:
    unsigned num_qubits_;
    std::vector<Qubit> targets_;
    ZeroBitInserter inserter_;
    std::vector<Index> inner_;
    Index mask_ = 0;
};

} // namespace qcsim
