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
#include "qcsim/state.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qcsim {

/// coef * prod_j sigma_{ids[j]}(qubits[j]). No factors means identity.
struct PauliProduct {
    std::vector<Qubit> qubits;
    std::vector<int> ids;
    Complex coef{1.0, 0.0};
};

/// Parses "X 0 Y 3" (letters and indices may also be fused, as in "X0").
/// `I` factors are dropped.
PauliProduct parse_pauli_string(std::string_view text, Complex coef = 1.0);

/// <bra| P |ket> for a single product, coefficient included.
Complex pauli_transition_amplitude(const PauliProduct &term, const StateVector &bra,
                                   const StateVector &ket);

/// Linear combination of Pauli products with complex coefficients.
class GeneralOperator {
  public:
    explicit GeneralOperator(unsigned num_qubits);
    virtual ~GeneralOperator() = default;

    unsigned num_qubits() const { return num_qubits_; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<PauliProduct> &terms() const { return terms_; }
    const PauliProduct &term(std::size_t index) const;

    void add_term(PauliProduct term);
    void add_term(Complex coef, std::string_view pauli_string);

    Complex expectation_value(const StateVector &state) const;
    Complex transition_amplitude(const StateVector &bra, const StateVector &ket) const;

  protected:
    virtual void check_term(const PauliProduct &term) const;

  private:
    unsigned num_qubits_;
    std::vector<PauliProduct> terms_;
};

/// Hermitian operator: every coefficient is real.
class Observable : public GeneralOperator {
  public:
    using GeneralOperator::GeneralOperator;

    /// Real part of the term-wise sum; the imaginary part is rounding noise.
    double expectation_value(const StateVector &state) const;

  protected:
    void check_term(const PauliProduct &term) const override;
};

/// Loads "(re+imj) [X0 Z1] + ..." operator text. The qubit count is one
/// more than the largest index mentioned, and 1 for identity-only text.
GeneralOperator parse_openfermion_text(std::string_view text);

/// Appends `slices` repetitions of exp(i * 2 * a_P * angle / slices * P / 2)
/// over the terms in order, a first-order product formula for
/// exp(i * angle * O). Coefficients must be real.
void add_observable_rotation(Circuit &circuit, const GeneralOperator &op, double angle,
                             unsigned slices);

} // namespace qcsim
