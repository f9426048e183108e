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
#include "qcsim/observable.hpp"

#include "qcsim/gate.hpp"
#include "qcsim/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <optional>

namespace qcsim {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

int axis_id(char c) {
    switch (c) {
    case 'I':
        return kPauliI;
    case 'X':
        return kPauliX;
    case 'Y':
        return kPauliY;
    case 'Z':
        return kPauliZ;
    default:
        return -1;
    }
}

std::optional<Qubit> parse_qubit(std::string_view digits) {
    if (digits.empty() || digits.size() > 9)
        return std::nullopt;
    Qubit q = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (ec != std::errc() || end != digits.data() + digits.size())
        return std::nullopt;
    return q;
}

std::vector<std::string_view> split_words(std::string_view text) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i]))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j]))
            ++j;
        if (j > i)
            words.push_back(text.substr(i, j - i));
        i = j;
    }
    return words;
}

void push_factor(PauliProduct &p, int id, Qubit q) {
    if (std::find(p.qubits.begin(), p.qubits.end(), q) != p.qubits.end())
        throw ParseError("qubit " + std::to_string(q) + " appears twice in a Pauli product");
    if (id == kPauliI)
        return;
    p.qubits.push_back(q);
    p.ids.push_back(id);
}

struct Masks {
    Index flip = 0;
    Index phase = 0;
    int num_y = 0;
};

Masks masks_of(const PauliProduct &term) {
    Masks m;
    for (std::size_t j = 0; j < term.qubits.size(); ++j) {
        const Index bit = Index{1} << term.qubits[j];
        const int id = term.ids[j];
        if (id == kPauliX || id == kPauliY)
            m.flip |= bit;
        if (id == kPauliY || id == kPauliZ)
            m.phase |= bit;
        if (id == kPauliY)
            ++m.num_y;
    }
    return m;
}

Complex i_power(int k) {
    switch (k & 3) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

double parse_double(std::string_view s, long position) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size())
        throw ParseError("malformed number '" + std::string(s) + "'", position);
    return v;
}

// Python complex literal: "1.5", "-2j", "(0.5+0j)", "(1e-05-3j)".
Complex parse_complex(std::string_view s, long position) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    if (s.empty())
        throw ParseError("empty coefficient", position);
    if (s.back() != 'j')
        return {parse_double(s, position), 0.0};
    s.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos)
        return {0.0, parse_double(s, position)};
    return {parse_double(s.substr(0, split), position), parse_double(s.substr(split), position)};
}

} // namespace

PauliProduct parse_pauli_string(std::string_view text, Complex coef) {
    PauliProduct p;
    p.coef = coef;
    const auto words = split_words(text);
    for (std::size_t w = 0; w < words.size(); ++w) {
        const std::string_view word = words[w];
        const int id = axis_id(word[0]);
        if (id < 0)
            throw ParseError("unknown Pauli axis '" + std::string(word) + "'",
                             static_cast<long>(w));
        std::string_view digits = word.substr(1);
        if (digits.empty()) {
            if (++w >= words.size())
                throw ParseError("Pauli axis without qubit index", static_cast<long>(w));
            digits = words[w];
        }
        const auto q = parse_qubit(digits);
        if (!q)
            throw ParseError("malformed qubit index '" + std::string(digits) + "'",
                             static_cast<long>(w));
        push_factor(p, id, *q);
    }
    return p;
}

Complex pauli_transition_amplitude(const PauliProduct &term, const StateVector &bra,
                                   const StateVector &ket) {
    if (bra.num_qubits() != ket.num_qubits())
        throw ArgumentError("bra and ket sizes differ");
    for (Qubit q : term.qubits)
        if (q >= ket.num_qubits())
            throw ArgumentError("Pauli product acts outside the state");
    const Masks m = masks_of(term);
    const auto b = bra.amplitudes();
    const auto k = ket.amplitudes();
    const Index dim = ket.dim();
    double re = 0.0, im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static) if (use_parallel(ket.num_qubits()))
    for (Index x = 0; x < dim; ++x) {
        Complex v = std::conj(b[x ^ m.flip]) * k[x];
        if (std::popcount(x & m.phase) & 1)
            v = -v;
        re += v.real();
        im += v.imag();
    }
    return term.coef * i_power(m.num_y) * Complex(re, im);
}

GeneralOperator::GeneralOperator(unsigned num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0)
        throw ArgumentError("operator needs at least one qubit");
}

const PauliProduct &GeneralOperator::term(std::size_t index) const {
    if (index >= terms_.size())
        throw ArgumentError("term index out of range");
    return terms_[index];
}

void GeneralOperator::check_term(const PauliProduct &term) const {
    if (term.qubits.size() != term.ids.size())
        throw ArgumentError("Pauli product qubit and id counts differ");
    for (std::size_t j = 0; j < term.qubits.size(); ++j) {
        if (term.qubits[j] >= num_qubits_)
            throw ArgumentError("term acts on qubit " + std::to_string(term.qubits[j]) +
                                " of a " + std::to_string(num_qubits_) + "-qubit operator");
        if (term.ids[j] < kPauliI || term.ids[j] > kPauliZ)
            throw ArgumentError("Pauli id out of range");
        for (std::size_t i = 0; i < j; ++i)
            if (term.qubits[i] == term.qubits[j])
                throw ArgumentError("repeated qubit in Pauli product");
    }
}

void GeneralOperator::add_term(PauliProduct term) {
    check_term(term);
    terms_.push_back(std::move(term));
}

void GeneralOperator::add_term(Complex coef, std::string_view pauli_string) {
    add_term(parse_pauli_string(pauli_string, coef));
}

Complex GeneralOperator::transition_amplitude(const StateVector &bra,
                                              const StateVector &ket) const {
    if (bra.num_qubits() != num_qubits_ || ket.num_qubits() != num_qubits_)
        throw ArgumentError("state size does not match operator size");
    Complex sum{};
    for (const auto &t : terms_)
        sum += pauli_transition_amplitude(t, bra, ket);
    return sum;
}

Complex GeneralOperator::expectation_value(const StateVector &state) const {
    return transition_amplitude(state, state);
}

void Observable::check_term(const PauliProduct &term) const {
    GeneralOperator::check_term(term);
    if (term.coef.imag() != 0.0)
        throw ArgumentError("observable coefficients must be real");
}

double Observable::expectation_value(const StateVector &state) const {
    return GeneralOperator::expectation_value(state).real();
}

GeneralOperator parse_openfermion_text(std::string_view text) {
    std::vector<PauliProduct> terms;
    std::size_t i = 0;
    const auto skip = [&] {
        while (i < text.size() && is_space(text[i]))
            ++i;
    };
    skip();
    while (i < text.size()) {
        const long entry = static_cast<long>(terms.size());
        // Coefficient runs up to the opening bracket.
        const std::size_t open = text.find('[', i);
        if (open == std::string_view::npos)
            throw ParseError("term without '[...]' body", entry);
        std::string_view coef_text = text.substr(i, open - i);
        while (!coef_text.empty() && is_space(coef_text.back()))
            coef_text.remove_suffix(1);
        const Complex coef = parse_complex(coef_text, entry);
        const std::size_t close = text.find(']', open);
        if (close == std::string_view::npos)
            throw ParseError("unterminated term body", entry);
        PauliProduct p;
        try {
            p = parse_pauli_string(text.substr(open + 1, close - open - 1), coef);
        } catch (const ParseError &e) {
            throw ParseError(e.what(), entry);
        }
        terms.push_back(std::move(p));
        i = close + 1;
        skip();
        if (i < text.size()) {
            if (text[i] != '+')
                throw ParseError("expected '+' between terms", entry);
            ++i;
            skip();
            if (i >= text.size())
                throw ParseError("trailing '+'", entry);
        }
    }
    Qubit max_q = 0;
    for (const auto &t : terms)
        for (Qubit q : t.qubits)
            max_q = std::max(max_q, q);
    GeneralOperator op(max_q + 1);
    for (auto &t : terms)
        op.add_term(std::move(t));
    return op;
}

void add_observable_rotation(Circuit &circuit, const GeneralOperator &op, double angle,
                             unsigned slices) {
    if (slices == 0)
        throw ArgumentError("slice count must be positive");
    if (op.num_qubits() > circuit.num_qubits())
        throw ArgumentError("operator is larger than the circuit");
    for (const auto &t : op.terms())
        if (t.coef.imag() != 0.0)
            throw ArgumentError("rotation needs real coefficients");
    for (unsigned s = 0; s < slices; ++s)
        for (const auto &t : op.terms())
            circuit.add_gate(
                Gate::pauli_rotation(t.qubits, t.ids, 2.0 * t.coef.real() * angle / slices));
}

} // namespace qcsim
