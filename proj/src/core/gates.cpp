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
#include "qcsim/gates.hpp"

#include <Eigen/QR>

#include <cmath>
#include <map>
#include <numbers>

namespace qcsim::gates {
namespace {

using std::numbers::pi;

GateMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    GateMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

Gate diag1(Qubit target, Complex d0, Complex d1, const char *name) {
    return Gate::diagonal({target}, {d0, d1}).set_name(name);
}

Gate dense1(Qubit target, GateMatrix m, const char *name, CommuteBasis basis) {
    Gate g = Gate::dense({target}, std::move(m));
    g.set_commute_basis(target, basis);
    return g.set_name(name);
}

Gate rotation1(Qubit target, int id, double angle, const char *name) {
    return Gate::pauli_rotation({target}, {id}, angle).set_name(name, {angle});
}

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ArgumentError(std::string(what) + " must lie in [0, 1]");
}

} // namespace

Gate Identity(Qubit target) {
    Gate g = Gate::diagonal({target}, {1.0, 1.0});
    g.set_commute_basis(target, CommuteBasis::Any);
    return g.set_name("Identity");
}

Gate X(Qubit target) { return Gate::pauli({target}, {kPauliX}).set_name("X", {}, FastPath::X); }
Gate Y(Qubit target) { return Gate::pauli({target}, {kPauliY}).set_name("Y", {}, FastPath::Y); }
Gate Z(Qubit target) { return Gate::pauli({target}, {kPauliZ}).set_name("Z", {}, FastPath::Z); }

Gate H(Qubit target) {
    const double s = 1.0 / std::sqrt(2.0);
    return Gate::dense({target}, mat2(s, s, s, -s)).set_name("H", {}, FastPath::H);
}

Gate S(Qubit target) { return diag1(target, 1.0, kI, "S"); }
Gate Sdag(Qubit target) { return diag1(target, 1.0, -kI, "Sdag"); }
Gate T(Qubit target) { return diag1(target, 1.0, std::polar(1.0, pi / 4), "T"); }
Gate Tdag(Qubit target) { return diag1(target, 1.0, std::polar(1.0, -pi / 4), "Tdag"); }

Gate sqrtX(Qubit target) {
    const Complex a(0.5, 0.5), b(0.5, -0.5);
    return dense1(target, mat2(a, b, b, a), "sqrtX", CommuteBasis::X);
}

Gate sqrtXdag(Qubit target) {
    const Complex a(0.5, -0.5), b(0.5, 0.5);
    return dense1(target, mat2(a, b, b, a), "sqrtXdag", CommuteBasis::X);
}

Gate sqrtY(Qubit target) {
    const Complex a(0.5, 0.5);
    return dense1(target, mat2(a, -a, a, a), "sqrtY", CommuteBasis::Y);
}

Gate sqrtYdag(Qubit target) {
    const Complex a(0.5, -0.5);
    return dense1(target, mat2(a, a, -a, a), "sqrtYdag", CommuteBasis::Y);
}

Gate P0(Qubit target) { return diag1(target, 1.0, 0.0, "P0"); }
Gate P1(Qubit target) { return diag1(target, 0.0, 1.0, "P1"); }

Gate RX(Qubit target, double angle) { return rotation1(target, kPauliX, angle, "RX"); }
Gate RY(Qubit target, double angle) { return rotation1(target, kPauliY, angle, "RY"); }
Gate RZ(Qubit target, double angle) { return rotation1(target, kPauliZ, angle, "RZ"); }

Gate U1(Qubit target, double lambda) {
    return Gate::diagonal({target}, {1.0, std::polar(1.0, lambda)}).set_name("U1", {lambda});
}

Gate U2(Qubit target, double phi, double lambda) {
    const double s = 1.0 / std::sqrt(2.0);
    GateMatrix m = mat2(s, -s * std::polar(1.0, lambda), s * std::polar(1.0, phi),
                        s * std::polar(1.0, phi + lambda));
    return dense1(target, std::move(m), "U2", CommuteBasis::None).set_name("U2", {phi, lambda});
}

Gate U3(Qubit target, double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    GateMatrix m = mat2(c, -s * std::polar(1.0, lambda), s * std::polar(1.0, phi),
                        c * std::polar(1.0, phi + lambda));
    return dense1(target, std::move(m), "U3", CommuteBasis::None)
        .set_name("U3", {theta, phi, lambda});
}

Gate CNOT(Qubit control, Qubit target) {
    return Gate::pauli({target}, {kPauliX}).add_control(control, 1).set_name("CNOT", {},
                                                                            FastPath::CNOT);
}

Gate CZ(Qubit a, Qubit b) {
    if (a == b)
        throw ArgumentError("CZ needs distinct qubits");
    return Gate::diagonal({a, b}, {1.0, 1.0, 1.0, -1.0}).set_name("CZ", {}, FastPath::CZ);
}

Gate SWAP(Qubit a, Qubit b) {
    return Gate::permutation_table({a, b}, {0, 2, 1, 3}).set_name("SWAP", {}, FastPath::SWAP);
}

Gate TOFFOLI(Qubit control1, Qubit control2, Qubit target) {
    return Gate::pauli({target}, {kPauliX})
        .add_control(control1, 1)
        .add_control(control2, 1)
        .set_name("TOFFOLI");
}

Gate FREDKIN(Qubit control, Qubit target1, Qubit target2) {
    return Gate::permutation_table({target1, target2}, {0, 2, 1, 3})
        .add_control(control, 1)
        .set_name("FREDKIN");
}

Gate DenseMatrix(std::vector<Qubit> targets, GateMatrix matrix) {
    return Gate::dense(std::move(targets), std::move(matrix));
}

Gate SparseMatrix(std::vector<Qubit> targets, std::vector<SparseEntry> entries) {
    return Gate::sparse(std::move(targets), std::move(entries));
}

Gate DiagonalMatrix(std::vector<Qubit> targets, std::vector<Complex> diagonal) {
    return Gate::diagonal(std::move(targets), std::move(diagonal));
}

Gate ReversibleBoolean(std::vector<Qubit> targets, const std::function<Index(Index, Index)> &f) {
    return Gate::permutation(std::move(targets), f);
}

Gate Pauli(std::vector<Qubit> targets, std::vector<int> ids) {
    return Gate::pauli(std::move(targets), std::move(ids));
}

Gate PauliRotation(std::vector<Qubit> targets, std::vector<int> ids, double angle) {
    return Gate::pauli_rotation(std::move(targets), std::move(ids), angle);
}

GateMatrix random_unitary_matrix(unsigned num_qubits, Random &rng) {
    const Index d = dim_of(num_qubits);
    GateMatrix z(d, d);
    for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c) {
            const double re = rng.normal();
            const double im = rng.normal();
            z(r, c) = Complex(re, im);
        }
    Eigen::HouseholderQR<GateMatrix> qr(z);
    GateMatrix q = qr.householderQ();
    const GateMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix column phases so the distribution is Haar.
    for (Index c = 0; c < d; ++c) {
        const Complex diag = r(c, c);
        const double mag = std::abs(diag);
        if (mag > 0)
            q.col(c) *= diag / mag;
    }
    return q;
}

Gate RandomUnitary(std::vector<Qubit> targets, std::uint64_t seed) {
    Random rng(seed);
    const auto m = static_cast<unsigned>(targets.size());
    return Gate::dense(std::move(targets), random_unitary_matrix(m, rng));
}

Gate ParametricRX(Qubit target, double angle) {
    return rotation1(target, kPauliX, angle, "ParametricRX").set_parametric(true);
}

Gate ParametricRY(Qubit target, double angle) {
    return rotation1(target, kPauliY, angle, "ParametricRY").set_parametric(true);
}

Gate ParametricRZ(Qubit target, double angle) {
    return rotation1(target, kPauliZ, angle, "ParametricRZ").set_parametric(true);
}

Gate ParametricPauliRotation(std::vector<Qubit> targets, std::vector<int> ids, double angle) {
    return Gate::pauli_rotation(std::move(targets), std::move(ids), angle)
        .set_name("ParametricPauliRotation", {angle})
        .set_parametric(true);
}

Gate Measurement(Qubit target, long register_address) {
    return Gate::instrument({P0(target), P1(target)}, register_address)
        .set_name("Measurement", {static_cast<double>(register_address)});
}

Gate BitFlipNoise(Qubit target, double prob) {
    check_probability(prob, "bit-flip probability");
    return Gate::probabilistic({prob}, {X(target)}).set_name("BitFlipNoise", {prob});
}

Gate DephasingNoise(Qubit target, double prob) {
    check_probability(prob, "dephasing probability");
    return Gate::probabilistic({prob}, {Z(target)}).set_name("DephasingNoise", {prob});
}

Gate DepolarizingNoise(Qubit target, double prob) {
    check_probability(prob, "depolarizing probability");
    const double p = prob / 3;
    return Gate::probabilistic({p, p, p}, {X(target), Y(target), Z(target)})
        .set_name("DepolarizingNoise", {prob});
}

Gate TwoQubitDepolarizingNoise(Qubit a, Qubit b, double prob) {
    check_probability(prob, "depolarizing probability");
    if (a == b)
        throw ArgumentError("two-qubit noise needs distinct qubits");
    std::vector<double> probs;
    std::vector<Gate> paulis;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == 0 && j == 0)
                continue;
            probs.push_back(prob / 15);
            paulis.push_back(Gate::pauli({a, b}, {i, j}));
        }
    return Gate::probabilistic(std::move(probs), std::move(paulis))
        .set_name("TwoQubitDepolarizingNoise", {prob});
}

Gate AmplitudeDampingNoise(Qubit target, double gamma) {
    check_probability(gamma, "damping rate");
    Gate k0 = Gate::dense({target}, mat2(1.0, 0.0, 0.0, std::sqrt(1 - gamma)));
    Gate k1 = Gate::dense({target}, mat2(0.0, std::sqrt(gamma), 0.0, 0.0));
    return Gate::cptp({std::move(k0), std::move(k1)}).set_name("AmplitudeDampingNoise", {gamma});
}

std::optional<NamedGateInfo> named_gate_info(const std::string &name) {
    static const std::map<std::string, NamedGateInfo> table = {
        {"Identity", {1, 0, 0}},      {"X", {1, 0, 0}},
        {"Y", {1, 0, 0}},             {"Z", {1, 0, 0}},
        {"H", {1, 0, 0}},             {"S", {1, 0, 0}},
        {"Sdag", {1, 0, 0}},          {"T", {1, 0, 0}},
        {"Tdag", {1, 0, 0}},          {"sqrtX", {1, 0, 0}},
        {"sqrtXdag", {1, 0, 0}},      {"sqrtY", {1, 0, 0}},
        {"sqrtYdag", {1, 0, 0}},      {"P0", {1, 0, 0}},
        {"P1", {1, 0, 0}},            {"RX", {1, 0, 1}},
        {"RY", {1, 0, 1}},            {"RZ", {1, 0, 1}},
        {"U1", {1, 0, 1}},            {"U2", {1, 0, 2}},
        {"U3", {1, 0, 3}},            {"CNOT", {1, 1, 0}},
        {"CZ", {2, 0, 0}},            {"SWAP", {2, 0, 0}},
        {"TOFFOLI", {1, 2, 0}},       {"FREDKIN", {2, 1, 0}},
        {"ParametricRX", {1, 0, 1}},  {"ParametricRY", {1, 0, 1}},
        {"ParametricRZ", {1, 0, 1}},  {"Measurement", {1, 0, 1}},
        {"BitFlipNoise", {1, 0, 1}},  {"DephasingNoise", {1, 0, 1}},
        {"DepolarizingNoise", {1, 0, 1}}, {"TwoQubitDepolarizingNoise", {2, 0, 1}},
        {"AmplitudeDampingNoise", {1, 0, 1}},
    };
    auto it = table.find(name);
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

Gate named_gate(const std::string &name, std::span<const Qubit> q, std::span<const double> p) {
    const auto info = named_gate_info(name);
    if (!info)
        throw ArgumentError("unknown gate name '" + name + "'");
    if (q.size() != info->num_targets + info->num_controls)
        throw ArgumentError(name + " expects " +
                            std::to_string(info->num_targets + info->num_controls) + " qubits");
    if (p.size() != info->num_params)
        throw ArgumentError(name + " expects " + std::to_string(info->num_params) + " parameters");

    using Factory0 = Gate (*)(Qubit);
    static const std::map<std::string, Factory0> single = {
        {"Identity", Identity}, {"X", X},         {"Y", Y},         {"Z", Z},
        {"H", H},               {"S", S},         {"Sdag", Sdag},   {"T", T},
        {"Tdag", Tdag},         {"sqrtX", sqrtX}, {"sqrtXdag", sqrtXdag},
        {"sqrtY", sqrtY},       {"sqrtYdag", sqrtYdag},
        {"P0", P0},             {"P1", P1},
    };
    using Factory1 = Gate (*)(Qubit, double);
    static const std::map<std::string, Factory1> single_param = {
        {"RX", RX},
        {"RY", RY},
        {"RZ", RZ},
        {"U1", U1},
        {"ParametricRX", ParametricRX},
        {"ParametricRY", ParametricRY},
        {"ParametricRZ", ParametricRZ},
        {"BitFlipNoise", BitFlipNoise},
        {"DephasingNoise", DephasingNoise},
        {"DepolarizingNoise", DepolarizingNoise},
        {"AmplitudeDampingNoise", AmplitudeDampingNoise},
    };
    if (auto it = single.find(name); it != single.end())
        return it->second(q[0]);
    if (auto it = single_param.find(name); it != single_param.end())
        return it->second(q[0], p[0]);
    if (name == "U2")
        return U2(q[0], p[0], p[1]);
    if (name == "U3")
        return U3(q[0], p[0], p[1], p[2]);
    if (name == "CNOT")
        return CNOT(q[0], q[1]);
    if (name == "CZ")
        return CZ(q[0], q[1]);
    if (name == "SWAP")
        return SWAP(q[0], q[1]);
    if (name == "TOFFOLI")
        return TOFFOLI(q[0], q[1], q[2]);
    if (name == "FREDKIN")
        return FREDKIN(q[0], q[1], q[2]);
    if (name == "TwoQubitDepolarizingNoise")
        return TwoQubitDepolarizingNoise(q[0], q[1], p[0]);
    if (name == "Measurement") {
        if (p[0] < 0 || p[0] != std::floor(p[0]))
            throw ArgumentError("Measurement register must be a non-negative integer");
        return Measurement(q[0], static_cast<long>(p[0]));
    }
    throw ArgumentError("unknown gate name '" + name + "'");
}

} // namespace qcsim::gates
