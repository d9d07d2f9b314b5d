// Copyright 2026 The qaoacost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QAOACOST_CIRCUIT_H
#define QAOACOST_CIRCUIT_H

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qaoacost/graphs.h"

namespace qaoacost {

// Angles in radians. Layout of the flat vector form: [gamma_1..gamma_p, beta_1..beta_p].
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    int depth() const { return static_cast<int>(gammas.size()); }
    void validate() const;
    std::vector<double> to_vector() const;
    static QaoaParams from_vector(std::span<const double> x);
};

enum class GateKind { H, ZZPhase, RX, SWAP };

// ZZPhase(a) = exp(-i a Z(x)Z / 2); RX(a) = exp(-i a X) (no half-angle).
struct Gate {
    GateKind kind = GateKind::H;
    double angle = 0.0;
    std::array<int, 2> qubits{-1, -1};

    int arity() const { return (kind == GateKind::ZZPhase || kind == GateKind::SWAP) ? 2 : 1; }
    std::span<const int> targets() const { return {qubits.data(), static_cast<std::size_t>(arity())}; }

    static Gate h(int q) { return {GateKind::H, 0.0, {q, -1}}; }
    static Gate rx(int q, double a) { return {GateKind::RX, a, {q, -1}}; }
    static Gate zz(int a, int b, double angle) { return {GateKind::ZZPhase, angle, {a, b}}; }
    static Gate swap(int a, int b) { return {GateKind::SWAP, 0.0, {a, b}}; }

    bool operator==(const Gate&) const = default;
};

const char* gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

struct LogicalCircuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    void validate() const;
    bool operator==(const LogicalCircuit&) const = default;
};

// [H on all qubits], then per layer: ZZPhase(gamma_l) per edge in edge order,
// RX(beta_l) on every qubit.
LogicalCircuit build_qaoa_circuit(const Graph& g, const QaoaParams& params);

// ASAP layering under qubit exclusivity only; counts the H layer.
int logical_depth(const LogicalCircuit& c);

// Length of the leading state-preparation prefix: n when the circuit opens with
// one H on each qubit, otherwise 0. The prefix is charged to preparation time
// and is not part of a schedule.
int preparation_size(const LogicalCircuit& c);

// Dependency graph over gates [first, end): pred[k] lists indices (relative to
// first) that must finish before gate first+k. ZZPhase gates are diagonal and
// commute with each other, so they impose no order among themselves.
std::vector<std::vector<int>> gate_dependencies(const LogicalCircuit& c, int first);

std::string circuit_to_json(const LogicalCircuit& c);
LogicalCircuit circuit_from_json(const std::string& text);

}  // namespace qaoacost

#endif  // QAOACOST_CIRCUIT_H
