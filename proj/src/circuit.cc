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

#include "qaoacost/circuit.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace qaoacost {

void QaoaParams::validate() const {
    if (gammas.empty() || gammas.size() != betas.size()) {
        throw std::invalid_argument("QaoaParams: need equal-length gamma/beta vectors with p >= 1");
    }
    auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(gammas.begin(), gammas.end(), finite) ||
        !std::all_of(betas.begin(), betas.end(), finite)) {
        throw std::invalid_argument("QaoaParams: non-finite angle");
    }
}

std::vector<double> QaoaParams::to_vector() const {
    std::vector<double> x(gammas);
    x.insert(x.end(), betas.begin(), betas.end());
    return x;
}

QaoaParams QaoaParams::from_vector(std::span<const double> x) {
    if (x.empty() || x.size() % 2 != 0) {
        throw std::invalid_argument("QaoaParams: flat vector must have even positive length");
    }
    const std::size_t p = x.size() / 2;
    return {{x.begin(), x.begin() + p}, {x.begin() + p, x.end()}};
}

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::ZZPhase: return "ZZPhase";
        case GateKind::RX: return "RX";
        case GateKind::SWAP: return "SWAP";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
    if (name == "H") return GateKind::H;
    if (name == "ZZPhase") return GateKind::ZZPhase;
    if (name == "RX") return GateKind::RX;
    if (name == "SWAP") return GateKind::SWAP;
    throw std::invalid_argument("unknown gate kind '" + name + "'");
}

void LogicalCircuit::validate() const {
    for (std::size_t k = 0; k < gates.size(); ++k) {
        const Gate& g = gates[k];
        for (int q : g.targets()) {
            if (q < 0 || q >= n_qubits) {
                throw std::invalid_argument("circuit: gate " + std::to_string(k) +
                                            " targets qubit " + std::to_string(q) +
                                            " outside [0, " + std::to_string(n_qubits) + ")");
            }
        }
        if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
            throw std::invalid_argument("circuit: gate " + std::to_string(k) +
                                        " repeats a qubit");
        }
        if (!std::isfinite(g.angle)) {
            throw std::invalid_argument("circuit: gate " + std::to_string(k) + " has non-finite angle");
        }
    }
}

LogicalCircuit build_qaoa_circuit(const Graph& g, const QaoaParams& params) {
    params.validate();
    LogicalCircuit c;
    c.n_qubits = g.num_vertices();
    const int p = params.depth();
    c.gates.reserve(c.n_qubits + p * (g.num_edges() + c.n_qubits));
    for (int q = 0; q < c.n_qubits; ++q) c.gates.push_back(Gate::h(q));
    for (int l = 0; l < p; ++l) {
        for (const auto& [i, j] : g.edges()) c.gates.push_back(Gate::zz(i, j, params.gammas[l]));
        for (int q = 0; q < c.n_qubits; ++q) c.gates.push_back(Gate::rx(q, params.betas[l]));
    }
    return c;
}

int logical_depth(const LogicalCircuit& c) {
    std::vector<int> level(c.n_qubits, 0);
    int depth = 0;
    for (const Gate& g : c.gates) {
        int start = 0;
        for (int q : g.targets()) start = std::max(start, level[q]);
        for (int q : g.targets()) level[q] = start + 1;
        depth = std::max(depth, start + 1);
    }
    return depth;
}

int preparation_size(const LogicalCircuit& c) {
    if (c.n_qubits == 0 || static_cast<int>(c.gates.size()) < c.n_qubits) return 0;
    std::vector<bool> seen(c.n_qubits, false);
    for (int k = 0; k < c.n_qubits; ++k) {
        const Gate& g = c.gates[k];
        if (g.kind != GateKind::H || seen[g.qubits[0]]) return 0;
        seen[g.qubits[0]] = true;
    }
    return c.n_qubits;
}

std::vector<std::vector<int>> gate_dependencies(const LogicalCircuit& c, int first) {
    const int count = static_cast<int>(c.gates.size()) - first;
    std::vector<std::vector<int>> pred(std::max(count, 0));
    // Per qubit: last non-commuting gate, and ZZ gates issued since it.
    std::vector<int> barrier(c.n_qubits, -1);
    std::vector<std::vector<int>> diagonal_since(c.n_qubits);
    for (int k = 0; k < count; ++k) {
        const Gate& g = c.gates[first + k];
        auto& deps = pred[k];
        for (int q : g.targets()) {
            if (barrier[q] >= 0) deps.push_back(barrier[q]);
            if (g.kind != GateKind::ZZPhase) {
                deps.insert(deps.end(), diagonal_since[q].begin(), diagonal_since[q].end());
            }
        }
        std::sort(deps.begin(), deps.end());
        deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
        for (int q : g.targets()) {
            if (g.kind == GateKind::ZZPhase) {
                diagonal_since[q].push_back(k);
            } else {
                barrier[q] = k;
                diagonal_since[q].clear();
            }
        }
    }
    return pred;
}

std::string circuit_to_json(const LogicalCircuit& c) {
    nlohmann::ordered_json j;
    j["n_qubits"] = c.n_qubits;
    auto& gates = j["gates"] = nlohmann::ordered_json::array();
    for (const Gate& g : c.gates) {
        nlohmann::ordered_json gj;
        gj["kind"] = gate_kind_name(g.kind);
        gj["angle"] = g.angle;
        gj["qubits"] = std::vector<int>(g.targets().begin(), g.targets().end());
        gates.push_back(std::move(gj));
    }
    return j.dump(1) + "\n";
}

LogicalCircuit circuit_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    LogicalCircuit c;
    c.n_qubits = j.at("n_qubits").get<int>();
    for (const auto& gj : j.at("gates")) {
        Gate g;
        g.kind = gate_kind_from_name(gj.at("kind").get<std::string>());
        g.angle = gj.value("angle", 0.0);
        const auto qs = gj.at("qubits").get<std::vector<int>>();
        if (static_cast<int>(qs.size()) != g.arity()) {
            throw std::invalid_argument(std::string("circuit json: wrong qubit count for ") +
                                        gate_kind_name(g.kind));
        }
        for (std::size_t k = 0; k < qs.size(); ++k) g.qubits[k] = qs[k];
        c.gates.push_back(g);
    }
    c.validate();
    return c;
}

}  // namespace qaoacost
