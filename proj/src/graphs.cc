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

#include "qaoacost/graphs.h"

#include <algorithm>
#include <bit>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qaoacost/rng.h"

namespace qaoacost {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::set<Edge> seen;
    for (const auto& [i, j] : edges_) {
        if (i < 0 || j < 0 || i >= n || j >= n) {
            throw std::invalid_argument("graph: vertex index out of range in edge (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
        }
        if (i == j) throw std::invalid_argument("graph: self-loop on vertex " + std::to_string(i));
        if (!seen.insert(std::minmax(i, j)).second) {
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
        }
    }
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& [i, j] : edges_) {
        ++deg[i];
        ++deg[j];
    }
    return deg;
}

CutAssignment CutAssignment::from_bitstring(Bitstring b, int n) {
    CutAssignment a;
    a.bits.resize(n);
    for (int i = 0; i < n; ++i) a.bits[i] = static_cast<std::uint8_t>((b >> i) & 1U);
    return a;
}

Bitstring CutAssignment::to_bitstring() const {
    if (bits.size() > 64) throw std::out_of_range("assignment wider than 64 bits");
    Bitstring b = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) b |= Bitstring{1} << i;
    }
    return b;
}

CutAssignment CutAssignment::complement() const {
    CutAssignment c = *this;
    for (auto& x : c.bits) x = x ? 0 : 1;
    return c;
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, std::move(edges));
}

bool is_3regular(const Graph& g) {
    const auto deg = g.degrees();
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; }) &&
           g.num_vertices() % 2 == 0 && 2 * g.num_edges() == 3 * g.num_vertices();
}

Graph gen_random_3regular(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("gen_random_3regular: n must be even and >= 4, got " +
                                    std::to_string(n));
    }
    Rng rng(derive_seed(seed, {0x3e9u, static_cast<std::uint64_t>(n)}));
    std::vector<int> stubs;
    stubs.reserve(3 * n);
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), {v, v, v});

    // Acceptance probability of a simple pairing is ~exp(-2) for degree 3, so
    // a generous cap only trips on a broken RNG.
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<Edge> seen;
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool simple = true;
        for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
            Edge e = std::minmax(stubs[k], stubs[k + 1]);
            if (e.first == e.second || !seen.insert(e).second) {
                simple = false;
                break;
            }
            edges.push_back(e);
        }
        if (simple) return Graph(n, std::move(edges));
    }
    throw std::runtime_error("gen_random_3regular: rejection sampling did not converge");
}

int cut_value(const Graph& g, const CutAssignment& a) {
    if (static_cast<int>(a.bits.size()) != g.num_vertices()) {
        throw std::invalid_argument("cut_value: assignment length " +
                                    std::to_string(a.bits.size()) + " != vertex count " +
                                    std::to_string(g.num_vertices()));
    }
    int cut = 0;
    for (const auto& [i, j] : g.edges()) cut += (a.bits[i] != a.bits[j]) ? 1 : 0;
    return cut;
}

int cut_value(const Graph& g, Bitstring b) {
    int cut = 0;
    for (const auto& [i, j] : g.edges()) cut += static_cast<int>(((b >> i) ^ (b >> j)) & 1U);
    return cut;
}

MaxCutSolution brute_force_maxcut(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kBruteForceMaxVertices) {
        throw std::invalid_argument("brute_force_maxcut: n=" + std::to_string(n) +
                                    " exceeds limit " + std::to_string(kBruteForceMaxVertices));
    }
    std::vector<std::vector<int>> adj(n);
    for (const auto& [i, j] : g.edges()) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    // Gray-code walk: each step flips one vertex and updates the cut in O(deg).
    MaxCutSolution best;
    Bitstring b = 0;
    int cut = 0;
    best.optima.push_back(0);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int v = std::countr_zero(k);
        const unsigned bv = (b >> v) & 1U;
        for (int u : adj[v]) cut += (((b >> u) & 1U) == bv) ? 1 : -1;
        b ^= Bitstring{1} << v;
        if (cut > best.k_max) {
            best.k_max = cut;
            best.optima.clear();
        }
        if (cut == best.k_max) best.optima.push_back(b);
    }
    std::sort(best.optima.begin(), best.optima.end());
    return best;
}

Graph read_graph(std::istream& in) {
    std::string line;
    auto next_line = [&](const char* what) {
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) return;
        }
        throw std::invalid_argument(std::string("read_graph: unexpected end of input reading ") +
                                    what);
    };
    auto parse_pair = [&](const char* what) {
        std::istringstream ls(line);
        long long a = 0, b = 0;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw std::invalid_argument(std::string("read_graph: malformed ") + what +
                                        " line '" + line + "'");
        }
        return std::pair<long long, long long>(a, b);
    };
    next_line("header");
    const auto [n, m] = parse_pair("header");
    if (n < 0 || m < 0 || n > (1 << 20)) {
        throw std::invalid_argument("read_graph: bad header '" + line + "'");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        next_line("edge");
        const auto [i, j] = parse_pair("edge");
        if (i < 0 || j < 0 || i >= n || j >= n) {
            throw std::invalid_argument("read_graph: vertex index out of range in '" + line + "'");
        }
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
    return out.str();
}

}  // namespace qaoacost
