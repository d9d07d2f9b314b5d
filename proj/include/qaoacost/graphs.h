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

#ifndef QAOACOST_GRAPHS_H
#define QAOACOST_GRAPHS_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qaoacost {

// A computational-basis label. Bit i holds the color of vertex i (equivalently
// the Z eigenvalue index of logical qubit i).
using Bitstring = std::uint64_t;

using Edge = std::pair<int, int>;

// Undirected simple graph; the Max-Cut instance. Edge order is significant:
// it fixes the order of cost-layer gates and of the reduced clauses.
class Graph {
public:
    Graph() = default;
    // Throws std::invalid_argument on self-loops, duplicates or bad indices.
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<int> degrees() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Vertex colors, one per vertex.
struct CutAssignment {
    std::vector<std::uint8_t> bits;

    static CutAssignment from_bitstring(Bitstring b, int n);
    Bitstring to_bitstring() const;
    CutAssignment complement() const;
};

struct MaxCutSolution {
    int k_max = 0;
    // All maximizing assignments; always closed under global flip.
    std::vector<Bitstring> optima;
};

inline constexpr int kBruteForceMaxVertices = 28;

Graph complete_graph(int n);
bool is_3regular(const Graph& g);

// Pairing-model sampler with full rejection of loops and multi-edges.
// Requires n >= 4 and n even. Deterministic for a fixed seed.
Graph gen_random_3regular(int n, std::uint64_t seed);

int cut_value(const Graph& g, const CutAssignment& a);
int cut_value(const Graph& g, Bitstring b);

// Exhaustive search over 2^n assignments; n <= kBruteForceMaxVertices.
MaxCutSolution brute_force_maxcut(const Graph& g);

// Edge-list text: "n m" then m lines "i j" (0-based).
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string write_graph(const Graph& g);

}  // namespace qaoacost

#endif  // QAOACOST_GRAPHS_H
