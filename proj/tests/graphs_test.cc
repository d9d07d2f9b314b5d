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

#include <gtest/gtest.h>

#include <stdexcept>

#include "fixtures.h"

using namespace qaoacost;

TEST(Graphs, RejectsMalformedGraphs) {
    EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graphs, GeneratorRejectsBadSizes) {
    EXPECT_THROW(gen_random_3regular(7, 1), std::invalid_argument);
    EXPECT_THROW(gen_random_3regular(2, 1), std::invalid_argument);
    EXPECT_THROW(gen_random_3regular(0, 1), std::invalid_argument);
}

TEST(Graphs, FourVerticesIsK4) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = gen_random_3regular(4, seed);
        EXPECT_EQ(g.num_edges(), 6);
        EXPECT_TRUE(is_3regular(g));
    }
}

TEST(Graphs, GeneratorProducesThreeRegularGraphs) {
    for (int n = 4; n <= 30; n += 2) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Graph g = gen_random_3regular(n, seed);
            EXPECT_TRUE(is_3regular(g)) << "n=" << n << " seed=" << seed;
            EXPECT_EQ(g.num_edges(), 3 * n / 2);
        }
    }
}

TEST(Graphs, GeneratorIsDeterministic) {
    EXPECT_EQ(gen_random_3regular(8, 42).edges(), gen_random_3regular(8, 42).edges());
    EXPECT_NE(gen_random_3regular(16, 1).edges(), gen_random_3regular(16, 2).edges());
}

TEST(Graphs, CutValue) {
    const Graph k3 = fixtures::triangle();
    EXPECT_EQ(cut_value(k3, CutAssignment{{0, 1, 0}}), 2);
    EXPECT_EQ(cut_value(k3, CutAssignment{{0, 0, 0}}), 0);
    EXPECT_EQ(cut_value(k3, Bitstring{0b010}), 2);
    EXPECT_THROW(cut_value(k3, CutAssignment{{0, 1}}), std::invalid_argument);
}

TEST(Graphs, CutValueFlipSymmetryAndBounds) {
    const Graph g = gen_random_3regular(12, 7);
    for (Bitstring b = 0; b < (Bitstring{1} << 12); b += 37) {
        const auto a = CutAssignment::from_bitstring(b, 12);
        const int cut = cut_value(g, a);
        EXPECT_EQ(cut, cut_value(g, a.complement()));
        EXPECT_EQ(cut, cut_value(g, b));
        EXPECT_GE(cut, 0);
        EXPECT_LE(cut, 18);
    }
}

TEST(Graphs, BruteForceSmallCompleteGraphs) {
    const auto k3 = brute_force_maxcut(complete_graph(3));
    EXPECT_EQ(k3.k_max, 2);
    EXPECT_EQ(k3.optima.size(), 6u);
    const auto k4 = brute_force_maxcut(complete_graph(4));
    EXPECT_EQ(k4.k_max, 4);
    EXPECT_EQ(k4.optima, (std::vector<Bitstring>{3, 5, 6, 9, 10, 12}));
}

TEST(Graphs, BruteForceReferenceInstance) {
    // Frozen from an independent exhaustive enumeration of all 256 colorings.
    const auto sol = brute_force_maxcut(fixtures::reference_graph());
    EXPECT_EQ(sol.k_max, 10);
    EXPECT_EQ(sol.optima, (std::vector<Bitstring>{30, 89, 92, 113, 142, 163, 166, 225}));
    for (Bitstring b : sol.optima) EXPECT_EQ(cut_value(fixtures::reference_graph(), b), 10);
}

TEST(Graphs, BruteForceOptimaClosedUnderFlip) {
    const Graph g = gen_random_3regular(10, 3);
    const auto sol = brute_force_maxcut(g);
    EXPECT_EQ(sol.optima.size() % 2, 0u);
    const Bitstring mask = (Bitstring{1} << 10) - 1;
    for (Bitstring b : sol.optima) {
        EXPECT_TRUE(std::binary_search(sol.optima.begin(), sol.optima.end(), b ^ mask));
    }
}

TEST(Graphs, BruteForceGuardsSize) {
    EXPECT_THROW(brute_force_maxcut(Graph(29, {})), std::invalid_argument);
}

TEST(Graphs, EdgeListFormat) {
    EXPECT_EQ(write_graph(fixtures::triangle()), "3 3\n0 1\n1 2\n0 2\n");
    const std::string text = write_graph(fixtures::reference_graph());
    const Graph g = parse_graph(text);
    EXPECT_EQ(g.num_vertices(), 8);
    EXPECT_EQ(g.num_edges(), 12);
    EXPECT_EQ(write_graph(g), text);
}

TEST(Graphs, EdgeListRejectsBadInput) {
    EXPECT_THROW(parse_graph("3 2\n0 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_graph("3 1\n0 x\n"), std::invalid_argument);
    EXPECT_THROW(parse_graph("3 1\n0 3\n"), std::invalid_argument);
    EXPECT_THROW(parse_graph("3 1\n0 1 2\n"), std::invalid_argument);
    EXPECT_THROW(parse_graph(""), std::invalid_argument);
}
