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

#include "qaoacost/maxsat.h"

#include <gtest/gtest.h>

#include "fixtures.h"

using namespace qaoacost;

TEST(MaxSat, SingleEdgeReduction) {
    const auto f = reduce_to_max2sat(Graph(2, {{0, 1}}));
    EXPECT_EQ(f.n_vars, 2);
    EXPECT_EQ(f.clauses, (std::vector<Clause>{{1, 2}, {-1, -2}}));
    EXPECT_EQ(brute_force_max2sat(f), 2);
}

TEST(MaxSat, ClauseCounts) {
    EXPECT_EQ(reduce_to_max2sat(fixtures::triangle()).clauses.size(), 6u);
    const auto f = reduce_to_max2sat(fixtures::reference_graph());
    EXPECT_EQ(f.n_vars, 8);
    EXPECT_EQ(f.clauses.size(), 24u);
    for (const auto& c : f.clauses) EXPECT_EQ(c.size(), 2u);
}

TEST(MaxSat, BruteForceMatchesCutRelation) {
    // Frozen from independent enumeration: K3 -> 5, reference instance -> 22.
    EXPECT_EQ(brute_force_max2sat(reduce_to_max2sat(fixtures::triangle())), 5);
    EXPECT_EQ(brute_force_max2sat(reduce_to_max2sat(fixtures::reference_graph())), 22);
    EXPECT_EQ(22, 12 + brute_force_maxcut(fixtures::reference_graph()).k_max);
}

TEST(MaxSat, PerEdgeClauseSemantics) {
    const Graph g = gen_random_3regular(8, 11);
    const auto f = reduce_to_max2sat(g);
    for (std::uint64_t a = 0; a < 256; a += 5) {
        for (int e = 0; e < g.num_edges(); ++e) {
            auto sat = [&](const Clause& c) {
                for (int lit : c) {
                    const bool v = (a >> (std::abs(lit) - 1)) & 1U;
                    if (lit > 0 ? v : !v) return true;
                }
                return false;
            };
            const bool first = sat(f.clauses[2 * e]);
            const bool second = sat(f.clauses[2 * e + 1]);
            const auto [i, j] = g.edges()[e];
            const bool cut = ((a >> i) ^ (a >> j)) & 1U;
            EXPECT_TRUE(first || second);
            EXPECT_EQ(first && second, cut);
        }
    }
}

TEST(MaxSat, WcnfFormat) {
    EXPECT_EQ(emit_wcnf(reduce_to_max2sat(Graph(2, {{0, 1}}))), "p wcnf 2 2 3\n1 1 2 0\n1 -1 -2 0\n");
    const std::string k3 = emit_wcnf(reduce_to_max2sat(fixtures::triangle()));
    EXPECT_EQ(k3.substr(0, k3.find('\n')), "p wcnf 3 6 7");
}

TEST(MaxSat, WcnfRoundTrip) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto f = reduce_to_max2sat(gen_random_3regular(10, seed));
        EXPECT_EQ(parse_wcnf(emit_wcnf(f)), f);
    }
    const auto parsed = parse_wcnf("c comment\np cnf 2 1\n1 -2 0\n");
    EXPECT_EQ(parsed.clauses, (std::vector<Clause>{{1, -2}}));
}

TEST(MaxSat, WcnfRejectsBadInput) {
    EXPECT_THROW(parse_wcnf("1 1 2 0\n"), std::invalid_argument);
    EXPECT_THROW(parse_wcnf("p wcnf 2 1 2\n1 1 3 0\n"), std::invalid_argument);
    EXPECT_THROW(parse_wcnf("p wcnf 2 1 2\n1 1 2\n"), std::invalid_argument);
    EXPECT_THROW(parse_wcnf("p wcnf 2 2 3\n1 1 2 0\n"), std::invalid_argument);
}

TEST(MaxSat, BruteForceGuardsSize) {
    CnfFormula f;
    f.n_vars = 29;
    EXPECT_THROW(brute_force_max2sat(f), std::invalid_argument);
}
