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

#include "qaoacost/scheduler.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.h"

using namespace qaoacost;

namespace {

QaoaParams params_for(int p) { return {std::vector<double>(p, 0.4), std::vector<double>(p, 0.9)}; }

int swap_count(const Schedule& s) {
    int k = 0;
    for (const auto& cycle : s.cycles) {
        for (const auto& op : cycle) k += op.id < 0 ? 1 : 0;
    }
    return k;
}

bool mentions(const std::vector<std::string>& v, const std::string& word) {
    return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(word) != std::string::npos; });
}

}  // namespace

TEST(Scheduler, ChooseGrid) {
    EXPECT_EQ(choose_grid(8).rows, 3);
    EXPECT_EQ(choose_grid(8).cols, 3);
    EXPECT_EQ(choose_grid(9).rows, 3);
    EXPECT_EQ(choose_grid(10).rows, 4);
    EXPECT_EQ(choose_grid(1).rows, 1);
    EXPECT_THROW(choose_grid(0), std::invalid_argument);
}

TEST(Scheduler, GridGeometry) {
    const GridTopology t{3, 3};
    EXPECT_TRUE(t.adjacent(0, 1));
    EXPECT_TRUE(t.adjacent(1, 4));
    EXPECT_FALSE(t.adjacent(2, 3));
    EXPECT_EQ(t.distance(0, 8), 4);
    EXPECT_EQ(t.neighbors(4).size(), 4u);
    EXPECT_EQ(t.neighbors(0).size(), 2u);
}

TEST(Scheduler, SingleQubitCircuitNeedsNoRouting) {
    LogicalCircuit c{5, {}};
    for (int q = 0; q < 5; ++q) c.gates.push_back(Gate::rx(q, 0.1));
    for (int q = 0; q < 5; q += 2) c.gates.push_back(Gate::rx(q, 0.2));
    const auto s = schedule(c, choose_grid(5), 1);
    EXPECT_EQ(scheduled_depth(s), logical_depth(c));
    EXPECT_EQ(swap_count(s), 0);
    EXPECT_TRUE(validate_schedule(s, c, choose_grid(5)).empty());
}

TEST(Scheduler, AdjacentTwoQubitGateRunsInFirstCycle) {
    const LogicalCircuit c{2, {Gate::zz(0, 1, 0.3)}};
    const GridTopology t{2, 2};
    const auto s = schedule_from_placement(c, t, {0, 1, kUnusedSite, kUnusedSite});
    ASSERT_EQ(scheduled_depth(s), 1);
    EXPECT_EQ(s.cycles[0], (std::vector<ScheduledOp>{{1, {0, 1}}}));
    EXPECT_EQ(scheduled_depth(schedule(c, t, 3)), 1);
}

TEST(Scheduler, DistantGateGetsRouted) {
    const LogicalCircuit c{2, {Gate::zz(0, 1, 0.3)}};
    const GridTopology t{3, 3};
    const auto s = schedule_from_placement(c, t, {0, kUnusedSite, kUnusedSite, kUnusedSite, kUnusedSite,
                                                  kUnusedSite, kUnusedSite, kUnusedSite, 1});
    EXPECT_TRUE(validate_schedule(s, c, t).empty());
    EXPECT_GT(swap_count(s), 0);
    // Distance 4: both ends move toward each other, two hops per cycle.
    EXPECT_EQ(scheduled_depth(s), 3);
}

TEST(Scheduler, NoSwapsWhenEveryGateIsPlacedAdjacent) {
    // Path 0-1-2-3 laid out along the first row of a 2x2... 1x4 grid.
    const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto c = build_qaoa_circuit(path, params_for(2));
    const GridTopology t{1, 4};
    const auto s = schedule_from_placement(c, t, {0, 1, 2, 3});
    EXPECT_TRUE(validate_schedule(s, c, t).empty());
    EXPECT_EQ(swap_count(s), 0);
}

TEST(Scheduler, RandomInstancesAreValid) {
    for (int n : {4, 6, 8, 10, 12}) {
        for (int p : {1, 2, 4}) {
            const Graph g = gen_random_3regular(n, 100 + n + p);
            const auto c = build_qaoa_circuit(g, params_for(p));
            const auto t = choose_grid(n);
            const auto s = schedule(c, t, 9);
            const auto v = validate_schedule(s, c, t);
            EXPECT_TRUE(v.empty()) << "n=" << n << " p=" << p << ": " << (v.empty() ? "" : v.front());
            // Each qubit carries 3p ZZ gates and p mixer rotations in sequence.
            EXPECT_GE(scheduled_depth(s), 4 * p);
        }
    }
}

TEST(Scheduler, Deterministic) {
    const auto c = build_qaoa_circuit(gen_random_3regular(10, 1), params_for(2));
    EXPECT_EQ(schedule(c, choose_grid(10), 5), schedule(c, choose_grid(10), 5));
}

TEST(Scheduler, DepthMonotoneInP) {
    const Graph g = gen_random_3regular(8, 21);
    int previous = 0;
    for (int p = 1; p <= 5; ++p) {
        const int d = scheduled_depth(schedule(build_qaoa_circuit(g, params_for(p)), choose_grid(8), 4));
        EXPECT_GE(d, previous);
        previous = d;
    }
}

TEST(Scheduler, ReferenceInstanceDepthParity) {
    const auto c = build_qaoa_circuit(fixtures::reference_graph(), params_for(4));
    const auto t = choose_grid(8);
    const auto s = schedule(c, t, 0);
    EXPECT_TRUE(validate_schedule(s, c, t).empty());
    EXPECT_LE(scheduled_depth(s), 46);  // 1.5 x 31 published cycles
}

TEST(Scheduler, ValidatorReportsExclusivity) {
    const LogicalCircuit c{2, {Gate::rx(0, 0.1), Gate::rx(1, 0.1)}};
    Schedule s{{0, 1}, {{{1, {0}}, {2, {0}}}}};
    EXPECT_TRUE(mentions(validate_schedule(s, c, GridTopology{1, 2}), "exclusivity"));
}

TEST(Scheduler, ValidatorReportsAdjacency) {
    const LogicalCircuit c{2, {Gate::zz(0, 1, 0.1)}};
    Schedule s{{0, kUnusedSite, 1}, {{{1, {0, 2}}}}};
    EXPECT_TRUE(mentions(validate_schedule(s, c, GridTopology{1, 3}), "adjacency"));
    Schedule swap_far{{0, kUnusedSite, 1}, {{{-1, {0, 2}}}, {{1, {0, 1}}}}};
    EXPECT_TRUE(mentions(validate_schedule(swap_far, c, GridTopology{1, 3}), "adjacency"));
}

TEST(Scheduler, ValidatorTracksSwaps) {
    const LogicalCircuit c{2, {Gate::rx(0, 0.1), Gate::rx(1, 0.2)}};
    const GridTopology t{1, 2};
    // After the swap, logical 0 sits on site 1.
    EXPECT_TRUE(validate_schedule({{0, 1}, {{{-1, {0, 1}}}, {{1, {1}}, {2, {0}}}}}, c, t).empty());
    EXPECT_TRUE(mentions(validate_schedule({{0, 1}, {{{-1, {0, 1}}}, {{1, {0}}, {2, {1}}}}}, c, t), "wrong logical"));
}

TEST(Scheduler, ValidatorReportsOrderAndCompleteness) {
    const LogicalCircuit c{1, {Gate::rx(0, 0.1), Gate::rx(0, 0.2)}};
    const GridTopology t{1, 1};
    EXPECT_TRUE(mentions(validate_schedule({{0}, {{{2, {0}}}, {{1, {0}}}}}, c, t), "dependency"));
    EXPECT_TRUE(mentions(validate_schedule({{0}, {{{1, {0}}}}}, c, t), "never executed"));
    EXPECT_TRUE(mentions(validate_schedule({{0}, {{{1, {0}}}, {{1, {0}}}, {{2, {0}}}}}, c, t), "already executed"));
    EXPECT_FALSE(validate_schedule({{0, 0}, {}}, c, GridTopology{1, 2}).empty());
}

TEST(Scheduler, ParsesPublishedTable) {
    const auto s = parse_pdpt(fixtures::reference_pdpt());
    EXPECT_EQ(s.num_sites(), 9);
    EXPECT_EQ(scheduled_depth(s), 31);
    EXPECT_EQ(s.placement, (Placement{3, 6, 4, 0, 1, 7, 5, 2, kUnusedSite}));
}

TEST(Scheduler, PublishedTableRoundTripsBitExact) {
    const std::string text = fixtures::reference_pdpt();
    EXPECT_EQ(emit_pdpt(parse_pdpt(text)), text);
}

TEST(Scheduler, PublishedTableValidatesAgainstItsInstance) {
    const auto c = build_qaoa_circuit(fixtures::reference_graph(), params_for(4));
    const auto v = validate_schedule(parse_pdpt(fixtures::reference_pdpt()), c, GridTopology{3, 3});
    EXPECT_TRUE(v.empty()) << v.front();
}

TEST(Scheduler, EmittedTablesReparse) {
    const auto c = build_qaoa_circuit(gen_random_3regular(10, 8), params_for(3));
    const auto t = choose_grid(10);
    const auto s = schedule(c, t, 2);
    const std::string text = emit_pdpt(s);
    const auto back = parse_pdpt(text);
    EXPECT_EQ(emit_pdpt(back), text);
    EXPECT_TRUE(validate_schedule(back, c, t).empty());
}

TEST(Scheduler, ParseRejectsMalformedTables) {
    const std::string head = "        0       1\n        0       *\n";
    EXPECT_THROW(parse_pdpt(head + "        1\n"), std::invalid_argument);
    EXPECT_THROW(parse_pdpt(head + "        1       x\n"), std::invalid_argument);
    EXPECT_THROW(parse_pdpt("        0       1       2\n        0       1       2\n        4       4       4\n"),
                 std::invalid_argument);
    EXPECT_THROW(parse_pdpt("        1       0\n        0       1\n"), std::invalid_argument);
    EXPECT_THROW(parse_pdpt("# only comments\n"), std::invalid_argument);
}

TEST(Scheduler, JsonRoundTrip) {
    const auto c = build_qaoa_circuit(gen_random_3regular(6, 1), params_for(2));
    const auto s = schedule(c, choose_grid(6), 1);
    EXPECT_EQ(schedule_from_json(schedule_to_json(s)), s);
}

TEST(Scheduler, RejectsUndersizedGrid) {
    const auto c = build_qaoa_circuit(gen_random_3regular(10, 1), params_for(1));
    EXPECT_THROW(schedule(c, GridTopology{3, 3}, 0), std::invalid_argument);
}
