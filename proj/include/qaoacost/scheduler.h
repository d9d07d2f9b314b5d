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

#ifndef QAOACOST_SCHEDULER_H
#define QAOACOST_SCHEDULER_H

#include <cstdint>
#include <string>
#include <vector>

#include "qaoacost/circuit.h"

namespace qaoacost {

// rows x cols sites with 4-neighbour coupling; site index = row * cols + col.
struct GridTopology {
    int rows = 0;
    int cols = 0;

    int num_sites() const { return rows * cols; }
    int distance(int a, int b) const;
    bool adjacent(int a, int b) const { return distance(a, b) == 1; }
    std::vector<int> neighbors(int site) const;
};

inline constexpr int kUnusedSite = -1;

// placement[site] = logical qubit index or kUnusedSite.
using Placement = std::vector<int>;

// One table entry group: id > 0 is algorithm gate `id` (1-based over the
// circuit gates following the preparation prefix), id < 0 a routing SWAP.
struct ScheduledOp {
    int id = 0;
    std::vector<int> sites;

    bool operator==(const ScheduledOp&) const = default;
};

struct Schedule {
    Placement placement;
    std::vector<std::vector<ScheduledOp>> cycles;

    int num_sites() const { return static_cast<int>(placement.size()); }
    bool operator==(const Schedule&) const = default;
};

// Smallest square grid holding n qubits.
GridTopology choose_grid(int n);

// Greedy list scheduling with SWAP routing; deterministic for a fixed seed.
// Throws std::invalid_argument if the grid cannot hold the circuit.
Schedule schedule(const LogicalCircuit& c, const GridTopology& t, std::uint64_t seed);

// Routes from a given initial placement (no placement search).
Schedule schedule_from_placement(const LogicalCircuit& c, const GridTopology& t,
                                 const Placement& placement);

// Empty result iff the schedule is valid for (c, t).
std::vector<std::string> validate_schedule(const Schedule& s, const LogicalCircuit& c,
                                           const GridTopology& t);

// Cycle rows; the preparation layer is never part of a schedule.
int scheduled_depth(const Schedule& s);

// site_of[logical] after replaying every SWAP.
std::vector<int> final_sites(const Schedule& s);

std::string emit_pdpt(const Schedule& s);
Schedule parse_pdpt(const std::string& text);

std::string schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const std::string& text);

}  // namespace qaoacost

#endif  // QAOACOST_SCHEDULER_H
