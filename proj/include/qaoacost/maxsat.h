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

#ifndef QAOACOST_MAXSAT_H
#define QAOACOST_MAXSAT_H

#include <string>
#include <vector>

#include "qaoacost/graphs.h"

namespace qaoacost {

// Signed DIMACS literals: +v is variable v, -v its negation (v >= 1).
using Clause = std::vector<int>;

struct CnfFormula {
    int n_vars = 0;
    std::vector<Clause> clauses;

    bool operator==(const CnfFormula&) const = default;
};

inline constexpr int kBruteForceMaxVars = 28;

// Two clauses per edge (i, j): (x_{i+1} v x_{j+1}) and (~x_{i+1} v ~x_{j+1}).
CnfFormula reduce_to_max2sat(const Graph& g);

// Maximum number of simultaneously satisfiable clauses, by enumeration.
int brute_force_max2sat(const CnfFormula& f);

// DIMACS WCNF with unit weights and top = n_clauses + 1.
std::string emit_wcnf(const CnfFormula& f);
// Accepts comment lines ('c') and both "p wcnf" and "p cnf" headers; drops weights.
CnfFormula parse_wcnf(const std::string& text);

}  // namespace qaoacost

#endif  // QAOACOST_MAXSAT_H
