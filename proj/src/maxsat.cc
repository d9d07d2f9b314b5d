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

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qaoacost {

namespace {

void check_formula(const CnfFormula& f) {
    for (const auto& clause : f.clauses) {
        for (int lit : clause) {
            if (lit == 0 || std::abs(lit) > f.n_vars) {
                throw std::invalid_argument("cnf: literal " + std::to_string(lit) +
                                            " outside [1, " + std::to_string(f.n_vars) + "]");
            }
        }
    }
}

bool literal_true(int lit, std::uint64_t assignment) {
    const bool v = (assignment >> (std::abs(lit) - 1)) & 1U;
    return lit > 0 ? v : !v;
}

}  // namespace

CnfFormula reduce_to_max2sat(const Graph& g) {
    CnfFormula f;
    f.n_vars = g.num_vertices();
    f.clauses.reserve(2 * g.edges().size());
    for (const auto& [i, j] : g.edges()) {
        f.clauses.push_back({i + 1, j + 1});
        f.clauses.push_back({-(i + 1), -(j + 1)});
    }
    return f;
}

int brute_force_max2sat(const CnfFormula& f) {
    if (f.n_vars > kBruteForceMaxVars) {
        throw std::invalid_argument("brute_force_max2sat: n_vars=" + std::to_string(f.n_vars) +
                                    " exceeds limit " + std::to_string(kBruteForceMaxVars));
    }
    check_formula(f);
    // Gray-code enumeration; only clauses touching the flipped variable are re-evaluated.
    std::vector<std::vector<int>> touching(f.n_vars);
    for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) {
        for (int lit : f.clauses[c]) {
            auto& list = touching[std::abs(lit) - 1];
            if (list.empty() || list.back() != c) list.push_back(c);
        }
    }
    auto satisfied = [&](int c, std::uint64_t a) {
        for (int lit : f.clauses[c]) {
            if (literal_true(lit, a)) return true;
        }
        return false;
    };
    std::uint64_t a = 0;
    int sat = 0;
    for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) sat += satisfied(c, a) ? 1 : 0;
    int best = sat;
    const std::uint64_t total = std::uint64_t{1} << f.n_vars;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int v = std::countr_zero(k);
        for (int c : touching[v]) sat -= satisfied(c, a) ? 1 : 0;
        a ^= std::uint64_t{1} << v;
        for (int c : touching[v]) sat += satisfied(c, a) ? 1 : 0;
        if (sat > best) best = sat;
    }
    return best;
}

std::string emit_wcnf(const CnfFormula& f) {
    check_formula(f);
    std::ostringstream out;
    const std::size_t m = f.clauses.size();
    out << "p wcnf " << f.n_vars << ' ' << m << ' ' << (m + 1) << '\n';
    for (const auto& clause : f.clauses) {
        out << 1;
        for (int lit : clause) out << ' ' << lit;
        out << " 0\n";
    }
    return out.str();
}

CnfFormula parse_wcnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula f;
    bool weighted = false;
    bool have_header = false;
    long long expected = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        if (first == "p") {
            std::string kind;
            long long nv = 0;
            ls >> kind >> nv >> expected;
            if (!ls || (kind != "wcnf" && kind != "cnf") || nv < 0) {
                throw std::invalid_argument("parse_wcnf: bad header '" + line + "'");
            }
            weighted = kind == "wcnf";
            f.n_vars = static_cast<int>(nv);
            have_header = true;
            continue;
        }
        if (!have_header) throw std::invalid_argument("parse_wcnf: clause before header");
        std::istringstream cs(line);
        if (weighted) {
            long long w = 0;
            if (!(cs >> w) || w <= 0) {
                throw std::invalid_argument("parse_wcnf: bad weight in '" + line + "'");
            }
        }
        Clause clause;
        long long lit = 0;
        bool terminated = false;
        while (cs >> lit) {
            if (lit == 0) {
                terminated = true;
                break;
            }
            clause.push_back(static_cast<int>(lit));
        }
        if (!terminated) throw std::invalid_argument("parse_wcnf: unterminated clause '" + line + "'");
        f.clauses.push_back(std::move(clause));
    }
    if (!have_header) throw std::invalid_argument("parse_wcnf: missing header");
    if (expected >= 0 && static_cast<long long>(f.clauses.size()) != expected) {
        throw std::invalid_argument("parse_wcnf: header declares " + std::to_string(expected) +
                                    " clauses, found " + std::to_string(f.clauses.size()));
    }
    check_formula(f);
    return f;
}

}  // namespace qaoacost
