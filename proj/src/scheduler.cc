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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qaoacost/rng.h"

namespace qaoacost {

int GridTopology::distance(int a, int b) const {
    return std::abs(a / cols - b / cols) + std::abs(a % cols - b % cols);
}

std::vector<int> GridTopology::neighbors(int site) const {
    std::vector<int> out;
    const int r = site / cols;
    const int c = site % cols;
    if (r > 0) out.push_back(site - cols);
    if (c > 0) out.push_back(site - 1);
    if (c + 1 < cols) out.push_back(site + 1);
    if (r + 1 < rows) out.push_back(site + cols);
    return out;
}

GridTopology choose_grid(int n) {
    if (n < 1) throw std::invalid_argument("choose_grid: n must be >= 1");
    int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (side * side < n) ++side;
    while (side > 1 && (side - 1) * (side - 1) >= n) --side;
    return {side, side};
}

namespace {

constexpr int kPlacementTries = 16;

struct CircuitView {
    int prep = 0;
    int count = 0;
    std::vector<std::vector<int>> deps;

    explicit CircuitView(const LogicalCircuit& c)
        : prep(preparation_size(c)),
          count(static_cast<int>(c.gates.size()) - prep),
          deps(gate_dependencies(c, prep)) {}
};

void check_fits(const LogicalCircuit& c, const GridTopology& t) {
    c.validate();
    if (t.rows < 1 || t.cols < 1 || t.num_sites() < c.n_qubits) {
        throw std::invalid_argument("schedule: " + std::to_string(t.rows) + "x" +
                                    std::to_string(t.cols) + " grid cannot hold " +
                                    std::to_string(c.n_qubits) + " qubits");
    }
}

// Graph-aware greedy placement; `rng` only breaks ties.
Placement greedy_placement(const LogicalCircuit& c, const GridTopology& t, Rng& rng) {
    const int n = c.n_qubits;
    const int m = t.num_sites();
    std::vector<std::vector<int>> weight(n, std::vector<int>(n, 0));
    std::vector<int> degree(n, 0);
    for (const Gate& g : c.gates) {
        if (g.arity() != 2) continue;
        const auto [a, b] = g.qubits;
        if (weight[a][b]++ == 0) {
            ++degree[a];
            ++degree[b];
        }
        weight[b][a] = weight[a][b];
    }
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    std::vector<double> qubit_key(n), site_key(m);
    for (auto& k : qubit_key) k = jitter(rng);
    for (auto& k : site_key) k = jitter(rng);

    const int center = (t.rows / 2) * t.cols + t.cols / 2;
    Placement placement(m, kUnusedSite);
    std::vector<int> site_of(n, -1);
    for (int placed = 0; placed < n; ++placed) {
        int pick = -1;
        std::tuple<int, int, double> pick_key{-1, -1, 0.0};
        for (int q = 0; q < n; ++q) {
            if (site_of[q] >= 0) continue;
            int link = 0;
            for (int o = 0; o < n; ++o) {
                if (site_of[o] >= 0) link += weight[q][o];
            }
            std::tuple<int, int, double> key{link, degree[q], qubit_key[q]};
            if (pick < 0 || key > pick_key) {
                pick = q;
                pick_key = key;
            }
        }
        int best_site = -1;
        std::tuple<int, int, double> best_key{};
        for (int s = 0; s < m; ++s) {
            if (placement[s] != kUnusedSite) continue;
            int cost = 0;
            for (int o = 0; o < n; ++o) {
                if (site_of[o] >= 0 && weight[pick][o] > 0) cost += weight[pick][o] * t.distance(s, site_of[o]);
            }
            std::tuple<int, int, double> key{cost, t.distance(s, center), site_key[s]};
            if (best_site < 0 || key < best_key) {
                best_site = s;
                best_key = key;
            }
        }
        placement[best_site] = pick;
        site_of[pick] = best_site;
    }
    return placement;
}

void check_placement(const Placement& placement, int n_qubits, int n_sites) {
    if (static_cast<int>(placement.size()) != n_sites) {
        throw std::invalid_argument("placement covers " + std::to_string(placement.size()) +
                                    " sites, grid has " + std::to_string(n_sites));
    }
    std::vector<int> count(n_qubits, 0);
    for (int q : placement) {
        if (q == kUnusedSite) continue;
        if (q < 0 || q >= n_qubits) throw std::invalid_argument("placement: bad logical index");
        ++count[q];
    }
    if (std::any_of(count.begin(), count.end(), [](int k) { return k != 1; })) {
        throw std::invalid_argument("placement must hold every logical qubit exactly once");
    }
}

}  // namespace

Schedule schedule_from_placement(const LogicalCircuit& c, const GridTopology& t,
                                 const Placement& placement) {
    check_fits(c, t);
    check_placement(placement, c.n_qubits, t.num_sites());
    const CircuitView view(c);
    const int m = t.num_sites();

    Schedule out;
    out.placement = placement;
    std::vector<int> occupant = placement;
    std::vector<int> site_of(c.n_qubits, -1);
    for (int s = 0; s < m; ++s) {
        if (occupant[s] != kUnusedSite) site_of[occupant[s]] = s;
    }
    auto gate_at = [&](int k) -> const Gate& { return c.gates[view.prep + k]; };
    auto gate_distance = [&](int k) {
        const Gate& g = gate_at(k);
        return t.distance(site_of[g.qubits[0]], site_of[g.qubits[1]]);
    };

    std::vector<int> done_cycle(view.count, -1);
    int remaining = view.count;
    int swap_id = 0;
    const long long cycle_cap = 64LL * (view.count + 1) * (m + 1);
    while (remaining > 0) {
        const int cycle = static_cast<int>(out.cycles.size());
        if (cycle > cycle_cap) throw std::runtime_error("schedule: routing failed to converge");
        std::vector<ScheduledOp> ops;
        std::vector<bool> busy(m, false);

        std::vector<int> blocked;
        for (int k = 0; k < view.count; ++k) {
            if (done_cycle[k] >= 0) continue;
            const bool ready = std::all_of(view.deps[k].begin(), view.deps[k].end(), [&](int d) {
                return done_cycle[d] >= 0 && done_cycle[d] < cycle;
            });
            if (!ready) continue;
            const Gate& g = gate_at(k);
            ScheduledOp op{k + 1, {}};
            for (int q : g.targets()) op.sites.push_back(site_of[q]);
            if (std::any_of(op.sites.begin(), op.sites.end(), [&](int s) { return busy[s]; })) continue;
            if (g.arity() == 2 && !t.adjacent(op.sites[0], op.sites[1])) {
                blocked.push_back(k);
                continue;
            }
            for (int s : op.sites) busy[s] = true;
            done_cycle[k] = cycle;
            --remaining;
            ops.push_back(std::move(op));
        }

        auto total_distance = [&]() {
            int total = 0;
            for (int k : blocked) total += gate_distance(k);
            return total;
        };
        auto apply_swap = [&](int a, int b) {
            std::swap(occupant[a], occupant[b]);
            if (occupant[a] != kUnusedSite) site_of[occupant[a]] = a;
            if (occupant[b] != kUnusedSite) site_of[occupant[b]] = b;
        };
        struct Candidate {
            int delta;
            int gate;
            int lo, hi;
            auto key() const { return std::tuple(delta, gate, lo, hi); }
        };
        // SWAPs that move one endpoint of blocked gate k one step closer to its partner.
        auto candidates_for = [&](int k, std::vector<Candidate>& out_list) {
            const Gate& g = gate_at(k);
            const int base_total = total_distance();
            for (int side = 0; side < 2; ++side) {
                const int here = site_of[g.qubits[side]];
                const int there = site_of[g.qubits[1 - side]];
                if (busy[here]) continue;
                for (int nb : t.neighbors(here)) {
                    if (busy[nb] || t.distance(nb, there) >= t.distance(here, there)) continue;
                    apply_swap(here, nb);
                    const int delta = total_distance() - base_total;
                    apply_swap(here, nb);
                    out_list.push_back({delta, k, std::min(here, nb), std::max(here, nb)});
                }
            }
        };
        auto commit = [&](const Candidate& cand) {
            apply_swap(cand.lo, cand.hi);
            busy[cand.lo] = busy[cand.hi] = true;
            ops.push_back({-(++swap_id), {cand.lo, cand.hi}});
        };

        // The lowest-id blocked gate always advances (both endpoints may move),
        // and its partner sites are then frozen for the cycle.
        if (!blocked.empty()) {
            const int first = blocked.front();
            for (int step = 0; step < 2 && gate_distance(first) > 1; ++step) {
                std::vector<Candidate> cands;
                candidates_for(first, cands);
                if (cands.empty()) break;
                commit(*std::min_element(cands.begin(), cands.end(),
                                         [](const Candidate& a, const Candidate& b) { return a.key() < b.key(); }));
            }
            const Gate& g = gate_at(first);
            busy[site_of[g.qubits[0]]] = busy[site_of[g.qubits[1]]] = true;
        }
        while (true) {
            std::vector<Candidate> cands;
            for (int k : blocked) {
                if (gate_distance(k) > 1) candidates_for(k, cands);
            }
            if (cands.empty()) break;
            const auto best = *std::min_element(cands.begin(), cands.end(),
                                                [](const Candidate& a, const Candidate& b) { return a.key() < b.key(); });
            if (best.delta >= 0) break;
            commit(best);
        }

        if (ops.empty()) throw std::runtime_error("schedule: no progress in cycle " + std::to_string(cycle));
        out.cycles.push_back(std::move(ops));
    }
    return out;
}

Schedule schedule(const LogicalCircuit& c, const GridTopology& t, std::uint64_t seed) {
    check_fits(c, t);
    Schedule best;
    bool have = false;
    for (int attempt = 0; attempt < kPlacementTries; ++attempt) {
        Rng rng(derive_seed(seed, {0x5c4edu, static_cast<std::uint64_t>(attempt)}));
        Schedule candidate = schedule_from_placement(c, t, greedy_placement(c, t, rng));
        const auto swaps = [](const Schedule& s) {
            std::size_t k = 0;
            for (const auto& cyc : s.cycles) {
                for (const auto& op : cyc) k += op.id < 0 ? 1 : 0;
            }
            return k;
        };
        if (!have || candidate.cycles.size() < best.cycles.size() ||
            (candidate.cycles.size() == best.cycles.size() && swaps(candidate) < swaps(best))) {
            best = std::move(candidate);
            have = true;
        }
    }
    return best;
}

int scheduled_depth(const Schedule& s) { return static_cast<int>(s.cycles.size()); }

std::vector<int> final_sites(const Schedule& s) {
    std::vector<int> occupant = s.placement;
    for (const auto& cycle : s.cycles) {
        for (const auto& op : cycle) {
            if (op.id < 0 && op.sites.size() == 2) std::swap(occupant[op.sites[0]], occupant[op.sites[1]]);
        }
    }
    const int n = static_cast<int>(std::count_if(occupant.begin(), occupant.end(),
                                                 [](int q) { return q != kUnusedSite; }));
    std::vector<int> site_of(n, -1);
    for (int site = 0; site < static_cast<int>(occupant.size()); ++site) {
        if (occupant[site] != kUnusedSite) site_of.at(occupant[site]) = site;
    }
    return site_of;
}

std::vector<std::string> validate_schedule(const Schedule& s, const LogicalCircuit& c,
                                           const GridTopology& t) {
    std::vector<std::string> v;
    auto report = [&](std::string msg) { v.push_back(std::move(msg)); };
    const int m = t.num_sites();
    if (s.num_sites() != m) {
        report("placement has " + std::to_string(s.num_sites()) + " sites, grid has " + std::to_string(m));
        return v;
    }
    std::vector<int> seen(c.n_qubits, 0);
    for (int site = 0; site < m; ++site) {
        const int q = s.placement[site];
        if (q == kUnusedSite) continue;
        if (q < 0 || q >= c.n_qubits) {
            report("placement: site " + std::to_string(site) + " holds invalid logical " + std::to_string(q));
        } else {
            ++seen[q];
        }
    }
    for (int q = 0; q < c.n_qubits; ++q) {
        if (seen[q] != 1) report("placement: logical " + std::to_string(q) + " placed " + std::to_string(seen[q]) + " times");
    }
    if (!v.empty()) return v;

    const CircuitView view(c);
    std::vector<int> occupant = s.placement;
    std::vector<int> gate_cycle(view.count, -1);
    std::set<int> swap_ids;
    for (int cycle = 0; cycle < scheduled_depth(s); ++cycle) {
        const std::string where = "cycle " + std::to_string(cycle + 1) + ": ";
        std::vector<int> owner(m, 0);
        std::vector<std::pair<int, int>> swaps;
        for (const auto& op : s.cycles[cycle]) {
            const std::string what = (op.id > 0 ? "gate " : "swap ") + std::to_string(op.id);
            bool sites_ok = true;
            for (int site : op.sites) {
                if (site < 0 || site >= m) {
                    report(where + what + " uses out-of-range site " + std::to_string(site));
                    sites_ok = false;
                    continue;
                }
                if (owner[site] != 0) {
                    report(where + "exclusivity: site " + std::to_string(site) + " used by " +
                           std::to_string(owner[site]) + " and " + std::to_string(op.id));
                }
                owner[site] = op.id;
            }
            if (!sites_ok) continue;
            if (op.id == 0) {
                report(where + "operation with id 0");
            } else if (op.id < 0) {
                if (!swap_ids.insert(op.id).second) report(where + what + " reused");
                if (op.sites.size() != 2) {
                    report(where + what + " spans " + std::to_string(op.sites.size()) + " sites, expected 2");
                } else if (!t.adjacent(op.sites[0], op.sites[1])) {
                    report(where + "adjacency: " + what + " on non-adjacent sites");
                } else {
                    swaps.emplace_back(op.sites[0], op.sites[1]);
                }
            } else {
                const int k = op.id - 1;
                if (k >= view.count) {
                    report(where + what + " does not exist in the circuit");
                    continue;
                }
                if (gate_cycle[k] >= 0) {
                    report(where + what + " already executed in cycle " + std::to_string(gate_cycle[k] + 1));
                    continue;
                }
                gate_cycle[k] = cycle;
                const Gate& g = c.gates[view.prep + k];
                if (static_cast<int>(op.sites.size()) != g.arity()) {
                    report(where + what + " spans " + std::to_string(op.sites.size()) + " sites, expected " +
                           std::to_string(g.arity()));
                    continue;
                }
                if (g.arity() == 2 && !t.adjacent(op.sites[0], op.sites[1])) {
                    report(where + "adjacency: " + what + " on non-adjacent sites " +
                           std::to_string(op.sites[0]) + "," + std::to_string(op.sites[1]));
                }
                std::vector<int> want(g.targets().begin(), g.targets().end());
                std::vector<int> have;
                for (int site : op.sites) have.push_back(occupant[site]);
                std::sort(want.begin(), want.end());
                std::sort(have.begin(), have.end());
                if (want != have) report(where + what + " acts on the wrong logical qubits");
            }
        }
        for (const auto& [a, b] : swaps) std::swap(occupant[a], occupant[b]);
    }
    for (int k = 0; k < view.count; ++k) {
        if (gate_cycle[k] < 0) {
            report("gate " + std::to_string(k + 1) + " never executed");
            continue;
        }
        for (int d : view.deps[k]) {
            if (gate_cycle[d] >= 0 && gate_cycle[d] >= gate_cycle[k]) {
                report("dependency: gate " + std::to_string(k + 1) + " (cycle " +
                       std::to_string(gate_cycle[k] + 1) + ") does not follow gate " +
                       std::to_string(d + 1) + " (cycle " + std::to_string(gate_cycle[d] + 1) + ")");
            }
        }
    }
    return v;
}

namespace {

constexpr const char* kPdptTitle =
    "# PDPT: each column is associated to a physical qubit , each row to a clock-cycle";
constexpr const char* kPdptPhysical =
    "## physical qubit indices ##################################################";
constexpr const char* kPdptLogical =
    "## logical qubit indices ###################################################";
constexpr const char* kPdptRule =
    "############################################################################";

// Tab-stop layout: every field starts on the next multiple of 8 columns.
std::string tab_row(const std::vector<std::string>& fields) {
    std::string line;
    for (const auto& f : fields) {
        do {
            line.push_back(' ');
        } while (line.size() % 8 != 0);
        line += f;
    }
    return line;
}

}  // namespace

std::string emit_pdpt(const Schedule& s) {
    const int m = s.num_sites();
    std::ostringstream out;
    out << kPdptTitle << '\n' << kPdptPhysical << '\n';
    std::vector<std::string> fields;
    for (int site = 0; site < m; ++site) fields.push_back(std::to_string(site));
    out << tab_row(fields) << '\n' << kPdptLogical << '\n';
    fields.clear();
    for (int q : s.placement) fields.push_back(q == kUnusedSite ? "*" : std::to_string(q));
    out << tab_row(fields) << '\n' << kPdptRule << '\n';
    for (const auto& cycle : s.cycles) {
        std::vector<int> row(m, 0);
        for (const auto& op : cycle) {
            for (int site : op.sites) {
                if (site < 0 || site >= m || row[site] != 0) {
                    throw std::invalid_argument("emit_pdpt: schedule violates site exclusivity");
                }
                row[site] = op.id;
            }
        }
        fields.clear();
        for (int v : row) fields.push_back(std::to_string(v));
        out << tab_row(fields) << '\n';
    }
    out << kPdptRule << '\n';
    return out.str();
}

Schedule parse_pdpt(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    int line_no = 0;
    std::vector<int> row_line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) tokens.push_back(tok);
        rows.push_back(std::move(tokens));
        row_line.push_back(line_no);
    }
    if (rows.size() < 2) throw std::invalid_argument("parse_pdpt: missing index rows");
    const std::size_t m = rows[0].size();
    auto fail = [&](std::size_t r, const std::string& msg) {
        throw std::invalid_argument("parse_pdpt: line " + std::to_string(row_line[r]) + ": " + msg);
    };
    auto to_int = [&](std::size_t r, const std::string& tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) fail(r, "unknown token '" + tok + "'");
        return v;
    };
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m) {
            fail(r, "ragged row (" + std::to_string(rows[r].size()) + " columns, expected " + std::to_string(m) + ")");
        }
    }
    for (std::size_t site = 0; site < m; ++site) {
        if (to_int(0, rows[0][site]) != static_cast<int>(site)) fail(0, "physical indices must be 0..M-1");
    }
    Schedule s;
    for (const auto& tok : rows[1]) {
        s.placement.push_back(tok == "*" ? kUnusedSite : to_int(1, tok));
        if (s.placement.back() < kUnusedSite) fail(1, "negative logical index");
    }
    for (std::size_t r = 2; r < rows.size(); ++r) {
        std::map<int, std::vector<int>> groups;
        for (std::size_t site = 0; site < m; ++site) {
            const int v = to_int(r, rows[r][site]);
            if (v != 0) groups[v].push_back(static_cast<int>(site));
        }
        std::vector<ScheduledOp> cycle;
        // Table order: SWAP ids ascending by magnitude first, then gates.
        for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
            if (it->first > 0) continue;
            if (it->second.size() > 2) fail(r, "id " + std::to_string(it->first) + " on more than 2 sites");
            cycle.push_back({it->first, it->second});
        }
        for (const auto& [id, sites] : groups) {
            if (id < 0) continue;
            if (sites.size() > 2) fail(r, "id " + std::to_string(id) + " on more than 2 sites");
            cycle.push_back({id, sites});
        }
        s.cycles.push_back(std::move(cycle));
    }
    return s;
}

std::string schedule_to_json(const Schedule& s) {
    nlohmann::ordered_json j;
    j["placement"] = s.placement;
    auto& cycles = j["cycles"] = nlohmann::ordered_json::array();
    for (const auto& cycle : s.cycles) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& op : cycle) row.push_back({{"id", op.id}, {"sites", op.sites}});
        cycles.push_back(std::move(row));
    }
    return j.dump() + "\n";
}

Schedule schedule_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Schedule s;
    s.placement = j.at("placement").get<std::vector<int>>();
    for (const auto& row : j.at("cycles")) {
        std::vector<ScheduledOp> cycle;
        for (const auto& op : row) cycle.push_back({op.at("id").get<int>(), op.at("sites").get<std::vector<int>>()});
        s.cycles.push_back(std::move(cycle));
    }
    return s;
}

}  // namespace qaoacost
