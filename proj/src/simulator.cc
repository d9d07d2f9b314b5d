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

#include "qaoacost/simulator.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace qaoacost {

namespace {

void check_qubit(const StateVector& s, int q) {
    if (q < 0 || q >= s.num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(q) + " outside register of " +
                                std::to_string(s.num_qubits()));
    }
}

// Visits every basis index with bit q clear.
template <typename F>
void for_each_pair(std::size_t size, int q, F&& f) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) f(i, i + stride);
    }
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
    if (n < 0 || n > kMaxSimulatedQubits) {
        throw std::invalid_argument("StateVector: qubit count " + std::to_string(n) + " unsupported");
    }
    amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::plus(int n) {
    StateVector s(n);
    const double a = std::pow(2.0, -0.5 * n);
    std::fill(s.amps_.begin(), s.amps_.end(), Amplitude{a, 0.0});
    return s;
}

StateVector StateVector::basis(int n, Bitstring b) {
    StateVector s(n);
    if (b >= s.size()) throw std::out_of_range("basis state outside register");
    s.amps_[0] = 0.0;
    s.amps_[b] = 1.0;
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto& a : amps_) acc += std::norm(a);
    return std::sqrt(acc);
}

void StateVector::normalize() {
    const double nrm = norm();
    if (!(nrm > 0.0)) throw std::runtime_error("StateVector: cannot normalize a zero vector");
    const double inv = 1.0 / nrm;
    for (auto& a : amps_) a *= inv;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(), [](const Amplitude& a) { return std::norm(a); });
    return p;
}

double StateVector::excited_population(int q) const {
    check_qubit(*this, q);
    double acc = 0.0;
    for_each_pair(amps_.size(), q, [&](std::size_t, std::size_t i1) { acc += std::norm(amps_[i1]); });
    return acc;
}

StateVector StateVector::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permuted: wrong permutation length");
    std::vector<bool> hit(n_, false);
    for (int t : perm) {
        if (t < 0 || t >= n_ || hit[t]) throw std::invalid_argument("permuted: not a permutation");
        hit[t] = true;
    }
    StateVector out(n_);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        std::size_t j = 0;
        for (int k = 0; k < n_; ++k) j |= ((i >> k) & 1U) << perm[k];
        out.amps_[j] = amps_[i];
    }
    return out;
}

StateVector init_plus_state(int n) { return StateVector::plus(n); }

void apply_h(StateVector& s, int q) {
    check_qubit(s, q);
    const double r = 1.0 / std::sqrt(2.0);
    auto amps = s.amplitudes();
    for_each_pair(s.size(), q, [&](std::size_t i0, std::size_t i1) {
        const Amplitude a = amps[i0], b = amps[i1];
        amps[i0] = r * (a + b);
        amps[i1] = r * (a - b);
    });
}

void apply_rx(StateVector& s, int q, double angle) {
    check_qubit(s, q);
    const double c = std::cos(angle);
    const Amplitude mis{0.0, -std::sin(angle)};
    auto amps = s.amplitudes();
    for_each_pair(s.size(), q, [&](std::size_t i0, std::size_t i1) {
        const Amplitude a = amps[i0], b = amps[i1];
        amps[i0] = c * a + mis * b;
        amps[i1] = mis * a + c * b;
    });
}

void apply_rz_half(StateVector& s, int q, double angle) {
    check_qubit(s, q);
    const Amplitude down = std::polar(1.0, -0.5 * angle);
    const Amplitude up = std::conj(down);
    auto amps = s.amplitudes();
    for_each_pair(s.size(), q, [&](std::size_t i0, std::size_t i1) {
        amps[i0] *= down;
        amps[i1] *= up;
    });
}

void apply_zz_phase(StateVector& s, int a, int b, double angle) {
    check_qubit(s, a);
    check_qubit(s, b);
    if (a == b) throw std::invalid_argument("apply_zz_phase: repeated qubit");
    const Amplitude same = std::polar(1.0, -0.5 * angle);
    const Amplitude diff = std::conj(same);
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] *= (((i >> a) ^ (i >> b)) & 1U) ? diff : same;
    }
}

void apply_swap(StateVector& s, int a, int b) {
    check_qubit(s, a);
    check_qubit(s, b);
    if (a == b) throw std::invalid_argument("apply_swap: repeated qubit");
    auto amps = s.amplitudes();
    const std::size_t ma = std::size_t{1} << a, mb = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & ma) && !(i & mb)) std::swap(amps[i], amps[(i ^ ma) | mb]);
    }
}

void apply_gate(StateVector& s, const Gate& g) {
    switch (g.kind) {
        case GateKind::H: apply_h(s, g.qubits[0]); break;
        case GateKind::RX: apply_rx(s, g.qubits[0], g.angle); break;
        case GateKind::ZZPhase: apply_zz_phase(s, g.qubits[0], g.qubits[1], g.angle); break;
        case GateKind::SWAP: apply_swap(s, g.qubits[0], g.qubits[1]); break;
    }
}

StateVector simulate_logical(const LogicalCircuit& c) {
    c.validate();
    StateVector s(c.n_qubits);
    for (const Gate& g : c.gates) apply_gate(s, g);
    return s;
}

NoiseParams NoiseParams::from_coherence_ratio(double t2_over_tg) {
    NoiseParams np;
    np.gate_time = 1.0;
    np.t2 = t2_over_tg;
    np.t1 = 2.0 * t2_over_tg;
    np.validate();
    return np;
}

void NoiseParams::validate() const {
    if (!(t1 > 0.0) || !(t2 > 0.0) || !(gate_time > 0.0)) {
        throw std::invalid_argument("NoiseParams: T1, T2 and gate time must be positive");
    }
    if (std::isfinite(t2) && !(t2 <= 2.0 * t1)) {
        throw std::invalid_argument("NoiseParams: T2 must not exceed 2*T1");
    }
}

bool NoiseParams::is_ideal() const { return std::isinf(t1) && std::isinf(t2); }

double NoiseParams::dephasing_time() const {
    const double rate = (std::isinf(t2) ? 0.0 : 1.0 / t2) - (std::isinf(t1) ? 0.0 : 0.5 / t1);
    return rate > 0.0 ? 1.0 / rate : std::numeric_limits<double>::infinity();
}

bool NoiseOp::apply(StateVector& s, int q) const {
    check_qubit(s, q);
    auto amps = s.amplitudes();
    bool jumped = false;
    if (damping_probability > 0.0) {
        const double excited = s.excited_population(q);
        if (jump_draw < damping_probability * excited) {
            for_each_pair(s.size(), q, [&](std::size_t i0, std::size_t i1) {
                amps[i0] = amps[i1];
                amps[i1] = 0.0;
            });
            jumped = true;
        } else {
            const double keep = std::sqrt(1.0 - damping_probability);
            for_each_pair(s.size(), q, [&](std::size_t, std::size_t i1) { amps[i1] *= keep; });
        }
        s.normalize();
    }
    if (dephasing_angle != 0.0) apply_rz_half(s, q, dephasing_angle);
    return jumped;
}

NoiseOp sample_noise_op(const NoiseParams& np, double dt, Rng& rng) {
    if (!(dt > 0.0)) throw std::invalid_argument("sample_noise_op: dt must be positive");
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    NoiseOp op;
    op.damping_probability = std::isinf(np.t1) ? 0.0 : -std::expm1(-dt / np.t1);
    op.jump_draw = uniform(rng);
    const double tphi = np.dephasing_time();
    const double sigma = std::isinf(tphi) ? 0.0 : std::sqrt(2.0 * dt / tphi);
    op.dephasing_angle = sigma * normal(rng);
    return op;
}

StateVector simulate_schedule(const Schedule& s, const LogicalCircuit& c, const NoiseParams* noise,
                              Rng* rng) {
    if (noise != nullptr && rng == nullptr) throw std::invalid_argument("simulate_schedule: noise requires an rng");
    const int n = c.n_qubits;
    const int prep = preparation_size(c);
    const int count = static_cast<int>(c.gates.size()) - prep;
    const int m = s.num_sites();

    StateVector state = prep > 0 ? StateVector::plus(n) : StateVector(n);
    std::vector<int> slot_at = s.placement;  // site -> register qubit
    std::vector<int> content(n);             // register qubit -> logical data it holds
    std::iota(content.begin(), content.end(), 0);
    for (int v : slot_at) {
        if (v != kUnusedSite && (v < 0 || v >= n)) throw std::invalid_argument("simulate_schedule: bad placement");
    }

    for (const auto& cycle : s.cycles) {
        for (const auto& op : cycle) {
            for (int site : op.sites) {
                if (site < 0 || site >= m) throw std::invalid_argument("simulate_schedule: site out of range");
            }
            if (op.id > 0) {
                if (op.id > count) throw std::invalid_argument("simulate_schedule: unknown gate id");
                Gate g = c.gates[prep + op.id - 1];
                if (static_cast<int>(op.sites.size()) != g.arity()) {
                    throw std::invalid_argument("simulate_schedule: gate arity mismatch");
                }
                for (int k = 0; k < g.arity(); ++k) {
                    g.qubits[k] = slot_at[op.sites[k]];
                    if (g.qubits[k] == kUnusedSite) {
                        throw std::invalid_argument("simulate_schedule: gate on unoccupied site");
                    }
                }
                apply_gate(state, g);
            } else {
                if (op.sites.size() != 2) throw std::invalid_argument("simulate_schedule: malformed SWAP");
                const int a = op.sites[0], b = op.sites[1];
                if (slot_at[a] != kUnusedSite && slot_at[b] != kUnusedSite) {
                    apply_swap(state, slot_at[a], slot_at[b]);
                    std::swap(content[slot_at[a]], content[slot_at[b]]);
                } else {
                    std::swap(slot_at[a], slot_at[b]);
                }
            }
        }
        if (noise != nullptr) {
            for (int q = 0; q < n; ++q) sample_noise_op(*noise, noise->gate_time, *rng).apply(state, q);
        }
    }
    return state.permuted(content);
}

TrajectoryEnsemble run_noisy_ensemble(const Schedule& s, const LogicalCircuit& c, const NoiseParams& np,
                                      const EnsembleOptions& opts) {
    if (opts.realizations < 1) throw std::invalid_argument("run_noisy_ensemble: need at least one realization");
    np.validate();
    c.validate();
    const std::size_t dim = std::size_t{1} << c.n_qubits;
    if (opts.diagonal_observable != nullptr && opts.diagonal_observable->size() != dim) {
        throw std::invalid_argument("run_noisy_ensemble: observable size mismatch");
    }
    constexpr int kBlock = 8;
    const int R = opts.realizations;
    const int n_blocks = (R + kBlock - 1) / kBlock;
    const NoiseParams* noise = np.is_ideal() ? nullptr : &np;

    TrajectoryEnsemble out;
    out.realizations = R;
    out.master_seed = opts.master_seed;
    out.observable_values.assign(opts.diagonal_observable ? R : 0, 0.0);
    if (opts.keep_states) out.states.resize(R);
    std::vector<std::vector<double>> partial(n_blocks);

    auto run_block = [&](int b) {
        std::vector<double> acc(dim, 0.0);
        for (int r = b * kBlock; r < std::min(R, (b + 1) * kBlock); ++r) {
            Rng rng = make_rng(opts.master_seed, {static_cast<std::uint64_t>(r)});
            StateVector st = simulate_schedule(s, c, noise, &rng);
            double obs = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                const double p = std::norm(st[i]);
                acc[i] += p;
                if (opts.diagonal_observable) obs += p * (*opts.diagonal_observable)[i];
            }
            if (opts.diagonal_observable) out.observable_values[r] = obs;
            if (opts.keep_states) out.states[r] = std::move(st);
        }
        partial[b] = std::move(acc);
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(n_blocks)));
    if (threads == 1) {
        for (int b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::atomic<int> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (int b = next++; b < n_blocks; b = next++) run_block(b);
            });
        }
    }

    out.probabilities.assign(dim, 0.0);
    for (const auto& acc : partial) {
        for (std::size_t i = 0; i < dim; ++i) out.probabilities[i] += acc[i];
    }
    for (auto& p : out.probabilities) p /= R;
    double sum = 0.0;
    for (double v : out.observable_values) sum += v;
    out.observable_mean = out.observable_values.empty() ? 0.0 : sum / R;
    return out;
}

std::vector<Bitstring> measure_samples(std::span<const double> probabilities, int n_samples, Rng& rng) {
    if (n_samples < 0) throw std::invalid_argument("measure_samples: negative sample count");
    std::vector<double> cumulative(probabilities.size());
    std::partial_sum(probabilities.begin(), probabilities.end(), cumulative.begin());
    const double total = cumulative.empty() ? 0.0 : cumulative.back();
    if (!(total > 0.0)) throw std::invalid_argument("measure_samples: empty distribution");
    std::uniform_real_distribution<double> uniform(0.0, total);
    std::vector<Bitstring> out;
    out.reserve(n_samples);
    for (int k = 0; k < n_samples; ++k) {
        const double u = uniform(rng);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        // Skip zero-probability tail entries that share the final cumulative value.
        if (it == cumulative.end()) it = std::lower_bound(cumulative.begin(), cumulative.end(), total);
        out.push_back(static_cast<Bitstring>(it - cumulative.begin()));
    }
    return out;
}

std::vector<Bitstring> measure_samples(const StateVector& s, int n_samples, Rng& rng) {
    const auto p = s.probabilities();
    return measure_samples(p, n_samples, rng);
}

double overlap_with_optima(std::span<const double> probabilities, std::span<const Bitstring> optima) {
    double acc = 0.0;
    for (Bitstring b : optima) {
        if (b >= probabilities.size()) throw std::out_of_range("overlap_with_optima: assignment outside register");
        acc += probabilities[b];
    }
    return std::clamp(acc, 0.0, 1.0);
}

double overlap_with_optima(const StateVector& s, std::span<const Bitstring> optima) {
    const auto p = s.probabilities();
    return overlap_with_optima(p, optima);
}

}  // namespace qaoacost
