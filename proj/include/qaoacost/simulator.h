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

#ifndef QAOACOST_SIMULATOR_H
#define QAOACOST_SIMULATOR_H

#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "qaoacost/circuit.h"
#include "qaoacost/graphs.h"
#include "qaoacost/rng.h"
#include "qaoacost/scheduler.h"

namespace qaoacost {

using Amplitude = std::complex<double>;

// Pure state of n qubits. Qubit k is bit k of the basis index.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(int n);  // |0...0>

    static StateVector plus(int n);
    static StateVector basis(int n, Bitstring b);

    int num_qubits() const { return n_; }
    std::size_t size() const { return amps_.size(); }
    std::span<Amplitude> amplitudes() { return amps_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude& operator[](std::size_t i) { return amps_[i]; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;
    void normalize();
    std::vector<double> probabilities() const;
    // Probability that qubit q reads 1.
    double excited_population(int q) const;

    // Relabels qubits: qubit k of *this becomes qubit perm[k] of the result.
    StateVector permuted(std::span<const int> perm) const;

private:
    int n_ = 0;
    std::vector<Amplitude> amps_;
};

inline constexpr int kMaxSimulatedQubits = 30;

StateVector init_plus_state(int n);

void apply_h(StateVector& s, int q);
void apply_rx(StateVector& s, int q, double angle);       // exp(-i angle X)
void apply_rz_half(StateVector& s, int q, double angle);  // exp(-i angle Z / 2)
void apply_zz_phase(StateVector& s, int a, int b, double angle);
void apply_swap(StateVector& s, int a, int b);
// Gate targets are state-qubit indices.
void apply_gate(StateVector& s, const Gate& g);

// Noiseless, from |0...0>, every gate in order.
StateVector simulate_logical(const LogicalCircuit& c);

// Durations share one unit. A value of +infinity disables that process.
struct NoiseParams {
    double t1 = std::numeric_limits<double>::infinity();
    double t2 = std::numeric_limits<double>::infinity();
    double gate_time = 1.0;

    static NoiseParams ideal() { return {}; }
    // T1 = 2 T2, gate time 1.
    static NoiseParams from_coherence_ratio(double t2_over_tg);

    void validate() const;
    bool is_ideal() const;
    // Pure-dephasing time: 1/Tphi = 1/T2 - 1/(2 T1).
    double dephasing_time() const;
};

// One stochastic single-qubit noise event for one qubit-cycle. Its ensemble
// average is amplitude damping (p = 1 - exp(-dt/T1)) composed with pure
// dephasing at rate 1/Tphi.
struct NoiseOp {
    double damping_probability = 0.0;
    double jump_draw = 1.0;       // uniform in [0,1); jump iff draw < p * P(1)
    double dephasing_angle = 0.0; // Z rotation, ~ Normal(0, 2 dt / Tphi)

    // Returns true if a relaxation jump occurred.
    bool apply(StateVector& s, int q) const;
};

NoiseOp sample_noise_op(const NoiseParams& np, double dt, Rng& rng);

// Replays a schedule on a register of c.n_qubits qubits. SWAPs between two
// occupied sites act on the state; SWAPs into unoccupied sites only relabel.
// When `noise` is non-null every register qubit receives one noise op after
// each cycle. The result is in logical qubit order.
StateVector simulate_schedule(const Schedule& s, const LogicalCircuit& c,
                              const NoiseParams* noise = nullptr, Rng* rng = nullptr);

struct EnsembleOptions {
    int realizations = 384;
    std::uint64_t master_seed = 0;
    unsigned threads = 1;
    bool keep_states = false;
    // Optional diagonal observable (one value per basis index), evaluated per realization.
    const std::vector<double>* diagonal_observable = nullptr;
};

struct TrajectoryEnsemble {
    int realizations = 0;
    std::uint64_t master_seed = 0;
    // Ensemble-averaged computational-basis distribution, logical order.
    std::vector<double> probabilities;
    std::vector<double> observable_values;
    double observable_mean = 0.0;
    std::vector<StateVector> states;
};

// Realization r draws from the stream derived from (master_seed, r) only.
// Averages are reduced in a fixed order, independent of thread count.
TrajectoryEnsemble run_noisy_ensemble(const Schedule& s, const LogicalCircuit& c,
                                      const NoiseParams& np, const EnsembleOptions& opts);

// i.i.d. computational-basis samples.
std::vector<Bitstring> measure_samples(std::span<const double> probabilities, int n_samples, Rng& rng);
std::vector<Bitstring> measure_samples(const StateVector& s, int n_samples, Rng& rng);

double overlap_with_optima(std::span<const double> probabilities, std::span<const Bitstring> optima);
double overlap_with_optima(const StateVector& s, std::span<const Bitstring> optima);

}  // namespace qaoacost

#endif  // QAOACOST_SIMULATOR_H
