// Copyright 2026 The canord Authors
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

#ifndef CANORD_NOISYSIM_H
#define CANORD_NOISYSIM_H

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "canord/circuit.h"
#include "canord/counts.h"
#include "canord/transpile.h"

namespace canord {

/// Scalar noise rates used to populate a NoiseModel.
struct NoiseParams {
    double p1 = 3e-4;
    double p2 = 8e-3;
    double idle_z = 1e-3;
    double ro01 = 1.5e-2;
    double ro10 = 1.5e-2;

    NoiseParams scaled(double factor) const;
    bool operator==(const NoiseParams &other) const = default;
};

/// Error rates of one simulated machine, indexed by physical qubit.
struct NoiseModel {
    uint32_t num_qubits = 0;
    std::vector<double> p1;      // 1q depolarizing probability per gate
    std::map<std::pair<uint32_t, uint32_t>, double> p2;  // keyed (min, max)
    std::vector<double> idle_z;  // Z probability per idle CX layer
    std::vector<double> ro01;    // P(read 1 | true 0)
    std::vector<double> ro10;    // P(read 0 | true 1)

    /// Same rates on every qubit and on every listed edge.
    static NoiseModel uniform(uint32_t num_qubits, const std::vector<std::pair<uint32_t, uint32_t>> &edges,
                              const NoiseParams &params);
    static NoiseModel for_graph(const CouplingGraph &graph, const NoiseParams &params);
    /// Edges for every pair of qubits; handy for unrouted circuits.
    static NoiseModel all_to_all(uint32_t num_qubits, const NoiseParams &params);
    static NoiseModel noiseless(uint32_t num_qubits);

    /// Every rate multiplied by `factor` and clipped to [0, 0.5].
    NoiseModel scaled(double factor) const;
    double edge_error(uint32_t a, uint32_t b) const;
    double mean_p2() const;
    /// Gate rates must lie in [0, 0.5]; readout rates in [0, 1].
    void validate() const;

    bool operator==(const NoiseModel &other) const = default;
};

/// `count` models derived from `base`: every rate of every member is the base
/// rate times an independent u ~ U[1/jitter, jitter], clipped to [0, 0.5].
std::vector<NoiseModel> make_diverse_ensemble(const NoiseModel &base, size_t count, double jitter, uint64_t seed);

/// One jittered copy of `base` (what make_diverse_ensemble does per member).
NoiseModel jitter_model(const NoiseModel &base, double jitter, uint64_t seed);

struct RunOptions {
    size_t threads = 1;
    /// Upper bound on qubits the circuit actually touches.
    uint32_t max_qubits = 16;
};

/// Monte-Carlo noisy execution with statevector trajectories.
///
/// After every 1q gate a uniformly random Pauli hits the qubit with
/// probability p1[q]; after every CX a uniformly random non-identity 2q Pauli
/// hits the pair with probability p2[edge]; after each CX layer every active
/// qubit outside that layer gets Z with probability idle_z[q]. Measurements are
/// sampled at the end of the circuit (equivalent, since measured qubits are
/// never touched again) and each bit is then flipped per ro01/ro10.
///
/// Shot i uses its own generator stream derived from (seed, i), so Counts are
/// identical for any thread count.
Counts run_shots(const Circuit &circuit, const NoiseModel &model, uint64_t shots, uint64_t seed,
                 const RunOptions &options = {});

}  // namespace canord

#endif
