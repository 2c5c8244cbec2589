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

#ifndef CANORD_BENCH_H
#define CANORD_BENCH_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "canord/circuit.h"
#include "canord/counts.h"

namespace canord {

/// A generated circuit with its noiseless output distribution.
struct Benchmark {
    Circuit circuit;
    Distribution ideal;
};

/// Cuccaro ripple-carry adder computing a + b in place.
///
/// Register (2n+2 qubits): q0 = carry-in, b_i = q(2i+1), a_i = q(2i+2),
/// q(2n+1) = carry-out. Every qubit is measured into the clbit of the same
/// index, so the output holds a, the sum bits in the b slots, and the high
/// bit of a+b in the top clbit. Uses X, CX and CCX only.
std::pair<Circuit, BitString> adder(uint32_t bits, uint64_t a, uint64_t b);

/// Textbook QFT on n qubits (H, CP, final SWAPs), all qubits measured.
/// On |0...0> the output is uniform.
Benchmark qft(uint32_t n);

/// Depth-1 QAOA ansatz for MaxCut on (num_nodes, edges): H layer, CX RZ(2g) CX
/// per edge, then H RZ(2b) H on every qubit. The ideal distribution comes from
/// the statevector simulator, so num_nodes <= 12.
Benchmark qaoa(uint32_t num_nodes, const std::vector<std::pair<uint32_t, uint32_t>> &edges, double gamma,
               double beta);

/// Two-qubit phase-kickback circuit whose only output is "11".
Benchmark kickback();

struct NamedBenchmark {
    std::string name;
    Benchmark bench;
};

/// Adder fixtures ADD6_1 ... ADD14_1.
std::vector<NamedBenchmark> adder_fixtures();
/// QAOA fixtures QAOA6_1 ... QAOA6_4.
std::vector<NamedBenchmark> qaoa_fixtures();
/// Fixture by name (any of the above, or "KICKBACK").
Benchmark fixture(std::string_view name);

/// Generator dispatch for configs and the CLI:
///   adder BITS A B | qft N | qaoa GRAPH GAMMA BETA | kickback | fixture NAME
/// where GRAPH is a coupling-graph preset such as "ring:6".
Benchmark make_benchmark(std::string_view family, const std::vector<std::string> &args);

}  // namespace canord

#endif
