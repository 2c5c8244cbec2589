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

// Independent reference implementations used by the tests. None of these call
// into the library code they check.

#ifndef CANORD_TESTS_ORACLES_H
#define CANORD_TESTS_ORACLES_H

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "canord/circuit.h"
#include "canord/rng.h"

namespace canord::oracle {

/// Runs an X/CX/CCX/SWAP circuit on classical bits. `input` has one entry per
/// qubit. Returns the clbit values as a string, highest clbit first.
std::string reversible_eval(const Circuit &circuit, std::vector<bool> input);

/// O(n^2) average-rank Pearson correlation; 0 for a constant input.
double spearman_bruteforce(const std::vector<double> &x, const std::vector<double> &y);

/// Sum of min(a, b) over the union of supports, keyed by plain strings.
double overlap_bruteforce(const std::map<std::string, double> &a, const std::map<std::string, double> &b);

using Mat2 = std::array<std::complex<double>, 4>;
using Mat4 = std::array<std::complex<double>, 16>;

/// Dense 2-qubit evolution of |00> by a gate list (matrix products with
/// kron), independent of the statevector code. Only X, SX, RZ, H, CX gates.
std::array<std::complex<double>, 4> dense_two_qubit(const Circuit &circuit);

/// max_k |a_k - e^{i phi} b_k| minimized over the global phase phi, with phi
/// taken from the largest entry of b.
double phase_insensitive_distance(const std::vector<std::complex<double>> &a,
                                  const std::vector<std::complex<double>> &b);

/// Exact output distribution of a basis circuit under the trajectory noise
/// model with uniform rates, by density-matrix evolution (at most 5 qubits, all
/// of them touched by the circuit). Keys are clbit strings, highest first.
std::map<std::string, double> noisy_distribution_exact(const Circuit &circuit, double p1, double p2, double idle_z,
                                                       double ro01, double ro10);

/// Random circuit over X, SX, RZ(k pi/2), CX with every qubit measured at the end.
Circuit random_clifford(uint32_t num_qubits, size_t num_gates, Rng &rng);

/// Random basis circuit (arbitrary RZ angles), every qubit measured at the end.
Circuit random_basis(uint32_t num_qubits, size_t num_gates, Rng &rng);

/// Random circuit over every supported gate kind, measured at the end.
Circuit random_source(uint32_t num_qubits, size_t num_gates, Rng &rng);

/// Pearson chi-square statistic of observed counts against expected
/// probabilities, pooling bins with expected count < 5. Returns the
/// statistic and the degrees of freedom.
std::pair<double, size_t> chi_square(const std::map<std::string, uint64_t> &observed,
                                     const std::map<std::string, double> &expected, uint64_t shots);

/// Upper tail of the chi-square distribution (Wilson-Hilferty approximation).
double chi_square_p_value(double statistic, size_t dof);

}  // namespace canord::oracle

#endif
