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

#ifndef CANORD_STABSIM_H
#define CANORD_STABSIM_H

#include <cstdint>
#include <optional>

#include "canord/circuit.h"
#include "canord/counts.h"
#include "canord/tableau.h"

namespace canord {

Tableau apply_clifford(Tableau tableau, const Gate &gate);

/// Exact outcome statistics of a Clifford circuit.
///
/// Measurements commute with every later gate (validated circuits never touch
/// a measured qubit again), so the unitary part is evolved once and each query
/// replays only the MEASURE sequence on a copy of that tableau.
class CliffordOutcomes {
   public:
    /// Throws CircuitError unless the circuit is valid, basis-only and Clifford.
    explicit CliffordOutcomes(const Circuit &circuit);

    /// Exact P(s), always 0 or 2^-k. At each MEASURE the outcome is forced to
    /// the matching bit of s: a disagreeing deterministic result gives 0, a
    /// random one halves the probability.
    double probability(const BitString &s) const;
    BitString sample(Rng &rng) const;
    /// Number of random measurements k; every supported string has P = 2^-k.
    size_t num_random_measurements() const {
        return random_measurements_;
    }
    /// Whole support, or nullopt when k exceeds max_random_bits.
    std::optional<Distribution> enumerate(size_t max_random_bits = 16) const;

    size_t num_clbits() const {
        return num_clbits_;
    }

   private:
    Tableau state_;
    std::vector<std::pair<uint32_t, uint32_t>> measures_;
    size_t num_clbits_;
    size_t random_measurements_;
};

/// Exact P(s) for a Clifford circuit.
double ideal_probability(const Circuit &circuit, const BitString &s);

/// Seeded exact sampling of a Clifford circuit. Shot i draws from its own
/// generator stream, so results do not depend on `threads`.
Counts sample(const Circuit &circuit, uint64_t shots, uint64_t seed, size_t threads = 1);

}  // namespace canord

#endif
