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

#ifndef CANORD_TABLEAU_H
#define CANORD_TABLEAU_H

#include <cstdint>
#include <string>
#include <vector>

#include "canord/circuit.h"
#include "canord/rng.h"

namespace canord {

struct MeasureResult {
    bool bit;
    bool was_random;
};

/// Stabilizer state in the destabilizer/stabilizer tableau form.
///
/// Rows [0, n) are destabilizers, rows [n, 2n) stabilizers and row 2n is
/// scratch space for deterministic measurements. Each row stores its X and Z
/// parts bit-packed in 64-bit words plus one sign bit, so row products run
/// word-parallel.
class Tableau {
   public:
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }

    void x(size_t q);
    void y(size_t q);
    void z(size_t q);
    void h(size_t q);
    void s(size_t q);
    void sdg(size_t q);
    void sx(size_t q);
    void cx(size_t control, size_t target);
    /// S^k, i.e. rz(k*pi/2) up to global phase.
    void rz_quarter_turns(size_t q, int k);

    /// Applies a Clifford gate. Accepts X, SX, RZ(k*pi/2), CX plus the Clifford
    /// source gates H, S, SDG and SWAP. BARRIER is a no-op. Throws CircuitError
    /// for MEASURE and non-Clifford gates.
    void apply(const Gate &gate);

    bool is_deterministic(size_t q) const;
    /// Z-basis measurement with a fair coin for random outcomes.
    MeasureResult measure(size_t q, Rng &rng);
    /// Z-basis measurement that, when the outcome is random, collapses onto
    /// `outcome`. Deterministic outcomes are returned unchanged.
    MeasureResult measure_forced(size_t q, bool outcome);

    /// Sign and Pauli letters of a row, e.g. "-XZI" (qubit 0 first).
    std::string row_str(size_t row) const;
    /// Checks commutation relations and symplectic rank.
    bool check_invariants() const;

    bool operator==(const Tableau &other) const = default;

   private:
    bool xb(size_t row, size_t q) const {
        return (xs_[row * words_ + (q >> 6)] >> (q & 63)) & 1;
    }
    bool zb(size_t row, size_t q) const {
        return (zs_[row * words_ + (q >> 6)] >> (q & 63)) & 1;
    }
    void rowsum(size_t h, size_t i);
    void set_row_zero(size_t row);
    void copy_row(size_t dst, size_t src);
    bool rows_commute(size_t a, size_t b) const;
    template <typename F>
    MeasureResult measure_impl(size_t q, F &&choose);

    size_t n_;
    size_t words_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> signs_;
};

}  // namespace canord

#endif
