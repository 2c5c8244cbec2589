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

#ifndef CANORD_STATEVECTOR_H
#define CANORD_STATEVECTOR_H

#include <complex>
#include <cstdint>
#include <vector>

#include "canord/circuit.h"
#include "canord/counts.h"

namespace canord {

using Amplitude = std::complex<double>;

inline constexpr uint32_t kMaxStatevectorQubits = 20;

/// Dense pure state over n qubits; qubit k is bit k of the basis index.
class StateVector {
   public:
    explicit StateVector(uint32_t num_qubits);

    uint32_t num_qubits() const {
        return n_;
    }
    const std::vector<Amplitude> &amplitudes() const {
        return amps_;
    }
    std::vector<Amplitude> &amplitudes() {
        return amps_;
    }

    /// Applies any non-measurement gate exactly (no global phase dropped).
    /// MEASURE and BARRIER are ignored.
    void apply(const Gate &gate);

    void x(uint32_t q);
    void y(uint32_t q);
    void z(uint32_t q);
    void sx(uint32_t q);
    void h(uint32_t q);
    void rz(uint32_t q, double theta);
    /// diag(1, e^{i phi}).
    void phase(uint32_t q, double phi);
    void cx(uint32_t control, uint32_t target);
    void cp(uint32_t a, uint32_t b, double theta);
    void swap(uint32_t a, uint32_t b);
    void ccx(uint32_t c1, uint32_t c2, uint32_t target);

    double norm() const;

   private:
    uint32_t n_;
    std::vector<Amplitude> amps_;
};

/// Noiseless final state of a circuit (MEASURE gates ignored). At most
/// kMaxStatevectorQubits qubits.
std::vector<Amplitude> statevector(const Circuit &circuit);

/// Noiseless distribution over clbits, marginalized through the MEASURE map.
/// Entries below `cutoff` are dropped.
Distribution ideal_distribution(const Circuit &circuit, double cutoff = 1e-15);

}  // namespace canord

#endif
