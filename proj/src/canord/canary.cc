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

#include "canord/canary.h"

#include <cmath>

#include "canord/rng.h"

namespace canord {

namespace {

constexpr double kTieTolerance = 1e-9;

void require_basis(const Circuit &circuit, const char *op) {
    for (const Gate &g : circuit.gates) {
        if (!is_basis_kind(g.kind)) {
            throw CircuitError(std::string(op) + ": non-basis gate " + g.str());
        }
    }
}

}  // namespace

int nearest_quarter_turn(Angle theta) {
    double turns = theta.radians() / kHalfPi;
    double lower = std::floor(turns);
    double frac = turns - lower;
    int k = static_cast<int>(lower);
    if (frac >= 0.5 - kTieTolerance) {
        k++;
    }
    return k % 4;
}

int clifford_quarter_turns(Angle theta) {
    double turns = theta.radians() / kHalfPi;
    double k = std::round(turns);
    if (std::abs(theta.radians() - k * kHalfPi) > kCliffordAngleTolerance) {
        throw CircuitError("rz(" + std::to_string(theta.radians()) + ") is not a Clifford rotation");
    }
    return static_cast<int>(k) % 4;
}

Circuit make_canary(const Circuit &circuit) {
    require_basis(circuit, "make_canary");
    Circuit out = circuit;
    for (Gate &g : out.gates) {
        if (g.kind == GateKind::RZ) {
            g.angle = Angle::quarter_turns(nearest_quarter_turn(g.angle));
        }
    }
    return out;
}

Circuit make_random_canary(const Circuit &circuit, uint64_t seed) {
    require_basis(circuit, "make_random_canary");
    Rng rng(derive_seed(seed, 0x43414E41ULL));
    Circuit out = circuit;
    for (Gate &g : out.gates) {
        if (g.kind == GateKind::RZ) {
            g.angle = Angle::quarter_turns(static_cast<int64_t>(uniform_below(rng, 4)));
        }
    }
    return out;
}

bool is_clifford(const Circuit &circuit) {
    require_basis(circuit, "is_clifford");
    for (const Gate &g : circuit.gates) {
        if (g.kind != GateKind::RZ) {
            continue;
        }
        double turns = g.angle.radians() / kHalfPi;
        if (std::abs(g.angle.radians() - std::round(turns) * kHalfPi) > kCliffordAngleTolerance) {
            return false;
        }
    }
    return true;
}

}  // namespace canord
