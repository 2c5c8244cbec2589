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

#ifndef CANORD_CANARY_H
#define CANORD_CANARY_H

#include <cstdint>

#include "canord/circuit.h"

namespace canord {

/// Angles within this distance of a multiple of pi/2 count as Clifford.
inline constexpr double kCliffordAngleTolerance = 1e-12;

/// Nearest multiple of pi/2, as a quarter-turn count in [0, 4). Exact
/// midpoints (within 1e-9 rad) round up.
int nearest_quarter_turn(Angle theta);

/// Clifford copy of a basis-only circuit: every RZ angle is rounded to the
/// nearest multiple of pi/2; every other gate, and the gate order, is kept.
Circuit make_canary(const Circuit &circuit);

/// Same structure as make_canary but each RZ gets a uniformly random multiple
/// of pi/2. Baseline for canary-quality comparisons.
Circuit make_random_canary(const Circuit &circuit, uint64_t seed);

/// True iff every RZ angle is a multiple of pi/2 (within
/// kCliffordAngleTolerance). Throws on non-basis gates.
bool is_clifford(const Circuit &circuit);

/// Quarter-turn count of a Clifford RZ angle; throws CircuitError otherwise.
int clifford_quarter_turns(Angle theta);

}  // namespace canord

#endif
