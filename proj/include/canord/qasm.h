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

#ifndef CANORD_QASM_H
#define CANORD_QASM_H

#include <string>
#include <string_view>

#include "canord/circuit.h"

namespace canord {

/// Parse failure with a 1-based source position.
struct QasmParseError : std::invalid_argument {
    QasmParseError(size_t line, size_t column, const std::string &message);
    size_t line;
    size_t column;
};

/// Parses the OpenQASM 2 subset used by this project: a single qreg, at most
/// one creg, the gates x sx rz h s sdg t tdg cx ccx cp swap, measure and
/// barrier. Angles accept decimals and expressions of the form [-][k*]pi[/d].
Circuit parse_qasm(std::string_view text);

/// Deterministic text form. Angles print as exact multiples of pi when that
/// reparses to the identical double, otherwise with 17 significant digits.
std::string emit_qasm(const Circuit &circuit);

/// Text used for an angle argument by emit_qasm.
std::string format_angle(Angle angle);

}  // namespace canord

#endif
