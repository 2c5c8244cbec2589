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

#ifndef CANORD_CIRCUIT_H
#define CANORD_CIRCUIT_H

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace canord {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2 * kPi;
inline constexpr double kHalfPi = kPi / 2;

/// Rotation angle, canonicalized into [0, 2pi) on construction.
class Angle {
   public:
    Angle() = default;
    explicit Angle(double radians);

    double radians() const {
        return radians_;
    }

    /// Angle k*pi/2 for integer k.
    static Angle quarter_turns(int64_t k);

    bool operator==(const Angle &other) const = default;

   private:
    double radians_ = 0;
};

enum class GateKind : uint8_t {
    // Device basis.
    X,
    SX,
    RZ,
    CX,
    MEASURE,
    BARRIER,
    // Source-only gates, removed by decompose_to_basis.
    H,
    S,
    SDG,
    T,
    TDG,
    CCX,
    CP,
    SWAP,
};

std::string_view gate_name(GateKind kind);
bool is_basis_kind(GateKind kind);
/// Number of qubit operands, or 0 for variadic (BARRIER).
size_t gate_arity(GateKind kind);
bool has_angle(GateKind kind);

struct Gate {
    GateKind kind = GateKind::X;
    std::vector<uint32_t> qubits;
    Angle angle{};       // RZ, CP
    uint32_t clbit = 0;  // MEASURE

    static Gate x(uint32_t q);
    static Gate sx(uint32_t q);
    static Gate rz(uint32_t q, Angle theta);
    static Gate cx(uint32_t control, uint32_t target);
    static Gate measure(uint32_t q, uint32_t clbit);
    static Gate barrier(std::vector<uint32_t> qubits);
    static Gate single(GateKind kind, uint32_t q);
    static Gate ccx(uint32_t c1, uint32_t c2, uint32_t target);
    static Gate cp(uint32_t a, uint32_t b, Angle theta);
    static Gate swap(uint32_t a, uint32_t b);

    bool operator==(const Gate &other) const = default;
    std::string str() const;
};

/// Raised for circuits that violate IR invariants.
struct CircuitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Ordered gate list over a fixed qubit/clbit register pair.
///
/// MEASURE is an ordinary entry of the gate list. A qubit may be measured at
/// most once and may not be operated on afterwards (barriers excepted), so
/// every measurement commutes with all later gates.
struct Circuit {
    uint32_t num_qubits = 0;
    uint32_t num_clbits = 0;
    std::vector<Gate> gates;
    std::string name;

    Circuit() = default;
    Circuit(uint32_t num_qubits, uint32_t num_clbits, std::string name = {});

    Circuit &append(Gate gate);

    /// Throws CircuitError on any invariant violation. With require_basis, only
    /// {X, SX, RZ, CX, MEASURE, BARRIER} are accepted.
    void validate(bool require_basis = false) const;
    bool is_basis_only() const;

    /// Qubit -> clbit pairs of the MEASURE gates, in program order.
    std::vector<std::pair<uint32_t, uint32_t>> measure_map() const;
    std::map<GateKind, size_t> gate_counts() const;
    size_t count(GateKind kind) const;

    /// Structural equality: registers and gate list. The name is metadata.
    bool operator==(const Circuit &other) const {
        return num_qubits == other.num_qubits && num_clbits == other.num_clbits && gates == other.gates;
    }
};

/// Longest chain of CX gates under qubit-dependency ordering.
///
/// Non-CX gates add no depth. Multi-qubit source gates (CCX, CP, SWAP)
/// synchronize their operands; barriers do not.
size_t cx_depth(const Circuit &circuit);

/// Fixed-width classical outcome. Stored most significant clbit first, so the
/// textual form is the conventional bitstring and lexicographic order equals
/// numeric order for equal widths.
class BitString {
   public:
    BitString() = default;
    explicit BitString(std::string bits);
    static BitString from_uint(uint64_t value, size_t width);
    static BitString zeros(size_t width);

    size_t width() const {
        return bits_.size();
    }
    /// Value of clbit i (clbit 0 is the least significant, i.e. rightmost).
    bool bit(size_t clbit) const {
        return bits_[bits_.size() - 1 - clbit] == '1';
    }
    void set_bit(size_t clbit, bool value) {
        bits_[bits_.size() - 1 - clbit] = value ? '1' : '0';
    }
    /// Requires width() <= 64.
    uint64_t to_uint() const;
    const std::string &str() const {
        return bits_;
    }

    auto operator<=>(const BitString &other) const = default;

   private:
    std::string bits_;
};

}  // namespace canord

#endif
