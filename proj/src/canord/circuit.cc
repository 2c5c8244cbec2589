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

#include "canord/circuit.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace canord {

Angle::Angle(double radians) {
    if (!std::isfinite(radians)) {
        throw CircuitError("angle must be finite");
    }
    double r = std::fmod(radians, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0;
    }
    // Normalize -0.0 so structural comparisons and printing agree.
    radians_ = r == 0 ? 0.0 : r;
}

Angle Angle::quarter_turns(int64_t k) {
    int64_t m = ((k % 4) + 4) % 4;
    return Angle(static_cast<double>(m) * kHalfPi);
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "x";
        case GateKind::SX:
            return "sx";
        case GateKind::RZ:
            return "rz";
        case GateKind::CX:
            return "cx";
        case GateKind::MEASURE:
            return "measure";
        case GateKind::BARRIER:
            return "barrier";
        case GateKind::H:
            return "h";
        case GateKind::S:
            return "s";
        case GateKind::SDG:
            return "sdg";
        case GateKind::T:
            return "t";
        case GateKind::TDG:
            return "tdg";
        case GateKind::CCX:
            return "ccx";
        case GateKind::CP:
            return "cp";
        case GateKind::SWAP:
            return "swap";
    }
    return "?";
}

bool is_basis_kind(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::SX:
        case GateKind::RZ:
        case GateKind::CX:
        case GateKind::MEASURE:
        case GateKind::BARRIER:
            return true;
        default:
            return false;
    }
}

size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::BARRIER:
            return 0;
        case GateKind::CX:
        case GateKind::CP:
        case GateKind::SWAP:
            return 2;
        case GateKind::CCX:
            return 3;
        default:
            return 1;
    }
}

bool has_angle(GateKind kind) {
    return kind == GateKind::RZ || kind == GateKind::CP;
}

Gate Gate::x(uint32_t q) {
    return single(GateKind::X, q);
}
Gate Gate::sx(uint32_t q) {
    return single(GateKind::SX, q);
}
Gate Gate::rz(uint32_t q, Angle theta) {
    Gate g = single(GateKind::RZ, q);
    g.angle = theta;
    return g;
}
Gate Gate::cx(uint32_t control, uint32_t target) {
    return Gate{GateKind::CX, {control, target}};
}
Gate Gate::measure(uint32_t q, uint32_t clbit) {
    Gate g = single(GateKind::MEASURE, q);
    g.clbit = clbit;
    return g;
}
Gate Gate::barrier(std::vector<uint32_t> qubits) {
    return Gate{GateKind::BARRIER, std::move(qubits)};
}
Gate Gate::single(GateKind kind, uint32_t q) {
    return Gate{kind, {q}};
}
Gate Gate::ccx(uint32_t c1, uint32_t c2, uint32_t target) {
    return Gate{GateKind::CCX, {c1, c2, target}};
}
Gate Gate::cp(uint32_t a, uint32_t b, Angle theta) {
    return Gate{GateKind::CP, {a, b}, theta};
}
Gate Gate::swap(uint32_t a, uint32_t b) {
    return Gate{GateKind::SWAP, {a, b}};
}

std::string Gate::str() const {
    std::stringstream ss;
    ss << gate_name(kind);
    if (has_angle(kind)) {
        ss << "(" << angle.radians() << ")";
    }
    for (size_t k = 0; k < qubits.size(); k++) {
        ss << (k ? "," : " ") << qubits[k];
    }
    if (kind == GateKind::MEASURE) {
        ss << "->" << clbit;
    }
    return ss.str();
}

Circuit::Circuit(uint32_t num_qubits, uint32_t num_clbits, std::string name)
    : num_qubits(num_qubits), num_clbits(num_clbits), name(std::move(name)) {
}

Circuit &Circuit::append(Gate gate) {
    gates.push_back(std::move(gate));
    return *this;
}

void Circuit::validate(bool require_basis) const {
    std::vector<bool> measured(num_qubits, false);
    std::vector<bool> written(num_clbits, false);
    for (size_t k = 0; k < gates.size(); k++) {
        const Gate &g = gates[k];
        auto fail = [&](const std::string &why) {
            throw CircuitError("gate #" + std::to_string(k) + " (" + g.str() + "): " + why);
        };
        if (require_basis && !is_basis_kind(g.kind)) {
            fail("not a basis gate");
        }
        size_t arity = gate_arity(g.kind);
        if (arity != 0 && g.qubits.size() != arity) {
            fail("expected " + std::to_string(arity) + " qubit operand(s)");
        }
        for (uint32_t q : g.qubits) {
            if (q >= num_qubits) {
                fail("qubit index out of range");
            }
        }
        for (size_t a = 0; a < g.qubits.size(); a++) {
            for (size_t b = a + 1; b < g.qubits.size(); b++) {
                if (g.qubits[a] == g.qubits[b]) {
                    fail("repeated qubit operand");
                }
            }
        }
        if (g.kind == GateKind::BARRIER) {
            continue;
        }
        for (uint32_t q : g.qubits) {
            if (measured[q]) {
                fail("operation on qubit " + std::to_string(q) + " after its measurement");
            }
        }
        if (g.kind == GateKind::MEASURE) {
            if (g.clbit >= num_clbits) {
                fail("clbit index out of range");
            }
            if (written[g.clbit]) {
                fail("clbit " + std::to_string(g.clbit) + " written twice");
            }
            written[g.clbit] = true;
            measured[g.qubits[0]] = true;
        }
    }
}

bool Circuit::is_basis_only() const {
    return std::all_of(gates.begin(), gates.end(), [](const Gate &g) {
        return is_basis_kind(g.kind);
    });
}

std::vector<std::pair<uint32_t, uint32_t>> Circuit::measure_map() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (const Gate &g : gates) {
        if (g.kind == GateKind::MEASURE) {
            out.emplace_back(g.qubits[0], g.clbit);
        }
    }
    return out;
}

std::map<GateKind, size_t> Circuit::gate_counts() const {
    std::map<GateKind, size_t> out;
    for (const Gate &g : gates) {
        out[g.kind]++;
    }
    return out;
}

size_t Circuit::count(GateKind kind) const {
    return std::count_if(gates.begin(), gates.end(), [&](const Gate &g) {
        return g.kind == kind;
    });
}

size_t cx_depth(const Circuit &circuit) {
    std::vector<size_t> depth(circuit.num_qubits, 0);
    size_t best = 0;
    for (const Gate &g : circuit.gates) {
        if (g.kind == GateKind::BARRIER || g.qubits.size() < 2) {
            continue;
        }
        size_t d = 0;
        for (uint32_t q : g.qubits) {
            d = std::max(d, depth[q]);
        }
        if (g.kind == GateKind::CX) {
            d++;
        }
        for (uint32_t q : g.qubits) {
            depth[q] = d;
        }
        best = std::max(best, d);
    }
    return best;
}

BitString::BitString(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain '0' and '1': '" + bits_ + "'");
        }
    }
}

BitString BitString::from_uint(uint64_t value, size_t width) {
    std::string s(width, '0');
    for (size_t k = 0; k < width && k < 64; k++) {
        if ((value >> k) & 1) {
            s[width - 1 - k] = '1';
        }
    }
    BitString out;
    out.bits_ = std::move(s);
    return out;
}

BitString BitString::zeros(size_t width) {
    return from_uint(0, width);
}

uint64_t BitString::to_uint() const {
    if (bits_.size() > 64) {
        throw std::out_of_range("bitstring wider than 64 bits");
    }
    uint64_t v = 0;
    for (char c : bits_) {
        v = (v << 1) | static_cast<uint64_t>(c == '1');
    }
    return v;
}

}  // namespace canord
