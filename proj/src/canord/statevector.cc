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

#include "canord/statevector.h"

#include <cmath>

namespace canord {

StateVector::StateVector(uint32_t num_qubits) : n_(num_qubits) {
    if (num_qubits > kMaxStatevectorQubits) {
        throw CircuitError("statevector limited to " + std::to_string(kMaxStatevectorQubits) + " qubits, got " +
                           std::to_string(num_qubits));
    }
    amps_.assign(size_t{1} << num_qubits, 0.0);
    amps_[0] = 1.0;
}

namespace {

template <typename F>
void for_pairs(std::vector<Amplitude> &a, uint32_t q, F &&f) {
    const size_t stride = size_t{1} << q;
    for (size_t base = 0; base < a.size(); base += 2 * stride) {
        for (size_t j = base; j < base + stride; j++) {
            f(a[j], a[j + stride]);
        }
    }
}

}  // namespace

void StateVector::x(uint32_t q) {
    for_pairs(amps_, q, [](Amplitude &a0, Amplitude &a1) {
        std::swap(a0, a1);
    });
}

void StateVector::y(uint32_t q) {
    const Amplitude i(0, 1);
    for_pairs(amps_, q, [&](Amplitude &a0, Amplitude &a1) {
        Amplitude t0 = a0;
        a0 = -i * a1;
        a1 = i * t0;
    });
}

void StateVector::z(uint32_t q) {
    for_pairs(amps_, q, [](Amplitude &, Amplitude &a1) {
        a1 = -a1;
    });
}

void StateVector::sx(uint32_t q) {
    const Amplitude p(0.5, 0.5);
    const Amplitude m(0.5, -0.5);
    for_pairs(amps_, q, [&](Amplitude &a0, Amplitude &a1) {
        Amplitude t0 = a0;
        a0 = p * t0 + m * a1;
        a1 = m * t0 + p * a1;
    });
}

void StateVector::h(uint32_t q) {
    const double r = 1 / std::sqrt(2.0);
    for_pairs(amps_, q, [&](Amplitude &a0, Amplitude &a1) {
        Amplitude t0 = a0;
        a0 = r * (t0 + a1);
        a1 = r * (t0 - a1);
    });
}

void StateVector::rz(uint32_t q, double theta) {
    const Amplitude e0 = std::polar(1.0, -theta / 2);
    const Amplitude e1 = std::polar(1.0, theta / 2);
    for_pairs(amps_, q, [&](Amplitude &a0, Amplitude &a1) {
        a0 *= e0;
        a1 *= e1;
    });
}

void StateVector::phase(uint32_t q, double phi) {
    const Amplitude e = std::polar(1.0, phi);
    for_pairs(amps_, q, [&](Amplitude &, Amplitude &a1) {
        a1 *= e;
    });
}

void StateVector::cx(uint32_t control, uint32_t target) {
    const size_t cm = size_t{1} << control;
    const size_t tm = size_t{1} << target;
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & cm) && !(i & tm)) {
            std::swap(amps_[i], amps_[i | tm]);
        }
    }
}

void StateVector::cp(uint32_t a, uint32_t b, double theta) {
    const size_t mask = (size_t{1} << a) | (size_t{1} << b);
    const Amplitude e = std::polar(1.0, theta);
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & mask) == mask) {
            amps_[i] *= e;
        }
    }
}

void StateVector::swap(uint32_t a, uint32_t b) {
    const size_t am = size_t{1} << a;
    const size_t bm = size_t{1} << b;
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & am) && !(i & bm)) {
            std::swap(amps_[i], amps_[(i & ~am) | bm]);
        }
    }
}

void StateVector::ccx(uint32_t c1, uint32_t c2, uint32_t target) {
    const size_t cm = (size_t{1} << c1) | (size_t{1} << c2);
    const size_t tm = size_t{1} << target;
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & cm) == cm && !(i & tm)) {
            std::swap(amps_[i], amps_[i | tm]);
        }
    }
}

void StateVector::apply(const Gate &gate) {
    const auto &q = gate.qubits;
    switch (gate.kind) {
        case GateKind::X:
            x(q[0]);
            break;
        case GateKind::SX:
            sx(q[0]);
            break;
        case GateKind::RZ:
            rz(q[0], gate.angle.radians());
            break;
        case GateKind::CX:
            cx(q[0], q[1]);
            break;
        case GateKind::H:
            h(q[0]);
            break;
        case GateKind::S:
            phase(q[0], kHalfPi);
            break;
        case GateKind::SDG:
            phase(q[0], -kHalfPi);
            break;
        case GateKind::T:
            phase(q[0], kPi / 4);
            break;
        case GateKind::TDG:
            phase(q[0], -kPi / 4);
            break;
        case GateKind::CCX:
            ccx(q[0], q[1], q[2]);
            break;
        case GateKind::CP:
            cp(q[0], q[1], gate.angle.radians());
            break;
        case GateKind::SWAP:
            swap(q[0], q[1]);
            break;
        case GateKind::MEASURE:
        case GateKind::BARRIER:
            break;
    }
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

std::vector<Amplitude> statevector(const Circuit &circuit) {
    circuit.validate();
    StateVector sv(circuit.num_qubits);
    for (const Gate &g : circuit.gates) {
        sv.apply(g);
    }
    return std::move(sv.amplitudes());
}

Distribution ideal_distribution(const Circuit &circuit, double cutoff) {
    auto amps = statevector(circuit);
    auto measures = circuit.measure_map();
    std::map<uint64_t, double> acc;
    for (size_t i = 0; i < amps.size(); i++) {
        double p = std::norm(amps[i]);
        if (p == 0) {
            continue;
        }
        uint64_t key = 0;
        for (auto [q, c] : measures) {
            key |= static_cast<uint64_t>((i >> q) & 1) << c;
        }
        acc[key] += p;
    }
    Distribution out;
    for (auto [key, p] : acc) {
        if (p >= cutoff) {
            out[BitString::from_uint(key, circuit.num_clbits)] = p;
        }
    }
    return out;
}

}  // namespace canord
