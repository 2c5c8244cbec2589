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

#include "canord/stabsim.h"

#include <cmath>
#include <string>

#include "canord/canary.h"
#include "canord/parallel.h"

namespace canord {

Tableau apply_clifford(Tableau tableau, const Gate &gate) {
    tableau.apply(gate);
    return tableau;
}

namespace {

Tableau evolve_unitary_part(const Circuit &circuit) {
    circuit.validate(true);
    if (!is_clifford(circuit)) {
        throw CircuitError("circuit '" + circuit.name + "' is not Clifford");
    }
    Tableau t(circuit.num_qubits);
    for (const Gate &g : circuit.gates) {
        if (g.kind != GateKind::MEASURE) {
            t.apply(g);
        }
    }
    return t;
}

}  // namespace

CliffordOutcomes::CliffordOutcomes(const Circuit &circuit)
    : state_(evolve_unitary_part(circuit)),
      measures_(circuit.measure_map()),
      num_clbits_(circuit.num_clbits),
      random_measurements_(0) {
    Tableau probe = state_;
    for (auto [q, c] : measures_) {
        random_measurements_ += probe.measure_forced(q, false).was_random;
    }
}

double CliffordOutcomes::probability(const BitString &s) const {
    if (s.width() != num_clbits_) {
        throw std::invalid_argument("bitstring width " + std::to_string(s.width()) + " does not match " +
                                    std::to_string(num_clbits_) + " clbits");
    }
    std::vector<bool> written(num_clbits_, false);
    for (auto [q, c] : measures_) {
        written[c] = true;
    }
    for (size_t c = 0; c < num_clbits_; c++) {
        if (!written[c] && s.bit(c)) {
            return 0;
        }
    }
    Tableau t = state_;
    int random = 0;
    for (auto [q, c] : measures_) {
        bool want = s.bit(c);
        MeasureResult r = t.measure_forced(q, want);
        if (r.was_random) {
            random++;
        } else if (r.bit != want) {
            return 0;
        }
    }
    return std::ldexp(1.0, -random);
}

BitString CliffordOutcomes::sample(Rng &rng) const {
    Tableau t = state_;
    BitString out = BitString::zeros(num_clbits_);
    for (auto [q, c] : measures_) {
        out.set_bit(c, t.measure(q, rng).bit);
    }
    return out;
}

std::optional<Distribution> CliffordOutcomes::enumerate(size_t max_random_bits) const {
    if (random_measurements_ > max_random_bits) {
        return std::nullopt;
    }
    Distribution out;
    const double p = std::ldexp(1.0, -static_cast<int>(random_measurements_));
    struct Frame {
        Tableau t;
        size_t next;
        BitString bits;
    };
    std::vector<Frame> stack;
    stack.push_back({state_, 0, BitString::zeros(num_clbits_)});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        while (f.next < measures_.size()) {
            auto [q, c] = measures_[f.next++];
            if (f.t.is_deterministic(q)) {
                f.bits.set_bit(c, f.t.measure_forced(q, false).bit);
                continue;
            }
            Frame one = f;
            one.t.measure_forced(q, true);
            one.bits.set_bit(c, true);
            stack.push_back(std::move(one));
            f.t.measure_forced(q, false);
            f.bits.set_bit(c, false);
        }
        out[f.bits] = p;
    }
    return out;
}

double ideal_probability(const Circuit &circuit, const BitString &s) {
    return CliffordOutcomes(circuit).probability(s);
}

Counts sample(const Circuit &circuit, uint64_t shots, uint64_t seed, size_t threads) {
    CliffordOutcomes outcomes(circuit);
    std::vector<BitString> results(shots);
    parallel_for(shots, threads, [&](size_t shot) {
        Rng rng(derive_seed(seed, 0x53544142ULL, shot));
        results[shot] = outcomes.sample(rng);
    });
    Counts counts(circuit.num_clbits);
    for (const auto &s : results) {
        counts.add(s);
    }
    return counts;
}

}  // namespace canord
