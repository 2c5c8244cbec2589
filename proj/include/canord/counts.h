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

#ifndef CANORD_COUNTS_H
#define CANORD_COUNTS_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "canord/circuit.h"

namespace canord {

using Distribution = std::map<BitString, double>;

/// Shot histogram. Values always sum to total_shots.
struct Counts {
    size_t num_bits = 0;
    std::map<BitString, uint64_t> histogram;
    uint64_t total_shots = 0;

    Counts() = default;
    explicit Counts(size_t num_bits) : num_bits(num_bits) {
    }

    void add(const BitString &s, uint64_t n = 1);
    Counts &merge(const Counts &other);
    double probability(const BitString &s) const;
    Distribution distribution() const;

    /// "bitstring,count" rows under a header line, in bitstring order.
    std::string to_csv() const;
    static Counts from_csv(std::string_view text);

    bool operator==(const Counts &other) const = default;
};

/// Histogram overlap sum_s min(a(s), b(s)).
double overlap(const Distribution &a, const Distribution &b);

/// Total-variation distance.
double total_variation(const Distribution &a, const Distribution &b);

}  // namespace canord

#endif
