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

#include "canord/counts.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace canord {

void Counts::add(const BitString &s, uint64_t n) {
    if (s.width() != num_bits) {
        throw std::invalid_argument("bitstring '" + s.str() + "' has width " + std::to_string(s.width()) +
                                    ", expected " + std::to_string(num_bits));
    }
    if (n == 0) {
        return;
    }
    histogram[s] += n;
    total_shots += n;
}

Counts &Counts::merge(const Counts &other) {
    if (other.num_bits != num_bits) {
        throw std::invalid_argument("cannot merge counts of different widths");
    }
    for (const auto &[s, n] : other.histogram) {
        histogram[s] += n;
    }
    total_shots += other.total_shots;
    return *this;
}

double Counts::probability(const BitString &s) const {
    if (total_shots == 0) {
        return 0;
    }
    auto it = histogram.find(s);
    return it == histogram.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total_shots);
}

Distribution Counts::distribution() const {
    Distribution d;
    for (const auto &[s, n] : histogram) {
        d[s] = static_cast<double>(n) / static_cast<double>(total_shots);
    }
    return d;
}

std::string Counts::to_csv() const {
    std::stringstream ss;
    ss << "bitstring,count\n";
    for (const auto &[s, n] : histogram) {
        ss << s.str() << "," << n << "\n";
    }
    return ss.str();
}

Counts Counts::from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    Counts out;
    bool first = true;
    bool width_known = false;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (first) {
            first = false;
            if (line == "bitstring,count") {
                continue;
            }
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("counts csv line " + std::to_string(line_no) + ": missing ','");
        }
        BitString s(line.substr(0, comma));
        uint64_t n = 0;
        const char *b = line.data() + comma + 1;
        const char *e = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(b, e, n);
        if (ec != std::errc() || ptr != e) {
            throw std::invalid_argument("counts csv line " + std::to_string(line_no) + ": bad count");
        }
        if (!width_known) {
            out.num_bits = s.width();
            width_known = true;
        }
        out.add(s, n);
    }
    return out;
}

double overlap(const Distribution &a, const Distribution &b) {
    double total = 0;
    const Distribution &small = a.size() <= b.size() ? a : b;
    const Distribution &large = a.size() <= b.size() ? b : a;
    for (const auto &[s, p] : small) {
        auto it = large.find(s);
        if (it != large.end()) {
            total += std::min(p, it->second);
        }
    }
    return total;
}

double total_variation(const Distribution &a, const Distribution &b) {
    double total = 0;
    for (const auto &[s, p] : a) {
        auto it = b.find(s);
        total += std::abs(p - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto &[s, p] : b) {
        if (!a.count(s)) {
            total += std::abs(p);
        }
    }
    return total / 2;
}

}  // namespace canord
