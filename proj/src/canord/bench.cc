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

#include "canord/bench.h"

#include <cmath>
#include <stdexcept>

#include "canord/statevector.h"
#include "canord/transpile.h"

namespace canord {

namespace {

void maj(Circuit &c, uint32_t carry, uint32_t b, uint32_t a) {
    c.append(Gate::cx(a, b));
    c.append(Gate::cx(a, carry));
    c.append(Gate::ccx(carry, b, a));
}

void uma(Circuit &c, uint32_t carry, uint32_t b, uint32_t a) {
    c.append(Gate::ccx(carry, b, a));
    c.append(Gate::cx(a, carry));
    c.append(Gate::cx(carry, b));
}

uint64_t parse_uint(const std::string &s, const char *what) {
    size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || s.empty() || s[0] == '-') {
        throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
    }
    return v;
}

double parse_real(const std::string &s, const char *what) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || s.empty() || !std::isfinite(v)) {
        throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
    }
    return v;
}

void expect_args(std::string_view family, const std::vector<std::string> &args, size_t n) {
    if (args.size() != n) {
        throw std::invalid_argument(std::string(family) + " takes " + std::to_string(n) + " argument(s), got " +
                                    std::to_string(args.size()));
    }
}

}  // namespace

std::pair<Circuit, BitString> adder(uint32_t bits, uint64_t a, uint64_t b) {
    if (bits < 1 || bits > 30) {
        throw std::invalid_argument("adder operand width must be in [1, 30]");
    }
    const uint64_t limit = uint64_t{1} << bits;
    if (a >= limit || b >= limit) {
        throw std::invalid_argument("adder operands must be below 2^" + std::to_string(bits));
    }
    const uint32_t n = 2 * bits + 2;
    auto b_q = [](uint32_t i) {
        return 2 * i + 1;
    };
    auto a_q = [](uint32_t i) {
        return 2 * i + 2;
    };
    const uint32_t z = n - 1;

    Circuit c(n, n, "adder" + std::to_string(bits) + "_" + std::to_string(a) + "_" + std::to_string(b));
    for (uint32_t i = 0; i < bits; i++) {
        if ((a >> i) & 1) {
            c.append(Gate::x(a_q(i)));
        }
        if ((b >> i) & 1) {
            c.append(Gate::x(b_q(i)));
        }
    }
    maj(c, 0, b_q(0), a_q(0));
    for (uint32_t i = 1; i < bits; i++) {
        maj(c, a_q(i - 1), b_q(i), a_q(i));
    }
    c.append(Gate::cx(a_q(bits - 1), z));
    for (uint32_t i = bits - 1; i >= 1; i--) {
        uma(c, a_q(i - 1), b_q(i), a_q(i));
    }
    uma(c, 0, b_q(0), a_q(0));
    for (uint32_t q = 0; q < n; q++) {
        c.append(Gate::measure(q, q));
    }

    const uint64_t sum = a + b;
    BitString out = BitString::zeros(n);
    for (uint32_t i = 0; i < bits; i++) {
        out.set_bit(b_q(i), (sum >> i) & 1);
        out.set_bit(a_q(i), (a >> i) & 1);
    }
    out.set_bit(z, (sum >> bits) & 1);
    return {std::move(c), std::move(out)};
}

Benchmark qft(uint32_t n) {
    if (n < 1 || n > kMaxStatevectorQubits) {
        throw std::invalid_argument("qft size must be in [1, " + std::to_string(kMaxStatevectorQubits) + "]");
    }
    Circuit c(n, n, "qft" + std::to_string(n));
    for (uint32_t i = 0; i < n; i++) {
        c.append(Gate::single(GateKind::H, i));
        for (uint32_t j = i + 1; j < n; j++) {
            c.append(Gate::cp(j, i, Angle(kPi / std::ldexp(1.0, static_cast<int>(j - i)))));
        }
    }
    for (uint32_t i = 0; i < n / 2; i++) {
        c.append(Gate::swap(i, n - 1 - i));
    }
    for (uint32_t q = 0; q < n; q++) {
        c.append(Gate::measure(q, q));
    }
    Distribution ideal;
    const double p = std::ldexp(1.0, -static_cast<int>(n));
    for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
        ideal[BitString::from_uint(v, n)] = p;
    }
    return {std::move(c), std::move(ideal)};
}

Benchmark qaoa(uint32_t num_nodes, const std::vector<std::pair<uint32_t, uint32_t>> &edges, double gamma,
               double beta) {
    if (num_nodes < 1 || num_nodes > 12) {
        throw std::invalid_argument("qaoa graphs must have 1 to 12 nodes");
    }
    Circuit c(num_nodes, num_nodes, "qaoa" + std::to_string(num_nodes));
    for (uint32_t q = 0; q < num_nodes; q++) {
        c.append(Gate::single(GateKind::H, q));
    }
    for (auto [u, v] : edges) {
        if (u >= num_nodes || v >= num_nodes || u == v) {
            throw std::invalid_argument("bad qaoa edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        }
        c.append(Gate::cx(u, v));
        c.append(Gate::rz(v, Angle(2 * gamma)));
        c.append(Gate::cx(u, v));
    }
    for (uint32_t q = 0; q < num_nodes; q++) {
        c.append(Gate::single(GateKind::H, q));
        c.append(Gate::rz(q, Angle(2 * beta)));
        c.append(Gate::single(GateKind::H, q));
    }
    for (uint32_t q = 0; q < num_nodes; q++) {
        c.append(Gate::measure(q, q));
    }
    Distribution ideal = ideal_distribution(c, 1e-12);
    return {std::move(c), std::move(ideal)};
}

Benchmark kickback() {
    Circuit c(2, 2, "kickback");
    c.append(Gate::single(GateKind::H, 0));
    c.append(Gate::x(1));
    c.append(Gate::single(GateKind::H, 1));
    c.append(Gate::cx(0, 1));
    c.append(Gate::single(GateKind::H, 0));
    c.append(Gate::single(GateKind::H, 1));
    c.append(Gate::measure(0, 0));
    c.append(Gate::measure(1, 1));
    return {std::move(c), {{BitString("11"), 1.0}}};
}

std::vector<NamedBenchmark> adder_fixtures() {
    struct Row {
        const char *name;
        uint32_t bits;
        uint64_t a;
        uint64_t b;
    };
    static constexpr Row rows[] = {
        {"ADD6_1", 2, 2, 2},   {"ADD6_2", 2, 3, 3},   {"ADD8_1", 3, 3, 3},
        {"ADD8_2", 3, 7, 7},   {"ADD10_1", 4, 4, 4},  {"ADD10_2", 4, 14, 14},
        {"ADD12_1", 5, 5, 5},  {"ADD12_2", 5, 31, 31}, {"ADD14_1", 6, 6, 6},
    };
    std::vector<NamedBenchmark> out;
    for (const Row &r : rows) {
        auto [c, s] = adder(r.bits, r.a, r.b);
        c.name = r.name;
        out.push_back({r.name, {std::move(c), {{std::move(s), 1.0}}}});
    }
    return out;
}

std::vector<NamedBenchmark> qaoa_fixtures() {
    using Edges = std::vector<std::pair<uint32_t, uint32_t>>;
    struct Row {
        const char *name;
        Edges edges;
        double gamma;
        double beta;
    };
    const Row rows[] = {
        {"QAOA6_1", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}, 0.6, 0.55},
        {"QAOA6_2", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}, 0.65, 0.6},
        {"QAOA6_3", {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}, 0.6, 0.6},
        {"QAOA6_4", {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}, 0.55, 0.65},
    };
    std::vector<NamedBenchmark> out;
    for (const Row &r : rows) {
        Benchmark b = qaoa(6, r.edges, r.gamma, r.beta);
        b.circuit.name = r.name;
        out.push_back({r.name, std::move(b)});
    }
    return out;
}

Benchmark fixture(std::string_view name) {
    if (name == "KICKBACK") {
        return kickback();
    }
    for (auto *list : {adder_fixtures, qaoa_fixtures}) {
        for (auto &f : list()) {
            if (f.name == name) {
                return std::move(f.bench);
            }
        }
    }
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

Benchmark make_benchmark(std::string_view family, const std::vector<std::string> &args) {
    if (family == "adder") {
        expect_args(family, args, 3);
        uint64_t bits = parse_uint(args[0], "adder width");
        if (bits > 30) {
            throw std::invalid_argument("adder operand width must be in [1, 30]");
        }
        auto [c, s] = adder(static_cast<uint32_t>(bits), parse_uint(args[1], "operand"),
                            parse_uint(args[2], "operand"));
        return {std::move(c), {{std::move(s), 1.0}}};
    }
    if (family == "qft") {
        expect_args(family, args, 1);
        uint64_t n = parse_uint(args[0], "qft size");
        if (n > kMaxStatevectorQubits) {
            throw std::invalid_argument("qft size too large");
        }
        return qft(static_cast<uint32_t>(n));
    }
    if (family == "qaoa") {
        expect_args(family, args, 3);
        CouplingGraph g = CouplingGraph::preset(args[0]);
        std::vector<std::pair<uint32_t, uint32_t>> edges(g.edges().begin(), g.edges().end());
        return qaoa(g.num_physical_qubits(), edges, parse_real(args[1], "gamma"), parse_real(args[2], "beta"));
    }
    if (family == "kickback") {
        expect_args(family, args, 0);
        return kickback();
    }
    if (family == "fixture") {
        expect_args(family, args, 1);
        return fixture(args[0]);
    }
    throw std::invalid_argument("unknown benchmark family '" + std::string(family) + "'");
}

}  // namespace canord
