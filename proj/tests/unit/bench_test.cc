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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "canord/bench.h"
#include "canord/canary.h"
#include "canord/statevector.h"
#include "canord/transpile.h"
#include "support/oracles.h"

namespace canord {
namespace {

// Clbit k sits at position (size - 1 - k) of the printed string.
uint64_t read_bits(const std::string &s, const std::vector<uint32_t> &clbits) {
    uint64_t v = 0;
    for (size_t i = 0; i < clbits.size(); i++) {
        v |= uint64_t(s[s.size() - 1 - clbits[i]] == '1') << i;
    }
    return v;
}

TEST(AdderTest, ExhaustiveSumsUpToFourBits) {
    for (uint32_t n = 1; n <= 4; n++) {
        std::vector<uint32_t> sum_bits;
        std::vector<uint32_t> a_bits;
        for (uint32_t i = 0; i < n; i++) {
            sum_bits.push_back(2 * i + 1);
            a_bits.push_back(2 * i + 2);
        }
        sum_bits.push_back(2 * n + 1);
        for (uint64_t a = 0; a < (1u << n); a++) {
            for (uint64_t b = 0; b < (1u << n); b++) {
                auto [circuit, expected] = adder(n, a, b);
                ASSERT_EQ(circuit.num_qubits, 2 * n + 2);
                std::string out = oracle::reversible_eval(circuit, std::vector<bool>(circuit.num_qubits, false));
                EXPECT_EQ(out, expected.str());
                EXPECT_EQ(read_bits(out, sum_bits), a + b) << n << " " << a << " " << b;
                EXPECT_EQ(read_bits(out, a_bits), a);
                EXPECT_EQ(out[out.size() - 1], '0');
            }
        }
    }
}

TEST(AdderTest, Examples) {
    EXPECT_EQ(adder(2, 0, 0).second, BitString("000000"));
    auto [c, out] = adder(2, 1, 1);
    EXPECT_EQ(oracle::reversible_eval(c, std::vector<bool>(6, false)), out.str());
    EXPECT_EQ(read_bits(out.str(), {1, 3, 5}), 2u);
    EXPECT_THROW(adder(2, 4, 0), std::invalid_argument);
    EXPECT_THROW(adder(2, 0, 4), std::invalid_argument);
    for (const Gate &g : c.gates) {
        EXPECT_TRUE(g.kind == GateKind::X || g.kind == GateKind::CX || g.kind == GateKind::CCX ||
                    g.kind == GateKind::MEASURE);
    }
}

TEST(AdderTest, DecomposedAdderIsDeterministic) {
    auto [c, out] = adder(2, 3, 2);
    Distribution d = ideal_distribution(decompose_to_basis(c), 1e-12);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.begin()->first, out);
    EXPECT_NEAR(d.begin()->second, 1.0, 1e-12);
}

TEST(AdderTest, CxDepthIsLinear) {
    const std::vector<size_t> reference{29, 41, 53, 65, 77};
    std::vector<size_t> depth;
    for (uint32_t n = 2; n <= 6; n++) {
        depth.push_back(cx_depth(decompose_to_basis(adder(n, 0, 0).first)));
    }
    EXPECT_EQ(depth, (std::vector<size_t>{29, 42, 55, 68, 81}));
    for (size_t i = 0; i < depth.size(); i++) {
        EXPECT_NEAR(double(depth[i]), double(reference[i]), 0.2 * reference[i]);
        if (i > 1) {
            EXPECT_EQ(depth[i] - depth[i - 1], depth[i - 1] - depth[i - 2]);
        }
    }
}

TEST(QftTest, Examples) {
    Benchmark one = qft(1);
    EXPECT_EQ(one.ideal, (Distribution{{BitString("0"), 0.5}, {BitString("1"), 0.5}}));
    Benchmark three = qft(3);
    ASSERT_EQ(three.ideal.size(), 8u);
    for (const auto &[s, p] : three.ideal) {
        EXPECT_NEAR(p, 1.0 / 8, 1e-12);
    }
    for (const Amplitude &a : statevector(decompose_to_basis(three.circuit))) {
        EXPECT_NEAR(std::norm(a), 1.0 / 8, 1e-12);
    }
}

TEST(QftTest, CanaryKeepsStructure) {
    Circuit basis = decompose_to_basis(qft(4).circuit);
    Circuit canary = make_canary(basis);
    EXPECT_TRUE(is_clifford(canary));
    ASSERT_EQ(canary.gates.size(), basis.gates.size());
    for (size_t i = 0; i < basis.gates.size(); i++) {
        EXPECT_EQ(canary.gates[i].kind, basis.gates[i].kind);
        EXPECT_EQ(canary.gates[i].qubits, basis.gates[i].qubits);
    }
}

TEST(QaoaTest, EmptyGraphIsUniform) {
    Benchmark b = qaoa(3, {}, 0.7, 0.0);
    ASSERT_EQ(b.ideal.size(), 8u);
    for (const auto &[s, p] : b.ideal) {
        EXPECT_NEAR(p, 1.0 / 8, 1e-12);
    }
}

TEST(QaoaTest, SingleEdgeMatchesDenseProduct) {
    const double a = std::numbers::pi / 8;
    Benchmark b = qaoa(2, {{0, 1}}, a, a);
    auto amps = oracle::dense_two_qubit(decompose_to_basis(b.circuit));
    for (uint32_t i = 0; i < 4; i++) {
        std::string s{char('0' + ((i >> 1) & 1)), char('0' + (i & 1))};
        double p = std::norm(amps[i]);
        auto it = b.ideal.find(BitString(s));
        EXPECT_NEAR(it == b.ideal.end() ? 0.0 : it->second, p, 1e-12) << s;
    }
}

TEST(QaoaTest, BasisOnlyAndCanaryable) {
    for (const NamedBenchmark &nb : qaoa_fixtures()) {
        Circuit basis = decompose_to_basis(nb.bench.circuit);
        EXPECT_TRUE(basis.is_basis_only());
        EXPECT_TRUE(is_clifford(make_canary(basis)));
        EXPECT_FALSE(is_clifford(basis));
        double total = 0;
        for (const auto &[s, p] : nb.bench.ideal) {
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
    EXPECT_THROW(qaoa(13, {}, 0.1, 0.1), std::invalid_argument);
}

TEST(FixtureTest, NamesAndOutputs) {
    std::vector<std::string> names;
    for (const NamedBenchmark &nb : adder_fixtures()) {
        names.push_back(nb.name);
        ASSERT_EQ(nb.bench.ideal.size(), 1u);
        EXPECT_DOUBLE_EQ(nb.bench.ideal.begin()->second, 1.0);
    }
    EXPECT_EQ(names.front(), "ADD6_1");
    EXPECT_EQ(names.back(), "ADD14_1");
    EXPECT_EQ(fixture("ADD6_1").ideal.begin()->first, BitString("110000"));
    EXPECT_EQ(fixture("ADD14_1").circuit.num_qubits, 14u);
    EXPECT_EQ(qaoa_fixtures().size(), 4u);
    EXPECT_EQ(fixture("KICKBACK").ideal, (Distribution{{BitString("11"), 1.0}}));
    EXPECT_THROW(fixture("ADD99"), std::invalid_argument);

    size_t heavy = 0;
    for (const auto &[s, p] : fixture("QAOA6_3").ideal) {
        heavy += p >= 0.02;
    }
    EXPECT_GE(heavy, 4u);
}

TEST(FixtureTest, GeneratorsAreDeterministic) {
    EXPECT_EQ(qaoa_fixtures()[1].bench.circuit, qaoa_fixtures()[1].bench.circuit);
    EXPECT_EQ(make_benchmark("adder", {"3", "5", "2"}).circuit, adder(3, 5, 2).first);
    EXPECT_EQ(make_benchmark("qft", {"3"}).ideal, qft(3).ideal);
    EXPECT_EQ(make_benchmark("fixture", {"QAOA6_2"}).circuit, fixture("QAOA6_2").circuit);
    EXPECT_EQ(make_benchmark("kickback", {}).circuit, kickback().circuit);
    EXPECT_EQ(make_benchmark("qaoa", {"ring:4", "0.3", "0.2"}).circuit.num_qubits, 4u);
    EXPECT_THROW(make_benchmark("grover", {}), std::invalid_argument);
    EXPECT_THROW(make_benchmark("adder", {"3"}), std::invalid_argument);
}

}  // namespace
}  // namespace canord
