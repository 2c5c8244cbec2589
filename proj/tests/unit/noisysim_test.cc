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

#include "canord/bench.h"
#include "canord/correlation.h"
#include "canord/noisysim.h"
#include "canord/statevector.h"
#include "canord/transpile.h"
#include "support/oracles.h"

namespace canord {
namespace {

std::map<std::string, uint64_t> keyed(const Counts &counts) {
    std::map<std::string, uint64_t> out;
    for (const auto &[s, n] : counts.histogram) {
        out[s.str()] = n;
    }
    return out;
}

std::map<std::string, double> keyed(const Distribution &d) {
    std::map<std::string, double> out;
    for (const auto &[s, p] : d) {
        out[s.str()] = p;
    }
    return out;
}

double chi_square_p(const Counts &counts, const std::map<std::string, double> &expected) {
    auto [stat, dof] = oracle::chi_square(keyed(counts), expected, counts.total_shots);
    return oracle::chi_square_p_value(stat, dof);
}

TEST(StatevectorTest, Examples) {
    std::vector<Amplitude> empty = statevector(Circuit(1, 0));
    ASSERT_EQ(empty.size(), 2u);
    EXPECT_EQ(empty[0], Amplitude(1));
    EXPECT_EQ(empty[1], Amplitude(0));

    Circuit x(1, 0);
    x.append(Gate::x(0));
    std::vector<Amplitude> flipped = statevector(x);
    EXPECT_EQ(flipped[0], Amplitude(0));
    EXPECT_EQ(flipped[1], Amplitude(1));

    for (const Amplitude &a : statevector(qft(3).circuit)) {
        EXPECT_NEAR(std::norm(a), 1.0 / 8, 1e-12);
    }
}

TEST(StatevectorTest, MatchesDenseTwoQubitOracle) {
    Rng rng(4);
    for (int t = 0; t < 50; t++) {
        Circuit c = oracle::random_basis(2, 30, rng);
        auto dense = oracle::dense_two_qubit(c);
        std::vector<Amplitude> want(dense.begin(), dense.end());
        EXPECT_LE(oracle::phase_insensitive_distance(statevector(c), want), 1e-10);
    }
}

TEST(StatevectorTest, UnitNormAndWidthLimit) {
    Rng rng(5);
    Circuit c = oracle::random_source(8, 100, rng);
    StateVector sv(8);
    for (const Gate &g : c.gates) {
        sv.apply(g);
    }
    EXPECT_NEAR(sv.norm(), 1.0, 1e-10);
    EXPECT_THROW(statevector(Circuit(kMaxStatevectorQubits + 1, 0)), CircuitError);
}

TEST(RunShotsTest, NoiselessMatchesIdealDistribution) {
    Rng rng(101);
    for (int t = 0; t < 40; t++) {
        uint32_t n = 1 + t % 8;
        Circuit c = t % 4 == 0 ? oracle::random_clifford(n, 60, rng) : oracle::random_basis(n, 60, rng);
        Counts counts = run_shots(c, NoiseModel::noiseless(n), 10000, t);
        EXPECT_GE(chi_square_p(counts, keyed(ideal_distribution(c, 1e-14))), 0.001) << "circuit " << t;
    }
}

TEST(RunShotsTest, NoisyMatchesDensityMatrixOracle) {
    Rng rng(202);
    NoiseParams params{0.05, 0.1, 0.05, 0.03, 0.08};
    for (int t = 0; t < 40; t++) {
        uint32_t n = 1 + t % 4;
        Circuit c = t % 3 == 0 ? oracle::random_clifford(n, 30, rng) : oracle::random_basis(n, 30, rng);
        auto exact = oracle::noisy_distribution_exact(c, params.p1, params.p2, params.idle_z, params.ro01, params.ro10);
        Counts counts = run_shots(c, NoiseModel::all_to_all(n, params), 40000, 1000 + t);
        EXPECT_GE(chi_square_p(counts, exact), 0.001) << "circuit " << t;
    }
}

TEST(RunShotsTest, ForcedReadoutFlip) {
    Circuit c(2, 2);
    c.append(Gate::x(0)).append(Gate::measure(0, 0)).append(Gate::measure(1, 1));
    NoiseModel m = NoiseModel::noiseless(2);
    m.ro01[1] = 1.0;
    Counts counts = run_shots(c, m, 1000, 3);
    ASSERT_EQ(counts.histogram.size(), 1u);
    EXPECT_EQ(counts.histogram.begin()->first, BitString("11"));
}

TEST(RunShotsTest, SeedDeterminismAcrossThreadCounts) {
    Rng rng(303);
    NoiseParams params{0.01, 0.05, 0.02, 0.02, 0.03};
    for (bool clifford : {true, false}) {
        Circuit c = clifford ? oracle::random_clifford(6, 80, rng) : oracle::random_basis(6, 80, rng);
        NoiseModel m = NoiseModel::all_to_all(6, params);
        Counts one = run_shots(c, m, 4000, 17, {1, 16});
        EXPECT_EQ(one, run_shots(c, m, 4000, 17, {1, 16}));
        EXPECT_EQ(one, run_shots(c, m, 4000, 17, {4, 16}));
        EXPECT_NE(one, run_shots(c, m, 4000, 18, {1, 16}));
    }
}

TEST(RunShotsTest, Errors) {
    Circuit h(1, 1);
    h.append(Gate::single(GateKind::H, 0));
    EXPECT_THROW(run_shots(h, NoiseModel::noiseless(1), 10, 1), CircuitError);

    Circuit wide(17, 0);
    for (uint32_t q = 0; q < 17; q++) {
        wide.append(Gate::rz(q, Angle(0.1)));
    }
    EXPECT_THROW(run_shots(wide, NoiseModel::noiseless(17), 10, 1), CircuitError);
    EXPECT_NO_THROW(run_shots(wide, NoiseModel::noiseless(17), 10, 1, {1, 17}));

    Circuit cx(3, 0);
    cx.append(Gate::cx(0, 2));
    EXPECT_THROW(run_shots(cx, NoiseModel::for_graph(CouplingGraph::line(3), {}), 10, 1), CircuitError);
}

TEST(RunShotsTest, WideCliffordCircuitsAreNotLimited) {
    Circuit c(60, 60);
    c.append(Gate::x(0));
    for (uint32_t q = 0; q + 1 < 60; q++) {
        c.append(Gate::cx(q, q + 1));
    }
    for (uint32_t q = 0; q < 60; q++) {
        c.append(Gate::measure(q, q));
    }
    Counts counts = run_shots(c, NoiseModel::for_graph(CouplingGraph::line(60), {}), 200, 1);
    EXPECT_EQ(counts.total_shots, 200u);
    EXPECT_GT(counts.probability(BitString(std::string(60, '1'))), 0.1);
    Counts clean = run_shots(c, NoiseModel::noiseless(60), 200, 1);
    EXPECT_EQ(clean.probability(BitString(std::string(60, '1'))), 1.0);
}

TEST(RunShotsTest, UntouchedQubitsAreIgnoredByTheWidthLimit) {
    Circuit c(27, 2);
    c.append(Gate::rz(21, Angle(0.3))).append(Gate::sx(21)).append(Gate::cx(21, 23));
    c.append(Gate::measure(21, 0)).append(Gate::measure(23, 1));
    Counts counts = run_shots(c, NoiseModel::for_graph(CouplingGraph::heavy_hex27(), {}), 1000, 2);
    EXPECT_EQ(counts.total_shots, 1000u);
}

TEST(RunShotsTest, MonotoneDegradation) {
    auto [source, correct] = adder(2, 1, 1);
    Circuit c = decompose_to_basis(source);
    NoiseModel base = NoiseModel::all_to_all(c.num_qubits, NoiseParams{});
    const uint64_t shots = 20000;
    double previous = 1.0;
    for (int k = 0; k <= 8; k++) {
        double lambda = 0.25 * k;
        Counts counts = run_shots(c, base.scaled(lambda), shots, 50 + k);
        double p = counts.probability(correct);
        double sigma = std::sqrt(std::max(p * (1 - p), 1e-4) / shots);
        EXPECT_LE(p, previous + 2 * sigma * std::sqrt(2.0)) << "lambda " << lambda;
        previous = p;
    }
    EXPECT_EQ(run_shots(c, base.scaled(0), 1000, 1).probability(correct), 1.0);
}

TEST(RunShotsTest, KickbackCorrectStringDecaysWithNoiseLevel) {
    Benchmark b = kickback();
    Circuit c = decompose_to_basis(b.circuit);
    NoiseModel base =
        NoiseModel::for_graph(CouplingGraph::line(2), NoiseParams{0.01, 0.06, 0.02, 0.01, 0.25});
    std::vector<double> level;
    std::vector<double> p11;
    std::vector<double> p00;
    for (int k = 0; k < 20; k++) {
        Counts counts = run_shots(c, base.scaled((k + 1) / 20.0), 8192, 900 + k);
        level.push_back(k);
        p11.push_back(counts.probability(BitString("11")));
        p00.push_back(counts.probability(BitString("00")));
    }
    EXPECT_LE(spearman(level, p11), -0.9);
    EXPECT_GE(spearman(level, p00), 0.9);
}

TEST(NoiseModelTest, FactoriesAndValidation) {
    NoiseModel m = NoiseModel::for_graph(CouplingGraph::line(3), NoiseParams{});
    EXPECT_EQ(m.p2.size(), 2u);
    EXPECT_DOUBLE_EQ(m.edge_error(1, 0), 8e-3);
    EXPECT_THROW(m.edge_error(0, 2), CircuitError);
    EXPECT_DOUBLE_EQ(m.mean_p2(), 8e-3);
    EXPECT_THROW(NoiseModel::uniform(2, {{0, 2}}, {}), std::invalid_argument);

    NoiseModel big = m.scaled(1000);
    EXPECT_DOUBLE_EQ(big.p1[0], 0.3);
    EXPECT_DOUBLE_EQ(big.p2.begin()->second, 0.5);
    EXPECT_DOUBLE_EQ(big.ro01[0], 0.5);
    EXPECT_THROW(m.scaled(-1), std::invalid_argument);

    NoiseModel bad = m;
    bad.p1[1] = 0.6;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = m;
    bad.ro10[0] = 1.0;
    EXPECT_NO_THROW(bad.validate());
    bad.ro10[0] = 1.1;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(DiverseEnsembleTest, JitterOneReturnsBase) {
    NoiseModel base = NoiseModel::for_graph(CouplingGraph::heavy_hex27(), NoiseParams{});
    for (const NoiseModel &m : make_diverse_ensemble(base, 5, 1.0, 3)) {
        EXPECT_EQ(m, base);
    }
}

TEST(DiverseEnsembleTest, DeterministicInSeed) {
    NoiseModel base = NoiseModel::for_graph(CouplingGraph::heavy_hex27(), NoiseParams{});
    auto a = make_diverse_ensemble(base, 6, 2.0, 8);
    EXPECT_EQ(a, make_diverse_ensemble(base, 6, 2.0, 8));
    EXPECT_NE(a, make_diverse_ensemble(base, 6, 2.0, 9));
    EXPECT_NE(a[0], a[1]);
    EXPECT_THROW(make_diverse_ensemble(base, 1, 2.0, 8), std::invalid_argument);
    EXPECT_THROW(make_diverse_ensemble(base, 3, 0.5, 8), std::invalid_argument);
}

TEST(DiverseEnsembleTest, FactorsStayInRange) {
    NoiseModel base = NoiseModel::for_graph(CouplingGraph::heavy_hex27(), NoiseParams{});
    for (const NoiseModel &m : make_diverse_ensemble(base, 10, 2.0, 4)) {
        for (uint32_t q = 0; q < 27; q++) {
            EXPECT_GE(m.p1[q], base.p1[q] / 2 - 1e-18);
            EXPECT_LE(m.p1[q], base.p1[q] * 2 + 1e-18);
            EXPECT_LE(m.ro10[q], 0.5);
        }
    }
}

TEST(DiverseEnsembleTest, MeanTwoQubitErrorSpread) {
    NoiseModel base = NoiseModel::for_graph(CouplingGraph::line(5), NoiseParams{});
    int wide = 0;
    const int trials = 200;
    for (int seed = 0; seed < trials; seed++) {
        auto models = make_diverse_ensemble(base, 20, 2.0, seed);
        double lo = 1;
        double hi = 0;
        for (const NoiseModel &m : models) {
            lo = std::min(lo, m.mean_p2());
            hi = std::max(hi, m.mean_p2());
        }
        wide += hi / lo >= 1.5;
    }
    EXPECT_GE(wide, trials * 99 / 100);
}

TEST(DiverseEnsembleTest, MeanOverManyEdgesConcentrates) {
    NoiseModel base = NoiseModel::for_graph(CouplingGraph::heavy_hex27(), NoiseParams{});
    auto models = make_diverse_ensemble(base, 20, 2.0, 1);
    double lo = 1;
    double hi = 0;
    for (const NoiseModel &m : models) {
        lo = std::min(lo, m.mean_p2());
        hi = std::max(hi, m.mean_p2());
    }
    EXPECT_LT(hi / lo, 1.5);
    EXPECT_GT(hi / lo, 1.05);
}

}  // namespace
}  // namespace canord
