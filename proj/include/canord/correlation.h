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

#ifndef CANORD_CORRELATION_H
#define CANORD_CORRELATION_H

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "canord/circuit.h"
#include "canord/counts.h"
#include "canord/stabsim.h"

namespace canord {

/// Target and canary counts from every ensemble member.
struct EnsembleRun {
    std::vector<std::string> members;
    std::vector<Counts> target_counts;
    std::vector<Counts> canary_counts;
    /// Logical (unrouted) circuits; the canary is only used for its ideal outcomes.
    Circuit target_circuit;
    Circuit canary_circuit;

    /// At least 2 members, unique labels, equal shots per circuit.
    void validate() const;
};

/// Histogram overlap between noisy canary counts and the ideal canary output.
double canary_fidelity(const Counts &counts, const Circuit &canary);
double canary_fidelity(const Counts &counts, const CliffordOutcomes &ideal);

/// 1-based ranks in ascending order; tied entries share their average rank.
std::vector<double> fractional_ranks(const std::vector<double> &values);

/// Fractional ranks of members by ascending canary fidelity.
std::vector<double> canary_ordering(const std::vector<double> &fidelities);

/// Pearson correlation of the fractional ranks of x and y. Returns 0 when
/// either input is constant.
double spearman(const std::vector<double> &x, const std::vector<double> &y);

/// Shot-weighted mean of the member distributions.
Distribution pooled_distribution(const std::vector<Counts> &counts);

/// Strings whose probability on some member reaches f_min, by pooled
/// probability descending (ties lexicographic), at most ceil(1/f_min) of
/// them. Throws EmptyStringSetError when nothing qualifies.
std::vector<BitString> collect_strings(const EnsembleRun &run, double f_min);

struct EmptyStringSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// rho_s = spearman(per-member probability of s, canary fidelities).
std::map<BitString, double> correlate(const EnsembleRun &run, const std::vector<double> &canary_fidelities,
                                      const std::vector<BitString> &strings, size_t threads = 1);

struct WeightFunction {
    enum class Kind { Linear, Square, Threshold };
    Kind kind = Kind::Linear;
    /// Threshold kind only: weight 1 when rho >= tau, else 0.
    double tau = 0.5;

    double operator()(double rho) const;
    /// "linear", "square" or "threshold:TAU".
    static WeightFunction parse(std::string_view text);
    std::string str() const;
};

struct Weighted {
    Distribution q;
    std::map<BitString, double> weights;
    /// Every weight was zero, so q is p_base.
    bool fallback = false;
};

/// q(s) proportional to p_base(s) * w(rho_s).
Weighted weight_distribution(const Distribution &p_base, const std::map<BitString, double> &rho,
                             const WeightFunction &weight = {});

struct CorrelationRecord {
    BitString string;
    double rho = 0;
    double p_base = 0;
    double weight = 0;
    double q = 0;
};

inline constexpr size_t kRankAbsent = std::numeric_limits<size_t>::max();

struct Rank {
    /// 1-based positions; kRankAbsent when no correct string was collected.
    size_t best = kRankAbsent;
    size_t worst = kRankAbsent;
    size_t found = 0;
};

/// Records ordered by rho descending, then p_base descending, then string.
void sort_by_rank(std::vector<CorrelationRecord> &records);

/// Best and worst positions of the correct strings in rank order.
Rank rank_of(std::vector<CorrelationRecord> records, const std::set<BitString> &correct);

/// Strings whose ideal probability is at least `ratio` times the largest.
std::set<BitString> correct_set(const Distribution &ideal, double ratio = 0.5);

struct Metrics {
    double fidelity_q = 0;
    double fidelity_pooled = 0;
    std::vector<double> member_fidelities;
    double mean_member_fidelity = 0;
    double best_member_fidelity = 0;
    /// Absent when the corresponding baseline fidelity is zero.
    std::optional<double> boost_mean;
    std::optional<double> boost_vs_best;
};

/// Fidelities are histogram overlaps with `ideal`.
Metrics metrics(const EnsembleRun &run, const Distribution &q, const Distribution &ideal);

struct AnalysisOptions {
    double f_min = 0.001;
    WeightFunction weight;
    size_t threads = 1;
};

struct Report {
    std::vector<std::string> members;
    std::vector<double> canary_fidelities;
    std::vector<double> canary_ranks;
    /// In rank order.
    std::vector<CorrelationRecord> records;
    size_t strings_analyzed = 0;
    bool fallback = false;
    std::optional<Rank> rank;
    std::optional<Metrics> metrics;
    std::set<BitString> correct;
};

/// Canary fidelities, string collection, correlation and reweighting. Rank and
/// metrics are filled when `ideal` is given.
Report analyze(const EnsembleRun &run, const AnalysisOptions &options, const Distribution *ideal = nullptr,
               double correct_ratio = 0.5);

}  // namespace canord

#endif
