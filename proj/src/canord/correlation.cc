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

#include "canord/correlation.h"

#include <charconv>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "canord/parallel.h"

namespace canord {

void EnsembleRun::validate() const {
    if (members.size() < 2) {
        throw std::invalid_argument("an ensemble run needs at least 2 members");
    }
    if (std::set<std::string>(members.begin(), members.end()).size() != members.size()) {
        throw std::invalid_argument("ensemble member labels must be unique");
    }
    if (target_counts.size() != members.size() || canary_counts.size() != members.size()) {
        throw std::invalid_argument("every member needs target and canary counts");
    }
    for (size_t m = 1; m < members.size(); m++) {
        if (target_counts[m].total_shots != target_counts[0].total_shots ||
            canary_counts[m].total_shots != canary_counts[0].total_shots) {
            throw std::invalid_argument("members must run equal shots per circuit");
        }
    }
    if (target_counts[0].total_shots == 0 || canary_counts[0].total_shots == 0) {
        throw std::invalid_argument("ensemble run has no shots");
    }
}

double canary_fidelity(const Counts &counts, const CliffordOutcomes &ideal) {
    if (counts.total_shots == 0) {
        return 0;
    }
    double total = 0;
    for (const auto &[s, n] : counts.histogram) {
        double p = static_cast<double>(n) / static_cast<double>(counts.total_shots);
        total += std::min(p, ideal.probability(s));
    }
    return total;
}

double canary_fidelity(const Counts &counts, const Circuit &canary) {
    return canary_fidelity(counts, CliffordOutcomes(canary));
}

std::vector<double> fractional_ranks(const std::vector<double> &values) {
    std::vector<size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return values[a] < values[b];
    });
    std::vector<double> ranks(values.size());
    for (size_t i = 0; i < order.size();) {
        size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
            j++;
        }
        double r = (static_cast<double>(i) + static_cast<double>(j)) / 2 + 1;
        for (size_t k = i; k <= j; k++) {
            ranks[order[k]] = r;
        }
        i = j + 1;
    }
    return ranks;
}

std::vector<double> canary_ordering(const std::vector<double> &fidelities) {
    if (fidelities.size() < 2) {
        throw std::invalid_argument("canary ordering needs at least 2 members");
    }
    return fractional_ranks(fidelities);
}

double spearman(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("spearman inputs differ in length");
    }
    if (x.size() < 2) {
        throw std::invalid_argument("spearman needs at least 2 points");
    }
    std::vector<double> rx = fractional_ranks(x);
    std::vector<double> ry = fractional_ranks(y);
    const double n = static_cast<double>(x.size());
    // Both rank vectors have mean (n + 1) / 2.
    const double mean = (n + 1) / 2;
    double sxy = 0;
    double sxx = 0;
    double syy = 0;
    for (size_t i = 0; i < rx.size(); i++) {
        double dx = rx[i] - mean;
        double dy = ry[i] - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) {
        return 0;
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

Distribution pooled_distribution(const std::vector<Counts> &counts) {
    std::map<BitString, uint64_t> total;
    uint64_t shots = 0;
    for (const Counts &c : counts) {
        for (const auto &[s, n] : c.histogram) {
            total[s] += n;
        }
        shots += c.total_shots;
    }
    Distribution out;
    for (const auto &[s, n] : total) {
        out[s] = static_cast<double>(n) / static_cast<double>(shots);
    }
    return out;
}

std::vector<BitString> collect_strings(const EnsembleRun &run, double f_min) {
    if (!(f_min > 0 && f_min <= 1)) {
        throw std::invalid_argument("f_min must be in (0, 1]");
    }
    run.validate();
    Distribution pooled = pooled_distribution(run.target_counts);
    std::vector<std::pair<double, BitString>> kept;
    for (const auto &[s, p] : pooled) {
        double best = 0;
        for (const Counts &c : run.target_counts) {
            best = std::max(best, c.probability(s));
        }
        if (best >= f_min * (1 - 1e-12)) {
            kept.emplace_back(p, s);
        }
    }
    if (kept.empty()) {
        throw EmptyStringSetError("no output string reaches f_min = " + std::to_string(f_min) + " on any member");
    }
    std::sort(kept.begin(), kept.end(), [](const auto &a, const auto &b) {
        if (a.first != b.first) {
            return a.first > b.first;
        }
        return a.second < b.second;
    });
    size_t limit = static_cast<size_t>(std::ceil(1 / f_min - 1e-9));
    if (kept.size() > limit) {
        kept.resize(limit);
    }
    std::vector<BitString> out;
    out.reserve(kept.size());
    for (auto &[p, s] : kept) {
        out.push_back(std::move(s));
    }
    return out;
}

std::map<BitString, double> correlate(const EnsembleRun &run, const std::vector<double> &canary_fidelities,
                                      const std::vector<BitString> &strings, size_t threads) {
    if (canary_fidelities.size() != run.target_counts.size()) {
        throw std::invalid_argument("one canary fidelity per member is required");
    }
    std::vector<double> rho(strings.size());
    parallel_for(strings.size(), threads, [&](size_t i) {
        std::vector<double> p(run.target_counts.size());
        for (size_t m = 0; m < p.size(); m++) {
            p[m] = run.target_counts[m].probability(strings[i]);
        }
        rho[i] = spearman(p, canary_fidelities);
    });
    std::map<BitString, double> out;
    for (size_t i = 0; i < strings.size(); i++) {
        out[strings[i]] = rho[i];
    }
    return out;
}

double WeightFunction::operator()(double rho) const {
    switch (kind) {
        case Kind::Linear:
            return std::max(rho, 0.0);
        case Kind::Square:
            return rho > 0 ? rho * rho : 0.0;
        case Kind::Threshold:
            return rho >= tau && rho > 0 ? 1.0 : 0.0;
    }
    return 0;
}

WeightFunction WeightFunction::parse(std::string_view text) {
    if (text == "linear") {
        return {Kind::Linear, 0.5};
    }
    if (text == "square") {
        return {Kind::Square, 0.5};
    }
    constexpr std::string_view prefix = "threshold:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string rest(text.substr(prefix.size()));
        size_t used = 0;
        double tau = 0;
        try {
            tau = std::stod(rest, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == rest.size() && !rest.empty() && tau >= -1 && tau <= 1) {
            return {Kind::Threshold, tau};
        }
    }
    throw std::invalid_argument("unknown weight function '" + std::string(text) +
                                "' (expected linear, square or threshold:TAU)");
}

std::string WeightFunction::str() const {
    switch (kind) {
        case Kind::Linear:
            return "linear";
        case Kind::Square:
            return "square";
        case Kind::Threshold: {
            char buf[64];
            auto [end, ec] = std::to_chars(buf, buf + sizeof buf, tau);
            return "threshold:" + std::string(buf, end);
        }
    }
    return "";
}

Weighted weight_distribution(const Distribution &p_base, const std::map<BitString, double> &rho,
                             const WeightFunction &weight) {
    Weighted out;
    double total = 0;
    for (const auto &[s, p] : p_base) {
        auto it = rho.find(s);
        double w = it == rho.end() ? 0.0 : weight(it->second);
        out.weights[s] = w;
        total += p * w;
    }
    if (total <= 0) {
        out.q = p_base;
        out.fallback = true;
        return out;
    }
    for (const auto &[s, p] : p_base) {
        out.q[s] = p * out.weights[s] / total;
    }
    return out;
}

void sort_by_rank(std::vector<CorrelationRecord> &records) {
    std::sort(records.begin(), records.end(), [](const CorrelationRecord &a, const CorrelationRecord &b) {
        if (a.rho != b.rho) {
            return a.rho > b.rho;
        }
        if (a.p_base != b.p_base) {
            return a.p_base > b.p_base;
        }
        return a.string < b.string;
    });
}

Rank rank_of(std::vector<CorrelationRecord> records, const std::set<BitString> &correct) {
    sort_by_rank(records);
    Rank r;
    for (size_t i = 0; i < records.size(); i++) {
        if (correct.count(records[i].string)) {
            if (r.found == 0) {
                r.best = i + 1;
            }
            r.worst = i + 1;
            r.found++;
        }
    }
    return r;
}

std::set<BitString> correct_set(const Distribution &ideal, double ratio) {
    double top = 0;
    for (const auto &[s, p] : ideal) {
        top = std::max(top, p);
    }
    std::set<BitString> out;
    if (top <= 0) {
        return out;
    }
    for (const auto &[s, p] : ideal) {
        if (p >= ratio * top * (1 - 1e-12)) {
            out.insert(s);
        }
    }
    return out;
}

Metrics metrics(const EnsembleRun &run, const Distribution &q, const Distribution &ideal) {
    Metrics m;
    m.fidelity_q = overlap(q, ideal);
    m.fidelity_pooled = overlap(pooled_distribution(run.target_counts), ideal);
    double sum = 0;
    for (const Counts &c : run.target_counts) {
        double f = overlap(c.distribution(), ideal);
        m.member_fidelities.push_back(f);
        sum += f;
        m.best_member_fidelity = std::max(m.best_member_fidelity, f);
    }
    m.mean_member_fidelity = m.member_fidelities.empty() ? 0 : sum / static_cast<double>(m.member_fidelities.size());
    if (m.mean_member_fidelity > 0) {
        m.boost_mean = m.fidelity_q / m.mean_member_fidelity;
    }
    if (m.best_member_fidelity > 0) {
        m.boost_vs_best = m.fidelity_q / m.best_member_fidelity;
    }
    return m;
}

Report analyze(const EnsembleRun &run, const AnalysisOptions &options, const Distribution *ideal,
               double correct_ratio) {
    run.validate();
    Report report;
    report.members = run.members;
    CliffordOutcomes canary(run.canary_circuit);
    for (const Counts &c : run.canary_counts) {
        report.canary_fidelities.push_back(canary_fidelity(c, canary));
    }
    report.canary_ranks = canary_ordering(report.canary_fidelities);

    std::vector<BitString> strings = collect_strings(run, options.f_min);
    report.strings_analyzed = strings.size();
    std::map<BitString, double> rho = correlate(run, report.canary_fidelities, strings, options.threads);

    Distribution pooled = pooled_distribution(run.target_counts);
    Distribution p_base;
    double mass = 0;
    for (const auto &s : strings) {
        mass += pooled[s];
    }
    for (const auto &s : strings) {
        p_base[s] = pooled[s] / mass;
    }
    Weighted w = weight_distribution(p_base, rho, options.weight);
    report.fallback = w.fallback;
    for (const auto &s : strings) {
        report.records.push_back({s, rho[s], p_base[s], w.weights[s], w.q[s]});
    }
    sort_by_rank(report.records);

    if (ideal != nullptr) {
        report.correct = correct_set(*ideal, correct_ratio);
        report.rank = rank_of(report.records, report.correct);
        report.metrics = metrics(run, w.q, *ideal);
    }
    return report;
}

}  // namespace canord
