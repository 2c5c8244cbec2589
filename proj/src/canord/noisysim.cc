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

#include "canord/noisysim.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <string>

#include "canord/canary.h"
#include "canord/parallel.h"
#include "canord/rng.h"
#include "canord/statevector.h"
#include "canord/tableau.h"

namespace canord {

namespace {

constexpr uint64_t kErrorStream = 0x4E4F4953ULL;
constexpr uint64_t kOutcomeStream = 0x4D454153ULL;
constexpr size_t kCheckpointBudgetBytes = size_t{64} << 20;

double clip(double p, double hi = 0.5) {
    return std::clamp(p, 0.0, hi);
}

std::pair<uint32_t, uint32_t> edge_key(uint32_t a, uint32_t b) {
    return {std::min(a, b), std::max(a, b)};
}

void check_prob(double p, double hi, const char *what, uint32_t where) {
    if (!(p >= 0 && p <= hi)) {
        throw std::invalid_argument(std::string(what) + " on qubit " + std::to_string(where) + " is " +
                                    std::to_string(p) + ", outside [0, " + std::to_string(hi) + "]");
    }
}

}  // namespace

NoiseParams NoiseParams::scaled(double factor) const {
    return {clip(p1 * factor), clip(p2 * factor), clip(idle_z * factor), clip(ro01 * factor), clip(ro10 * factor)};
}

NoiseModel NoiseModel::uniform(uint32_t num_qubits, const std::vector<std::pair<uint32_t, uint32_t>> &edges,
                               const NoiseParams &params) {
    NoiseModel m;
    m.num_qubits = num_qubits;
    m.p1.assign(num_qubits, params.p1);
    m.idle_z.assign(num_qubits, params.idle_z);
    m.ro01.assign(num_qubits, params.ro01);
    m.ro10.assign(num_qubits, params.ro10);
    for (auto [a, b] : edges) {
        if (a >= num_qubits || b >= num_qubits || a == b) {
            throw std::invalid_argument("bad edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        }
        m.p2[edge_key(a, b)] = params.p2;
    }
    m.validate();
    return m;
}

NoiseModel NoiseModel::for_graph(const CouplingGraph &graph, const NoiseParams &params) {
    std::vector<std::pair<uint32_t, uint32_t>> edges(graph.edges().begin(), graph.edges().end());
    return uniform(graph.num_physical_qubits(), edges, params);
}

NoiseModel NoiseModel::all_to_all(uint32_t num_qubits, const NoiseParams &params) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t a = 0; a < num_qubits; a++) {
        for (uint32_t b = a + 1; b < num_qubits; b++) {
            edges.emplace_back(a, b);
        }
    }
    return uniform(num_qubits, edges, params);
}

NoiseModel NoiseModel::noiseless(uint32_t num_qubits) {
    return all_to_all(num_qubits, NoiseParams{0, 0, 0, 0, 0});
}

NoiseModel NoiseModel::scaled(double factor) const {
    if (!(factor >= 0) || !std::isfinite(factor)) {
        throw std::invalid_argument("noise scale must be finite and nonnegative");
    }
    NoiseModel m = *this;
    auto scale = [&](std::vector<double> &v) {
        for (double &p : v) {
            p = clip(p * factor);
        }
    };
    scale(m.p1);
    scale(m.idle_z);
    scale(m.ro01);
    scale(m.ro10);
    for (auto &[e, p] : m.p2) {
        p = clip(p * factor);
    }
    return m;
}

double NoiseModel::edge_error(uint32_t a, uint32_t b) const {
    auto it = p2.find(edge_key(a, b));
    if (it == p2.end()) {
        throw CircuitError("noise model has no edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    return it->second;
}

double NoiseModel::mean_p2() const {
    if (p2.empty()) {
        return 0;
    }
    double total = 0;
    for (const auto &[e, p] : p2) {
        total += p;
    }
    return total / static_cast<double>(p2.size());
}

void NoiseModel::validate() const {
    for (const auto *v : {&p1, &idle_z, &ro01, &ro10}) {
        if (v->size() != num_qubits) {
            throw std::invalid_argument("noise model vectors must have one entry per qubit");
        }
    }
    for (uint32_t q = 0; q < num_qubits; q++) {
        check_prob(p1[q], 0.5, "p1", q);
        check_prob(idle_z[q], 0.5, "idle_z", q);
        check_prob(ro01[q], 1.0, "ro01", q);
        check_prob(ro10[q], 1.0, "ro10", q);
    }
    for (const auto &[e, p] : p2) {
        if (e.first >= e.second || e.second >= num_qubits) {
            throw std::invalid_argument("bad edge key (" + std::to_string(e.first) + ", " +
                                        std::to_string(e.second) + ")");
        }
        check_prob(p, 0.5, "p2", e.first);
    }
}

NoiseModel jitter_model(const NoiseModel &base, double jitter, uint64_t seed) {
    if (!(jitter >= 1) || !std::isfinite(jitter)) {
        throw std::invalid_argument("jitter must be >= 1");
    }
    Rng rng(seed);
    std::uniform_real_distribution<double> factor(1 / jitter, jitter);
    auto draw = [&](double p) {
        return jitter == 1 ? p : clip(p * factor(rng));
    };
    NoiseModel m = base;
    for (uint32_t q = 0; q < m.num_qubits; q++) {
        m.p1[q] = draw(m.p1[q]);
        m.idle_z[q] = draw(m.idle_z[q]);
        m.ro01[q] = draw(m.ro01[q]);
        m.ro10[q] = draw(m.ro10[q]);
    }
    for (auto &[e, p] : m.p2) {
        p = draw(p);
    }
    return m;
}

std::vector<NoiseModel> make_diverse_ensemble(const NoiseModel &base, size_t count, double jitter, uint64_t seed) {
    if (count < 2) {
        throw std::invalid_argument("an ensemble needs at least 2 members");
    }
    std::vector<NoiseModel> out;
    out.reserve(count);
    for (size_t i = 0; i < count; i++) {
        out.push_back(jitter_model(base, jitter, derive_seed(seed, 0x4A495454ULL, i)));
    }
    return out;
}

namespace {

enum class OpKind : uint8_t { X, SX, RZ, CX };
enum class SiteKind : uint8_t { OneQubit, TwoQubit, Idle };

struct Op {
    OpKind kind;
    uint32_t a;
    uint32_t b;
    double theta;
    int quarter_turns;
};

struct Site {
    uint32_t after_op;
    SiteKind kind;
    uint32_t a;
    uint32_t b;
};

struct Readout {
    uint32_t qubit;  // compact index
    uint32_t clbit;
    double ro01;
    double ro10;
};

/// Basis circuit restricted to the qubits it touches, with every error site
/// listed in execution order.
struct Program {
    uint32_t width = 0;
    std::vector<Op> ops;
    std::vector<Site> sites;
    std::vector<double> cumulative_hazard;
    std::vector<Readout> readouts;
    uint32_t num_clbits = 0;
    bool clifford = false;
};

Program compile(const Circuit &circuit, const NoiseModel &model) {
    circuit.validate(true);
    model.validate();
    if (circuit.num_qubits > model.num_qubits) {
        throw CircuitError("circuit has " + std::to_string(circuit.num_qubits) + " qubits but noise model covers " +
                           std::to_string(model.num_qubits));
    }
    std::vector<int64_t> compact(circuit.num_qubits, -1);
    std::vector<uint32_t> physical;
    for (const Gate &g : circuit.gates) {
        if (g.kind == GateKind::BARRIER) {
            continue;
        }
        for (uint32_t q : g.qubits) {
            if (compact[q] < 0) {
                compact[q] = static_cast<int64_t>(physical.size());
                physical.push_back(q);
            }
        }
    }

    Program p;
    p.width = static_cast<uint32_t>(physical.size());
    p.num_clbits = circuit.num_clbits;
    p.clifford = is_clifford(circuit);

    std::vector<double> hazards;
    auto add_site = [&](uint32_t after, SiteKind kind, uint32_t a, uint32_t b, double prob) {
        p.sites.push_back({after, kind, a, b});
        hazards.push_back(-std::log1p(-prob));
    };

    // ASAP CX layering: the layer of a CX is one past the latest layer of its operands.
    std::vector<size_t> level(p.width, 0);
    std::vector<std::vector<uint32_t>> layer_members;
    std::vector<uint32_t> layer_last_op;
    std::vector<std::pair<uint32_t, size_t>> cx_layer;  // (op index, layer)
    for (const Gate &g : circuit.gates) {
        auto c = [&](size_t i) {
            return static_cast<uint32_t>(compact[g.qubits[i]]);
        };
        switch (g.kind) {
            case GateKind::X:
                p.ops.push_back({OpKind::X, c(0), 0, 0, 0});
                break;
            case GateKind::SX:
                p.ops.push_back({OpKind::SX, c(0), 0, 0, 0});
                break;
            case GateKind::RZ:
                p.ops.push_back({OpKind::RZ, c(0), 0, g.angle.radians(),
                                 p.clifford ? clifford_quarter_turns(g.angle) : 0});
                break;
            case GateKind::CX: {
                uint32_t a = c(0);
                uint32_t b = c(1);
                p.ops.push_back({OpKind::CX, a, b, 0, 0});
                size_t layer = std::max(level[a], level[b]);
                level[a] = level[b] = layer + 1;
                if (layer >= layer_members.size()) {
                    layer_members.resize(layer + 1);
                    layer_last_op.resize(layer + 1, 0);
                }
                layer_members[layer].push_back(a);
                layer_members[layer].push_back(b);
                uint32_t index = static_cast<uint32_t>(p.ops.size() - 1);
                layer_last_op[layer] = std::max(layer_last_op[layer], index);
                break;
            }
            case GateKind::MEASURE: {
                uint32_t q = g.qubits[0];
                p.readouts.push_back({c(0), g.clbit, model.ro01[q], model.ro10[q]});
                break;
            }
            default:
                break;
        }
    }

    std::vector<std::vector<uint32_t>> idle_after(p.ops.size());
    for (size_t layer = 0; layer < layer_members.size(); layer++) {
        std::vector<bool> busy(p.width, false);
        for (uint32_t q : layer_members[layer]) {
            busy[q] = true;
        }
        for (uint32_t q = 0; q < p.width; q++) {
            if (!busy[q]) {
                idle_after[layer_last_op[layer]].push_back(q);
            }
        }
    }

    for (uint32_t i = 0; i < p.ops.size(); i++) {
        const Op &op = p.ops[i];
        if (op.kind == OpKind::CX) {
            add_site(i, SiteKind::TwoQubit, op.a, op.b, model.edge_error(physical[op.a], physical[op.b]));
        } else {
            add_site(i, SiteKind::OneQubit, op.a, 0, model.p1[physical[op.a]]);
        }
        for (uint32_t q : idle_after[i]) {
            add_site(i, SiteKind::Idle, q, 0, model.idle_z[physical[q]]);
        }
    }
    p.cumulative_hazard.resize(hazards.size());
    std::partial_sum(hazards.begin(), hazards.end(), p.cumulative_hazard.begin());
    return p;
}

/// Error events of one shot: (site index << 4) | Pauli code, in site order.
/// 1q codes are 1..3 (X, Y, Z); 2q codes 1..15 hold the Pauli on `a` in the
/// low two bits and on `b` in the next two.
using Pattern = std::vector<uint32_t>;

Pattern draw_pattern(const Program &p, Rng &rng) {
    Pattern out;
    const auto &cum = p.cumulative_hazard;
    if (cum.empty() || cum.back() == 0) {
        return out;
    }
    double t = 0;
    while (true) {
        t += -std::log1p(-uniform01(rng));
        auto it = std::upper_bound(cum.begin(), cum.end(), t);
        if (it == cum.end()) {
            return out;
        }
        uint32_t k = static_cast<uint32_t>(it - cum.begin());
        uint32_t code;
        switch (p.sites[k].kind) {
            case SiteKind::OneQubit:
                code = 1 + static_cast<uint32_t>(uniform_below(rng, 3));
                break;
            case SiteKind::TwoQubit:
                code = 1 + static_cast<uint32_t>(uniform_below(rng, 15));
                break;
            default:
                code = 3;
                break;
        }
        out.push_back(k << 4 | code);
        t = *it;
    }
}

using Amp = std::complex<double>;

/// Pure state whose amplitudes are stored under an invertible affine map of
/// basis indices: psi[A(i)] = amps[i], with bit k of A(i) equal to
/// parity(rows[k] & i) ^ offset_k. X and CX only update the map. Diagonal
/// gates are kept as pending phase terms exp(i angle * parity(mask & i)) over
/// stored indices and applied only when a later SX does not commute with them;
/// phases still pending at measurement are never applied.
struct FrameState {
    std::vector<Amp> amps;
    std::vector<uint64_t> rows;
    std::vector<uint64_t> cols;  // columns of the inverse linear part
    uint64_t offset = 0;
    std::vector<std::pair<uint64_t, double>> pending;

    explicit FrameState(uint32_t width) : amps(size_t{1} << width, 0.0), rows(width), cols(width) {
        amps[0] = 1.0;
        for (uint32_t k = 0; k < width; k++) {
            rows[k] = cols[k] = uint64_t{1} << k;
        }
    }

    bool bit(uint32_t q, uint64_t i) const {
        return (__builtin_parityll(rows[q] & i) ^ (offset >> q)) & 1;
    }

    uint64_t true_index(uint64_t i) const {
        uint64_t out = 0;
        for (uint32_t q = 0; q < rows.size(); q++) {
            out |= static_cast<uint64_t>(bit(q, i)) << q;
        }
        return out;
    }
};

// Complex products are spelled out to stay off the checked library path.
// Global phases are dropped.
struct FrameKernels {
    static void x(FrameState &s, uint32_t q) {
        s.offset ^= uint64_t{1} << q;
    }
    static void cx(FrameState &s, uint32_t c, uint32_t t) {
        s.rows[t] ^= s.rows[c];
        s.offset ^= ((s.offset >> c) & 1) << t;
        s.cols[c] ^= s.cols[t];
    }
    /// diag(1, e^{i theta}) on qubit q, deferred.
    static void phase(FrameState &s, uint32_t q, double theta) {
        const uint64_t mask = s.rows[q];
        // With the offset bit set the phase lands on parity 0; up to a global
        // phase that is the opposite angle on parity 1.
        const double angle = ((s.offset >> q) & 1) ? -theta : theta;
        for (auto it = s.pending.begin(); it != s.pending.end(); ++it) {
            if (it->first == mask) {
                it->second = std::remainder(it->second + angle, kTwoPi);
                if (std::abs(it->second) < 1e-13) {
                    s.pending.erase(it);
                }
                return;
            }
        }
        s.pending.emplace_back(mask, angle);
    }
    static void apply_term(FrameState &s, uint64_t mask, double angle) {
        const double re = std::cos(angle);
        const double im = std::sin(angle);
        const size_t stride = size_t{1} << (63 - __builtin_clzll(mask));
        Amp *d = s.amps.data();
        const size_t n = s.amps.size();
        for (size_t base = 0; base < n; base += 2 * stride) {
            for (size_t i = base; i < base + stride; i++) {
                size_t k = __builtin_parityll(mask & i) ? i : i + stride;
                Amp a = d[k];
                d[k] = Amp(a.real() * re - a.imag() * im, a.real() * im + a.imag() * re);
            }
        }
    }
    static void z(FrameState &s, uint32_t q) {
        phase(s, q, kPi);
    }
    static void y(FrameState &s, uint32_t q) {
        z(s, q);
        x(s, q);
    }
    static void sx(FrameState &s, uint32_t q) {
        // Pending terms that do not commute with this SX are folded into the
        // same pass through a table of their 2^k combined phases.
        constexpr size_t kMaxFolded = 8;
        const uint64_t v = s.cols[q];
        std::array<uint64_t, kMaxFolded> masks{};
        std::array<double, kMaxFolded> angles{};
        size_t k = 0;
        for (size_t t = 0; t < s.pending.size();) {
            if (__builtin_parityll(s.pending[t].first & v)) {
                if (k < kMaxFolded) {
                    masks[k] = s.pending[t].first;
                    angles[k] = s.pending[t].second;
                    k++;
                } else {
                    apply_term(s, s.pending[t].first, s.pending[t].second);
                }
                s.pending[t] = s.pending.back();
                s.pending.pop_back();
            } else {
                t++;
            }
        }
        std::array<Amp, size_t{1} << kMaxFolded> table;
        table[0] = 1.0;
        for (size_t t = 0; t < k; t++) {
            const Amp e(std::cos(angles[t]), std::sin(angles[t]));
            for (size_t key = 0; key < (size_t{1} << t); key++) {
                table[key | (size_t{1} << t)] = table[key] * e;
            }
        }
        const size_t full = (size_t{1} << k) - 1;

        // Stored partners differ by v = A^-1 e_q. With m = (a0 + a1) / 2 and
        // d = (a0 - a1) / 2 the gate maps a0 -> m + i d and a1 -> m - i d.
        const size_t stride = size_t{1} << (63 - __builtin_clzll(v));
        const uint64_t row = s.rows[q];
        const uint64_t flip = (s.offset >> q) & 1;
        Amp *d = s.amps.data();
        const size_t n = s.amps.size();
        for (size_t base = 0; base < n; base += 2 * stride) {
            for (size_t i = base; i < base + stride; i++) {
                const bool one = (__builtin_parityll(row & i) ^ flip) & 1;
                const size_t i0 = one ? i ^ v : i;
                const size_t i1 = one ? i : i ^ v;
                Amp a0 = d[i0];
                Amp a1 = d[i1];
                if (k != 0) {
                    size_t key = 0;
                    for (size_t t = 0; t < k; t++) {
                        key |= static_cast<size_t>(__builtin_parityll(masks[t] & i0)) << t;
                    }
                    a0 = mul(a0, table[key]);
                    a1 = mul(a1, table[key ^ full]);
                }
                double mr = 0.5 * (a0.real() + a1.real());
                double mi = 0.5 * (a0.imag() + a1.imag());
                double dr = 0.5 * (a0.real() - a1.real());
                double di = 0.5 * (a0.imag() - a1.imag());
                d[i0] = Amp(mr - di, mi + dr);
                d[i1] = Amp(mr + di, mi - dr);
            }
        }
    }
    static Amp mul(Amp a, Amp b) {
        return Amp(a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real());
    }
    static void pauli(FrameState &s, uint32_t q, uint32_t code) {
        switch (code) {
            case 1:
                x(s, q);
                break;
            case 2:
                y(s, q);
                break;
            case 3:
                z(s, q);
                break;
            default:
                break;
        }
    }
    static void op(FrameState &s, const Op &o) {
        switch (o.kind) {
            case OpKind::X:
                x(s, o.a);
                break;
            case OpKind::SX:
                sx(s, o.a);
                break;
            case OpKind::RZ:
                phase(s, o.a, o.theta);
                break;
            case OpKind::CX:
                cx(s, o.a, o.b);
                break;
        }
    }
};

struct TableauKernels {
    static void pauli(Tableau &t, uint32_t q, uint32_t code) {
        switch (code) {
            case 1:
                t.x(q);
                break;
            case 2:
                t.y(q);
                break;
            case 3:
                t.z(q);
                break;
            default:
                break;
        }
    }
    static void op(Tableau &t, const Op &o) {
        switch (o.kind) {
            case OpKind::X:
                t.x(o.a);
                break;
            case OpKind::SX:
                t.sx(o.a);
                break;
            case OpKind::RZ:
                t.rz_quarter_turns(o.a, o.quarter_turns);
                break;
            case OpKind::CX:
                t.cx(o.a, o.b);
                break;
        }
    }
};

/// Noiseless states before ops 0, K, 2K, ... so a trajectory can resume from
/// the last checkpoint preceding its first error.
template <typename State, typename K>
class Checkpoints {
   public:
    Checkpoints(const Program &p, State initial, size_t state_bytes) : program_(p) {
        size_t n = p.ops.size();
        size_t slots = std::max<size_t>(1, kCheckpointBudgetBytes / std::max<size_t>(1, state_bytes));
        stride_ = std::max<size_t>(1, (n + slots - 1) / slots);
        for (size_t i = 0; i < n; i++) {
            if (i % stride_ == 0) {
                saved_.push_back(initial);
            }
            K::op(initial, p.ops[i]);
        }
        final_ = std::move(initial);
    }

    /// Runs the program with `pattern` injected.
    State run(const Pattern &pattern) const {
        if (pattern.empty()) {
            return *final_;
        }
        const auto &ops = program_.ops;
        size_t first_op = program_.sites[pattern[0] >> 4].after_op;
        size_t start = first_op / stride_ * stride_;
        State s = saved_[start / stride_];
        size_t next_event = 0;
        for (size_t i = start; i < ops.size(); i++) {
            K::op(s, ops[i]);
            while (next_event < pattern.size() && program_.sites[pattern[next_event] >> 4].after_op == i) {
                inject(s, pattern[next_event++]);
            }
        }
        return s;
    }

   private:
    void inject(State &s, uint32_t event) const {
        const Site &site = program_.sites[event >> 4];
        uint32_t code = event & 15;
        if (site.kind == SiteKind::TwoQubit) {
            K::pauli(s, site.a, code & 3);
            K::pauli(s, site.b, code >> 2);
        } else {
            K::pauli(s, site.a, code);
        }
    }

    const Program &program_;
    size_t stride_ = 1;
    std::vector<State> saved_;
    std::optional<State> final_;
};

bool apply_readout(const Readout &r, bool bit, Rng &rng) {
    double u = uniform01(rng);
    return bit ? u >= r.ro10 : u < r.ro01;
}

}  // namespace

Counts run_shots(const Circuit &circuit, const NoiseModel &model, uint64_t shots, uint64_t seed,
                 const RunOptions &options) {
    Program program = compile(circuit, model);
    if (!program.clifford && program.width > options.max_qubits) {
        throw CircuitError("circuit touches " + std::to_string(program.width) + " qubits; the noisy simulator limit is " +
                           std::to_string(options.max_qubits));
    }
    if (!program.clifford && program.width > kMaxStatevectorQubits) {
        throw CircuitError("circuit touches " + std::to_string(program.width) + " qubits, beyond the statevector limit");
    }

    std::vector<Pattern> patterns(shots);
    parallel_for(shots, options.threads, [&](size_t shot) {
        Rng rng(derive_seed(seed, kErrorStream, shot));
        patterns[shot] = draw_pattern(program, rng);
    });
    std::map<Pattern, std::vector<uint64_t>> groups;
    for (uint64_t shot = 0; shot < shots; shot++) {
        groups[patterns[shot]].push_back(shot);
    }
    patterns.clear();
    std::vector<const std::pair<const Pattern, std::vector<uint64_t>> *> work;
    work.reserve(groups.size());
    for (const auto &g : groups) {
        work.push_back(&g);
    }

    std::vector<BitString> results(shots);
    if (program.clifford) {
        Tableau initial(program.width);
        size_t bytes = sizeof(uint64_t) * 3 * (2 * program.width + 1) * ((program.width + 63) / 64 + 1);
        Checkpoints<Tableau, TableauKernels> cp(program, initial, bytes);
        parallel_for(work.size(), options.threads, [&](size_t w) {
            const auto &[pattern, members] = *work[w];
            Tableau state = cp.run(pattern);
            for (uint64_t shot : members) {
                Rng rng(derive_seed(seed, kOutcomeStream, shot));
                Tableau t = state;
                BitString out = BitString::zeros(program.num_clbits);
                for (const Readout &r : program.readouts) {
                    bool bit = t.measure(r.qubit, rng).bit;
                    out.set_bit(r.clbit, apply_readout(r, bit, rng));
                }
                results[shot] = std::move(out);
            }
        });
    } else {
        FrameState initial(program.width);
        size_t bytes = initial.amps.size() * sizeof(Amp) + 2 * program.width * sizeof(uint64_t);
        Checkpoints<FrameState, FrameKernels> cp(program, initial, bytes);
        parallel_for(work.size(), options.threads, [&](size_t w) {
            const auto &[pattern, members] = *work[w];
            FrameState state = cp.run(pattern);
            std::vector<double> cumulative(state.amps.size());
            double total = 0;
            for (size_t i = 0; i < state.amps.size(); i++) {
                total += std::norm(state.amps[i]);
                cumulative[i] = total;
            }
            for (uint64_t shot : members) {
                Rng rng(derive_seed(seed, kOutcomeStream, shot));
                double u = uniform01(rng) * total;
                size_t stored = std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
                uint64_t index = state.true_index(std::min(stored, cumulative.size() - 1));
                BitString out = BitString::zeros(program.num_clbits);
                for (const Readout &r : program.readouts) {
                    bool bit = (index >> r.qubit) & 1;
                    out.set_bit(r.clbit, apply_readout(r, bit, rng));
                }
                results[shot] = std::move(out);
            }
        });
    }

    Counts counts(program.num_clbits);
    for (const auto &s : results) {
        counts.add(s);
    }
    return counts;
}

}  // namespace canord
