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

#include "support/oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace canord::oracle {

std::string reversible_eval(const Circuit &circuit, std::vector<bool> bits) {
    std::string out(circuit.num_clbits, '0');
    for (const Gate &g : circuit.gates) {
        const auto &q = g.qubits;
        switch (g.kind) {
            case GateKind::X:
                bits[q[0]] = !bits[q[0]];
                break;
            case GateKind::CX:
                if (bits[q[0]]) {
                    bits[q[1]] = !bits[q[1]];
                }
                break;
            case GateKind::CCX:
                if (bits[q[0]] && bits[q[1]]) {
                    bits[q[2]] = !bits[q[2]];
                }
                break;
            case GateKind::SWAP: {
                bool t = bits[q[0]];
                bits[q[0]] = bits[q[1]];
                bits[q[1]] = t;
                break;
            }
            case GateKind::MEASURE:
                out[circuit.num_clbits - 1 - g.clbit] = bits[q[0]] ? '1' : '0';
                break;
            case GateKind::BARRIER:
                break;
            default:
                throw std::invalid_argument("reversible_eval: non-classical gate " + g.str());
        }
    }
    return out;
}

double spearman_bruteforce(const std::vector<double> &x, const std::vector<double> &y) {
    auto ranks = [](const std::vector<double> &v) {
        std::vector<double> r(v.size());
        for (size_t i = 0; i < v.size(); i++) {
            double below = 0;
            double equal = 0;
            for (size_t j = 0; j < v.size(); j++) {
                below += v[j] < v[i];
                equal += v[j] == v[i];
            }
            r[i] = below + (equal + 1) / 2;
        }
        return r;
    };
    std::vector<double> rx = ranks(x);
    std::vector<double> ry = ranks(y);
    double n = static_cast<double>(x.size());
    double mx = 0;
    double my = 0;
    for (size_t i = 0; i < rx.size(); i++) {
        mx += rx[i] / n;
        my += ry[i] / n;
    }
    double cov = 0;
    double vx = 0;
    double vy = 0;
    for (size_t i = 0; i < rx.size(); i++) {
        cov += (rx[i] - mx) * (ry[i] - my);
        vx += (rx[i] - mx) * (rx[i] - mx);
        vy += (ry[i] - my) * (ry[i] - my);
    }
    if (vx < 1e-300 || vy < 1e-300) {
        return 0;
    }
    return cov / std::sqrt(vx) / std::sqrt(vy);
}

double overlap_bruteforce(const std::map<std::string, double> &a, const std::map<std::string, double> &b) {
    std::set<std::string> keys;
    for (const auto &[k, v] : a) {
        keys.insert(k);
    }
    for (const auto &[k, v] : b) {
        keys.insert(k);
    }
    double total = 0;
    for (const auto &k : keys) {
        double pa = a.count(k) ? a.at(k) : 0.0;
        double pb = b.count(k) ? b.at(k) : 0.0;
        total += pa < pb ? pa : pb;
    }
    return total;
}

namespace {

using C = std::complex<double>;

Mat4 embed(const Mat2 &u, uint32_t q) {
    Mat4 m{};
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            int other = q == 0 ? 1 : 0;
            if (((r >> other) & 1) != ((c >> other) & 1)) {
                continue;
            }
            m[r * 4 + c] = u[((r >> q) & 1) * 2 + ((c >> q) & 1)];
        }
    }
    return m;
}

std::array<C, 4> mat_vec(const Mat4 &m, const std::array<C, 4> &v) {
    std::array<C, 4> out{};
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            out[r] += m[r * 4 + c] * v[c];
        }
    }
    return out;
}

}  // namespace

std::array<C, 4> dense_two_qubit(const Circuit &circuit) {
    if (circuit.num_qubits != 2) {
        throw std::invalid_argument("dense_two_qubit needs a 2-qubit circuit");
    }
    std::array<C, 4> v{1, 0, 0, 0};
    const double r = 1 / std::sqrt(2.0);
    for (const Gate &g : circuit.gates) {
        switch (g.kind) {
            case GateKind::X:
                v = mat_vec(embed({0, 1, 1, 0}, g.qubits[0]), v);
                break;
            case GateKind::H:
                v = mat_vec(embed({r, r, r, -r}, g.qubits[0]), v);
                break;
            case GateKind::SX:
                v = mat_vec(embed({C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5)}, g.qubits[0]), v);
                break;
            case GateKind::RZ: {
                double t = g.angle.radians();
                v = mat_vec(embed({std::polar(1.0, -t / 2), 0, 0, std::polar(1.0, t / 2)}, g.qubits[0]), v);
                break;
            }
            case GateKind::CX: {
                Mat4 m{};
                uint32_t c = g.qubits[0];
                uint32_t t = g.qubits[1];
                for (int col = 0; col < 4; col++) {
                    int row = ((col >> c) & 1) ? col ^ (1 << t) : col;
                    m[row * 4 + col] = 1;
                }
                v = mat_vec(m, v);
                break;
            }
            case GateKind::MEASURE:
            case GateKind::BARRIER:
                break;
            default:
                throw std::invalid_argument("dense_two_qubit: unsupported gate " + g.str());
        }
    }
    return v;
}

double phase_insensitive_distance(const std::vector<C> &a, const std::vector<C> &b) {
    if (a.size() != b.size()) {
        return INFINITY;
    }
    size_t pivot = 0;
    for (size_t i = 0; i < b.size(); i++) {
        if (std::abs(b[i]) > std::abs(b[pivot])) {
            pivot = i;
        }
    }
    C phase = 1;
    if (std::abs(b[pivot]) > 0 && std::abs(a[pivot]) > 0) {
        phase = a[pivot] / b[pivot];
        phase /= std::abs(phase);
    }
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

namespace {

uint32_t pick(Rng &rng, uint32_t n) {
    return static_cast<uint32_t>(uniform_below(rng, n));
}

std::pair<uint32_t, uint32_t> pick_pair(Rng &rng, uint32_t n) {
    uint32_t a = pick(rng, n);
    uint32_t b = pick(rng, n - 1);
    if (b >= a) {
        b++;
    }
    return {a, b};
}

void measure_all(Circuit &c) {
    for (uint32_t q = 0; q < c.num_qubits; q++) {
        c.append(Gate::measure(q, q));
    }
}

}  // namespace

Circuit random_clifford(uint32_t n, size_t num_gates, Rng &rng) {
    Circuit c(n, n, "random_clifford");
    for (size_t i = 0; i < num_gates; i++) {
        uint32_t kind = pick(rng, n >= 2 ? 4 : 3);
        uint32_t q = pick(rng, n);
        switch (kind) {
            case 0:
                c.append(Gate::x(q));
                break;
            case 1:
                c.append(Gate::sx(q));
                break;
            case 2:
                c.append(Gate::rz(q, Angle::quarter_turns(pick(rng, 4))));
                break;
            default: {
                auto [a, b] = pick_pair(rng, n);
                c.append(Gate::cx(a, b));
                break;
            }
        }
    }
    measure_all(c);
    return c;
}

Circuit random_basis(uint32_t n, size_t num_gates, Rng &rng) {
    Circuit c(n, n, "random_basis");
    for (size_t i = 0; i < num_gates; i++) {
        uint32_t kind = pick(rng, n >= 2 ? 4 : 3);
        uint32_t q = pick(rng, n);
        switch (kind) {
            case 0:
                c.append(Gate::x(q));
                break;
            case 1:
                c.append(Gate::sx(q));
                break;
            case 2: {
                // Mix exact quarter turns, exact midpoints and generic angles.
                double t;
                switch (pick(rng, 3)) {
                    case 0:
                        t = kHalfPi * pick(rng, 4);
                        break;
                    case 1:
                        t = kPi / 4 * (2 * pick(rng, 4) + 1);
                        break;
                    default:
                        t = uniform01(rng) * 4 * kPi - 2 * kPi;
                        break;
                }
                c.append(Gate::rz(q, Angle(t)));
                break;
            }
            default: {
                auto [a, b] = pick_pair(rng, n);
                c.append(Gate::cx(a, b));
                break;
            }
        }
    }
    measure_all(c);
    return c;
}

Circuit random_source(uint32_t n, size_t num_gates, Rng &rng) {
    static constexpr GateKind one[] = {GateKind::X, GateKind::SX, GateKind::H,   GateKind::S,
                                       GateKind::SDG, GateKind::T, GateKind::TDG};
    Circuit c(n, n, "random_source");
    for (size_t i = 0; i < num_gates; i++) {
        uint32_t kind = pick(rng, n >= 3 ? 6 : (n >= 2 ? 5 : 2));
        switch (kind) {
            case 0:
                c.append(Gate::single(one[pick(rng, 7)], pick(rng, n)));
                break;
            case 1:
                c.append(Gate::rz(pick(rng, n), Angle(uniform01(rng) * kTwoPi)));
                break;
            case 2: {
                auto [a, b] = pick_pair(rng, n);
                c.append(Gate::cx(a, b));
                break;
            }
            case 3: {
                auto [a, b] = pick_pair(rng, n);
                c.append(Gate::cp(a, b, Angle(uniform01(rng) * kTwoPi)));
                break;
            }
            case 4: {
                auto [a, b] = pick_pair(rng, n);
                c.append(Gate::swap(a, b));
                break;
            }
            default: {
                auto [a, b] = pick_pair(rng, n);
                uint32_t t = pick(rng, n);
                while (t == a || t == b) {
                    t = pick(rng, n);
                }
                c.append(Gate::ccx(a, b, t));
                break;
            }
        }
    }
    measure_all(c);
    return c;
}

std::pair<double, size_t> chi_square(const std::map<std::string, uint64_t> &observed,
                                     const std::map<std::string, double> &expected, uint64_t shots) {
    double stat = 0;
    size_t bins = 0;
    double pooled_expected = 0;
    double pooled_observed = 0;
    double observed_in_support = 0;
    for (const auto &[s, p] : expected) {
        double e = p * static_cast<double>(shots);
        double o = observed.count(s) ? static_cast<double>(observed.at(s)) : 0.0;
        observed_in_support += o;
        if (e < 5) {
            pooled_expected += e;
            pooled_observed += o;
            continue;
        }
        stat += (o - e) * (o - e) / e;
        bins++;
    }
    // Observations outside the expected support go into the pooled bin.
    pooled_observed += static_cast<double>(shots) - observed_in_support;
    if (pooled_expected > 0) {
        stat += (pooled_observed - pooled_expected) * (pooled_observed - pooled_expected) / pooled_expected;
        bins++;
    } else if (pooled_observed > 0) {
        return {INFINITY, 1};
    }
    return {stat, bins > 1 ? bins - 1 : 1};
}

double chi_square_p_value(double statistic, size_t dof) {
    if (!std::isfinite(statistic)) {
        return 0;
    }
    double k = static_cast<double>(dof);
    double z = (std::cbrt(statistic / k) - (1 - 2 / (9 * k))) / std::sqrt(2 / (9 * k));
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

}  // namespace canord::oracle

namespace canord::oracle {

namespace {

using Ket = std::vector<C>;
using KetOp = std::function<void(Ket &)>;

/// Square matrix stored row-major; columns are kets.
struct Density {
    size_t dim;
    std::vector<C> m;

    void dagger() {
        std::vector<C> t(m.size());
        for (size_t r = 0; r < dim; r++) {
            for (size_t c = 0; c < dim; c++) {
                t[c * dim + r] = std::conj(m[r * dim + c]);
            }
        }
        m.swap(t);
    }

    void left(const KetOp &op) {
        Ket col(dim);
        for (size_t c = 0; c < dim; c++) {
            for (size_t r = 0; r < dim; r++) {
                col[r] = m[r * dim + c];
            }
            op(col);
            for (size_t r = 0; r < dim; r++) {
                m[r * dim + c] = col[r];
            }
        }
    }

    // rho -> U rho U^dagger
    void conjugate(const KetOp &op) {
        left(op);
        dagger();
        left(op);
        dagger();
    }
};

KetOp single(uint32_t q, std::array<C, 4> u) {
    return [q, u](Ket &v) {
        size_t bit = size_t{1} << q;
        for (size_t i = 0; i < v.size(); i++) {
            if (i & bit) {
                continue;
            }
            C a = v[i];
            C b = v[i | bit];
            v[i] = u[0] * a + u[1] * b;
            v[i | bit] = u[2] * a + u[3] * b;
        }
    };
}

KetOp pauli(uint32_t q, int code) {
    const C i(0, 1);
    switch (code) {
        case 1:
            return single(q, {0, 1, 1, 0});
        case 2:
            return single(q, {0, -i, i, 0});
        case 3:
            return single(q, {1, 0, 0, -1});
        default:
            return single(q, {1, 0, 0, 1});
    }
}

void mix(Density &rho, double p, const std::vector<KetOp> &errors) {
    if (p == 0) {
        return;
    }
    std::vector<C> acc(rho.m.size());
    for (size_t k = 0; k < acc.size(); k++) {
        acc[k] = (1 - p) * rho.m[k];
    }
    double share = p / static_cast<double>(errors.size());
    for (const KetOp &e : errors) {
        Density d = rho;
        d.conjugate(e);
        for (size_t k = 0; k < acc.size(); k++) {
            acc[k] += share * d.m[k];
        }
    }
    rho.m.swap(acc);
}

}  // namespace

std::map<std::string, double> noisy_distribution_exact(const Circuit &circuit, double p1, double p2, double idle_z,
                                                       double ro01, double ro10) {
    const uint32_t n = circuit.num_qubits;
    if (n > 5) {
        throw std::invalid_argument("noisy_distribution_exact: too many qubits");
    }
    Density rho{size_t{1} << n, {}};
    rho.m.assign(rho.dim * rho.dim, 0);
    rho.m[0] = 1;

    // ASAP CX layers; idle noise lands after the last CX (in program order) of each layer.
    std::vector<size_t> level(n, 0);
    std::map<size_t, std::pair<size_t, std::set<uint32_t>>> layers;
    for (size_t i = 0; i < circuit.gates.size(); i++) {
        const Gate &g = circuit.gates[i];
        if (g.kind != GateKind::CX) {
            continue;
        }
        size_t layer = std::max(level[g.qubits[0]], level[g.qubits[1]]);
        level[g.qubits[0]] = level[g.qubits[1]] = layer + 1;
        auto &entry = layers[layer];
        entry.first = std::max(entry.first, i);
        entry.second.insert(g.qubits.begin(), g.qubits.end());
    }
    std::map<size_t, std::vector<uint32_t>> idle_after;
    for (const auto &[layer, entry] : layers) {
        for (uint32_t q = 0; q < n; q++) {
            if (!entry.second.count(q)) {
                idle_after[entry.first].push_back(q);
            }
        }
    }

    const double r = 0.5;
    const C i(0, 1);
    std::vector<std::pair<uint32_t, uint32_t>> measures;
    for (size_t k = 0; k < circuit.gates.size(); k++) {
        const Gate &g = circuit.gates[k];
        switch (g.kind) {
            case GateKind::X:
            case GateKind::SX:
            case GateKind::RZ: {
                uint32_t q = g.qubits[0];
                if (g.kind == GateKind::X) {
                    rho.conjugate(single(q, {0, 1, 1, 0}));
                } else if (g.kind == GateKind::SX) {
                    rho.conjugate(single(q, {C(r, r), C(r, -r), C(r, -r), C(r, r)}));
                } else {
                    rho.conjugate(single(q, {1, 0, 0, std::exp(i * g.angle.radians())}));
                }
                mix(rho, p1, {pauli(q, 1), pauli(q, 2), pauli(q, 3)});
                break;
            }
            case GateKind::CX: {
                uint32_t c = g.qubits[0];
                uint32_t t = g.qubits[1];
                rho.conjugate([c, t](Ket &v) {
                    for (size_t idx = 0; idx < v.size(); idx++) {
                        if (((idx >> c) & 1) && !((idx >> t) & 1)) {
                            std::swap(v[idx], v[idx | (size_t{1} << t)]);
                        }
                    }
                });
                std::vector<KetOp> errors;
                for (int code = 1; code < 16; code++) {
                    KetOp pa = pauli(c, code & 3);
                    KetOp pb = pauli(t, code >> 2);
                    errors.push_back([pa, pb](Ket &v) {
                        pa(v);
                        pb(v);
                    });
                }
                mix(rho, p2, errors);
                break;
            }
            case GateKind::MEASURE:
                measures.emplace_back(g.qubits[0], g.clbit);
                break;
            case GateKind::BARRIER:
                break;
            default:
                throw std::invalid_argument("noisy_distribution_exact: non-basis gate " + g.str());
        }
        if (idle_after.count(k)) {
            for (uint32_t q : idle_after[k]) {
                mix(rho, idle_z, {pauli(q, 3)});
            }
        }
    }

    std::map<std::string, double> out;
    for (size_t idx = 0; idx < rho.dim; idx++) {
        double p = rho.m[idx * rho.dim + idx].real();
        if (p <= 0) {
            continue;
        }
        // Enumerate readout flips over the measured bits.
        for (size_t flips = 0; flips < (size_t{1} << measures.size()); flips++) {
            std::string s(circuit.num_clbits, '0');
            double w = p;
            for (size_t j = 0; j < measures.size(); j++) {
                bool bit = (idx >> measures[j].first) & 1;
                bool flip = (flips >> j) & 1;
                double pf = bit ? ro10 : ro01;
                w *= flip ? pf : 1 - pf;
                s[circuit.num_clbits - 1 - measures[j].second] = (bit != flip) ? '1' : '0';
            }
            if (w > 0) {
                out[s] += w;
            }
        }
    }
    return out;
}

}  // namespace canord::oracle
