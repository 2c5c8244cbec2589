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

#include "canord/transpile.h"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "canord/rng.h"

namespace canord {

CouplingGraph::CouplingGraph(uint32_t num_physical_qubits, const std::vector<std::pair<uint32_t, uint32_t>> &edges)
    : n_(num_physical_qubits), adj_(num_physical_qubits) {
    for (auto [a, b] : edges) {
        if (a == b) {
            throw std::invalid_argument("coupling graph self-loop on qubit " + std::to_string(a));
        }
        if (a >= n_ || b >= n_) {
            throw std::invalid_argument("coupling graph edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") out of range");
        }
        edges_.insert({std::min(a, b), std::max(a, b)});
    }
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto &nb : adj_) {
        std::sort(nb.begin(), nb.end());
    }
}

CouplingGraph CouplingGraph::line(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (uint32_t k = 0; k + 1 < n; k++) {
        e.emplace_back(k, k + 1);
    }
    return CouplingGraph(n, e);
}

CouplingGraph CouplingGraph::ring(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (uint32_t k = 0; k < n && n > 2; k++) {
        e.emplace_back(k, (k + 1) % n);
    }
    if (n == 2) {
        e.emplace_back(0, 1);
    }
    return CouplingGraph(n, e);
}

CouplingGraph CouplingGraph::grid(uint32_t rows, uint32_t cols) {
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (uint32_t r = 0; r < rows; r++) {
        for (uint32_t c = 0; c < cols; c++) {
            uint32_t q = r * cols + c;
            if (c + 1 < cols) {
                e.emplace_back(q, q + 1);
            }
            if (r + 1 < rows) {
                e.emplace_back(q, q + cols);
            }
        }
    }
    return CouplingGraph(rows * cols, e);
}

CouplingGraph CouplingGraph::heavy_hex27() {
    return CouplingGraph(
        27, {{0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},   {6, 7},   {7, 10},  {8, 9},
             {8, 11},  {10, 12}, {11, 14}, {12, 13}, {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18},
             {18, 21}, {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}});
}

namespace {

uint32_t parse_u32(std::string_view s, std::string_view context) {
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad integer '" + std::string(s) + "' in " + std::string(context));
    }
    return v;
}

}  // namespace

CouplingGraph CouplingGraph::preset(std::string_view spec) {
    if (spec == "heavy_hex27") {
        return heavy_hex27();
    }
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("unknown graph preset '" + std::string(spec) + "'");
    }
    std::string_view kind = spec.substr(0, colon);
    std::string_view arg = spec.substr(colon + 1);
    if (kind == "line") {
        return line(parse_u32(arg, spec));
    }
    if (kind == "ring") {
        return ring(parse_u32(arg, spec));
    }
    if (kind == "grid") {
        auto x = arg.find('x');
        if (x == std::string_view::npos) {
            throw std::invalid_argument("grid preset needs RxC: '" + std::string(spec) + "'");
        }
        return grid(parse_u32(arg.substr(0, x), spec), parse_u32(arg.substr(x + 1), spec));
    }
    throw std::invalid_argument("unknown graph preset '" + std::string(spec) + "'");
}

CouplingGraph CouplingGraph::parse(std::string_view text) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    uint32_t n = 0;
    size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::string a;
        std::string b;
        std::string extra;
        if (!(fields >> a)) {
            continue;
        }
        std::string where = "coupling graph line " + std::to_string(line_no);
        if (!(fields >> b) || (fields >> extra)) {
            throw std::invalid_argument(where + ": expected exactly two qubit indices");
        }
        uint32_t u = parse_u32(a, where);
        uint32_t v = parse_u32(b, where);
        edges.emplace_back(u, v);
        n = std::max({n, u + 1, v + 1});
    }
    return CouplingGraph(n, edges);
}

bool CouplingGraph::adjacent(uint32_t a, uint32_t b) const {
    return edges_.count({std::min(a, b), std::max(a, b)}) != 0;
}

std::vector<uint32_t> CouplingGraph::shortest_path(uint32_t a, uint32_t b) const {
    if (a >= n_ || b >= n_) {
        return {};
    }
    std::vector<int64_t> parent(n_, -1);
    std::deque<uint32_t> queue{a};
    parent[a] = a;
    while (!queue.empty() && parent[b] < 0) {
        uint32_t u = queue.front();
        queue.pop_front();
        for (uint32_t v : adj_[u]) {
            if (parent[v] < 0) {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if (parent[b] < 0) {
        return {};
    }
    std::vector<uint32_t> path{b};
    while (path.back() != a) {
        path.push_back(static_cast<uint32_t>(parent[path.back()]));
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool CouplingGraph::is_connected_subset(const std::vector<uint32_t> &nodes) const {
    if (nodes.empty()) {
        return true;
    }
    std::vector<bool> in(n_, false);
    for (uint32_t q : nodes) {
        if (q >= n_) {
            return false;
        }
        in[q] = true;
    }
    std::vector<bool> seen(n_, false);
    std::vector<uint32_t> stack{nodes[0]};
    seen[nodes[0]] = true;
    size_t reached = 0;
    while (!stack.empty()) {
        uint32_t u = stack.back();
        stack.pop_back();
        reached++;
        for (uint32_t v : adj_[u]) {
            if (in[v] && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return reached == static_cast<size_t>(std::count(in.begin(), in.end(), true));
}

CouplingGraph CouplingGraph::induced(const std::vector<uint32_t> &nodes) const {
    std::vector<bool> in(n_, false);
    for (uint32_t q : nodes) {
        in.at(q) = true;
    }
    std::vector<std::pair<uint32_t, uint32_t>> kept;
    for (auto [a, b] : edges_) {
        if (in[a] && in[b]) {
            kept.emplace_back(a, b);
        }
    }
    return CouplingGraph(n_, kept);
}

std::string CouplingGraph::str() const {
    std::stringstream ss;
    for (auto [a, b] : edges_) {
        ss << a << " " << b << "\n";
    }
    return ss.str();
}

Layout Layout::identity(uint32_t num_logical, uint32_t num_physical) {
    Layout l;
    l.num_physical_qubits = num_physical;
    for (uint32_t k = 0; k < num_logical; k++) {
        l.logical_to_physical.push_back(k);
    }
    return l;
}

void Layout::validate() const {
    std::vector<bool> used(num_physical_qubits, false);
    for (uint32_t p : logical_to_physical) {
        if (p >= num_physical_qubits) {
            throw CircuitError("layout maps to physical qubit " + std::to_string(p) + " outside [0, " +
                               std::to_string(num_physical_qubits) + ")");
        }
        if (used[p]) {
            throw CircuitError("layout is not injective: physical qubit " + std::to_string(p) + " used twice");
        }
        used[p] = true;
    }
}

std::string Layout::str() const {
    std::stringstream ss;
    ss << "[";
    for (size_t k = 0; k < logical_to_physical.size(); k++) {
        ss << (k ? "," : "") << logical_to_physical[k];
    }
    ss << "]";
    return ss.str();
}

namespace {

void emit_h(Circuit &out, uint32_t q) {
    out.append(Gate::rz(q, Angle(kHalfPi)));
    out.append(Gate::sx(q));
    out.append(Gate::rz(q, Angle(kHalfPi)));
}

void emit_t(Circuit &out, uint32_t q) {
    out.append(Gate::rz(q, Angle(kPi / 4)));
}

void emit_tdg(Circuit &out, uint32_t q) {
    out.append(Gate::rz(q, Angle(7 * kPi / 4)));
}

void emit_ccx(Circuit &out, uint32_t a, uint32_t b, uint32_t c) {
    emit_h(out, c);
    out.append(Gate::cx(b, c));
    emit_tdg(out, c);
    out.append(Gate::cx(a, c));
    emit_t(out, c);
    out.append(Gate::cx(b, c));
    emit_tdg(out, c);
    out.append(Gate::cx(a, c));
    emit_t(out, b);
    emit_t(out, c);
    emit_h(out, c);
    out.append(Gate::cx(a, b));
    emit_t(out, a);
    emit_tdg(out, b);
    out.append(Gate::cx(a, b));
}

void emit_swap(Circuit &out, uint32_t a, uint32_t b) {
    out.append(Gate::cx(a, b));
    out.append(Gate::cx(b, a));
    out.append(Gate::cx(a, b));
}

}  // namespace

Circuit decompose_to_basis(const Circuit &circuit) {
    Circuit out(circuit.num_qubits, circuit.num_clbits, circuit.name);
    out.gates.reserve(circuit.gates.size());
    for (const Gate &g : circuit.gates) {
        const auto &q = g.qubits;
        switch (g.kind) {
            case GateKind::X:
            case GateKind::SX:
            case GateKind::RZ:
            case GateKind::CX:
            case GateKind::MEASURE:
            case GateKind::BARRIER:
                out.append(g);
                break;
            case GateKind::H:
                emit_h(out, q[0]);
                break;
            case GateKind::S:
                out.append(Gate::rz(q[0], Angle(kHalfPi)));
                break;
            case GateKind::SDG:
                out.append(Gate::rz(q[0], Angle(3 * kHalfPi)));
                break;
            case GateKind::T:
                emit_t(out, q[0]);
                break;
            case GateKind::TDG:
                emit_tdg(out, q[0]);
                break;
            case GateKind::SWAP:
                emit_swap(out, q[0], q[1]);
                break;
            case GateKind::CCX:
                emit_ccx(out, q[0], q[1], q[2]);
                break;
            case GateKind::CP: {
                double half = g.angle.radians() / 2;
                out.append(Gate::rz(q[0], Angle(half)));
                out.append(Gate::cx(q[0], q[1]));
                out.append(Gate::rz(q[1], Angle(-half)));
                out.append(Gate::cx(q[0], q[1]));
                out.append(Gate::rz(q[1], Angle(half)));
                break;
            }
            default:
                throw CircuitError("decompose_to_basis: unknown gate kind " + std::string(gate_name(g.kind)));
        }
    }
    return out;
}

Circuit apply_layout(const Circuit &circuit, const Layout &layout) {
    layout.validate();
    if (layout.logical_to_physical.size() < circuit.num_qubits) {
        throw CircuitError("layout covers " + std::to_string(layout.logical_to_physical.size()) +
                           " logical qubits but the circuit has " + std::to_string(circuit.num_qubits));
    }
    Circuit out(layout.num_physical_qubits, circuit.num_clbits, circuit.name);
    out.gates = circuit.gates;
    for (Gate &g : out.gates) {
        for (uint32_t &q : g.qubits) {
            q = layout.logical_to_physical[q];
        }
    }
    return out;
}

Circuit route(const Circuit &circuit, const CouplingGraph &graph, const Layout &layout) {
    layout.validate();
    if (layout.num_physical_qubits != graph.num_physical_qubits()) {
        throw CircuitError("layout size does not match the coupling graph");
    }
    if (layout.logical_to_physical.size() < circuit.num_qubits) {
        throw CircuitError("layout does not cover every logical qubit");
    }
    if (!circuit.is_basis_only()) {
        throw CircuitError("route requires a basis-only circuit");
    }
    const uint32_t n = graph.num_physical_qubits();
    std::vector<uint32_t> pos(layout.logical_to_physical.begin(),
                              layout.logical_to_physical.begin() + circuit.num_qubits);
    constexpr uint32_t kEmpty = UINT32_MAX;
    std::vector<uint32_t> occupant(n, kEmpty);
    for (uint32_t l = 0; l < pos.size(); l++) {
        occupant[pos[l]] = l;
    }

    Circuit out(n, circuit.num_clbits, circuit.name);
    std::vector<std::pair<uint32_t, uint32_t>> measures;
    for (const Gate &g : circuit.gates) {
        switch (g.kind) {
            case GateKind::MEASURE:
                measures.emplace_back(g.qubits[0], g.clbit);
                break;
            case GateKind::CX: {
                uint32_t a = g.qubits[0];
                uint32_t b = g.qubits[1];
                if (!graph.adjacent(pos[a], pos[b])) {
                    auto path = graph.shortest_path(pos[a], pos[b]);
                    if (path.empty()) {
                        throw CircuitError("route: physical qubits " + std::to_string(pos[a]) + " and " +
                                           std::to_string(pos[b]) + " are disconnected");
                    }
                    for (size_t k = 0; k + 2 < path.size(); k++) {
                        uint32_t u = path[k];
                        uint32_t v = path[k + 1];
                        emit_swap(out, u, v);
                        std::swap(occupant[u], occupant[v]);
                        if (occupant[u] != kEmpty) {
                            pos[occupant[u]] = u;
                        }
                        if (occupant[v] != kEmpty) {
                            pos[occupant[v]] = v;
                        }
                    }
                }
                out.append(Gate::cx(pos[a], pos[b]));
                break;
            }
            default: {
                Gate mapped = g;
                for (uint32_t &q : mapped.qubits) {
                    q = pos[q];
                }
                out.append(std::move(mapped));
                break;
            }
        }
    }
    for (auto [q, c] : measures) {
        out.append(Gate::measure(pos[q], c));
    }
    return out;
}

std::vector<Layout> random_layouts(const Circuit &circuit, const CouplingGraph &graph, size_t count, uint64_t seed,
                                   LayoutOrder order) {
    const uint32_t n = circuit.num_qubits;
    const uint32_t m = graph.num_physical_qubits();
    if (m < n) {
        throw CircuitError("graph has " + std::to_string(m) + " nodes but the circuit needs " + std::to_string(n));
    }
    Rng rng(derive_seed(seed, 0x4C41594FULL));
    std::vector<Layout> out;
    std::set<std::vector<uint32_t>> seen;
    const size_t max_attempts = 1000 * count + 10000;
    for (size_t attempt = 0; attempt < max_attempts && out.size() < count; attempt++) {
        // Grow a random connected node set.
        std::vector<uint32_t> nodes{static_cast<uint32_t>(uniform_below(rng, m))};
        std::vector<bool> in(m, false);
        in[nodes[0]] = true;
        while (nodes.size() < n) {
            std::vector<uint32_t> frontier;
            for (uint32_t u : nodes) {
                for (uint32_t v : graph.neighbors(u)) {
                    if (!in[v]) {
                        frontier.push_back(v);
                    }
                }
            }
            std::sort(frontier.begin(), frontier.end());
            frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
            if (frontier.empty()) {
                break;
            }
            uint32_t pick = frontier[uniform_below(rng, frontier.size())];
            in[pick] = true;
            nodes.push_back(pick);
        }
        if (nodes.size() < n) {
            continue;
        }
        if (order == LayoutOrder::Shuffled) {
            for (size_t k = nodes.size(); k > 1; k--) {
                std::swap(nodes[k - 1], nodes[uniform_below(rng, k)]);
            }
        }
        if (seen.insert(nodes).second) {
            out.push_back(Layout{nodes, m});
        }
    }
    if (out.size() < count) {
        throw CircuitError("could only find " + std::to_string(out.size()) + " distinct layouts, " +
                           std::to_string(count) + " requested");
    }
    return out;
}

}  // namespace canord
