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

#ifndef CANORD_TRANSPILE_H
#define CANORD_TRANSPILE_H

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "canord/circuit.h"

namespace canord {

/// Undirected device connectivity.
class CouplingGraph {
   public:
    CouplingGraph() = default;
    CouplingGraph(uint32_t num_physical_qubits, const std::vector<std::pair<uint32_t, uint32_t>> &edges);

    static CouplingGraph line(uint32_t n);
    static CouplingGraph ring(uint32_t n);
    static CouplingGraph grid(uint32_t rows, uint32_t cols);
    /// 27-qubit heavy-hex layout of the Falcon-generation devices.
    static CouplingGraph heavy_hex27();
    /// "line:N", "ring:N", "grid:RxC" or "heavy_hex27".
    static CouplingGraph preset(std::string_view spec);
    /// One "u v" pair per line; '#' starts a comment. Size is max index + 1.
    static CouplingGraph parse(std::string_view text);

    uint32_t num_physical_qubits() const {
        return n_;
    }
    const std::set<std::pair<uint32_t, uint32_t>> &edges() const {
        return edges_;
    }
    const std::vector<uint32_t> &neighbors(uint32_t q) const {
        return adj_[q];
    }
    bool adjacent(uint32_t a, uint32_t b) const;
    /// Shortest path a..b inclusive (BFS over ascending neighbor order, so ties
    /// go to the lowest physical index). Empty when unreachable.
    std::vector<uint32_t> shortest_path(uint32_t a, uint32_t b) const;
    bool is_connected_subset(const std::vector<uint32_t> &nodes) const;
    /// Graph on the same index space keeping only edges inside `nodes`.
    CouplingGraph induced(const std::vector<uint32_t> &nodes) const;

    std::string str() const;

   private:
    uint32_t n_ = 0;
    std::set<std::pair<uint32_t, uint32_t>> edges_;
    std::vector<std::vector<uint32_t>> adj_;
};

/// Injective logical -> physical qubit assignment.
struct Layout {
    std::vector<uint32_t> logical_to_physical;
    uint32_t num_physical_qubits = 0;

    static Layout identity(uint32_t num_logical, uint32_t num_physical);
    /// Throws CircuitError when not injective or out of range.
    void validate() const;
    bool operator==(const Layout &other) const = default;
    std::string str() const;
};

/// Rewrites source gates into {X, SX, RZ, CX} (MEASURE and BARRIER kept).
/// Equal to the input up to global phase.
Circuit decompose_to_basis(const Circuit &circuit);

/// Renames qubits; the result has layout.num_physical_qubits qubits.
Circuit apply_layout(const Circuit &circuit, const Layout &layout);

/// Places the circuit with `layout` and inserts SWAPs (3 CX each) so every CX
/// acts on a graph edge. For each non-adjacent CX the control walks along the
/// shortest path toward the target. MEASURE gates are emitted after all other
/// gates at the final physical positions, so measured bitstrings are those of
/// the input circuit.
Circuit route(const Circuit &circuit, const CouplingGraph &graph, const Layout &layout);

enum class LayoutOrder {
    /// Logical qubit i goes to the i-th node added while growing the set, so
    /// consecutive logical qubits tend to sit close together.
    Growth,
    /// Uniformly random assignment onto the grown node set.
    Shuffled,
};

/// `count` distinct layouts, each onto a randomly grown connected set of graph
/// nodes. Deterministic in seed; the first k layouts do not depend on count.
std::vector<Layout> random_layouts(const Circuit &circuit, const CouplingGraph &graph, size_t count, uint64_t seed,
                                   LayoutOrder order = LayoutOrder::Growth);

}  // namespace canord

#endif
