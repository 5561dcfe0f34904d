// Copyright 2026 The cultsim Authors
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

#ifndef CULTSIM_REORDER_H
#define CULTSIM_REORDER_H

#include <cstdint>
#include <utility>
#include <vector>

#include "cultsim/circuit.h"

namespace cultsim {

/// Rewrites measurements whose qubit is not used again before a reset (MD/MXD), resets of
/// qubits not in memory (RC/RXC), and inserts RC before the first use of a qubit that is never
/// reset. MPP and measurements followed by further gates stay as they are and keep their qubits.
Circuit to_destructive_form(const Circuit &c);

enum class NodeKind { reset, measurement, other };

/// One channel: a single-target (or single-pair, single-product) slice of an instruction.
struct ChannelNode {
    NodeKind kind = NodeKind::other;
    Instruction op;
    std::vector<uint32_t> qubits;
    /// Record indices (in the source circuit) this channel produces.
    std::vector<size_t> records;
    /// Source instruction index.
    size_t source = 0;
};

struct CircuitDag {
    /// The destructive-form circuit the nodes were cut from.
    Circuit source;
    std::vector<ChannelNode> nodes;
    std::vector<std::pair<size_t, size_t>> edges;
    std::vector<std::vector<size_t>> succ;
    std::vector<std::vector<size_t>> pred;
    /// Source instructions that are not channels (TICK, DT, OI, coordinates, annotations).
    std::vector<size_t> passive;

    std::vector<size_t> measurements() const;
    std::vector<size_t> resets() const;
    /// Measurements not yet placed whose upstream measurements are all placed.
    std::vector<size_t> selectable(const std::vector<uint8_t> &placed) const;
    /// Upstream resets of node k (transitive), ascending.
    std::vector<size_t> upstream_resets(size_t k) const;
    /// Edges of the reset/measurement-only view: j -> k when j is upstream of k and no other
    /// reset or measurement lies on a path between them.
    std::vector<std::pair<size_t, size_t>> pruned_edges() const;

    /// Position of a node among resets() / measurements(), or SIZE_MAX.
    std::vector<size_t> reset_slot;
    std::vector<size_t> measurement_slot;
    /// Per node, bitsets over reset and measurement slots of its strict upstream.
    size_t reset_words = 0;
    size_t measurement_words = 0;
    std::vector<uint64_t> upstream_reset_bits;
    std::vector<uint64_t> upstream_measurement_bits;
};

/// Builds the channel DAG: j -> k when both act on a qubit and nothing in between does.
CircuitDag build_dag(const Circuit &c);

struct Ordering {
    /// Node ids of resets and measurements in placement order.
    std::vector<size_t> sequence;
    size_t peak = 0;
    double average = 0;
};

/// Qubit count in memory after each placement of `sequence`, given the DAG.
size_t sequence_peak(const CircuitDag &dag, const std::vector<size_t> &sequence);

/// Greedy fewest-new-resets measurement placement with random tie breaks; the best of
/// `restarts` runs by (peak, average) is returned.
Ordering greedy_order(const CircuitDag &dag, uint64_t seed, size_t restarts = 16);
/// Exact minimum peak over all valid measurement orders with resets placed as late as possible.
/// Throws std::invalid_argument above `max_measurements`.
Ordering exhaustive_order(const CircuitDag &dag, size_t max_measurements = 10);

struct Reordered {
    Circuit circuit;
    /// record_permutation[old] = new record index.
    std::vector<size_t> record_permutation;
};

/// Topological sort of the DAG with `ordering` chained in; non-reset/measurement channels are
/// placed as early as possible. Detectors and observables follow their last record.
/// Throws std::invalid_argument when the ordering contradicts the DAG.
Reordered apply_order(const CircuitDag &dag, const Ordering &ordering);
/// Ordering that keeps the source order of resets and measurements.
Ordering source_order(const CircuitDag &dag);

/// Largest number of qubits in memory while running the circuit in destructive form.
size_t peak_live(const Circuit &c);
/// Live-qubit count averaged over channels (noise channels excluded).
double average_live(const Circuit &c);

/// Memory-Z repetition code on 2d-1 qubits (data even, measure odd), `cycles` rounds.
Circuit repetition_code(size_t d, size_t cycles);
/// Memory-Z rotated surface code on 2d^2-1 qubits, `cycles` rounds.
Circuit surface_code(size_t d, size_t cycles);

}  // namespace cultsim

#endif
