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

#ifndef CULTSIM_CIRCUIT_H
#define CULTSIM_CIRCUIT_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cultsim {

struct Target {
    enum class Kind : uint8_t { qubit, rec, product };
    Kind kind = Kind::qubit;
    /// Qubit id, or k for rec[-k].
    uint32_t value = 0;
    /// MPP factors in written order, e.g. {('X', 11), ('Z', 3)}.
    std::vector<std::pair<char, uint32_t>> product;

    static Target qubit(uint32_t q) {
        return Target{Kind::qubit, q, {}};
    }
    static Target rec(uint32_t k) {
        return Target{Kind::rec, k, {}};
    }
    std::string str() const;
    bool operator==(const Target &) const = default;
};

enum class OpKind : uint8_t {
    gate1,
    gate2,
    measure,
    measure_pauli,
    reset,
    noise1,
    noise2,
    /// Z rotation by args[0] radians on every target.
    rotation,
    tick,
    detector,
    observable,
    coords,
    annotation,
};

struct GateInfo {
    const char *name;
    OpKind kind;
};
/// Null when the mnemonic is unknown.
const GateInfo *gate_info(std::string_view name);
/// 'X' for MX/MXD/RX/RXC, otherwise 'Z'.
char basis_of(const std::string &name);
/// MD/MXD measure and drop the qubit; RC/RXC bring a qubit into memory.
bool is_destructive_measure(const std::string &name);
bool is_creative_reset(const std::string &name);

struct Instruction {
    std::string name;
    std::string tag;
    std::vector<double> args;
    std::vector<Target> targets;

    OpKind kind() const;
    /// Number of measurement results this instruction appends to the record.
    size_t num_results() const;
    bool operator==(const Instruction &) const = default;
};

struct Detector {
    std::vector<double> coords;
    /// Absolute indices into the measurement record.
    std::vector<size_t> records;
};

struct Observable {
    size_t index;
    std::vector<size_t> records;
};

struct CircuitStats {
    size_t two_qubit_gates = 0;
    size_t measurements = 0;
    size_t qubits = 0;
    size_t ticks = 0;
    size_t nonclifford_tags = 0;
    bool operator==(const CircuitStats &) const = default;
};

/// Ordered instruction list. Coordinates, detectors, observables and display annotations stay in
/// position so rec[-k] offsets keep their meaning and emission round-trips.
struct Circuit {
    std::vector<Instruction> ops;

    /// Appends an instruction, checking targets and rec offsets against the record so far.
    void append(Instruction op);
    void append(std::string name, std::vector<uint32_t> qubits, std::string tag = {}, std::vector<double> args = {});

    size_t num_measurements() const;
    /// One past the largest qubit id mentioned anywhere.
    size_t num_qubits() const;
    std::map<uint32_t, std::vector<double>> qubit_coords() const;
    std::vector<Detector> detectors() const;
    std::vector<Observable> observables() const;
    size_t num_observables() const;
    bool operator==(const Circuit &) const = default;
};

/// Throws std::invalid_argument with the line number on unknown mnemonics, dangling rec
/// references, malformed numbers or coordinates, and bad targets.
Circuit parse(std::string_view text);
Circuit parse_file(const std::string &path);

enum class EmitStyle {
    /// `NAME[tag](args) t1 t2`.
    spaced,
    /// `NAME[tag](args)_t1_t2` as in the published listings.
    listing,
};
std::string emit(const Circuit &c, EmitStyle style = EmitStyle::spaced);
std::string emit(const Instruction &op, EmitStyle style = EmitStyle::spaced);

CircuitStats stats(const Circuit &c);

/// True for tags whose gate is bound to a non-Clifford rotation at simulation time.
bool is_nonclifford_tag(const Instruction &op);

struct RecordEvaluation {
    std::vector<uint8_t> detectors;
    std::vector<uint8_t> observables;
};
/// Raw parities of the detector and observable record sets. Throws std::invalid_argument when
/// the record length differs from the circuit's measurement count.
RecordEvaluation evaluate_records(const Circuit &c, const std::vector<uint8_t> &record);

}  // namespace cultsim

#endif
