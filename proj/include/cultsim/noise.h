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

#ifndef CULTSIM_NOISE_H
#define CULTSIM_NOISE_H

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cultsim/circuit.h"

namespace cultsim {

/// Channel strengths as multiples of p, one per operation class.
struct NoiseTable {
    double two_qubit_gate = 1.0;
    double one_qubit_gate = 0.1;
    /// Flip after R (X_ERROR) or RX (Z_ERROR).
    double reset = 2.0;
    /// Classical flip on every measurement result, including MPP.
    double measurement = 5.0;
    double idle = 0.1;
    /// Idle qubits during a layer that contains a measurement or reset.
    double measurement_window_idle = 2.0;

    /// Parses `class<TAB>channel<TAB>scale` rows; '#' starts a comment.
    static NoiseTable parse(std::string_view text);
    static NoiseTable load(const std::string &path);
    bool operator==(const NoiseTable &) const = default;
};

struct NoiseModel {
    double p = 0;
    NoiseTable table;

    static NoiseModel si1000(double p);
};

/// Tagged bookkeeping operations that carry no noise of their own: I[echo], I[injection] and
/// anything tagged [conjugate].
bool is_virtual(const Instruction &op);

/// Inserts Pauli channels layer by layer (layers are separated by TICK). Layers made only of
/// virtual operations receive nothing. Throws std::invalid_argument when p is outside [0, 0.1].
Circuit apply_noise(const Circuit &c, const NoiseModel &model);
Circuit apply_si1000(const Circuit &c, double p);

struct DetuningProfile {
    /// Frequency offset per qubit in Hz.
    std::vector<double> offsets_hz;
    double layer_duration = 35e-9;
    double range_hz = 200e3;

    /// Phase accumulated by qubit q over one layer.
    double layer_phase(size_t q) const;
};

/// Offsets drawn i.i.d. uniform in [-range_hz, range_hz].
DetuningProfile sample_detunings(std::mt19937_64 &rng, size_t num_qubits, double range_hz = 200e3);

/// Adds RZ[detuning] phases at the end of every layer for each used qubit. Layers containing a
/// measurement or reset get none. Each I[echo] on a qubit flips the sign of its phases from its
/// own layer on. Throws std::invalid_argument when the circuit has no TICK.
Circuit apply_detuning(const Circuit &c, const DetuningProfile &profile);

/// Net RZ[detuning] angle per qubit.
std::vector<double> net_detuning_phase(const Circuit &detuned);

/// Drops every I[echo] marker.
Circuit strip_echoes(const Circuit &c);

/// Adds I[echo] near the middle of each idle window between two H gates on a qubit. Qubits that
/// already carry an echo are left alone, as are windows holding a non-Clifford operation.
Circuit insert_echoes(const Circuit &c);

}  // namespace cultsim

#endif
