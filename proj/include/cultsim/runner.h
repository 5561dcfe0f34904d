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

#ifndef CULTSIM_RUNNER_H
#define CULTSIM_RUNNER_H

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cultsim/analysis.h"
#include "cultsim/circuit.h"
#include "cultsim/engine.h"
#include "cultsim/noise.h"
#include "cultsim/protocols.h"

namespace cultsim {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class EngineChoice { automatic, ranked, dense };

/// Everything a batch run needs. Experiments are the builder names plus "tomography", which
/// reports the logical Bloch vector of the prepared state instead of a logical error.
struct RunConfig {
    std::string experiment = "kt";
    ProtocolParams params;
    EngineChoice engine = EngineChoice::automatic;
    size_t shots = 1000;
    uint64_t seed = 0;
    double p = 0;
    /// Noise table file; empty means the shipped default.
    std::string noise_table;
    /// Half-width of the uniform detuning distribution; zero disables coherent noise.
    double detuning_khz = 0;
    size_t m_max = 1000;
    double eps = 1e-4;
    /// Live-qubit limit for the dense engine and for automatic selection.
    size_t dense_threshold = 14;
    /// Zero uses the hardware concurrency.
    size_t threads = 1;
    /// Drop a shot at its first detection event. Only valid with the all-detectors policy.
    bool early_abort = true;
    PostselectPolicy policy;
    double level = 0.68;
    bool keep_shots = false;

    /// Throws ConfigError.
    void validate() const;
    std::string to_json() const;
    /// Inverse of to_json; missing keys keep their defaults. Throws ConfigError.
    static RunConfig from_json(std::string_view text);
};

/// The circuit a run simulates: builder output with echoes removed on request, then detunings,
/// then Pauli noise.
Circuit prepare_circuit(const RunConfig &config);

/// Data qubits of the seven-qubit code left live by the tomography circuits.
std::vector<uint32_t> tomography_data_qubits(Variant v);
/// Logical X, Y, Z on the given data qubits. Y is i X Z, which is minus the transversal Y product.
std::array<PauliString, 3> logical_paulis(size_t num_qubits, const std::vector<uint32_t> &data);
/// Three independent weight-4 plaquettes on tomography_data_qubits(v).
std::vector<std::vector<uint32_t>> tomography_plaquettes(Variant v);
/// Drops the final transversal readout (last basis-change layer, its measurement and the
/// annotations after it) so the state stays live for exact expectations.
Circuit strip_final_readout(const Circuit &c);

struct RunResult {
    RunConfig config;
    std::string backend;
    size_t num_qubits = 0;
    size_t num_detectors = 0;
    size_t peak_live = 0;
    size_t peak_m = 0;
    size_t kept = 0;
    Estimate retention;
    /// Observable 0 over kept shots; absent for tomography or when nothing was kept.
    std::optional<Estimate> logical_error;
    /// Fraction of kept shots whose observable 0 parity is 1 (not relative to the reference), so
    /// 1 - 2 value estimates the logical expectation measured by the readout.
    std::optional<Estimate> raw_observable;
    /// Mean exact expectation over kept shots; tomography only.
    std::optional<std::array<double, 3>> bloch;
    std::array<double, 3> bloch_sigma = {0, 0, 0};
    std::vector<ShotRecord> shots;

    std::string to_json() const;
};

/// Deterministic given the config. Throws ConfigError or CapacityError.
RunResult run(const RunConfig &config);

/// Post-selected transversal tomography of the state left by the tomography circuit: every
/// axis is read out transversally, readouts with an odd plaquette are discarded and the logical
/// value is the raw transversal product. Each trajectory contributes its exact outcome
/// probabilities; trajectories rejected by the circuit's detectors are skipped. The experiment
/// field of the config is ignored. Throws ConfigError when no trajectory is kept.
TomographyResult transversal_tomography(const RunConfig &config);

enum class SweepAxis { theta, p, cycles };

/// One run per grid value with everything else fixed. Throws ConfigError on an empty grid.
std::vector<RunResult> sweep(const RunConfig &base, SweepAxis axis, const std::vector<double> &grid);

std::string sweep_csv_header();
std::string sweep_csv_row(const RunResult &r);

}  // namespace cultsim

#endif
