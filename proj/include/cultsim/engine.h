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

#ifndef CULTSIM_ENGINE_H
#define CULTSIM_ENGINE_H

#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cultsim/circuit.h"
#include "cultsim/densesim.h"
#include "cultsim/pauli.h"
#include "cultsim/rrsim.h"

namespace cultsim {

enum class Backend { ranked, dense };

/// How tagged identities and injection gates are executed.
enum class TagMode {
    /// T_gate -> exp(-i pi Y/8), T_dagger_gate and negative_T_gate -> inverse,
    /// S[injection] -> Rz(theta), H[injection] -> Ry(theta).
    bound,
    /// Every instruction as written (tags ignored).
    literal,
    /// T_gate -> SQRT_Y, T_dagger_gate and negative_T_gate -> SQRT_Y_DAG, injection gates bound
    /// to theta, which must be a multiple of pi/2. The whole circuit stays Clifford.
    clifford,
};

/// Thrown when a shot needs more live qubits than the dense backend allows.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EngineOptions {
    Backend backend = Backend::ranked;
    TagMode tags = TagMode::bound;
    double theta = std::numbers::pi / 4;
    /// Injection angle of the noiseless reference sample that defines silent detectors.
    double reference_theta = std::numbers::pi / 4;
    size_t m_max = 1000;
    double eps = 1e-4;
    /// Stop a shot at the first detection event.
    bool early_abort = false;
    size_t dense_cap = 26;
    ChannelOptions channel;
};

struct ShotResult {
    std::vector<uint8_t> record;
    /// Detector parity XOR reference parity, in detector order. Truncated when aborted.
    std::vector<uint8_t> detector_events;
    std::vector<uint8_t> observable_flips;
    bool aborted = false;
    size_t peak_m = 1;
    double discarded_weight = 0;
    /// Largest number of simultaneously live qubits (dense backend).
    size_t peak_live = 0;
    /// <P> in the final state for each requested Pauli (indexed by qubit id).
    std::vector<double> expectations;

    bool any_event() const;
};

/// Precomputed execution plan for one instruction.
struct EngineStep {
    enum class Action : uint8_t { skip, clifford, unitary, other };
    size_t op = 0;
    OpKind kind = OpKind::tick;
    Action action = Action::other;
    CliffordMap clifford;
    Matrix unitary;
    KrausChannel channel;
    /// Same gate at the reference injection angle; only set for injection gates.
    bool has_reference_variant = false;
    Matrix reference_unitary;
    KrausChannel reference_channel;
    /// Dense backend: per target, whether the measurement may remove the qubit.
    std::vector<uint8_t> destructive;
};

/// Executes a circuit shot by shot. Draws come from KeyedRng(seed, shot), one draw per
/// measurement, per noise target and per measurement-flip argument, in instruction order.
class Engine {
   public:
    explicit Engine(Circuit c, EngineOptions opt = {});
    /// Uses a given reference record instead of simulating one. Its length must match.
    Engine(Circuit c, EngineOptions opt, std::vector<uint8_t> reference);

    ShotResult run(uint64_t seed, uint64_t shot, const std::vector<PauliString> &final_paulis = {}) const;
    /// Noiseless run with every random outcome forced to 0 and no noise.
    ShotResult run_forced(const std::vector<PauliString> &final_paulis = {}) const;

    const Circuit &circuit() const {
        return circuit_;
    }
    const EngineOptions &options() const {
        return opt_;
    }
    const std::vector<uint8_t> &reference_record() const {
        return reference_;
    }

   private:
    ShotResult execute(uint64_t seed, uint64_t shot, bool forced, bool reference_pass,
                       const std::vector<PauliString> &final_paulis) const;
    ShotResult execute_ranked(uint64_t seed, uint64_t shot, bool forced, bool reference_pass,
                              const std::vector<PauliString> &final_paulis) const;
    ShotResult execute_dense(uint64_t seed, uint64_t shot, bool forced, bool reference_pass,
                             const std::vector<PauliString> &final_paulis) const;
    void prepare();

    Circuit circuit_;
    EngineOptions opt_;
    size_t n_ = 0;
    std::vector<EngineStep> steps_;
    std::vector<uint8_t> reference_;
    std::vector<uint8_t> reference_detectors_;
    std::vector<uint8_t> reference_observables_;
};

}  // namespace cultsim

#endif
