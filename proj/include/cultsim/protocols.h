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

#ifndef CULTSIM_PROTOCOLS_H
#define CULTSIM_PROTOCOLS_H

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "cultsim/circuit.h"

namespace cultsim {

/// The published circuit listings shipped with the library.
enum class Listing {
    injection,
    cultivation,
    fig2_cultivation,
    fig3_kickback,
    fig4_graft_n2,
    graft_adapt,
    graft_idle,
};

std::string_view listing_text(Listing which);
Circuit listing(Listing which);

enum class Variant { injection_only, with_cultivation };
enum class QecMode { full, interleaved, none };

struct ProtocolParams {
    /// Injection angle. Builders leave the injection gates tagged; the engine binds theta.
    double theta = std::numbers::pi / 4;
    Variant variant = Variant::with_cultivation;
    QecMode qec_mode = QecMode::full;
    size_t n_cycles = 2;
    /// When false every I[echo] marker is removed.
    bool echoes = true;
    /// Final transversal readout basis of the grafted code, 'X' or 'Z'.
    char graft_basis = 'X';

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

/// d=3 color-code injection of one physical qubit, as in the injection listing.
Circuit build_injection(double theta = std::numbers::pi / 4);

/// One cultivation round: T layer, fold to the root measurement, unfold, T-dagger layer and
/// flag measurements.
Circuit build_cultivation_round();

/// One superdense color-code cycle (30 CZ, 6 measurements). With `after_injection` the detectors
/// compare against the +1 eigenvalues left by injection, otherwise against the previous cycle.
Circuit build_qec_cycle(bool after_injection = true);

/// Injection followed by `cycles` QEC cycles.
Circuit build_qec_memory(size_t cycles);

/// Injection with or without cultivation, for Bloch-vector tomography of the d=3 patch.
Circuit build_tomography(const ProtocolParams &params);

/// Kickback tomography. qec_mode=interleaved drops the second and fourth QEC cycles and ends with
/// a transversal X readout; qec_mode=none drops every QEC cycle.
Circuit build_kt(const ProtocolParams &params);

/// Grafting with n_cycles-1 cycles in the grafted code before the final readout.
/// n_cycles=1 is not supported (see README).
Circuit build_graft(const ProtocolParams &params);

/// Cultivated graft with n_cycles grafted-code cycles; requires n_cycles >= 2.
Circuit build_memory(const ProtocolParams &params);

/// Builds by experiment name: injection, cultivation, qec, tomography, kt, kt-interleaved, graft,
/// memory.
Circuit build_experiment(const std::string &name, const ProtocolParams &params);

}  // namespace cultsim

#endif
