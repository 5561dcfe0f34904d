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

#ifndef CULTSIM_ANALYSIS_H
#define CULTSIM_ANALYSIS_H

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cultsim/circuit.h"
#include "cultsim/engine.h"

namespace cultsim {

struct Interval {
    double lo = 0, hi = 1;
};

/// Exact two-sided Clopper-Pearson interval for k successes in n trials at the given
/// confidence level. Throws std::invalid_argument when n == 0, k > n or level is not in (0, 1).
Interval clopper_pearson(size_t k, size_t n, double level = 0.68);

struct Estimate {
    size_t hits = 0, total = 0;
    double value = 0;
    Interval ci;
};

Estimate binomial_estimate(size_t hits, size_t total, double level = 0.68);

struct ShotRecord {
    std::vector<uint8_t> measurements;
    std::vector<uint8_t> detectors;
    std::vector<uint8_t> observables;
    bool kept = false;

    static ShotRecord from_result(const ShotResult &r);
};

/// One line per shot: measurement bits as hex (bit 4j+b is bit b of character j), the indices of
/// fired detectors separated by commas, and the observable bits, all tab separated.
std::string format_shot(const ShotRecord &s);
ShotRecord parse_shot(std::string_view line, size_t num_measurements, size_t num_detectors);

/// Which shots survive: every selected detector silent and every listed measurement equal to its
/// required value.
struct PostselectPolicy {
    bool all_detectors = true;
    /// Used when all_detectors is false.
    std::vector<size_t> detectors;
    std::vector<std::pair<size_t, uint8_t>> record_conditions;

    std::string to_json() const;
    static PostselectPolicy from_json(std::string_view text);
    bool operator==(const PostselectPolicy &) const = default;
};

struct Postselection {
    std::vector<size_t> kept;
    Estimate retention;
};

/// Marks ShotRecord::kept and returns the kept indices. Throws on empty input.
Postselection postselect(std::vector<ShotRecord> &shots, const PostselectPolicy &policy, double level = 0.68);

/// Fraction of kept shots whose observable flipped. Throws when no shot is kept.
Estimate logical_error(const std::vector<ShotRecord> &shots, size_t observable = 0, double level = 0.68);

/// Stabilizer checks and logical operator revealed by a transversal readout, as positions in a
/// per-shot outcome vector.
struct TransversalSpec {
    std::vector<std::vector<size_t>> checks;
    std::vector<size_t> logical;
    /// Multiplies the raw logical parity per axis (X, Y, Z).
    std::array<int, 3> signs = {1, 1, 1};

    /// The seven-qubit color code in the labelling of tilted_state.
    static TransversalSpec color_code();
};

struct TomographyResult {
    std::array<double, 3> bloch = {0, 0, 0};
    std::array<double, 3> keep = {0, 0, 0};
    /// One standard deviation of each component (binomial).
    std::array<double, 3> sigma = {0, 0, 0};
    std::array<size_t, 3> shots = {0, 0, 0};
    std::array<size_t, 3> kept = {0, 0, 0};

    double norm2() const;
};

/// Post-selected transversal tomography. shots[a] holds the outcome bits of each shot measured
/// along axis a (X, Y, Z); a shot is kept when all checks have even parity. Components are never
/// clamped. Throws when an axis keeps no shot.
TomographyResult bloch_from_transversal(const std::array<std::vector<std::vector<uint8_t>>, 3> &shots,
                                        const TransversalSpec &spec);

/// Samples the tilted seven-qubit state along each axis and feeds bloch_from_transversal.
TomographyResult sample_tilted_tomography(size_t shots_per_axis, uint64_t seed, double angle_deg = -10.0);

struct PowerLawPoint {
    double x = 0;
    double y = 0;
    /// Optional error bar on y; lo = hi = 0 means unweighted.
    double lo = 0, hi = 0;
};

struct PowerLawFit {
    double exponent = 0;
    double exponent_sigma = 0;
    double prefactor = 0;
};

/// Weighted least squares of log y against log x. Needs at least three points with positive x
/// and y; throws std::invalid_argument otherwise.
PowerLawFit fit_power_law(const std::vector<PowerLawPoint> &points);

struct LerFit {
    double ler = 0;
    Interval ci;
    /// Amplitude A in 1/2 (1 - A (1 - 2 ler)^N), which absorbs preparation and readout error.
    double amplitude = 1;
};

/// Fits points (N, logical error) to 1/2 (1 - A (1 - 2 ler)^N). Needs two distinct N and
/// errors below 1/2; throws std::invalid_argument otherwise.
LerFit fit_ler_per_cycle(const std::vector<PowerLawPoint> &points);

struct DetectionFraction {
    size_t detector = 0;
    /// Last detector coordinate, the cycle index in the shipped circuits.
    double time = 0;
    Estimate rate;
};

std::vector<DetectionFraction> detection_fractions(const std::vector<ShotRecord> &shots, const Circuit &c,
                                                   double level = 0.68);
/// Mean detection fraction per time coordinate.
std::map<double, double> mean_by_time(const std::vector<DetectionFraction> &fractions);

}  // namespace cultsim

#endif
