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

#ifndef CULTSIM_RNG_H
#define CULTSIM_RNG_H

#include <cstdint>
#include <vector>

namespace cultsim {

/// Counter-based stream keyed by (seed, shot). Draw k of shot s is a pure function of
/// (seed, s, k), so shots can run in any order or on any thread.
class KeyedRng {
   public:
    KeyedRng(uint64_t seed, uint64_t shot) : seed_(seed), shot_(shot), counter_(0) {
    }

    uint64_t next_u64() {
        return mix(mix(seed_ ^ 0x9E3779B97F4A7C15ULL) ^ mix(shot_ + 0x632BE59BD9B4E019ULL) ^ counter_++);
    }
    /// Uniform in [0, 1).
    double uniform() {
        return (double)(next_u64() >> 11) * 0x1.0p-53;
    }
    uint64_t counter() const {
        return counter_;
    }

   private:
    static uint64_t mix(uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    uint64_t seed_;
    uint64_t shot_;
    uint64_t counter_;
};

/// Index of the branch selected by uniform draw u from (unnormalized) weights.
/// Weights below 1e-14 of the total count as zero, so roundoff never selects them.
inline size_t pick_branch(const std::vector<double> &weights, double u) {
    double raw = 0;
    for (double w : weights) {
        raw += w;
    }
    auto snapped = [&](size_t k) { return weights[k] > 1e-14 * raw ? weights[k] : 0.0; };
    double total = 0;
    for (size_t k = 0; k < weights.size(); k++) {
        total += snapped(k);
    }
    double acc = 0;
    double target = u * total;
    size_t last_nonzero = 0;
    for (size_t k = 0; k < weights.size(); k++) {
        double w = snapped(k);
        if (w > 0) {
            last_nonzero = k;
        }
        acc += w;
        if (target < acc) {
            return k;
        }
    }
    return last_nonzero;
}

}  // namespace cultsim

#endif
