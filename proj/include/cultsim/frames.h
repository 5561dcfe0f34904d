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

#ifndef CULTSIM_FRAMES_H
#define CULTSIM_FRAMES_H

#include <cstdint>
#include <string>
#include <vector>

#include "cultsim/circuit.h"

namespace cultsim {

/// Value of a measurement record in a noiseless Clifford run: XOR of the records listed in
/// `symbols` (each of which came out uniformly random) plus `flip`. Symbols at or past the
/// record count stand for reset outcomes that were never recorded.
struct RecordExpr {
    std::vector<size_t> symbols;
    bool flip = false;
    bool random() const {
        return symbols.size() == 1 && !flip;
    }
};

/// What T-type tags turn into. The two choices make a cultivation check measure different
/// logical Paulis, which exposes parities that only look fixed because of that check.
enum class TStandIn { sqrt_y, identity };

/// Clifford gate executed in place of `op` by the symbolic run: T-type tags become SQRT_Y or
/// SQRT_Y_DAG (or I), injection rotations turn into the rotation by injection_k * pi/2,
/// everything else keeps its own name.
std::string clifford_stand_in(const Instruction &op, int injection_k, TStandIn t = TStandIn::sqrt_y);

/// Symbolic stabilizer run of `c` with the stand-ins of clifford_stand_in. Noise and RZ are
/// ignored.
std::vector<RecordExpr> record_expressions(const Circuit &c, int injection_k = 0, TStandIn t = TStandIn::sqrt_y);

/// Symbolic value of the parity of `records`.
RecordExpr parity_expression(const std::vector<RecordExpr> &exprs, const std::vector<size_t> &records);

/// The parity of `records` XORed with the random records it depends on, so the result is
/// deterministic. Leaves an already deterministic set unchanged (up to ordering).
std::vector<size_t> make_deterministic(const std::vector<RecordExpr> &exprs, const std::vector<size_t> &records);

/// Outcome of propagating every single fault through the Clifford stand-in circuit.
struct FaultScan {
    size_t sites = 0;
    /// Faults that flip an observable while leaving every detector silent.
    size_t undetected_logical = 0;
    /// Faults that no detector or observable sees.
    size_t silent = 0;
    /// Up to ten readable descriptions of undetected logical faults.
    std::vector<std::string> examples;
};

/// Fault sites: X, Y and Z after each one-qubit gate and reset target, the 15 two-qubit Paulis
/// after each two-qubit gate pair, X, Y and Z on every qubit at every TICK, and a classical flip
/// of every measurement result. Tagged virtual operations ([conjugate], I[echo], I[injection])
/// carry no fault sites of their own.
FaultScan single_fault_scan(const Circuit &c, int injection_k = 0);

}  // namespace cultsim

#endif
