# Copyright 2026 The cultsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python access to the cultsim simulator.

Circuits are passed around as text in the circuit format. Batch runs take the same keys as the
JSON run configuration of the command-line driver.
"""

import json
import math

from . import _cultsim
from ._cultsim import CapacityError

__all__ = [
    "CapacityError",
    "build",
    "canonical",
    "fault_scan",
    "reorder_peak",
    "run",
    "stats",
    "tilted_tomography",
    "transversal_tomography",
]

_RUN_KEYS = {
    "experiment", "theta", "variant", "qec_mode", "cycles", "echoes", "graft_basis", "engine",
    "shots", "seed", "p", "noise_table", "detuning_khz", "m_max", "eps", "dense_threshold",
    "early_abort", "policy", "level",
}


def _config(kwargs):
    unknown = set(kwargs) - _RUN_KEYS
    if unknown:
        raise TypeError(f"unknown run options: {sorted(unknown)}")
    return json.dumps(kwargs)


def build(name, theta=math.pi / 4, variant="with_cultivation", qec_mode="full", cycles=2,
          echoes=True, basis="X"):
    """Circuit text for a named experiment (injection, cultivation, qec, tomography, kt,
    kt-interleaved, graft, memory)."""
    return _cultsim.build(name, theta, variant, qec_mode, cycles, echoes, basis)


def stats(text):
    return _cultsim.stats(text)


def canonical(text, listing=False):
    return _cultsim.canonical(text, listing)


def reorder_peak(text, seed=0, restarts=16):
    """(reordered peak, source-order peak) of live qubits."""
    return _cultsim.reorder_peak(text, seed, restarts)


def run(**config):
    """Runs a batch and returns the result document as a dict."""
    return json.loads(_cultsim.run_json(_config(config)))


def transversal_tomography(**config):
    return _cultsim.transversal_tomography(_config(config))


def tilted_tomography(angle_deg=-10.0):
    return _cultsim.tilted_tomography(angle_deg)


def fault_scan(text):
    return _cultsim.fault_scan(text)
