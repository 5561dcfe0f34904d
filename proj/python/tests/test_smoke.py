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

import math
import pathlib

import pytest

import cultsim


def test_kt_counts():
    s = cultsim.stats(cultsim.build("kt"))
    assert s["two_qubit_gates"] == 216
    assert s["measurements"] == 54


def test_canonical_round_trip():
    text = cultsim.build("injection")
    assert cultsim.canonical(text) == text
    with pytest.raises(ValueError):
        cultsim.canonical("FOO 1\n")


def test_reorder_worked_example():
    path = pathlib.Path(__file__).parents[2] / "tests" / "fixtures" / "repcode_d3_2cycles.circ"
    peak, source = cultsim.reorder_peak(path.read_text())
    assert peak == 4
    assert source >= peak


def test_noiseless_kt_run():
    r = cultsim.run(experiment="kt", engine="ranked", shots=20, seed=3)
    assert r["kept"] == 20
    assert r["logical_error"]["value"] == 0


def test_injection_only_tomography():
    theta = 1.1
    r = cultsim.run(experiment="tomography", variant="injection_only", theta=theta, engine="ranked",
                    shots=2)
    x, y, z = r["bloch"]
    assert x == pytest.approx(math.sin(theta), abs=1e-10)
    assert z == pytest.approx(math.cos(theta), abs=1e-10)


def test_bad_config():
    with pytest.raises(ValueError):
        cultsim.run(p=0.5)
    with pytest.raises(TypeError):
        cultsim.run(shot=3)


def test_capacity_error():
    with pytest.raises(cultsim.CapacityError):
        cultsim.run(experiment="kt", engine="dense", dense_threshold=4, shots=1)


def test_tilt_and_fault_scan():
    t = cultsim.tilted_tomography()
    assert t["keep"][0] == pytest.approx(0.8202, abs=1e-4)
    f = cultsim.fault_scan(cultsim.build("kt"))
    assert f["undetected_logical"] == 0
