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

// Thin layer over the library. Structured results cross as JSON text; cultsim/__init__.py
// decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cultsim/circuit.h"
#include "cultsim/densesim.h"
#include "cultsim/frames.h"
#include "cultsim/protocols.h"
#include "cultsim/reorder.h"
#include "cultsim/runner.h"

namespace py = pybind11;
using namespace cultsim;

namespace {

ProtocolParams make_params(double theta, const std::string &variant, const std::string &qec_mode, size_t cycles,
                           bool echoes, char basis) {
    ProtocolParams p;
    p.theta = theta;
    if (variant == "injection_only") {
        p.variant = Variant::injection_only;
    } else if (variant != "with_cultivation") {
        throw std::invalid_argument("unknown variant: " + variant);
    }
    if (qec_mode == "interleaved") {
        p.qec_mode = QecMode::interleaved;
    } else if (qec_mode == "none") {
        p.qec_mode = QecMode::none;
    } else if (qec_mode != "full") {
        throw std::invalid_argument("unknown qec mode: " + qec_mode);
    }
    p.n_cycles = cycles;
    p.echoes = echoes;
    p.graft_basis = basis;
    return p;
}

py::dict stats_dict(const Circuit &c) {
    auto s = stats(c);
    py::dict d;
    d["two_qubit_gates"] = s.two_qubit_gates;
    d["measurements"] = s.measurements;
    d["qubits"] = s.qubits;
    d["ticks"] = s.ticks;
    d["nonclifford_tags"] = s.nonclifford_tags;
    d["detectors"] = c.detectors().size();
    d["observables"] = c.num_observables();
    return d;
}

}  // namespace

PYBIND11_MODULE(_cultsim, m) {
    m.doc() = "Native core of cultsim";
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    m.def("stats", [](const std::string &text) { return stats_dict(parse(text)); }, py::arg("text"));
    m.def(
        "canonical", [](const std::string &text, bool listing) {
            return emit(parse(text), listing ? EmitStyle::listing : EmitStyle::spaced);
        },
        py::arg("text"), py::arg("listing") = false);
    m.def(
        "build",
        [](const std::string &name, double theta, const std::string &variant, const std::string &qec_mode,
           size_t cycles, bool echoes, char basis) {
            return emit(build_experiment(name, make_params(theta, variant, qec_mode, cycles, echoes, basis)));
        },
        py::arg("name"), py::arg("theta"), py::arg("variant"), py::arg("qec_mode"), py::arg("cycles"),
        py::arg("echoes"), py::arg("basis"));
    m.def(
        "reorder_peak",
        [](const std::string &text, uint64_t seed, size_t restarts) {
            auto dag = build_dag(parse(text));
            return std::make_pair(greedy_order(dag, seed, restarts).peak, source_order(dag).peak);
        },
        py::arg("text"), py::arg("seed") = 0, py::arg("restarts") = 16);
    m.def(
        "run_json",
        [](const std::string &config) {
            auto c = RunConfig::from_json(config);
            py::gil_scoped_release release;
            return run(c).to_json();
        },
        py::arg("config"));
    m.def(
        "transversal_tomography",
        [](const std::string &config) {
            auto c = RunConfig::from_json(config);
            TomographyResult t;
            {
                py::gil_scoped_release release;
                t = transversal_tomography(c);
            }
            py::dict d;
            d["bloch"] = t.bloch;
            d["keep"] = t.keep;
            d["sigma"] = t.sigma;
            d["norm2"] = t.norm2();
            return d;
        },
        py::arg("config"));
    m.def(
        "tilted_tomography",
        [](double angle_deg) {
            auto r = tilted_tomography(angle_deg);
            py::dict d;
            d["keep"] = std::vector<double>{r.keep_x, r.keep_y, r.keep_z};
            d["kept"] = std::vector<double>{r.x_kept, r.y_kept, r.z_kept};
            return d;
        },
        py::arg("angle_deg") = -10.0);
    m.def(
        "fault_scan",
        [](const std::string &text) {
            auto f = single_fault_scan(parse(text));
            py::dict d;
            d["sites"] = f.sites;
            d["undetected_logical"] = f.undetected_logical;
            d["silent"] = f.silent;
            return d;
        },
        py::arg("text"));
}
