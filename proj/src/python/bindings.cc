// Copyright 2026 The canord Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "canord/bench.h"
#include "canord/canary.h"
#include "canord/correlation.h"
#include "canord/noisysim.h"
#include "canord/pipeline.h"
#include "canord/qasm.h"
#include "canord/stabsim.h"
#include "canord/statevector.h"
#include "canord/transpile.h"

namespace py = pybind11;

namespace canord {
namespace {

std::map<std::string, double> to_py(const Distribution &d) {
    std::map<std::string, double> out;
    for (const auto &[s, p] : d) {
        out[s.str()] = p;
    }
    return out;
}

std::map<std::string, uint64_t> to_py(const Counts &c) {
    std::map<std::string, uint64_t> out;
    for (const auto &[s, n] : c.histogram) {
        out[s.str()] = n;
    }
    return out;
}

NoiseParams params_from(py::dict d) {
    NoiseParams p;
    for (auto [key, value] : d) {
        std::string k = py::str(key);
        double v = value.cast<double>();
        if (k == "p1") {
            p.p1 = v;
        } else if (k == "p2") {
            p.p2 = v;
        } else if (k == "idle_z") {
            p.idle_z = v;
        } else if (k == "ro01") {
            p.ro01 = v;
        } else if (k == "ro10") {
            p.ro10 = v;
        } else {
            throw py::key_error("unknown noise parameter '" + k + "'");
        }
    }
    return p;
}

}  // namespace
}  // namespace canord

PYBIND11_MODULE(_canord, m) {
    using namespace canord;
    m.doc() = "Canary-ordered ensemble reweighting of noisy circuit outputs.";

    py::register_exception<CircuitError>(m, "CircuitError", PyExc_ValueError);
    py::register_exception<QasmParseError>(m, "QasmParseError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<EmptyStringSetError>(m, "EmptyStringSetError", PyExc_RuntimeError);

    py::class_<Circuit>(m, "Circuit")
        .def_readonly("num_qubits", &Circuit::num_qubits)
        .def_readonly("num_clbits", &Circuit::num_clbits)
        .def_readonly("name", &Circuit::name)
        .def_property_readonly("num_gates", [](const Circuit &c) { return c.gates.size(); })
        .def("cx_depth", [](const Circuit &c) { return cx_depth(c); })
        .def("is_basis_only", &Circuit::is_basis_only)
        .def("qasm", [](const Circuit &c) { return emit_qasm(c); })
        .def("__eq__", [](const Circuit &a, const Circuit &b) { return a == b; })
        .def("__repr__", [](const Circuit &c) {
            return "<Circuit " + std::to_string(c.num_qubits) + " qubits, " + std::to_string(c.gates.size()) +
                   " gates>";
        });

    m.def("parse_qasm", [](const std::string &text) { return parse_qasm(text); }, py::arg("text"));
    m.def("decompose_to_basis", &decompose_to_basis, py::arg("circuit"));
    m.def(
        "route",
        [](const Circuit &c, const std::string &graph, std::vector<uint32_t> layout) {
            CouplingGraph g = CouplingGraph::preset(graph);
            return route(c, g, Layout{std::move(layout), g.num_physical_qubits()});
        },
        py::arg("circuit"), py::arg("graph"), py::arg("layout"));
    m.def("make_canary", &make_canary, py::arg("circuit"));
    m.def("is_clifford", &is_clifford, py::arg("circuit"));

    m.def(
        "ideal_distribution", [](const Circuit &c) { return to_py(ideal_distribution(c, 1e-12)); },
        py::arg("circuit"));
    m.def(
        "ideal_probability", [](const Circuit &c, const std::string &s) { return ideal_probability(c, BitString(s)); },
        py::arg("circuit"), py::arg("bitstring"));
    m.def(
        "run_shots",
        [](const Circuit &c, uint64_t shots, uint64_t seed, py::object noise, size_t threads, uint32_t max_qubits) {
            NoiseModel model = noise.is_none() ? NoiseModel::noiseless(c.num_qubits)
                                               : NoiseModel::all_to_all(c.num_qubits, params_from(noise));
            py::gil_scoped_release release;
            return to_py(run_shots(c, model, shots, seed, {threads, max_qubits}));
        },
        py::arg("circuit"), py::arg("shots") = 8192, py::arg("seed") = 1, py::arg("noise") = py::none(),
        py::arg("threads") = 1, py::arg("max_qubits") = 16);

    m.def(
        "adder",
        [](uint32_t bits, uint64_t a, uint64_t b) {
            auto [c, out] = adder(bits, a, b);
            return py::make_tuple(c, out.str());
        },
        py::arg("bits"), py::arg("a"), py::arg("b"));
    m.def(
        "benchmark",
        [](const std::string &family, const std::vector<std::string> &args) {
            Benchmark bench = make_benchmark(family, args);
            return py::make_tuple(bench.circuit, to_py(bench.ideal));
        },
        py::arg("family"), py::arg("args") = std::vector<std::string>{});

    m.def("spearman", &spearman, py::arg("x"), py::arg("y"));
    m.def("fractional_ranks", &fractional_ranks, py::arg("values"));

    m.def(
        "run_config",
        [](const std::string &json_text, const std::string &base_dir, size_t threads) {
            PipelineConfig config = parse_config(json_text, base_dir);
            py::gil_scoped_release release;
            return report_json(run_pipeline(config, threads));
        },
        py::arg("config_json"), py::arg("base_dir") = ".", py::arg("threads") = 1,
        "Runs the full pipeline and returns report.json text.");
}
