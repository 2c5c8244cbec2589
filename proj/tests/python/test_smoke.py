# Copyright 2026 The canord Authors
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

import pytest

import canord

KICKBACK = {
    "circuit": {"bench": "kickback"},
    "ensemble": {
        "mode": "monotone",
        "members": 20,
        "graph": "line:2",
        "noise": {"p1": 0.01, "p2": 0.06, "idle_z": 0.02, "ro01": 0.01, "ro10": 0.25},
    },
    "run": {"shots": 4096, "seed": 3},
}


def test_qasm_round_trip():
    circuit, out = canord.adder(2, 1, 1)
    assert circuit.num_qubits == 6
    back = canord.parse_qasm(circuit.qasm())
    assert back.num_gates == circuit.num_gates
    assert canord.ideal_distribution(canord.decompose_to_basis(back)) == pytest.approx({out: 1.0})


def test_canary_is_clifford():
    circuit, ideal = canord.benchmark("fixture", ["QAOA6_3"])
    basis = canord.decompose_to_basis(circuit)
    assert not canord.is_clifford(basis)
    canary = canord.make_canary(basis)
    assert canord.is_clifford(canary)
    assert canary.num_gates == basis.num_gates
    assert canary.cx_depth() == basis.cx_depth()
    assert sum(ideal.values()) == pytest.approx(1.0)


def test_ideal_probability_bell():
    bell = canord.decompose_to_basis(
        canord.parse_qasm(
            'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[2];\ncreg c[2];\n'
            "h q[0];\ncx q[0],q[1];\nmeasure q[0] -> c[0];\nmeasure q[1] -> c[1];\n"
        )
    )
    assert canord.ideal_probability(bell, "11") == 0.5
    assert canord.ideal_probability(bell, "01") == 0.0


def test_run_shots_is_seeded():
    circuit, _ = canord.benchmark("qft", ["3"])
    basis = canord.decompose_to_basis(circuit)
    noise = {"p2": 0.02}
    a = canord.run_shots(basis, shots=2000, seed=4, noise=noise)
    assert sum(a.values()) == 2000
    assert a == canord.run_shots(basis, shots=2000, seed=4, noise=noise, threads=2)


def test_spearman():
    assert canord.spearman([1, 2, 2, 4], [1, 2, 3, 4]) == pytest.approx(0.9487, abs=1e-4)
    assert canord.fractional_ranks([0.2, 0.2, 0.5]) == [1.5, 1.5, 3.0]


def test_pipeline_report():
    report = canord.run(KICKBACK)
    top = report["records"][0]
    assert top["string"] == "11"
    assert top["rho"] > 0.9
    assert canord.run(KICKBACK) == report


def test_errors():
    with pytest.raises(canord.QasmParseError):
        canord.parse_qasm("OPENQASM 2.0;\nqreg q[1];\nbogus q[0];\n")
    with pytest.raises(canord.ConfigError):
        canord.run({"circuit": {"bench": "kickback"}, "bogus": {}})
    with pytest.raises(ValueError):
        canord.adder(2, 9, 0)
