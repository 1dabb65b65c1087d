# Copyright 2026 The matchwalk Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import numpy as np
import pytest
import scipy.linalg

import matchwalk as mw

CYCLE = [(0, 1), (2, 3), (0, 3), (1, 2)]


def test_graph_basics():
    g = mw.LabeledGraph(2, CYCLE)
    assert g.num_edges == 4
    assert g.edges == sorted(CYCLE)
    assert g.is_connected()
    assert mw.hamming_distance(0b010, 0b110) == 1
    assert mw.hamming_distance_str("00", "11") == 2
    with pytest.raises(ValueError):
        mw.LabeledGraph(2, [(1, 1)])


def test_decompose_and_compress():
    g = mw.LabeledGraph(2, CYCLE)
    ms = mw.greedy_matching_decompose(g)
    assert ms == [[(0, 1), (2, 3)], [(0, 3), (1, 2)]]
    (c,) = mw.compress_matching(ms[1], 2)
    assert c["active"] == [1] and c["weight_reducing"] == [0]


def test_matching_unitary_matches_scipy():
    m = [(0, 5), (2, 7)]
    a = np.zeros((8, 8))
    for u, v in m:
        a[u, v] = a[v, u] = 1
    u = mw.matching_unitary(m, 0.7, 3)
    assert np.allclose(u, scipy.linalg.expm(-0.7j * a), atol=1e-12)


def test_compile_and_error():
    g = mw.gen_hypercube(3)
    info = mw.compile(g, "matching", 1.0, 1)
    assert info["cx_count"] == 0 and info["num_terms"] == 3
    assert mw.trotter_error(g, "matching", 1.0, 1) < 1e-12
    a = mw.adjacency_matrix(g)
    u = mw.compiled_unitary(g, "pauli", 0.4, 2)
    assert np.allclose(u, scipy.linalg.expm(-0.4j * a.real), atol=1e-12)
    with pytest.raises(ValueError):
        mw.compile(g, "qft")


def test_pauli_and_witness():
    q3 = mw.gen_hypercube(3)
    assert mw.pauli_decompose(q3) == [("IIX", 1.0), ("IXI", 1.0), ("XII", 1.0)]
    rel = mw.relabel_graph(q3, mw.modular_times3_perm(3))
    terms = dict(mw.pauli_decompose(rel))
    assert terms["IXI"] == pytest.approx(0.5) and terms["IYY"] == pytest.approx(-0.5)
    assert mw.anticommute("IXI", "IYY")
    assert mw.relabeled_hypercube_witness(mw.local_block_perm(4, 1)) == (True, True)
    assert mw.matchings_commute([(0, 1), (2, 3)], [(0, 3), (1, 2)], 2)
    assert not mw.matchings_commute([(0, 1)], [(1, 3)], 2)


def test_datasets_and_guards():
    gs = mw.generate_dataset("connected-path", 16, seed=3, count=5)
    assert len(gs) == 5 and all(g.is_connected() for g in gs)
    assert gs[0] == mw.generate_dataset("connected-path", 16, seed=3, count=1)[0]
    with pytest.raises(mw.NumericalGuardError):
        mw.pauli_decompose(mw.gen_hypercube(9))
    with pytest.raises(mw.IoError):
        mw.read_graph("/nonexistent/graph.json")
