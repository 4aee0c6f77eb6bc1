"""Tests für Interaktionsgraph und LONGPATH."""

import numpy as np
import pytest

from qmap.exceptions import GateError
from qmap.interaction import (
    InteractionGraph,
    LongPath,
    build_interaction_graph,
    degree_info,
    long_path,
)
from qmap.models import Circuit, Gate


def _graph(q: int, edges: dict[tuple[int, int], int]) -> InteractionGraph:
    weights = np.zeros((q, q), dtype=np.int64)
    for (i, j), w in edges.items():
        weights[i, j] = weights[j, i] = w
    return InteractionGraph(q=q, weights=weights)


class TestInteractionGraph:
    """Tests für build_interaction_graph."""

    def test_counting(self):
        """Mehrfache Paare werden gezählt, W ist symmetrisch."""
        circuit = Circuit(3, [Gate.of("cnot", 0, 1), Gate.of("cnot", 0, 1), Gate.of("cv", 1, 2)])
        graph = build_interaction_graph(circuit)
        assert graph.weight(0, 1) == graph.weight(1, 0) == 2
        assert graph.weight(1, 2) == 1
        assert graph.weight(0, 2) == 0
        assert graph.total_weight == 2 + 1

    def test_single_qubit_gates_discarded(self):
        """Ein-Qubit-Gatter tragen nichts bei."""
        circuit = Circuit(2, [Gate.of("x", 0), Gate.of("h", 1)])
        assert not build_interaction_graph(circuit).weights.any()

    def test_empty_circuit(self):
        """Leere Schaltung ergibt die Nullmatrix."""
        graph = build_interaction_graph(Circuit(3))
        assert graph.weights.shape == (3, 3)
        assert not graph.weights.any()

    def test_three_qubit_gate_rejected(self):
        """Drei-Qubit-Gatter verlangen --decompose."""
        with pytest.raises(GateError, match="arity > 2; pass --decompose"):
            build_interaction_graph(Circuit(3, [Gate.of("toffoli", 0, 1, 2)]))

    def test_invariants_random(self):
        """Symmetrisch, Nulldiagonale, Summe = Zwei-Qubit-Gatter."""
        rng = np.random.default_rng(4)
        gates = []
        for _ in range(60):
            a, b = rng.choice(6, size=2, replace=False)
            gates.append(Gate.of("cnot", int(a), int(b)))
        circuit = Circuit(6, gates)
        graph = build_interaction_graph(circuit)
        assert np.array_equal(graph.weights, graph.weights.T)
        assert not np.diag(graph.weights).any()
        assert graph.total_weight == circuit.two_qubit_gates

    def test_networkx_export(self):
        """Export nach networkx übernimmt Knoten und Gewichte."""
        graph = _graph(4, {(0, 1): 2, (2, 3): 1})
        nxg = graph.to_networkx()
        assert set(nxg.nodes) == {0, 1, 2, 3}
        assert nxg[0][1]["weight"] == 2
        assert nxg.number_of_edges() == 2

    def test_csv_export(self):
        """CSV-Dump der Gewichtsmatrix."""
        assert _graph(2, {(0, 1): 3}).to_csv() == "0,3\n3,0\n"


class TestDegree:
    """Tests für degree_info."""

    def test_star(self):
        """Stern: Mittelpunkt hat den maximalen Grad."""
        graph = _graph(5, {(0, j): 1 for j in range(1, 5)})
        info = degree_info(graph)
        assert info.degree == (4, 1, 1, 1, 1)
        assert info.maxdeg_vertex == 0

    def test_tie_lowest_index(self):
        """Gleichstand: tiefster Index gewinnt."""
        info = degree_info(_graph(3, {}))
        assert info.degree == (0, 0, 0)
        assert info.maxdeg_vertex == 0


class TestLongPath:
    """Tests für long_path."""

    def test_triangle(self):
        """Dreieck folgt den schwersten Kanten."""
        graph = _graph(3, {(0, 1): 5, (1, 2): 3, (0, 2): 1})
        assert long_path(graph).order == (0, 1, 2)

    def test_star_fallback(self):
        """Nach 0→1 hat 1 keinen Nachbarn mehr; Sprung zur Zeile mit Restgewicht."""
        graph = _graph(4, {(0, 1): 3, (0, 2): 2, (0, 3): 1})
        assert long_path(graph).order == (0, 1, 2, 3)

    def test_single_vertex(self):
        """Ein Knoten ergibt die Reihenfolge (0,)."""
        assert long_path(_graph(1, {})).order == (0,)

    def test_zero_matrix(self):
        """Ohne Kanten: aufsteigende Indizes."""
        assert long_path(_graph(4, {})).order == (0, 1, 2, 3)

    def test_input_not_modified(self):
        """long_path arbeitet auf einer Kopie."""
        graph = _graph(3, {(0, 1): 5, (1, 2): 3})
        before = graph.weights.copy()
        long_path(graph)
        assert np.array_equal(graph.weights, before)

    def test_permutation_random(self):
        """1000 Zufallsgraphen, auch unzusammenhängend: Permutation, Start beim Maximalgrad."""
        rng = np.random.default_rng(11)
        for _ in range(1000):
            q = int(rng.integers(1, 17))
            density = float(rng.choice([0.0, 0.1, 0.3, 0.7]))
            edges = {}
            for i in range(q):
                for j in range(i + 1, q):
                    if rng.random() < density:
                        edges[(i, j)] = int(rng.integers(1, 5))
            graph = _graph(q, edges)

            order = long_path(graph).order
            assert sorted(order) == list(range(q))
            assert order[0] == degree_info(graph).maxdeg_vertex

    def test_longpath_validates(self):
        """Doppelte Knoten in der Reihenfolge werden abgelehnt."""
        with pytest.raises(ValueError):
            LongPath(order=(0, 0, 1))
