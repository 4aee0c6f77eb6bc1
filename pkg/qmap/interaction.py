"""
Interaktionsgraph und LONGPATH
==============================
Erster Teil der Platzierung:

1. Gewichtsmatrix W zählen (Zwei-Qubit-Gatter pro Qubit-Paar)
2. Startknoten = Knoten mit maximalem Grad
3. Gierig zum unbesuchten Nachbarn mit maximalem Kantengewicht gehen;
   ohne unbesuchten Nachbarn zur Zeile mit dem größten Restgewicht springen

Gleichstände werden immer zum kleinsten Index aufgelöst.
"""

import csv
import io
import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .exceptions import GateError
from .models import Circuit

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class InteractionGraph:
    """Symmetrische q×q-Gewichtsmatrix mit Nulldiagonale."""
    q: int
    weights: np.ndarray

    def weight(self, i: int, j: int) -> int:
        return int(self.weights[i, j])

    @property
    def total_weight(self) -> int:
        """Summe der oberen Dreiecksmatrix = Anzahl Zwei-Qubit-Gatter."""
        return int(np.triu(self.weights, k=1).sum())

    def edges(self) -> list[tuple[int, int, int]]:
        """Kanten (i, j, w) mit i < j und w > 0."""
        rows, cols = np.nonzero(np.triu(self.weights, k=1))
        return [(int(i), int(j), int(self.weights[i, j])) for i, j in zip(rows, cols)]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.q))
        graph.add_weighted_edges_from(self.edges())
        return graph

    def to_csv(self) -> str:
        """Gewichtsmatrix als CSV (eine Zeile pro Qubit)."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for row in self.weights.tolist():
            writer.writerow(row)
        return buffer.getvalue()


@dataclass(frozen=True)
class DegreeInfo:
    """Grad pro Qubit und der Knoten mit maximalem Grad."""
    degree: tuple[int, ...]
    maxdeg_vertex: int


@dataclass(frozen=True)
class LongPath:
    """Reihenfolge aller q Qubits."""
    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(v) for v in self.order)
        if sorted(order) != list(range(len(order))):
            raise ValueError(f"Keine Permutation von 0..{len(order) - 1}: {order}")
        object.__setattr__(self, "order", order)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)


def build_interaction_graph(circuit: Circuit) -> InteractionGraph:
    """
    Zählt Zwei-Qubit-Gatter pro Paar; Ein-Qubit-Gatter werden verworfen.

    Raises:
        GateError: bei Gattern mit Stelligkeit ≥ 3 (vorher zerlegen)
    """
    q = circuit.qubit_count
    weights = np.zeros((q, q), dtype=np.int64)

    for index, gate in enumerate(circuit.gates):
        if gate.arity == 1:
            continue
        if gate.arity > 2:
            raise GateError(f"Gatter {index} ({gate}): arity > 2; pass --decompose")
        i, j = gate.operands
        weights[i, j] += 1
        weights[j, i] += 1

    return InteractionGraph(q=q, weights=weights)


def degree_info(graph: InteractionGraph) -> DegreeInfo:
    """Grad = Anzahl Nachbarn mit Gewicht > 0."""
    degree = np.count_nonzero(graph.weights, axis=1)
    # argmax liefert bei Gleichstand den ersten Index
    return DegreeInfo(
        degree=tuple(int(d) for d in degree),
        maxdeg_vertex=int(np.argmax(degree)) if graph.q else 0,
    )


def long_path(graph: InteractionGraph) -> LongPath:
    """
    Gierige LONGPATH-Reihenfolge aller Qubits.

    Arbeitet auf einer Kopie von W; durchlaufene Kanten werden genullt.
    Zeilenmaxima werden mitgeführt, sodass jeder Schritt O(q) kostet.
    """
    q = graph.q
    work = graph.weights.copy()
    row_max = work.max(axis=1) if q else np.zeros(0, dtype=np.int64)
    visited = np.zeros(q, dtype=bool)

    start = degree_info(graph).maxdeg_vertex
    order = [start]
    visited[start] = True

    while len(order) < q:
        prev = order[-1]
        candidates = np.where(visited, 0, work[prev])

        if candidates.max() > 0:
            nxt = int(np.argmax(candidates))
            work[prev, nxt] = work[nxt, prev] = 0
            row_max[prev] = work[prev].max()
            row_max[nxt] = work[nxt].max()
        else:
            # Sprung: unbesuchte Zeile mit maximalem Restgewicht
            remaining = np.where(visited, -1, row_max)
            nxt = int(np.argmax(remaining))
            logger.debug(f"LONGPATH springt von q{prev} zu q{nxt}")

        order.append(nxt)
        visited[nxt] = True

    logger.debug(f"LONGPATH: {order}")
    return LongPath(order=tuple(order))
