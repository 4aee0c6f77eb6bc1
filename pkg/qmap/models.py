"""
Datenmodelle für Schaltkreise und Gitter.

Circuit und Grid fließen durch die gesamte Pipeline:
QASM → Circuit → [Lowering] → Circuit → [Placement] → Grid → [Routing] → Circuit

Konvention: Qubits sind 0-basierte Indizes, Gitterzellen sind (Zeile, Spalte).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional

import numpy as np

from .exceptions import GateError, PlacementError

# Markierung für leere Gitterzellen (wie grid[i][j] = -1 im Platzierungsalgorithmus)
EMPTY = -1

Cell = tuple[int, int]


class Opcode(Enum):
    """Gatter-Opcodes des QASM-Dialekts."""
    X = "x"
    H = "h"
    T = "t"
    TDG = "tdg"
    S = "s"
    SDG = "sdg"
    CNOT = "cnot"
    CV = "cv"
    CVDG = "cvdg"
    SWAP = "swap"
    TOFFOLI = "toffoli"
    FREDKIN = "fredkin"
    MCT = "mct"

    @property
    def arity(self) -> int:
        """Stelligkeit; für MCT die Mindeststelligkeit."""
        return _ARITY[self]

    @property
    def is_variadic(self) -> bool:
        return self is Opcode.MCT

    @property
    def is_classical(self) -> bool:
        """Klassisch-reversibel (Permutation der Basiszustände)."""
        return self in _CLASSICAL

    @property
    def is_self_inverse(self) -> bool:
        return self in _SELF_INVERSE


_ARITY = {
    Opcode.X: 1, Opcode.H: 1, Opcode.T: 1, Opcode.TDG: 1, Opcode.S: 1, Opcode.SDG: 1,
    Opcode.CNOT: 2, Opcode.CV: 2, Opcode.CVDG: 2, Opcode.SWAP: 2,
    Opcode.TOFFOLI: 3, Opcode.FREDKIN: 3,
    Opcode.MCT: 3,
}

_CLASSICAL = frozenset({
    Opcode.X, Opcode.CNOT, Opcode.SWAP, Opcode.TOFFOLI, Opcode.FREDKIN, Opcode.MCT,
})

_SELF_INVERSE = frozenset({
    Opcode.X, Opcode.H, Opcode.CNOT, Opcode.SWAP, Opcode.TOFFOLI, Opcode.FREDKIN, Opcode.MCT,
})


@dataclass(frozen=True)
class Gate:
    """
    Ein Gatter mit geordneten Operanden.

    Für MCT sind alle Operanden bis auf den letzten Kontrollen.
    SWAP-Operanden werden aufsteigend normalisiert, damit
    "identische Zeile" gleich "identische Operation" ist.
    """
    opcode: Opcode
    operands: tuple[int, ...]

    def __post_init__(self):
        operands = tuple(int(q) for q in self.operands)
        expected = self.opcode.arity

        if self.opcode.is_variadic:
            if len(operands) < expected:
                raise GateError(
                    f"{self.opcode.value}: mindestens {expected} Operanden erwartet, "
                    f"{len(operands)} erhalten"
                )
        elif len(operands) != expected:
            raise GateError(
                f"{self.opcode.value}: {expected} Operanden erwartet, {len(operands)} erhalten"
            )

        if any(q < 0 for q in operands):
            raise GateError(f"{self.opcode.value}: negativer Qubit-Index in {operands}")
        if len(set(operands)) != len(operands):
            raise GateError(f"{self.opcode.value}: doppelter Operand in {operands}")

        if self.opcode is Opcode.SWAP:
            operands = tuple(sorted(operands))
        object.__setattr__(self, "operands", operands)

    @classmethod
    def of(cls, opcode: Opcode | str, *operands: int) -> "Gate":
        """Kurzform: ``Gate.of("cnot", 0, 1)``."""
        return cls(Opcode(opcode), tuple(operands))

    @property
    def arity(self) -> int:
        return len(self.operands)

    @property
    def controls(self) -> tuple[int, ...]:
        """Kontroll-Qubits (MCT/Toffoli: alle außer dem letzten)."""
        if self.opcode in (Opcode.MCT, Opcode.TOFFOLI):
            return self.operands[:-1]
        if self.opcode in (Opcode.CNOT, Opcode.CV, Opcode.CVDG, Opcode.FREDKIN):
            return self.operands[:1]
        return ()

    @property
    def target(self) -> int:
        return self.operands[-1]

    def __str__(self) -> str:
        args = ",".join(f"q{q}" for q in self.operands)
        return f"{self.opcode.value} {args}"


@dataclass
class Circuit:
    """Geordnete Gatterliste über ``qubit_count`` logischen Qubits."""
    qubit_count: int
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self):
        if self.qubit_count < 1:
            raise GateError(f"Qubit-Anzahl muss positiv sein, nicht {self.qubit_count}")
        for index, gate in enumerate(self.gates):
            if max(gate.operands) >= self.qubit_count:
                raise GateError(
                    f"Gatter {index} ({gate}): Operand außerhalb von {self.qubit_count} Qubits"
                )

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    @property
    def two_qubit_gates(self) -> int:
        return sum(1 for g in self.gates if g.arity == 2)

    @property
    def max_arity(self) -> int:
        return max((g.arity for g in self.gates), default=0)

    def count(self, opcode: Opcode) -> int:
        return sum(1 for g in self.gates if g.opcode is opcode)

    def with_gates(self, gates: Iterable[Gate], qubit_count: Optional[int] = None) -> "Circuit":
        """Neuer Circuit mit anderen Gattern (und optional mehr Qubits)."""
        return Circuit(
            qubit_count=self.qubit_count if qubit_count is None else qubit_count,
            gates=list(gates),
        )


class Grid:
    """
    r×c-Gitter mit Qubit-Belegung.

    ``cells`` und die inverse Abbildung Qubit → Zelle werden
    gemeinsam gepflegt. Leere Zellen tragen ``EMPTY``.
    """

    def __init__(self, rows: int, cols: int):
        if rows < 1 or cols < 1:
            raise PlacementError(f"Ungültige Gittergröße {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.cells = np.full((rows, cols), EMPTY, dtype=np.int64)
        self._pos: dict[int, Cell] = {}

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]]) -> "Grid":
        """Baut ein Gitter aus einer Zeilenliste (EMPTY = -1)."""
        array = np.array([list(row) for row in cells], dtype=np.int64)
        if array.ndim != 2 or array.size == 0:
            raise PlacementError("Gitter muss eine nicht-leere Matrix sein")
        grid = cls(*array.shape)
        for (r, c), qubit in np.ndenumerate(array):
            if qubit != EMPTY:
                grid.place(int(qubit), (r, c))
        return grid

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def capacity(self) -> int:
        return self.rows * self.cols

    @property
    def qubits(self) -> list[int]:
        return sorted(self._pos)

    @property
    def qubit_count(self) -> int:
        return len(self._pos)

    @property
    def next_label(self) -> int:
        """Kleinster Index oberhalb aller platzierten Qubits."""
        return max(self._pos, default=-1) + 1

    def in_bounds(self, cell: Cell) -> bool:
        r, c = cell
        return 0 <= r < self.rows and 0 <= c < self.cols

    def place(self, qubit: int, cell: Cell):
        if qubit < 0:
            raise PlacementError(f"Ungültiger Qubit-Index {qubit}")
        if not self.in_bounds(cell):
            raise PlacementError(f"Zelle {cell} liegt außerhalb des {self.rows}x{self.cols}-Gitters")
        if qubit in self._pos:
            raise PlacementError(f"q{qubit} ist bereits platziert")
        if self.cells[cell] != EMPTY:
            raise PlacementError(f"Zelle {cell} ist bereits belegt")
        self.cells[cell] = qubit
        self._pos[qubit] = cell

    def qubit_at(self, cell: Cell) -> int:
        return int(self.cells[cell])

    def is_placed(self, qubit: int) -> bool:
        return qubit in self._pos

    def position(self, qubit: int) -> Cell:
        try:
            return self._pos[qubit]
        except KeyError:
            raise PlacementError(f"q{qubit} ist nicht platziert") from None

    def materialize(self, cell: Cell) -> int:
        """Belegt eine leere Zelle mit einem neuen Leer-Qubit (Padding)."""
        label = self.next_label
        self.place(label, cell)
        return label

    def swap_cells(self, a: Cell, b: Cell):
        """Tauscht den Inhalt zweier Zellen und aktualisiert die Positionen."""
        qa, qb = self.qubit_at(a), self.qubit_at(b)
        self.cells[a], self.cells[b] = qb, qa
        if qa != EMPTY:
            self._pos[qa] = b
        if qb != EMPTY:
            self._pos[qb] = a

    def swap_qubits(self, i: int, j: int):
        self.swap_cells(self.position(i), self.position(j))

    def cell_index(self, cell: Cell) -> int:
        """Zeilenweiser Zellindex."""
        return cell[0] * self.cols + cell[1]

    def copy(self) -> "Grid":
        other = Grid(self.rows, self.cols)
        other.cells = self.cells.copy()
        other._pos = dict(self._pos)
        return other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grid):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.cells, other.cells))

    def __repr__(self) -> str:
        return f"Grid({self.cells.tolist()})"


def manhattan(a: Cell, b: Cell) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])
