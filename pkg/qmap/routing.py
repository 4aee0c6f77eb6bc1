"""
SWAP-Routing
============
Fügt vor jedem Zwei-Qubit-Gatter SWAPs ein, bis die Operanden im Gitter
benachbart sind, und entfernt danach redundante Paare.

Pro Gatter (i, j):
    1. i läuft senkrecht in seiner Spalte bis zur Zeile von j
    2. dann waagrecht entlang dieser Zeile bis eine Zelle vor j
    → genau Manhattan(i, j) - 1 SWAPs

Mit ``restore`` folgt dem Gatter dieselbe SWAP-Folge rückwärts, sodass
jedes Gatter gegen die Ausgangsplatzierung geroutet wird. Die Auslöschung
arbeitet als Stack: ist ein Gatter identisch mit dem aktuellen Ende der
Ausgabe, werden beide entfernt und mit dem vorherigen Ende weiterverglichen.

Läuft ein Qubit durch eine leere Zelle, bekommt die Zelle einen neuen
Leer-Qubit (Padding-Leitung q, q+1, ...), damit jeder SWAP zwei Leitungen hat.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .exceptions import RoutingError
from .models import EMPTY, Cell, Circuit, Gate, Grid, Opcode, manhattan

logger = logging.getLogger(__name__)

DEFAULT_CANCEL_WHITELIST = frozenset({
    Opcode.SWAP, Opcode.CNOT, Opcode.X, Opcode.TOFFOLI, Opcode.FREDKIN,
})


@dataclass
class RoutingConfig:
    """Konfiguration des Routings."""
    # SWAPs nach jedem Gatter rückwärts anwenden
    restore: bool = True

    # Identische Nachbarpaare entfernen
    cancel: bool = True

    # Opcodes, die paarweise entfernt werden dürfen (nur selbstinvers)
    cancel_whitelist: frozenset[Opcode] = DEFAULT_CANCEL_WHITELIST

    def __post_init__(self):
        self.cancel_whitelist = frozenset(Opcode(op) for op in self.cancel_whitelist)
        bad = sorted(op.value for op in self.cancel_whitelist if not op.is_self_inverse)
        if bad:
            raise RoutingError(f"Nicht selbstinverse Opcodes in der Whitelist: {', '.join(bad)}")


class GateRole(Enum):
    """Herkunft eines Ausgabegatters."""
    FORWARD = "forward"
    SOURCE = "source"
    RESTORE = "restore"


@dataclass(frozen=True)
class GateOrigin:
    """Quellgatter-Index und Rolle eines Ausgabegatters."""
    source: int
    role: GateRole

    @property
    def inserted(self) -> bool:
        return self.role is not GateRole.SOURCE


@dataclass
class RoutedCircuit:
    """Geroutete Schaltung mit Anfangs- und Endplatzierung."""
    circuit: Circuit
    initial_grid: Grid
    final_grid: Grid

    # Eingefügte SWAPs vor der Auslöschung
    swap_count: int

    # Eingefügte SWAPs nach der Auslöschung
    swaps_after_cancel: int = 0

    # Entfernte Quellgatter (Auslöschung identischer Paare)
    source_gates_removed: int = 0

    origins: list[GateOrigin] = field(default_factory=list)

    # Beim Routing angelegte Leer-Qubits (höchste Indizes)
    padding_count: int = 0

    @property
    def padding_qubits(self) -> list[int]:
        first = self.circuit.qubit_count - self.padding_count
        return list(range(first, self.circuit.qubit_count))

    def annotations(self) -> dict[int, str]:
        """Kommentare "route for line k" vor jedem eingefügten SWAP-Block."""
        notes: dict[int, str] = {}
        previous = None
        for index, origin in enumerate(self.origins):
            if origin.inserted and origin != previous:
                verb = "route" if origin.role is GateRole.FORWARD else "restore"
                notes[index] = f"{verb} for line {origin.source + 1}"
            previous = origin
        return notes


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def _relabel(swap: Gate, old: int, new: int) -> Gate:
    return Gate(Opcode.SWAP, tuple(new if q == old else q for q in swap.operands))


def route_gate(grid: Grid, gate: Gate) -> tuple[list[Gate], list[Gate]]:
    """
    Bringt die Operanden eines Zwei-Qubit-Gatters nebeneinander.

    Das Gitter wird nach jedem SWAP aktualisiert und bleibt im
    Vorwärts-Zustand; ``swaps_restore`` ist die umgekehrte Folge.

    Returns:
        (swaps_forward, swaps_restore)

    Raises:
        RoutingError: Stelligkeit > 2
        PlacementError: Operand nicht platziert
    """
    if gate.arity == 1:
        grid.position(gate.operands[0])
        return [], []
    if gate.arity > 2:
        raise RoutingError(f"{gate}: arity > 2; pass --decompose")

    mover, partner = gate.operands
    here = grid.position(mover)
    goal = grid.position(partner)
    forward: list[Gate] = []

    def step(cell: Cell):
        occupant = grid.qubit_at(cell)
        if occupant == EMPTY:
            occupant = grid.materialize(cell)
        forward.append(Gate(Opcode.SWAP, (mover, occupant)))
        grid.swap_qubits(mover, occupant)

    # Senkrecht in der eigenen Spalte
    while here[0] != goal[0] and manhattan(here, goal) > 1:
        here = (here[0] + _sign(goal[0] - here[0]), here[1])
        step(here)

    # Waagrecht in der Zeile des Partners
    while manhattan(here, goal) > 1:
        here = (here[0], here[1] + _sign(goal[1] - here[1]))
        step(here)

    return forward, list(reversed(forward))


def cancel_indices(gates: list[Gate], whitelist: frozenset[Opcode]) -> list[int]:
    """Indizes der Gatter, die die Stack-Auslöschung überleben."""
    stack: list[int] = []
    for index, gate in enumerate(gates):
        if stack and gate.opcode in whitelist and gates[stack[-1]] == gate:
            stack.pop()
        else:
            stack.append(index)
    return stack


def cancel_pairs(circuit: Circuit, whitelist: frozenset[Opcode] = DEFAULT_CANCEL_WHITELIST) -> Circuit:
    """Entfernt identische benachbarte Paare selbstinverser Gatter."""
    kept = cancel_indices(circuit.gates, frozenset(whitelist))
    return circuit.with_gates(circuit.gates[i] for i in kept)


def route_circuit(circuit: Circuit, grid: Grid, cfg: RoutingConfig) -> RoutedCircuit:
    """
    Routet alle Gatter gegen die Platzierung ``grid``.

    Das übergebene Gitter bleibt unverändert.
    """
    work = grid.copy()
    gates: list[Gate] = []
    origins: list[GateOrigin] = []
    inserted = 0

    for index, gate in enumerate(circuit.gates):
        if gate.arity > 2:
            raise RoutingError(f"Gatter {index} ({gate}): arity > 2; pass --decompose")

        forward, restore = route_gate(work, gate)
        gates.extend(forward)
        origins.extend(GateOrigin(index, GateRole.FORWARD) for _ in forward)
        gates.append(gate)
        origins.append(GateOrigin(index, GateRole.SOURCE))
        inserted += len(forward)
        if gate.opcode is Opcode.SWAP:
            # Quell-SWAPs verschieben die Belegung wie eingefügte; der
            # Rückweg gehört danach dem Partner
            work.swap_qubits(*gate.operands)
            mover, partner = gate.operands
            restore = [_relabel(swap, mover, partner) for swap in restore]

        if cfg.restore and restore:
            for swap in restore:
                work.swap_qubits(*swap.operands)
            gates.extend(restore)
            origins.extend(GateOrigin(index, GateRole.RESTORE) for _ in restore)
            inserted += len(restore)

    # Anfangsplatzierung inkl. Padding: SWAPs rückwärts auf das Endgitter
    initial = work.copy()
    for gate in reversed(gates):
        if gate.opcode is Opcode.SWAP:
            initial.swap_qubits(*gate.operands)

    qubit_count = max(circuit.qubit_count, work.next_label)
    padding = qubit_count - circuit.qubit_count

    removed_source = 0
    if cfg.cancel:
        kept = cancel_indices(gates, cfg.cancel_whitelist)
        removed_source = sum(1 for o in origins if not o.inserted) - sum(
            1 for i in kept if not origins[i].inserted
        )
        gates = [gates[i] for i in kept]
        origins = [origins[i] for i in kept]

    after_cancel = sum(1 for o in origins if o.inserted)
    logger.info(
        f"Routing: {inserted} SWAPs eingefügt, {after_cancel} nach Auslöschung"
        + (f", {padding} Padding-Qubits" if padding else "")
    )

    return RoutedCircuit(
        circuit=Circuit(qubit_count=qubit_count, gates=gates),
        initial_grid=initial,
        final_grid=work,
        swap_count=inserted,
        swaps_after_cancel=after_cancel,
        source_gates_removed=removed_source,
        origins=origins,
        padding_count=padding,
    )


def permutation_trace(circuit: Circuit, grid: Grid) -> np.ndarray:
    """
    Zellpermutation aller SWAPs der Schaltung.

    Returns:
        Array ``perm`` mit perm[a] = Endzelle (zeilenweise) des Inhalts,
        der in Zelle a startet

    Raises:
        RoutingError: SWAP zwischen nicht benachbarten Zellen
    """
    work = grid.copy()
    # start[c] = Startzelle des Inhalts, der gerade in Zelle c liegt
    start = np.arange(grid.capacity)

    for index, gate in enumerate(circuit.gates):
        if gate.opcode is not Opcode.SWAP:
            continue
        i, j = gate.operands
        if not (work.is_placed(i) and work.is_placed(j)):
            raise RoutingError(f"Gatter {index} ({gate}): Operand nicht platziert")
        a, b = work.position(i), work.position(j)
        if manhattan(a, b) != 1:
            raise RoutingError(f"Gatter {index} ({gate}): SWAP zwischen {a} und {b} nicht benachbart")
        ia, ib = work.cell_index(a), work.cell_index(b)
        start[ia], start[ib] = start[ib], start[ia]
        work.swap_cells(a, b)

    perm = np.empty_like(start)
    perm[start] = np.arange(grid.capacity)
    return perm
