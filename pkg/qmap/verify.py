"""
Orakel
======
Prüfwerkzeuge im Desk-Maßstab:

- circuit_unitary: dichte Unitärmatrix (≤ 6 Qubits)
- classical_action: Permutation der Basiszustände für klassisch-reversible Gatter
- replay_adjacency: spielt eine geroutete Schaltung auf dem Gitter nach

Konvention: Qubit 0 ist das höchstwertige Bit des Basisindex; spätere
Gatter multiplizieren von links (U(A ++ B) = U(B) · U(A)).
Globale Phase wird herausgerechnet, indem der erste nicht verschwindende
Eintrag reell positiv normiert wird.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
import numpy as np

from .exceptions import SimulationError
from .models import Cell, Circuit, Gate, Opcode, manhattan
from .routing import RoutedCircuit

logger = logging.getLogger(__name__)

MAX_DENSE_QUBITS = 6
MAX_CLASSICAL_QUBITS = 24
TOLERANCE = 1e-9

_V = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=complex)
_T = np.exp(1j * np.pi / 4)

_SINGLE = {
    Opcode.X: np.array([[0, 1], [1, 0]], dtype=complex),
    Opcode.H: np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    Opcode.T: np.diag([1, _T]).astype(complex),
    Opcode.TDG: np.diag([1, np.conj(_T)]).astype(complex),
    Opcode.S: np.diag([1, 1j]).astype(complex),
    Opcode.SDG: np.diag([1, -1j]).astype(complex),
}

_CONTROLLED = {
    Opcode.CNOT: _SINGLE[Opcode.X],
    Opcode.CV: _V,
    Opcode.CVDG: _V.conj().T,
    Opcode.TOFFOLI: _SINGLE[Opcode.X],
    Opcode.MCT: _SINGLE[Opcode.X],
}


def _controlled(block: np.ndarray, arity: int) -> np.ndarray:
    """Einheitsmatrix mit ``block`` unten rechts (alle Kontrollen = 1)."""
    matrix = np.eye(2 ** arity, dtype=complex)
    matrix[-2:, -2:] = block
    return matrix


def gate_matrix(gate: Gate) -> np.ndarray:
    """Matrix eines Gatters; Operand 0 ist das höchstwertige Bit."""
    if gate.opcode in _SINGLE:
        return _SINGLE[gate.opcode]
    if gate.opcode in _CONTROLLED:
        return _controlled(_CONTROLLED[gate.opcode], gate.arity)
    if gate.opcode is Opcode.SWAP:
        return np.eye(4, dtype=complex)[[0, 2, 1, 3]]
    if gate.opcode is Opcode.FREDKIN:
        return np.eye(8, dtype=complex)[[0, 1, 2, 3, 4, 6, 5, 7]]
    raise SimulationError(f"Keine Matrix für {gate.opcode.value}")


@dataclass
class DenseUnitary:
    """2^m×2^m Unitärmatrix."""
    matrix: np.ndarray
    qubits: int

    def is_unitary(self, atol: float = TOLERANCE) -> bool:
        eye = np.eye(self.matrix.shape[0])
        return bool(np.allclose(self.matrix @ self.matrix.conj().T, eye, atol=atol, rtol=0))


@dataclass
class BasisPermutation:
    """perm[i] = Ausgabe-Basiszustand für Eingabe i."""
    perm: np.ndarray
    qubits: int

    def is_bijection(self) -> bool:
        return bool(np.array_equal(np.sort(self.perm), np.arange(self.perm.size)))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.perm, np.arange(self.perm.size)))


def _apply(state: np.ndarray, matrix: np.ndarray, operands: tuple[int, ...], m: int) -> np.ndarray:
    k = len(operands)
    tensor = state.reshape([2] * m + [-1])
    gate = matrix.reshape([2] * (2 * k))
    out = np.tensordot(gate, tensor, axes=(list(range(k, 2 * k)), list(operands)))
    return np.moveaxis(out, list(range(k)), list(operands)).reshape(state.shape)


def circuit_unitary(circuit: Circuit, max_qubits: int = MAX_DENSE_QUBITS) -> DenseUnitary:
    """
    Produkt aller Gattermatrizen in Schaltungsreihenfolge.

    Raises:
        SimulationError: mehr als ``max_qubits`` Qubits
    """
    m = circuit.qubit_count
    if m > max_qubits:
        raise SimulationError(f"{m} Qubits zu viele für dichte Simulation (max. {max_qubits})")

    unitary = np.eye(2 ** m, dtype=complex)
    for gate in circuit.gates:
        unitary = _apply(unitary, gate_matrix(gate), gate.operands, m)
    return DenseUnitary(matrix=unitary, qubits=m)


def equal_up_to_global_phase(a: np.ndarray, b: np.ndarray, atol: float = TOLERANCE) -> bool:
    """Vergleich zweier Matrizen bis auf globale Phase."""
    if a.shape != b.shape:
        return False
    flat_a, flat_b = a.ravel(), b.ravel()
    nonzero = np.flatnonzero(np.abs(flat_a) > atol)
    if nonzero.size == 0:
        return bool(np.allclose(flat_b, 0, atol=atol, rtol=0))

    pivot = nonzero[0]
    if abs(flat_b[pivot]) <= atol:
        return False
    phase_a = flat_a[pivot] / abs(flat_a[pivot])
    phase_b = flat_b[pivot] / abs(flat_b[pivot])
    return bool(np.allclose(a / phase_a, b / phase_b, atol=atol, rtol=0))


def classical_action(circuit: Circuit, max_qubits: int = MAX_CLASSICAL_QUBITS) -> BasisPermutation:
    """
    Wirkung einer klassisch-reversiblen Schaltung auf alle Basiszustände.

    Raises:
        SimulationError: nicht-klassischer Opcode oder zu viele Qubits
    """
    m = circuit.qubit_count
    if m > max_qubits:
        raise SimulationError(f"{m} Qubits zu viele für Basis-Simulation (max. {max_qubits})")

    def bit(q: int) -> int:
        return 1 << (m - 1 - q)

    values = np.arange(2 ** m, dtype=np.int64)
    for index, gate in enumerate(circuit.gates):
        op = gate.opcode
        if not op.is_classical:
            raise SimulationError(f"Gatter {index} ({gate}) ist nicht klassisch-reversibel")

        if op is Opcode.SWAP or op is Opcode.FREDKIN:
            a, b = gate.operands[-2:]
            differ = ((values & bit(a)) > 0) != ((values & bit(b)) > 0)
            if op is Opcode.FREDKIN:
                differ &= (values & bit(gate.operands[0])) > 0
            values = np.where(differ, values ^ (bit(a) | bit(b)), values)
        else:
            mask = sum(bit(c) for c in gate.operands[:-1])
            active = (values & mask) == mask
            values = np.where(active, values ^ bit(gate.target), values)

    return BasisPermutation(perm=values, qubits=m)


def lowering_equivalent(original: Circuit, lowered: Circuit) -> bool:
    """
    Prüft eine Zerlegung: auf allen Basiseingaben mit Hilfsqubits |0⟩
    stimmt ``lowered`` mit ``original`` überein und gibt |0⟩ zurück.

    Klassische Schaltungen per Basispermutation, sonst dicht (≤ 6 Qubits).
    """
    ancillas = lowered.qubit_count - original.qubit_count
    if ancillas < 0:
        raise SimulationError("Zerlegte Schaltung hat weniger Qubits als das Original")
    inputs = np.arange(2 ** original.qubit_count) << ancillas

    classical = all(g.opcode.is_classical for g in (*original.gates, *lowered.gates))
    if classical:
        expected = classical_action(original).perm << ancillas
        return bool(np.array_equal(classical_action(lowered).perm[inputs], expected))

    target = circuit_unitary(original).matrix
    expected = np.zeros((2 ** lowered.qubit_count, target.shape[1]), dtype=complex)
    expected[inputs, :] = target
    actual = circuit_unitary(lowered).matrix[:, inputs]
    return equal_up_to_global_phase(actual, expected)


@dataclass
class AdjacencyVerdict:
    """Ergebnis von replay_adjacency."""
    ok: bool
    first_violation: Optional[int] = None
    reason: str = ""

    def summary(self) -> str:
        if self.ok:
            return "✅ Alle Gatter benachbart"
        return f"❌ Gatter {self.first_violation}: {self.reason}"


def replay_adjacency(routed: RoutedCircuit) -> AdjacencyVerdict:
    """
    Spielt die SWAPs einer gerouteten Schaltung auf einer Gitterkopie nach
    und prüft, dass jedes Zwei-Qubit-Gatter benachbarte Zellen trifft.
    """
    grid = routed.initial_grid.copy()

    for index, gate in enumerate(routed.circuit.gates):
        missing = [q for q in gate.operands if not grid.is_placed(q)]
        if missing:
            return AdjacencyVerdict(False, index, f"{gate}: q{missing[0]} nicht platziert")
        if gate.arity == 1:
            continue
        if gate.arity > 2:
            return AdjacencyVerdict(False, index, f"{gate}: arity > 2")

        a, b = (grid.position(q) for q in gate.operands)
        if manhattan(a, b) != 1:
            return AdjacencyVerdict(False, index, f"{gate}: Abstand {manhattan(a, b)} zwischen {a} und {b}")
        if gate.opcode is Opcode.SWAP:
            grid.swap_cells(a, b)

    return AdjacencyVerdict(True)


def bfs_swap_bound(shape: tuple[int, int], a: Cell, b: Cell) -> int:
    """Minimale SWAP-Anzahl laut Breitensuche auf dem Gittergraphen."""
    graph = nx.grid_2d_graph(*shape)
    return max(nx.shortest_path_length(graph, a, b) - 1, 0)


# === Selbsttests ===


@dataclass
class CheckResult:
    """Ein einzelner Selbsttest."""
    name: str
    passed: bool
    detail: str = ""

    # Nicht ausgeführt (Orakel nicht anwendbar); zählt weder als bestanden noch als Fehler
    skipped: bool = False


@dataclass
class VerificationReport:
    """Sammelt Selbsttests."""
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def executed(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.skipped]

    @property
    def skipped(self) -> list[CheckResult]:
        return [c for c in self.checks if c.skipped]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.executed)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.executed if not c.passed]

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(CheckResult(name, passed, detail))
        logger.debug(f"{name}: {'ok' if passed else 'FEHLER'} {detail}")

    def skip(self, name: str, detail: str):
        self.checks.append(CheckResult(name, False, detail, skipped=True))
        logger.info(f"{name}: übersprungen ({detail})")

    def summary(self) -> str:
        status = "✅ BESTANDEN" if self.passed else "❌ FEHLGESCHLAGEN"
        parts = [status, f"Prüfungen: {len(self.executed)}"]
        if self.skipped:
            parts.append(f"Übersprungen: {len(self.skipped)}")
        parts.append(f"Fehler: {len(self.failures)}")
        return " | ".join(parts)

    def print_report(self):
        print(f"\n{'=' * 60}")
        print("🔍 qmap Verifikation")
        print(f"{'=' * 60}")
        for check in self.checks:
            icon = "–" if check.skipped else "✓" if check.passed else "✗"
            line = f"   {icon} {check.name}"
            if check.detail:
                line += f" ({check.detail})"
            print(line)
        print(f"\n{self.summary()}")


def self_test() -> VerificationReport:
    """Prüft Toffoli-, Fredkin- und MCT-Zerlegung gegen ihre Zielmatrizen."""
    from .decompose import (
        AncillaAllocation,
        DecomposeConfig,
        decompose_fredkin,
        decompose_mct,
        decompose_toffoli,
        lower_circuit,
    )

    report = VerificationReport()

    for opcode, lower in ((Opcode.TOFFOLI, decompose_toffoli), (Opcode.FREDKIN, decompose_fredkin)):
        gate = Gate(opcode, (0, 1, 2))
        target = circuit_unitary(Circuit(3, [gate])).matrix
        actual = circuit_unitary(Circuit(3, lower(gate))).matrix
        report.add(
            f"{opcode.value} → cv/cvdg/cnot",
            equal_up_to_global_phase(actual, target),
            "8x8 Unitärmatrix",
        )

    # Toffoli-Kette klassisch, bis k = 5
    for k in (3, 4, 5):
        gate = Gate(Opcode.MCT, tuple(range(k + 1)))
        original = Circuit(k + 1, [gate])
        alloc = AncillaAllocation.for_circuit(original)
        chain = original.with_gates(decompose_mct(gate, alloc), qubit_count=alloc.total_qubits)
        report.add(
            f"C^{k}NOT → V-Kette",
            lowering_equivalent(original, chain),
            f"{chain.count(Opcode.TOFFOLI)} Toffolis, Hilfsqubits zurück auf |0⟩",
        )

    # Vollständig bis cv/cvdg/cnot, dicht (5 Qubits)
    original = Circuit(4, [Gate(Opcode.MCT, (0, 1, 2, 3))])
    lowered = lower_circuit(original, DecomposeConfig())
    report.add(
        "C^3NOT → cv/cvdg/cnot",
        lowering_equivalent(original, lowered),
        f"{lowered.gate_count} Gatter, {lowered.qubit_count} Qubits",
    )

    return report
