"""
Gatter-Zerlegung
================
Zerlegt Fredkin-, Toffoli- und MCT-Gatter in Ein- und Zwei-Qubit-Gatter,
damit der Schaltkreis auf einem NTC-Gitter routbar ist.

    toffoli(a,b,c) → cv(b,c) cnot(a,b) cvdg(b,c) cnot(a,b) cv(a,c)
    fredkin(a,b,c) → cnot(c,b) toffoli(a,b,c) cnot(c,b)
    mct(c1..ck,t)  → V-Kette aus Toffolis über k-2 Hilfsqubits (|0⟩)

MCT-Zerlegung braucht 2(k-2)+1 Toffolis; Hilfsqubits werden hinter den
ursprünglichen Qubits angehängt und zwischen MCT-Instanzen wiederverwendet.
"""

import logging
from dataclasses import dataclass, field

from .exceptions import ConfigError, DecompositionError
from .models import Circuit, Gate, Opcode

logger = logging.getLogger(__name__)


@dataclass
class DecomposeConfig:
    """Konfiguration der Zerlegung."""
    # MCT → Toffoli-Kette
    lower_mct: bool = True

    # Toffoli/Fredkin → cv/cvdg/cnot
    lower_three_qubit: bool = True

    def __post_init__(self):
        # MCT-Zerlegung erzeugt Toffolis, die vor dem Routing weg müssen
        if self.lower_mct and not self.lower_three_qubit:
            raise ConfigError("lower_mct erfordert lower_three_qubit")


@dataclass
class AncillaAllocation:
    """Hilfsqubits, die hinter ``original_qubits`` angehängt wurden."""
    original_qubits: int
    ancilla_indices: list[int] = field(default_factory=list)

    @classmethod
    def for_circuit(cls, circuit: Circuit) -> "AncillaAllocation":
        """Reserviert max(k-2) Hilfsqubits über alle MCTs mit k ≥ 3."""
        needed = max(
            (ancillas_needed(len(g.controls)) for g in circuit.gates if g.opcode is Opcode.MCT),
            default=0,
        )
        start = circuit.qubit_count
        return cls(original_qubits=start, ancilla_indices=list(range(start, start + needed)))

    @property
    def count(self) -> int:
        return len(self.ancilla_indices)

    @property
    def total_qubits(self) -> int:
        return self.original_qubits + self.count


def ancillas_needed(controls: int) -> int:
    """Anzahl Hilfsqubits für C^k NOT: k-2 (k ≥ 3), sonst 0."""
    return max(controls - 2, 0)


def _expect(gate: Gate, opcode: Opcode):
    if gate.opcode is not opcode:
        raise DecompositionError(f"{opcode.value} erwartet, erhalten: {gate}")


def decompose_toffoli(gate: Gate) -> list[Gate]:
    """Toffoli → 5 Gatter aus {cv, cvdg, cnot}."""
    _expect(gate, Opcode.TOFFOLI)
    a, b, c = gate.operands
    return [
        Gate(Opcode.CV, (b, c)),
        Gate(Opcode.CNOT, (a, b)),
        Gate(Opcode.CVDG, (b, c)),
        Gate(Opcode.CNOT, (a, b)),
        Gate(Opcode.CV, (a, c)),
    ]


def decompose_fredkin(gate: Gate) -> list[Gate]:
    """Fredkin (Kontrolle a, Ziele b,c) → cnot(c,b) + Toffoli-Netz + cnot(c,b)."""
    _expect(gate, Opcode.FREDKIN)
    a, b, c = gate.operands
    frame = Gate(Opcode.CNOT, (c, b))
    return [frame, *decompose_toffoli(Gate(Opcode.TOFFOLI, (a, b, c))), frame]


def decompose_mct(gate: Gate, alloc: AncillaAllocation) -> list[Gate]:
    """
    C^k NOT → V-Kette aus Toffolis.

    f0 = c1·c2, fi = f(i-1)·c(i+2), Spitze toffoli(f(k-3), ck, t),
    danach die Kette rückwärts, sodass alle fi wieder |0⟩ sind.

    Raises:
        DecompositionError: falscher Opcode, k < 3, zu wenige Hilfsqubits
    """
    _expect(gate, Opcode.MCT)
    controls, target = gate.controls, gate.target
    k = len(controls)
    if k < 3:
        raise DecompositionError(f"{gate}: k={k} < 3, direkt als toffoli/cnot ausgeben")

    needed = ancillas_needed(k)
    if alloc.count < needed:
        raise DecompositionError(
            f"{gate}: {needed} Hilfsqubits nötig, nur {alloc.count} reserviert"
        )
    ancillas = alloc.ancilla_indices[:needed]
    if set(ancillas) & set(gate.operands):
        raise DecompositionError(f"{gate}: Hilfsqubits überschneiden sich mit Operanden")

    chain = [Gate(Opcode.TOFFOLI, (controls[0], controls[1], ancillas[0]))]
    for i in range(1, needed):
        chain.append(Gate(Opcode.TOFFOLI, (ancillas[i - 1], controls[i + 1], ancillas[i])))

    apex = Gate(Opcode.TOFFOLI, (ancillas[-1], controls[-1], target))
    return [*chain, apex, *reversed(chain)]


def mct_toffoli_count(controls: int) -> int:
    """Toffolis der V-Kette für C^k NOT."""
    return 2 * (controls - 2) + 1 if controls >= 3 else 1


def toffoli_count(circuit: Circuit, cfg: DecomposeConfig) -> int:
    """Anzahl Toffolis, die die Zerlegung durchläuft (Metrik)."""
    total = 0
    for gate in circuit.gates:
        if gate.opcode in (Opcode.TOFFOLI, Opcode.FREDKIN):
            total += 1
        elif gate.opcode is Opcode.MCT:
            total += mct_toffoli_count(len(gate.controls)) if cfg.lower_mct else 1
    return total


def lower_circuit(circuit: Circuit, cfg: DecomposeConfig) -> Circuit:
    """
    Zerlegt alle komplexen Gatter gemäß Konfiguration.

    Unberührte Gatter behalten ihre Reihenfolge; die Qubit-Anzahl
    wächst um die reservierten Hilfsqubits.
    """
    gates = list(circuit.gates)
    qubit_count = circuit.qubit_count

    if cfg.lower_mct:
        alloc = AncillaAllocation.for_circuit(circuit)
        lowered = []
        for gate in gates:
            if gate.opcode is not Opcode.MCT:
                lowered.append(gate)
            elif len(gate.controls) == 2:
                lowered.append(Gate(Opcode.TOFFOLI, gate.operands))
            else:
                lowered.extend(decompose_mct(gate, alloc))
        gates = lowered
        qubit_count = alloc.total_qubits
        if alloc.count:
            logger.info(f"{alloc.count} Hilfsqubits ab q{alloc.original_qubits} reserviert")

    if cfg.lower_three_qubit:
        lowered = []
        for gate in gates:
            if gate.opcode is Opcode.TOFFOLI:
                lowered.extend(decompose_toffoli(gate))
            elif gate.opcode is Opcode.FREDKIN:
                lowered.extend(decompose_fredkin(gate))
            else:
                lowered.append(gate)
        gates = lowered

    logger.debug(f"Lowering: {circuit.gate_count} → {len(gates)} Gatter")
    return circuit.with_gates(gates, qubit_count=qubit_count)
