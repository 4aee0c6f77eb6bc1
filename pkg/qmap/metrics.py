"""
Kostenmetriken und Pipeline
===========================
Zählt SWAPs und Gatter, berechnet die 1D-Nearest-Neighbor-Kosten und
vergleicht LONGPATH mit den Baselines identity und random.

Pipeline:
    Circuit → [Lowering] → Interaktionsgraph → Reihenfolge → Spirale → Routing → CostReport
"""

import json
import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from itertools import combinations
from typing import Mapping, Optional, Sequence

import numpy as np

from .decompose import DecomposeConfig, lower_circuit, toffoli_count
from .exceptions import ConfigError, GateError
from .interaction import InteractionGraph, LongPath, build_interaction_graph, long_path
from .models import Circuit, Gate, Grid, Opcode
from .placement import PlacementConfig, spiral_place
from .routing import RoutedCircuit, RoutingConfig, route_circuit

logger = logging.getLogger(__name__)


class StrategyKind(Enum):
    """Platzierungsstrategien."""
    LONGPATH = "longpath"
    IDENTITY = "identity"   # Qubit i auf Spiralzelle i
    RANDOM = "random"       # gemischte Reihenfolge (Seed nötig)


class ReportFormat(Enum):
    TEXT = "text"
    JSON = "json"


@dataclass(frozen=True)
class Strategy:
    """Strategie plus Seed (nur für random relevant, aber immer berichtet)."""
    kind: StrategyKind = StrategyKind.LONGPATH
    seed: Optional[int] = None

    def __post_init__(self):
        if self.kind is StrategyKind.RANDOM and self.seed is None:
            raise ConfigError("Strategie random braucht einen Seed (--seed)")

    @property
    def label(self) -> str:
        if self.kind is StrategyKind.RANDOM:
            return f"random({self.seed})"
        return self.kind.value

    def ordering(self, graph: InteractionGraph) -> LongPath:
        """Qubit-Reihenfolge für die Spiral-Platzierung."""
        if self.kind is StrategyKind.LONGPATH:
            return long_path(graph)
        if self.kind is StrategyKind.IDENTITY:
            return LongPath(order=tuple(range(graph.q)))
        rng = np.random.default_rng(self.seed)
        return LongPath(order=tuple(int(v) for v in rng.permutation(graph.q)))


@dataclass
class CostReport:
    """Kosten einer Pipeline-Ausführung."""
    strategy: str
    grid_dims: tuple[int, int]
    gates_in: int = 0
    gates_out: int = 0
    two_qubit_gates: int = 0
    swaps_inserted_raw: int = 0
    swaps_after_cancel: int = 0
    nnc_1d: int = 0
    seed: Optional[int] = None

    # Zusatzmetriken (nur im Textbericht)
    toffoli_count: int = 0
    quantum_cost: int = 0
    source_gates_removed: int = 0
    padding_qubits: int = 0

    def to_dict(self) -> dict:
        """JSON-Schema des Berichts."""
        rows, cols = self.grid_dims
        return {
            "strategy": self.strategy,
            "grid": {"rows": rows, "cols": cols},
            "gates_in": self.gates_in,
            "gates_out": self.gates_out,
            "two_qubit_gates": self.two_qubit_gates,
            "swaps_raw": self.swaps_inserted_raw,
            "swaps_final": self.swaps_after_cancel,
            "nnc_1d": self.nnc_1d,
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def render(self) -> str:
        rows, cols = self.grid_dims
        lines = [
            f"📊 Strategie: {self.strategy}",
            f"   Gitter:              {rows}x{cols}",
            f"   Gatter (ein/aus):    {self.gates_in} → {self.gates_out}",
            f"   Zwei-Qubit-Gatter:   {self.two_qubit_gates}",
            f"   SWAPs eingefügt:     {self.swaps_inserted_raw}",
            f"   SWAPs nach Kürzung:  {self.swaps_after_cancel}",
            f"   NNC (1D):            {self.nnc_1d}",
            f"   Quantenkosten:       {self.quantum_cost}",
            f"   Toffolis (Zerlegung): {self.toffoli_count}",
        ]
        if self.source_gates_removed:
            lines.append(f"   Entfernte Quellgatter: {self.source_gates_removed}")
        if self.padding_qubits:
            lines.append(f"   Padding-Qubits:      {self.padding_qubits}")
        return "\n".join(lines) + "\n"


def nnc_cost_1d(circuit: Circuit, x: int = 1) -> int:
    """
    Nearest-Neighbor-Kosten auf einer Linie: x·(max-min-1) pro Zwei-Qubit-Gatter.

    Raises:
        GateError: Gatter mit Stelligkeit > 2
    """
    if x < 1:
        raise ConfigError(f"SWAP-Kosten x muss positiv sein, nicht {x}")
    total = 0
    for index, gate in enumerate(circuit.gates):
        if gate.arity > 2:
            raise GateError(f"Gatter {index} ({gate}): arity > 2; pass --decompose")
        if gate.arity == 2:
            a, b = gate.operands
            total += x * (abs(a - b) - 1)
    return total


def quantum_cost(circuit: Circuit, swap_cost: int = 1) -> int:
    """Eine Einheit pro Gatter, ``swap_cost`` pro SWAP."""
    swaps = circuit.count(Opcode.SWAP)
    return circuit.gate_count - swaps + swap_cost * swaps


def relabel(circuit: Circuit, mapping: Mapping[int, int]) -> Circuit:
    """Benennt Qubits um (z.B. Qubit → Linie der Reihenfolge)."""
    gates = [Gate(g.opcode, tuple(mapping[q] for q in g.operands)) for g in circuit.gates]
    return circuit.with_gates(gates)


@dataclass
class PipelineConfig:
    """Bündelt die Konfiguration aller Stufen."""
    # None = keine Zerlegung; Gatter mit Stelligkeit > 2 sind dann ein Fehler
    decompose: Optional[DecomposeConfig] = None
    placement: PlacementConfig = field(default_factory=PlacementConfig)
    routing: RoutingConfig = field(default_factory=RoutingConfig)

    # Quantenkosten x eines SWAP
    swap_cost: int = 1


@dataclass
class PipelineResult:
    """Alle Zwischenstufen einer Ausführung."""
    lowered: Circuit
    graph: InteractionGraph
    path: LongPath
    placement: Grid
    routed: RoutedCircuit
    report: CostReport


def run_pipeline(
    circuit: Circuit,
    strategy: Strategy = Strategy(),
    cfg: Optional[PipelineConfig] = None,
) -> PipelineResult:
    """
    Lowering → Graph → Reihenfolge → Spirale → Routing → Bericht.

    Raises:
        GateError: Gatter mit Stelligkeit > 2 ohne Zerlegung
        PlacementError: Gitter zu klein
    """
    cfg = cfg or PipelineConfig()

    lowered = lower_circuit(circuit, cfg.decompose) if cfg.decompose else circuit
    graph = build_interaction_graph(lowered)
    path = strategy.ordering(graph)
    grid = spiral_place(path, cfg.placement)
    routed = route_circuit(lowered, grid, cfg.routing)

    line_of = {qubit: line for line, qubit in enumerate(path.order)}
    report = CostReport(
        strategy=strategy.label,
        grid_dims=grid.shape,
        gates_in=lowered.gate_count,
        gates_out=routed.circuit.gate_count,
        two_qubit_gates=lowered.two_qubit_gates,
        swaps_inserted_raw=routed.swap_count,
        swaps_after_cancel=routed.swaps_after_cancel,
        nnc_1d=nnc_cost_1d(relabel(lowered, line_of), cfg.swap_cost),
        seed=strategy.seed,
        toffoli_count=toffoli_count(circuit, cfg.decompose) if cfg.decompose else 0,
        quantum_cost=quantum_cost(routed.circuit, cfg.swap_cost),
        source_gates_removed=routed.source_gates_removed,
        padding_qubits=routed.padding_count,
    )
    logger.info(
        f"{strategy.label}: {report.swaps_inserted_raw} SWAPs → {report.swaps_after_cancel}"
    )
    return PipelineResult(
        lowered=lowered, graph=graph, path=path, placement=grid, routed=routed, report=report,
    )


# === Benchmark ===

DEFAULT_OPCODES = (Opcode.X, Opcode.H, Opcode.T, Opcode.CNOT, Opcode.CV, Opcode.CVDG)


def random_circuit(
    qubits: int,
    gates: int,
    rng: np.random.Generator,
    opcodes: Sequence[Opcode] = DEFAULT_OPCODES,
) -> Circuit:
    """Zufällige Schaltung mit gleichverteilten Opcodes und Operanden."""
    result = []
    for _ in range(gates):
        opcode = opcodes[int(rng.integers(len(opcodes)))]
        operands = tuple(int(q) for q in rng.choice(qubits, size=opcode.arity, replace=False))
        result.append(Gate(opcode, operands))
    return Circuit(qubit_count=qubits, gates=result)


@dataclass
class FamilySpec:
    """Generator für Zwei-Qubit-Schaltungen mit Interaktionsschiefe."""
    qubits: int = 9
    gates: int = 100

    # Anteil der Qubit-Paare, die "heiß" sind
    hot_fraction: float = 0.2

    # Anteil der Gatter auf heißen Paaren
    hot_weight: float = 0.8

    def __post_init__(self):
        if self.qubits < 2:
            raise ConfigError("Benchmark braucht mindestens 2 Qubits")
        if self.gates < 0:
            raise ConfigError("Gatteranzahl darf nicht negativ sein")
        if not (0 < self.hot_fraction <= 1 and 0 <= self.hot_weight <= 1):
            raise ConfigError("hot_fraction in (0,1], hot_weight in [0,1]")


def skewed_circuit(family: FamilySpec, rng: np.random.Generator) -> Circuit:
    """CNOT-Schaltung: ``hot_weight`` der Gatter auf ``hot_fraction`` der Paare."""
    pairs = list(combinations(range(family.qubits), 2))
    n_hot = max(1, round(family.hot_fraction * len(pairs)))
    hot_mask = np.zeros(len(pairs), dtype=bool)
    hot_mask[rng.choice(len(pairs), size=n_hot, replace=False)] = True
    hot = np.flatnonzero(hot_mask)
    cold = np.flatnonzero(~hot_mask)

    gates = []
    for _ in range(family.gates):
        pool = hot if cold.size == 0 or rng.random() < family.hot_weight else cold
        a, b = pairs[int(pool[rng.integers(pool.size)])]
        if rng.random() < 0.5:
            a, b = b, a
        gates.append(Gate(Opcode.CNOT, (a, b)))
    return Circuit(qubit_count=family.qubits, gates=gates)


@dataclass
class BenchmarkRow:
    """Statistik einer Strategie über alle Trials."""
    strategy: str
    trials: int
    mean: float
    median: float
    minimum: int
    maximum: int


@dataclass
class BenchmarkTable:
    """Ergebnis eines Benchmarks."""
    family: FamilySpec
    seed: int
    trials: int
    rows: list[BenchmarkRow] = field(default_factory=list)
    reports: list[CostReport] = field(default_factory=list)

    def row(self, kind: StrategyKind) -> BenchmarkRow:
        for row in self.rows:
            if row.strategy == kind.value:
                return row
        raise KeyError(kind.value)

    def to_dict(self) -> dict:
        return {
            "family": asdict(self.family),
            "seed": self.seed,
            "trials": self.trials,
            "rows": [asdict(row) for row in self.rows],
            "reports": [report.to_dict() for report in self.reports],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def render(self) -> str:
        header = f"{'Strategie':<12} {'Trials':>6} {'Mittel':>9} {'Median':>8} {'Min':>5} {'Max':>5}"
        lines = [
            f"📈 Benchmark: q={self.family.qubits}, {self.family.gates} Gatter, "
            f"{self.family.hot_weight:.0%} auf {self.family.hot_fraction:.0%} der Paare, "
            f"Seed {self.seed}",
            header,
            "-" * len(header),
        ]
        for row in self.rows:
            lines.append(
                f"{row.strategy:<12} {row.trials:>6} {row.mean:>9.2f} {row.median:>8.1f} "
                f"{row.minimum:>5} {row.maximum:>5}"
            )
        return "\n".join(lines) + "\n"


def benchmark(
    family: FamilySpec,
    trials: int,
    seed: int,
    strategies: Sequence[StrategyKind] = tuple(StrategyKind),
    cfg: Optional[PipelineConfig] = None,
) -> BenchmarkTable:
    """
    Vergleicht Strategien auf ``trials`` Schaltungen der Familie.

    Trial t nutzt den Seed ``seed + t`` für Schaltung und random-Strategie;
    gleiche Seeds ergeben identische Tabellen.
    """
    table = BenchmarkTable(family=family, seed=seed, trials=trials)
    if trials <= 0:
        return table

    swaps: dict[StrategyKind, list[int]] = {kind: [] for kind in strategies}
    for trial in range(trials):
        trial_seed = seed + trial
        circuit = skewed_circuit(family, np.random.default_rng(trial_seed))
        for kind in strategies:
            strategy = Strategy(kind=kind, seed=trial_seed)
            report = run_pipeline(circuit, strategy, cfg).report
            swaps[kind].append(report.swaps_after_cancel)
            table.reports.append(report)
        logger.debug(f"Trial {trial + 1}/{trials} fertig")

    for kind in strategies:
        values = np.array(swaps[kind])
        table.rows.append(BenchmarkRow(
            strategy=kind.value,
            trials=trials,
            mean=float(values.mean()),
            median=float(np.median(values)),
            minimum=int(values.min()),
            maximum=int(values.max()),
        ))
    return table
