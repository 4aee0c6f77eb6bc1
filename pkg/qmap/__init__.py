"""
qmap - Qubit-Platzierung und SWAP-Routing
=========================================
Bildet Schaltkreise auf 1D/2D Nearest-Neighbor-Gitter ab.

Architektur:
    QASM → Circuit → [Lowering] → Interaktionsgraph → LONGPATH → Spirale → Routing → QASM + Bericht

Module:
    - qasm: Dialekt lesen und schreiben
    - decompose: Toffoli/Fredkin/MCT → cv/cvdg/cnot
    - interaction: Gewichtsmatrix und LONGPATH-Reihenfolge
    - placement: Spiral-Platzierung ins r×c-Gitter
    - routing: SWAP-Einfügung, Restore, Paar-Auslöschung
    - verify: Unitär- und Basis-Orakel, Adjazenz-Replay
    - metrics: Kostenbericht, NNC, Strategievergleich

Quick Start::

    from qmap import parse_qasm, run_pipeline, emit_qasm

    circuit = parse_qasm("qubits 4\\ncnot q0,q3\\n")
    result = run_pipeline(circuit)
    print(emit_qasm(result.routed.circuit))
    print(result.report.render())
"""

__version__ = "0.1.0"

from .exceptions import (
    QMapError,
    ConfigError,
    QasmSyntaxError,
    GateError,
    DecompositionError,
    PlacementError,
    RoutingError,
    SimulationError,
    InvariantError,
)
from .models import EMPTY, Opcode, Gate, Circuit, Grid, manhattan
from .qasm import QasmParser, parse_qasm, emit_qasm, read_qasm, write_qasm
from .decompose import DecomposeConfig, AncillaAllocation, lower_circuit
from .interaction import InteractionGraph, LongPath, build_interaction_graph, degree_info, long_path
from .placement import PlacementConfig, spiral_place, grid_distance, render_grid
from .routing import RoutingConfig, RoutedCircuit, route_gate, route_circuit, cancel_pairs
from .verify import circuit_unitary, classical_action, replay_adjacency, self_test
from .metrics import (
    Strategy,
    StrategyKind,
    CostReport,
    PipelineConfig,
    PipelineResult,
    run_pipeline,
    nnc_cost_1d,
    FamilySpec,
    benchmark,
)

__all__ = [
    # Version
    "__version__",

    # Fehler
    "QMapError",
    "ConfigError",
    "QasmSyntaxError",
    "GateError",
    "DecompositionError",
    "PlacementError",
    "RoutingError",
    "SimulationError",
    "InvariantError",

    # Models
    "EMPTY",
    "Opcode",
    "Gate",
    "Circuit",
    "Grid",
    "manhattan",

    # QASM
    "QasmParser",
    "parse_qasm",
    "emit_qasm",
    "read_qasm",
    "write_qasm",

    # Zerlegung
    "DecomposeConfig",
    "AncillaAllocation",
    "lower_circuit",

    # Platzierung
    "InteractionGraph",
    "LongPath",
    "build_interaction_graph",
    "degree_info",
    "long_path",
    "PlacementConfig",
    "spiral_place",
    "grid_distance",
    "render_grid",

    # Routing
    "RoutingConfig",
    "RoutedCircuit",
    "route_gate",
    "route_circuit",
    "cancel_pairs",

    # Orakel
    "circuit_unitary",
    "classical_action",
    "replay_adjacency",
    "self_test",

    # Metriken
    "Strategy",
    "StrategyKind",
    "CostReport",
    "PipelineConfig",
    "PipelineResult",
    "run_pipeline",
    "nnc_cost_1d",
    "FamilySpec",
    "benchmark",
]
