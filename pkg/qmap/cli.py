#!/usr/bin/env python3
"""
qmap - CLI
==========

Usage:
    qmap run -i in.qasm -o out.qasm --report json
    qmap place -i in.qasm --show-grid
    qmap route -i in.qasm --placement grid.csv -o out.qasm
    qmap verify
    qmap bench --trials 200 --seed 1

Exit-Codes:
    0  Erfolg
    1  Eingabe- oder Validierungsfehler (eine Zeile auf stderr)
    2  Die eigene Ausgabe verletzt eine Invariante
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from .decompose import DecomposeConfig, lower_circuit
from .exceptions import InvariantError, QMapError
from .interaction import InteractionGraph, build_interaction_graph
from .metrics import (
    FamilySpec,
    PipelineConfig,
    ReportFormat,
    Strategy,
    StrategyKind,
    benchmark,
    run_pipeline,
)
from .models import Circuit, Grid, Opcode
from .placement import PlacementConfig, grid_to_csv, read_grid_csv, render_grid, spiral_place
from .qasm import emit_qasm, read_qasm
from .routing import RoutedCircuit, RoutingConfig, route_circuit
from .verify import lowering_equivalent, replay_adjacency, self_test

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Argumentfehler sind Eingabefehler (Exit 1)."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"❌ {message}\n")


def _pipeline_config(args) -> PipelineConfig:
    return PipelineConfig(
        decompose=DecomposeConfig() if args.decompose else None,
        placement=PlacementConfig(rows=args.rows, cols=args.cols),
        routing=RoutingConfig(restore=not args.no_restore, cancel=not args.no_cancel),
    )


def _strategy(args) -> Strategy:
    return Strategy(kind=StrategyKind(args.strategy), seed=args.seed)


def _write(path: str, text: str):
    Path(path).write_bytes(text.encode("utf-8"))


def _check_routed(routed: RoutedCircuit, cfg: RoutingConfig, source: Circuit):
    """Prüft die eigene Ausgabe; Verstöße sind Invariantenfehler."""
    verdict = replay_adjacency(routed)
    if not verdict.ok:
        raise InvariantError(f"Routing-Ausgabe nicht benachbart: {verdict.summary()}")
    if cfg.restore and not source.count(Opcode.SWAP) and routed.final_grid != routed.initial_grid:
        raise InvariantError("Restore aktiv, aber Endplatzierung weicht von der Anfangsplatzierung ab")


def _dump_stages(args, graph: InteractionGraph, placement: Grid, stream: TextIO):
    if args.dump_graph:
        _write(args.dump_graph, graph.to_csv())
    if args.dump_grid:
        _write(args.dump_grid, grid_to_csv(placement))
    if args.show_grid:
        stream.write(render_grid(placement))


def cmd_run(args) -> int:
    """Run-Befehl: komplette Pipeline mit Bericht."""
    circuit = read_qasm(args.input)
    cfg = _pipeline_config(args)
    result = run_pipeline(circuit, _strategy(args), cfg)
    _check_routed(result.routed, cfg.routing, result.lowered)

    # Ohne -o gehört stdout dem QASM, Nebenausgaben gehen nach stderr
    side = sys.stdout if args.output else sys.stderr
    text = emit_qasm(
        result.routed.circuit,
        result.routed.annotations() if args.annotate else None,
    )
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)

    _dump_stages(args, result.graph, result.placement, side)
    if ReportFormat(args.report) is ReportFormat.JSON:
        side.write(result.report.to_json())
    else:
        side.write(result.report.render())
    return 0


def cmd_place(args) -> int:
    """Place-Befehl: nur Platzierung, kein Routing."""
    circuit = read_qasm(args.input)
    cfg = _pipeline_config(args)
    strategy = _strategy(args)

    lowered = lower_circuit(circuit, cfg.decompose) if cfg.decompose else circuit
    graph = build_interaction_graph(lowered)
    path = strategy.ordering(graph)
    grid = spiral_place(path, cfg.placement)

    if args.output:
        _write(args.output, grid_to_csv(grid))

    order = " ".join(f"q{q}" for q in path.order)
    print(f"🧭 Reihenfolge ({strategy.label}): {order}")
    _dump_stages(args, graph, grid, sys.stdout)
    if not (args.show_grid or args.output or args.dump_grid):
        sys.stdout.write(render_grid(grid))
    return 0


def cmd_route(args) -> int:
    """Route-Befehl: Routing gegen eine gegebene oder berechnete Platzierung."""
    circuit = read_qasm(args.input)
    cfg = _pipeline_config(args)

    if args.placement:
        lowered = lower_circuit(circuit, cfg.decompose) if cfg.decompose else circuit
        grid = read_grid_csv(args.placement)
        routed = route_circuit(lowered, grid, cfg.routing)
    else:
        result = run_pipeline(circuit, _strategy(args), cfg)
        lowered, routed = result.lowered, result.routed

    _check_routed(routed, cfg.routing, lowered)
    text = emit_qasm(routed.circuit, routed.annotations() if args.annotate else None)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)

    print(
        f"✅ {routed.swap_count} SWAPs eingefügt, {routed.swaps_after_cancel} nach Kürzung",
        file=sys.stderr,
    )
    return 0


def cmd_verify(args) -> int:
    """Verify-Befehl: Selbsttests der Zerlegung, optional Prüfung einer Datei."""
    report = self_test()

    if args.input:
        circuit = read_qasm(args.input)
        cfg = _pipeline_config(args)
        if cfg.decompose is None and circuit.max_arity > 2:
            cfg.decompose = DecomposeConfig()

        if cfg.decompose:
            lowered = lower_circuit(circuit, cfg.decompose)
            try:
                same = lowering_equivalent(circuit, lowered)
                report.add(f"Zerlegung {Path(args.input).name}", same)
            except QMapError as e:
                report.skip(f"Zerlegung {Path(args.input).name}", str(e))

        result = run_pipeline(circuit, _strategy(args), cfg)
        verdict = replay_adjacency(result.routed)
        report.add("Nachbarschaft nach Routing", verdict.ok, verdict.reason)
        if cfg.routing.restore and not result.lowered.count(Opcode.SWAP):
            report.add(
                "Restore: Endplatzierung = Anfangsplatzierung",
                result.routed.final_grid == result.routed.initial_grid,
            )

    report.print_report()
    return 0 if report.passed else 2


def cmd_bench(args) -> int:
    """Bench-Befehl: Strategien auf einer Schaltungsfamilie vergleichen."""
    family = FamilySpec(
        qubits=args.qubits,
        gates=args.gates,
        hot_fraction=args.hot_fraction,
        hot_weight=args.hot_weight,
    )
    seed = args.seed if args.seed is not None else 0
    table = benchmark(family, args.trials, seed, cfg=_pipeline_config(args))

    text = table.to_json() if ReportFormat(args.report) is ReportFormat.JSON else table.render()
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def _add_pipeline_flags(parser: argparse.ArgumentParser, needs_input: bool = True):
    if needs_input:
        parser.add_argument("-i", "--input", required=True, help="Eingabe QASM-Datei")
    parser.add_argument("-o", "--output", help="Ausgabedatei (sonst stdout)")
    parser.add_argument("--rows", type=int, help="Gitterzeilen (default: ⌈√q⌉)")
    parser.add_argument("--cols", type=int, help="Gitterspalten (default: ⌈√q⌉)")
    parser.add_argument("--decompose", action="store_true", help="Toffoli/Fredkin/MCT zerlegen")
    parser.add_argument("--no-restore", action="store_true", help="Platzierung nicht wiederherstellen")
    parser.add_argument("--no-cancel", action="store_true", help="Keine Paar-Auslöschung")
    parser.add_argument(
        "--strategy",
        choices=[k.value for k in StrategyKind],
        default=StrategyKind.LONGPATH.value,
        help="Platzierungsstrategie (default: longpath)",
    )
    parser.add_argument("--seed", type=int, help="Seed (Pflicht für --strategy random)")
    parser.add_argument(
        "--report",
        choices=[f.value for f in ReportFormat],
        default=ReportFormat.TEXT.value,
        help="Berichtsformat (default: text)",
    )


def _add_dump_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--dump-graph", metavar="CSV", help="Gewichtsmatrix als CSV schreiben")
    parser.add_argument("--dump-grid", metavar="CSV", help="Platzierung als CSV schreiben")
    parser.add_argument("--show-grid", action="store_true", help="Gitter als Text anzeigen")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="qmap",
        description="Qubit-Platzierung (LONGPATH) und SWAP-Routing für NTC-Gitter",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Beispiele:
  qmap run -i adder.qasm -o adder_routed.qasm --report json
  qmap run -i mct.qasm --decompose --rows 1 --cols 8
  qmap place -i adder.qasm --show-grid --dump-grid grid.csv
  qmap route -i adder.qasm --placement grid.csv --annotate
  qmap verify -i adder.qasm
  qmap bench --trials 200 --seed 7 --report json
        """,
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Mehr Logging (-vv: debug)")

    subparsers = parser.add_subparsers(dest="command", help="Verfügbare Befehle")

    # Run
    run_parser = subparsers.add_parser("run", help="Zerlegen, platzieren, routen, berichten")
    _add_pipeline_flags(run_parser)
    _add_dump_flags(run_parser)
    run_parser.add_argument("--annotate", action="store_true", help="SWAP-Blöcke kommentieren")

    # Place
    place_parser = subparsers.add_parser("place", help="Nur Platzierung berechnen")
    _add_pipeline_flags(place_parser)
    _add_dump_flags(place_parser)

    # Route
    route_parser = subparsers.add_parser("route", help="Routing (optional gegen Gitter-CSV)")
    _add_pipeline_flags(route_parser)
    route_parser.add_argument("--placement", metavar="CSV", help="Platzierung aus --dump-grid")
    route_parser.add_argument("--annotate", action="store_true", help="SWAP-Blöcke kommentieren")

    # Verify
    verify_parser = subparsers.add_parser("verify", help="Selbsttests der Zerlegungen")
    verify_parser.add_argument("-i", "--input", help="Zusätzlich diese QASM-Datei prüfen")
    _add_pipeline_flags(verify_parser, needs_input=False)

    # Bench
    bench_parser = subparsers.add_parser("bench", help="Strategien vergleichen")
    _add_pipeline_flags(bench_parser, needs_input=False)
    bench_parser.add_argument("--trials", type=int, default=200, help="Anzahl Trials (default: 200)")
    bench_parser.add_argument("--qubits", type=int, default=9, help="Qubits (default: 9)")
    bench_parser.add_argument("--gates", type=int, default=100, help="Gatter (default: 100)")
    bench_parser.add_argument("--hot-fraction", type=float, default=0.2, help="Anteil heißer Paare")
    bench_parser.add_argument("--hot-weight", type=float, default=0.8, help="Gatteranteil auf heißen Paaren")

    return parser


COMMANDS = {
    "run": cmd_run,
    "place": cmd_place,
    "route": cmd_route,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI Haupteinstiegspunkt."""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    command = COMMANDS.get(args.command)
    if command is None:
        parser.print_help()
        return 0

    try:
        return command(args)
    except InvariantError as e:
        print(f"❌ Interner Fehler: {e}", file=sys.stderr)
        return 2
    except QMapError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"❌ Datei nicht lesbar/schreibbar: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
