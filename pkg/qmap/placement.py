"""
Spiral-Platzierung
==================
Zweiter Teil der Platzierung: die LONGPATH-Reihenfolge wird spiralförmig
vom Mittelpunkt (⌊(r-1)/2⌋, ⌊(c-1)/2⌋) aus ins Gitter gelegt.

Bewegungsmuster: 1 Ost, 1 Süd, 2 West, 2 Nord, 3 Ost, 3 Süd, ...
Koordinaten außerhalb des Gitters werden übersprungen; ein 1×N-Gitter
ergibt so die abwechselnd rechts/links wachsende 1D-Anordnung.
"""

import csv
import io
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Sequence

from .exceptions import PlacementError
from .interaction import LongPath
from .models import EMPTY, Cell, Grid, manhattan

logger = logging.getLogger(__name__)

# Ost, Süd, West, Nord
_DIRECTIONS = ((0, 1), (1, 0), (0, -1), (-1, 0))


@dataclass
class PlacementConfig:
    """Gittergröße; ohne Angabe r = c = ⌈√q⌉."""
    rows: Optional[int] = None
    cols: Optional[int] = None

    def __post_init__(self):
        for name, value in (("rows", self.rows), ("cols", self.cols)):
            if value is not None and value < 1:
                raise PlacementError(f"{name} muss positiv sein, nicht {value}")

    def dimensions(self, q: int) -> tuple[int, int]:
        """Gittergröße für q Qubits; fehlende Seite wird passend ergänzt."""
        side = math.isqrt(q - 1) + 1 if q > 0 else 1
        rows, cols = self.rows, self.cols
        if rows is None and cols is None:
            rows = cols = side
        elif rows is None:
            rows = max(-(-q // cols), 1)
        elif cols is None:
            cols = max(-(-q // rows), 1)

        if rows * cols < q:
            raise PlacementError(f"Gitter {rows}x{cols} zu klein für {q} Qubits")
        return rows, cols


def spiral_cells(rows: int, cols: int) -> Iterator[Cell]:
    """Alle Zellen des Gitters in Spiralreihenfolge ab dem Mittelpunkt."""
    r, c = (rows - 1) // 2, (cols - 1) // 2
    total = rows * cols
    emitted = 1
    yield (r, c)

    step, direction = 1, 0
    while emitted < total:
        # Jede Schrittlänge wird zweimal gelaufen
        for _ in range(2):
            dr, dc = _DIRECTIONS[direction]
            for _ in range(step):
                r, c = r + dr, c + dc
                if 0 <= r < rows and 0 <= c < cols:
                    yield (r, c)
                    emitted += 1
                    if emitted == total:
                        return
            direction = (direction + 1) % 4
        step += 1


def spiral_place(path: LongPath | Sequence[int], cfg: PlacementConfig) -> Grid:
    """
    Legt die Reihenfolge spiralförmig ins Gitter.

    Raises:
        PlacementError: wenn r·c < q
    """
    order = path.order if isinstance(path, LongPath) else tuple(int(q) for q in path)
    rows, cols = cfg.dimensions(len(order))
    grid = Grid(rows, cols)

    for qubit, cell in zip(order, spiral_cells(rows, cols)):
        grid.place(qubit, cell)

    logger.debug(f"{len(order)} Qubits auf {rows}x{cols}-Gitter platziert")
    return grid


def grid_distance(grid: Grid, i: int, j: int) -> int:
    """Manhattan-Abstand zweier platzierter Qubits."""
    return manhattan(grid.position(i), grid.position(j))


def render_grid(grid: Grid) -> str:
    """Gitter als Text-Art (leere Zellen als '.')."""
    width = max(len(f"q{grid.next_label - 1}") if grid.qubit_count else 1, 1)
    lines = []
    for row in grid.cells.tolist():
        cells = [("." if q == EMPTY else f"q{q}").rjust(width) for q in row]
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"


def grid_to_csv(grid: Grid) -> str:
    """Zeilenweise CSV, -1 für leere Zellen."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in grid.cells.tolist():
        writer.writerow(row)
    return buffer.getvalue()


def parse_grid_csv(text: str) -> Grid:
    """Liest eine mit ``grid_to_csv`` geschriebene Platzierung."""
    try:
        rows = [[int(v) for v in row] for row in csv.reader(io.StringIO(text)) if row]
    except ValueError as e:
        raise PlacementError(f"Gitter-CSV enthält keinen Integer: {e}") from None

    if not rows or len({len(row) for row in rows}) != 1:
        raise PlacementError("Gitter-CSV muss rechteckig und nicht leer sein")
    return Grid.from_cells(rows)


def read_grid_csv(path: Path | str) -> Grid:
    return parse_grid_csv(Path(path).read_text(encoding="utf-8"))
