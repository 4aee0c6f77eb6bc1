"""Tests für die Spiral-Platzierung."""

import pytest

from qmap.exceptions import PlacementError
from qmap.interaction import LongPath
from qmap.models import EMPTY, Grid
from qmap.placement import (
    PlacementConfig,
    grid_distance,
    grid_to_csv,
    parse_grid_csv,
    render_grid,
    spiral_cells,
    spiral_place,
)


class TestPlacementConfig:
    """Tests für die Gittergröße."""

    @pytest.mark.parametrize("q,dims", [(1, (1, 1)), (4, (2, 2)), (5, (3, 3)), (9, (3, 3)), (10, (4, 4))])
    def test_default_square(self, q, dims):
        """Ohne Vorgabe: ⌈√q⌉ × ⌈√q⌉."""
        assert PlacementConfig().dimensions(q) == dims

    def test_missing_side(self):
        """Eine fehlende Seite wird aus q ergänzt."""
        assert PlacementConfig(rows=1).dimensions(5) == (1, 5)
        assert PlacementConfig(cols=2).dimensions(5) == (3, 2)

    def test_too_small(self):
        """Zu kleines Gitter wird abgelehnt."""
        with pytest.raises(PlacementError):
            PlacementConfig(rows=2, cols=2).dimensions(5)

    def test_non_positive(self):
        """Seiten müssen positiv sein."""
        with pytest.raises(PlacementError):
            PlacementConfig(rows=0)


class TestSpiral:
    """Tests für spiral_cells und spiral_place."""

    def test_three_by_three_order(self):
        """Spirale im 3×3-Gitter: Mitte, Ost, Süd, West, Nord."""
        assert list(spiral_cells(3, 3)) == [
            (1, 1), (1, 2), (2, 2), (2, 1), (2, 0), (1, 0), (0, 0), (0, 1), (0, 2),
        ]

    def test_single_cell(self):
        """Ein Qubit landet auf (0, 0)."""
        grid = spiral_place(LongPath(order=(0,)), PlacementConfig())
        assert grid.shape == (1, 1)
        assert grid.position(0) == (0, 0)

    def test_nine_qubits(self):
        """p0..p8 landen in Spiralreihenfolge."""
        order = (4, 7, 0, 2, 8, 1, 3, 6, 5)
        grid = spiral_place(LongPath(order=order), PlacementConfig())
        for qubit, cell in zip(order, spiral_cells(3, 3)):
            assert grid.position(qubit) == cell

    def test_five_on_three_by_three(self):
        """Die letzten vier Spiralzellen bleiben leer."""
        grid = spiral_place(range(5), PlacementConfig())
        cells = list(spiral_cells(3, 3))
        for qubit in range(5):
            assert grid.position(qubit) == cells[qubit]
        for cell in cells[5:]:
            assert grid.qubit_at(cell) == EMPTY

    def test_line_alternates(self):
        """1×N: abwechselnd rechts/links vom Mittelpunkt."""
        grid = spiral_place(range(5), PlacementConfig(rows=1))
        assert grid.cells.tolist() == [[4, 2, 0, 1, 3]]

    @pytest.mark.parametrize("rows,cols", [(1, 7), (2, 5), (4, 3), (5, 5), (6, 1)])
    def test_covers_every_cell(self, rows, cols):
        """Die Spirale besucht jede Zelle genau einmal."""
        cells = list(spiral_cells(rows, cols))
        assert len(cells) == rows * cols
        assert len(set(cells)) == rows * cols

    def test_consecutive_adjacent_on_square(self):
        """Aufeinanderfolgende Spiralzellen sind im Quadrat benachbart."""
        cells = list(spiral_cells(5, 5))
        for a, b in zip(cells, cells[1:]):
            assert abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1

    def test_deterministic(self):
        """Gleiche Reihenfolge, gleiches Gitter."""
        path = LongPath(order=(3, 1, 0, 2))
        assert spiral_place(path, PlacementConfig()) == spiral_place(path, PlacementConfig())

    def test_grid_too_small(self):
        """Fünf Qubits passen nicht in 2×2."""
        with pytest.raises(PlacementError):
            spiral_place(range(5), PlacementConfig(rows=2, cols=2))


class TestGridIO:
    """Tests für Distanz, Text-Art und CSV."""

    def test_distance(self):
        """Gitterabstand ist der Manhattan-Abstand."""
        grid = Grid.from_cells([[0, 1, EMPTY], [EMPTY, EMPTY, EMPTY], [EMPTY, EMPTY, 2]])
        assert grid_distance(grid, 0, 1) == 1
        assert grid_distance(grid, 0, 2) == 4

    def test_render(self):
        """Text-Art mit Punkt für leere Zellen."""
        grid = Grid.from_cells([[0, EMPTY], [10, 1]])
        assert render_grid(grid) == " q0   .\nq10  q1\n"

    def test_csv_round_trip(self):
        """Gitter-CSV übersteht Schreiben und Lesen."""
        grid = spiral_place(range(5), PlacementConfig())
        text = grid_to_csv(grid)
        assert text.splitlines()[0] == "-1,-1,-1"
        assert parse_grid_csv(text) == grid

    @pytest.mark.parametrize("text", ["", "0,1\n2\n", "0,a\n", "0,0\n"])
    def test_csv_errors(self, text):
        """Kaputte Gitter-CSV wird abgelehnt."""
        with pytest.raises(PlacementError):
            parse_grid_csv(text)
