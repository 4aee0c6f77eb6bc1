"""Tests für die Orakel."""

import numpy as np
import pytest

from qmap.exceptions import SimulationError
from qmap.metrics import random_circuit
from qmap.models import Circuit, Gate, Grid, Opcode
from qmap.routing import RoutedCircuit
from qmap.verify import (
    VerificationReport,
    bfs_swap_bound,
    circuit_unitary,
    classical_action,
    equal_up_to_global_phase,
    gate_matrix,
    replay_adjacency,
    self_test,
)

CLASSICAL_OPCODES = (Opcode.X, Opcode.CNOT, Opcode.SWAP, Opcode.TOFFOLI, Opcode.FREDKIN)


class TestCircuitUnitary:
    """Tests für circuit_unitary."""

    def test_empty(self):
        """Leere Schaltung ergibt die Einheitsmatrix."""
        assert np.allclose(circuit_unitary(Circuit(1)).matrix, np.eye(2))

    def test_pauli_x(self):
        """Matrix von x."""
        assert np.allclose(circuit_unitary(Circuit(1, [Gate.of("x", 0)])).matrix, [[0, 1], [1, 0]])

    def test_qubit_zero_is_msb(self):
        """x auf q0 von 2 Qubits bildet |00⟩ auf |10⟩ (Index 2) ab."""
        matrix = circuit_unitary(Circuit(2, [Gate.of("x", 0)])).matrix
        assert matrix[2, 0] == 1

    def test_multiplicative(self):
        """Spätere Gatter multiplizieren von links."""
        a = [Gate.of("h", 0), Gate.of("cv", 0, 1)]
        b = [Gate.of("t", 1), Gate.of("cnot", 1, 0)]
        ua = circuit_unitary(Circuit(2, a)).matrix
        ub = circuit_unitary(Circuit(2, b)).matrix
        uab = circuit_unitary(Circuit(2, a + b)).matrix
        assert np.allclose(uab, ub @ ua, atol=1e-9)
        assert not np.allclose(uab, ua @ ub, atol=1e-9)

    def test_unitary(self):
        """Zufallsschaltung ergibt eine unitäre Matrix."""
        circuit = random_circuit(4, 25, np.random.default_rng(1))
        assert circuit_unitary(circuit).is_unitary()

    def test_cv_squared_is_cnot(self):
        """cv zweimal ist cnot."""
        cv2 = circuit_unitary(Circuit(2, [Gate.of("cv", 0, 1)] * 2)).matrix
        assert np.allclose(cv2, gate_matrix(Gate.of("cnot", 0, 1)), atol=1e-9)

    def test_too_many_qubits(self):
        """Dichte Simulation endet bei 6 Qubits."""
        with pytest.raises(SimulationError):
            circuit_unitary(Circuit(7))


class TestGlobalPhase:
    """Tests für equal_up_to_global_phase."""

    def test_phase_ignored(self):
        """Globale Phase wird ignoriert."""
        u = gate_matrix(Gate.of("h", 0))
        assert equal_up_to_global_phase(u, np.exp(0.7j) * u)

    def test_different(self):
        """Verschiedene Matrizen bleiben verschieden."""
        assert not equal_up_to_global_phase(gate_matrix(Gate.of("h", 0)), np.eye(2))

    def test_shape_mismatch(self):
        """Unterschiedliche Dimensionen sind nie gleich."""
        assert not equal_up_to_global_phase(np.eye(2), np.eye(4))


class TestClassicalAction:
    """Tests für classical_action."""

    def test_swap(self):
        """swap vertauscht |01⟩ und |10⟩."""
        perm = classical_action(Circuit(2, [Gate.of("swap", 0, 1)])).perm
        assert perm.tolist() == [0, 2, 1, 3]

    def test_cnot_twice(self):
        """cnot zweimal ist die Identität."""
        perm = classical_action(Circuit(2, [Gate.of("cnot", 0, 1)] * 2))
        assert perm.is_identity()

    def test_non_classical(self):
        """h hat keine Basispermutation."""
        with pytest.raises(SimulationError):
            classical_action(Circuit(1, [Gate.of("h", 0)]))

    @pytest.mark.parametrize("seed", range(8))
    def test_agrees_with_unitary(self, seed):
        """Basispermutation = Unitärmatrix auf Basisvektoren (≤ 4 Qubits)."""
        rng = np.random.default_rng(seed)
        circuit = random_circuit(4, 20, rng, CLASSICAL_OPCODES)
        action = classical_action(circuit)
        matrix = circuit_unitary(circuit).matrix

        assert action.is_bijection()
        expected = np.zeros((16, 16))
        expected[action.perm, np.arange(16)] = 1
        assert np.allclose(matrix, expected, atol=1e-9)


class TestReplay:
    """Tests für replay_adjacency."""

    def _routed(self, circuit: Circuit, grid: Grid) -> RoutedCircuit:
        return RoutedCircuit(circuit=circuit, initial_grid=grid, final_grid=grid, swap_count=0)

    def test_violation_at_index_zero(self):
        """Erste Verletzung bei Gatter 0."""
        verdict = replay_adjacency(self._routed(
            Circuit(3, [Gate.of("cnot", 0, 2)]), Grid.from_cells([[0, 1, 2]]),
        ))
        assert not verdict.ok
        assert verdict.first_violation == 0
        assert "❌" in verdict.summary()

    def test_empty(self):
        """Leere Schaltung ist immer benachbart."""
        verdict = replay_adjacency(self._routed(Circuit(1), Grid.from_cells([[0]])))
        assert verdict.ok

    def test_swaps_tracked(self):
        """SWAPs verschieben die Belegung für spätere Gatter."""
        circuit = Circuit(3, [Gate.of("swap", 1, 2), Gate.of("cnot", 0, 2)])
        verdict = replay_adjacency(self._routed(circuit, Grid.from_cells([[0, 1, 2]])))
        assert verdict.ok

    def test_non_adjacent_swap(self):
        """Nicht benachbarter SWAP ist eine Verletzung."""
        circuit = Circuit(3, [Gate.of("x", 1), Gate.of("swap", 0, 2)])
        verdict = replay_adjacency(self._routed(circuit, Grid.from_cells([[0, 1, 2]])))
        assert verdict.first_violation == 1


class TestBfsBound:
    """Tests für bfs_swap_bound."""

    def test_bound(self):
        """Schranke = kürzester Weg minus 1."""
        assert bfs_swap_bound((3, 3), (0, 0), (2, 2)) == 3
        assert bfs_swap_bound((1, 2), (0, 0), (0, 1)) == 0


class TestSelfTest:
    """Tests für self_test."""

    def test_all_pass(self):
        """Alle eingebauten Selbsttests bestehen."""
        report = self_test()
        assert report.passed, [c.name for c in report.failures]
        assert len(report.checks) >= 5

    def test_print_report(self, capsys):
        """Bericht endet mit BESTANDEN."""
        self_test().print_report()
        assert "BESTANDEN" in capsys.readouterr().out


class TestVerificationReport:
    """Tests für VerificationReport."""

    def test_skipped_not_counted(self):
        """Übersprungene Prüfungen zählen weder als bestanden noch als Fehler."""
        report = VerificationReport()
        report.add("Nachbarschaft", True)
        report.skip("Zerlegung", "7 Qubits")
        assert report.passed
        assert [c.name for c in report.executed] == ["Nachbarschaft"]
        assert report.summary() == "✅ BESTANDEN | Prüfungen: 1 | Übersprungen: 1 | Fehler: 0"

    def test_skipped_marked(self, capsys):
        """Im Bericht steht ein eigenes Zeichen statt ✓."""
        report = VerificationReport()
        report.skip("Zerlegung", "7 Qubits")
        report.print_report()
        out = capsys.readouterr().out
        assert "   – Zerlegung (7 Qubits)" in out
        assert "✓" not in out

    def test_failure_still_fails(self):
        """Ein Fehler neben einer übersprungenen Prüfung lässt den Bericht scheitern."""
        report = VerificationReport()
        report.skip("Zerlegung", "7 Qubits")
        report.add("Restore", False)
        assert not report.passed
        assert [c.name for c in report.failures] == ["Restore"]
