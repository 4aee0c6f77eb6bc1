"""Tests für den QASM-Dialekt."""

import pytest

from qmap.exceptions import QasmSyntaxError
from qmap.models import Circuit, Gate
from qmap.qasm import QasmParser, emit_qasm, parse_qasm, read_qasm, write_qasm


class TestParser:
    """Tests für QasmParser."""

    def test_simple(self):
        """Eine CNOT-Zeile."""
        circuit = parse_qasm("qubits 2\ncnot q0,q1")
        assert circuit.qubit_count == 2
        assert circuit.gates == [Gate.of("cnot", 0, 1)]

    def test_swap_normalized(self):
        """swap q2,q0 wird zu swap(0,2)."""
        circuit = parse_qasm("qubits 3\nswap q2,q0\n")
        assert circuit.gates[0].operands == (0, 2)

    def test_comments_and_blank_lines(self):
        """Kommentare und Leerzeilen werden übersprungen."""
        text = "qubits 3\n# Kommentar\n\n   \nx q2\ncnot q1,q0\n"
        circuit = parse_qasm(text)
        assert [str(g) for g in circuit] == ["x q2", "cnot q1,q0"]

    def test_crlf(self):
        """CRLF-Zeilenenden werden akzeptiert."""
        circuit = parse_qasm("qubits 2\r\ncnot q0,q1\r\nh q1\r\n")
        assert circuit.gate_count == 2

    def test_header_only(self):
        """Nur Kopfzeile ergibt eine leere Schaltung."""
        assert parse_qasm("qubits 4\n") == Circuit(4)

    @pytest.mark.parametrize("text,line", [
        ("", 1),
        ("qubits\n", 1),
        ("qubits 0\n", 1),
        ("cnot q0,q1\n", 1),
        ("qubits 2\ncnot q0,q0\n", 2),
        ("qubits 2\nfoo q0\n", 2),
        ("qubits 2\nx q0\ncnot q0,q2\n", 3),
        ("qubits 2\ncnot q0\n", 2),
        ("qubits 2\ncnot q0, q1\n", 2),
        ("qubits 2\nCNOT q0,q1\n", 2),
        ("qubits 2\n x q0\n", 2),
    ])
    def test_errors_carry_line(self, text, line):
        """Fehler nennen die Zeilennummer."""
        with pytest.raises(QasmSyntaxError) as exc:
            QasmParser().parse(text)
        assert exc.value.line == line
        assert f"Zeile {line}" in str(exc.value)

    def test_syntax_error_is_value_error(self):
        """Syntaxfehler sind auch ValueError."""
        with pytest.raises(ValueError):
            parse_qasm("qubits 2\nfoo q0\n")


class TestEmit:
    """Tests für emit_qasm."""

    def test_emit(self):
        """Kanonische Ausgabe einer CNOT."""
        assert emit_qasm(Circuit(2, [Gate.of("cnot", 0, 1)])) == "qubits 2\ncnot q0,q1\n"

    def test_emit_empty(self):
        """Leere Schaltung: nur die Kopfzeile."""
        assert emit_qasm(Circuit(1)) == "qubits 1\n"

    def test_round_trip_preserves_order(self):
        """Kanonischer Text übersteht parse → emit unverändert."""
        text = "qubits 5\nmct q0,q1,q2,q4\nh q3\nfredkin q0,q3,q1\ncv q4,q2\ncvdg q2,q4\n"
        assert emit_qasm(parse_qasm(text)) == text

    def test_annotations(self):
        """Kommentare stehen vor dem jeweiligen Gatter."""
        circuit = Circuit(2, [Gate.of("x", 0), Gate.of("swap", 0, 1)])
        text = emit_qasm(circuit, {1: "route for line 1"})
        assert text == "qubits 2\nx q0\n# route for line 1\nswap q0,q1\n"
        assert parse_qasm(text) == circuit

    def test_file_round_trip(self, tmp_path):
        """Dateien werden mit LF geschrieben."""
        circuit = Circuit(3, [Gate.of("toffoli", 0, 1, 2)])
        path = tmp_path / "c.qasm"
        write_qasm(circuit, path)
        assert path.read_bytes() == b"qubits 3\ntoffoli q0,q1,q2\n"
        assert read_qasm(path) == circuit

    def test_invalid_utf8(self, tmp_path):
        """Ungültiges UTF-8 ist ein Syntaxfehler mit Zeilennummer."""
        path = tmp_path / "bad.qasm"
        path.write_bytes(b"qubits 2\ncnot q0,q1\n# \xff\xfe\n")
        with pytest.raises(QasmSyntaxError) as exc:
            read_qasm(path)
        assert exc.value.line == 3
        assert "UTF-8" in str(exc.value)
