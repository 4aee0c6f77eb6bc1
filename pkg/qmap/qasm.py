"""
QASM-Dialekt
============
Liest und schreibt den zeilenorientierten QASM-Dialekt der Pipeline.

Grammatik:
    file    := header line*
    header  := "qubits" SP INT NL
    line    := (instr | comment | blank) NL
    instr   := OPCODE SP operand ("," operand)*
    operand := "q" INT
    comment := "#" any-chars

Eine Anweisung pro Zeile, damit "Zeile L1 ist identisch mit Zeile L2"
beim Routing eine eindeutige Bedeutung hat.
"""

import logging
import re
from pathlib import Path
from typing import Mapping, Optional

from .exceptions import GateError, QasmSyntaxError
from .models import Circuit, Gate, Opcode

logger = logging.getLogger(__name__)

_HEADER_RE = re.compile(r"^qubits (\d+)$")
_INSTR_RE = re.compile(r"^([a-z]+) (q\d+(?:,q\d+)*)$")
_OPCODES = {op.value: op for op in Opcode}


class QasmParser:
    """
    Parst Dialekt-Text zu einem Circuit.

    Usage:
        circuit = QasmParser().parse("qubits 2\\ncnot q0,q1\\n")
    """

    def parse(self, text: str) -> Circuit:
        """
        Parst den kompletten Text.

        Raises:
            QasmSyntaxError: mit Zeilennummer und Grund
        """
        lines = text.split("\n")
        # Abschließendes NL erzeugt ein leeres letztes Element
        if lines and lines[-1] == "":
            lines.pop()

        if not lines:
            raise QasmSyntaxError(1, "Header 'qubits N' fehlt")

        qubit_count = self._parse_header(lines[0].rstrip("\r"))
        gates = []

        for number, raw in enumerate(lines[1:], start=2):
            line = raw.rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            gates.append(self._parse_instruction(line, number, qubit_count))

        logger.debug(f"{len(gates)} Gatter über {qubit_count} Qubits gelesen")
        return Circuit(qubit_count=qubit_count, gates=gates)

    def _parse_header(self, line: str) -> int:
        match = _HEADER_RE.match(line)
        if not match:
            raise QasmSyntaxError(1, f"Header 'qubits N' erwartet, gefunden: {line!r}")
        count = int(match.group(1))
        if count < 1:
            raise QasmSyntaxError(1, "Qubit-Anzahl muss positiv sein")
        return count

    def _parse_instruction(self, line: str, number: int, qubit_count: int) -> Gate:
        match = _INSTR_RE.match(line)
        if not match:
            raise QasmSyntaxError(number, f"ungültige Anweisung: {line!r}")

        name, args = match.groups()
        opcode = _OPCODES.get(name)
        if opcode is None:
            raise QasmSyntaxError(number, f"unbekannter Opcode '{name}'")

        operands = tuple(int(arg[1:]) for arg in args.split(","))
        for q in operands:
            if q >= qubit_count:
                raise QasmSyntaxError(
                    number, f"Operand q{q} außerhalb der deklarierten {qubit_count} Qubits"
                )

        try:
            return Gate(opcode, operands)
        except GateError as e:
            # Stelligkeit oder doppelte Operanden
            raise QasmSyntaxError(number, str(e)) from None


def parse_qasm(text: str) -> Circuit:
    """Parst Dialekt-Text."""
    return QasmParser().parse(text)


def emit_qasm(circuit: Circuit, annotations: Optional[Mapping[int, str]] = None) -> str:
    """
    Schreibt einen Circuit als Dialekt-Text.

    Args:
        circuit: Schaltkreis
        annotations: optionale Kommentare, die vor dem Gatter mit
            dem jeweiligen Index ausgegeben werden

    Returns:
        Text mit "qubits N" Header, eine Anweisung pro Zeile
    """
    lines = [f"qubits {circuit.qubit_count}"]
    for index, gate in enumerate(circuit.gates):
        if annotations and index in annotations:
            lines.append(f"# {annotations[index]}")
        lines.append(str(gate))
    return "\n".join(lines) + "\n"


def read_qasm(path: Path | str) -> Circuit:
    """Liest eine QASM-Datei."""
    path = Path(path)
    logger.info(f"Lese {path}")
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data[: e.start].count(b"\n") + 1
        raise QasmSyntaxError(line, f"kein gültiges UTF-8 (Byte 0x{data[e.start]:02x})") from e
    return parse_qasm(text)


def write_qasm(
    circuit: Circuit,
    path: Path | str,
    annotations: Optional[Mapping[int, str]] = None,
):
    """Schreibt eine QASM-Datei (LF-Zeilenenden)."""
    path = Path(path)
    path.write_bytes(emit_qasm(circuit, annotations).encode("utf-8"))
    logger.info(f"{circuit.gate_count} Gatter nach {path} geschrieben")
