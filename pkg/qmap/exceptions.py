"""
Fehlerhierarchie
================
Alle Eingabe- und Validierungsfehler erben von ``QMapError`` und ``ValueError``.
``InvariantError`` meldet dagegen einen Fehler in der eigenen Ausgabe
(CLI Exit-Code 2).
"""


class QMapError(Exception):
    """Basisklasse aller qmap-Fehler."""


class ConfigError(QMapError, ValueError):
    """Ungültige Kombination von Optionen."""


class QasmSyntaxError(QMapError, ValueError):
    """Fehler beim Parsen einer QASM-Datei."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"Zeile {line}: {reason}")


class GateError(QMapError, ValueError):
    """Ungültiges Gatter (Opcode, Stelligkeit, Operanden)."""


class DecompositionError(QMapError, ValueError):
    """Zerlegung nicht möglich."""


class PlacementError(QMapError, ValueError):
    """Gitter zu klein, Qubit nicht platziert, kaputte Gitter-CSV."""


class RoutingError(QMapError, ValueError):
    """Routing nicht möglich (Stelligkeit > 2, nicht-benachbarter SWAP)."""


class SimulationError(QMapError, ValueError):
    """Orakel nicht anwendbar (zu viele Qubits, nicht-klassisches Gatter)."""


class InvariantError(QMapError):
    """Die eigene Ausgabe verletzt eine Invariante."""
