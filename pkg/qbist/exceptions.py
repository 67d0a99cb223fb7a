class QbistError(Exception):
    """Base exception for qbist."""

    pass


class TruthTableParseError(QbistError):
    """Raised when a truth-table file cannot be parsed."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class CircuitParseError(QbistError):
    """Raised when a circuit file cannot be parsed."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class KTooLargeError(QbistError):
    """Raised when exact ESOP minimization is requested for k >= 5."""

    pass


class WidthMismatchError(QbistError):
    """Raised when circuits or states of different widths are combined."""

    pass


class LocationInvalidError(QbistError):
    """Raised when a fault location does not exist in the circuit."""

    pass


class NonOracleCircuitError(QbistError):
    """Raised when a circuit does not have the k-CN oracle shape."""

    pass


class PhaseVectorError(QbistError):
    """Raised when a state has no well-defined phase vector."""

    pass


class NotBalancedError(PhaseVectorError):
    """Raised when register amplitudes are not of equal magnitude."""

    pass


class TargetEntangledError(PhaseVectorError):
    """Raised when the target qubit is not a |+> or |-> product factor."""

    pass


class SuiteGenerationError(QbistError):
    """Raised when a generated test plan is not deterministic fault-free."""

    pass


class FaultSpecError(QbistError):
    """Raised when a textual fault specification is malformed."""

    pass


class CampaignError(QbistError):
    """Raised when campaign inputs are inconsistent."""

    pass
