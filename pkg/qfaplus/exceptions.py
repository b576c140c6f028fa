"""qfaplus public exceptions."""

__all__ = ["DimensionMismatchError", "MachineValidationError", "UnknownSymbolError", "AlphabetMismatchError",
           "InternalConsistencyError", "EnumerationGuardError", "MachineFileError"]


class DimensionMismatchError(Exception):
    """Exception when matrix, operator or state dimensions are not compatible."""

    pass


class MachineValidationError(Exception):
    """
    Exception when the validation of an operation, a state or a machine fails.

    Parameters
    ----------
    message: str
    report: qfaplus.quantum_ops.validation.ValidationReport or None
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnknownSymbolError(Exception):
    """Exception when a word contains a symbol that does not belong to the alphabet."""

    pass


class AlphabetMismatchError(Exception):
    """Exception when machines that must share an alphabet do not."""

    pass


class InternalConsistencyError(Exception):
    """Exception when a computed probability is out of range beyond numerical tolerance."""

    pass


class EnumerationGuardError(Exception):
    """Exception when an exhaustive word enumeration exceeds the configured limit."""

    pass


class MachineFileError(Exception):
    """Exception when a machine file is malformed or not supported."""

    pass
