"""
Operator-sum module: general super-operators and trace-preserving quantum operations.

Both are given by a list of Kraus operators {E_k} and act as rho -> sum_k E_k rho E_k^dagger. A QuantumOperation
additionally satisfies the completeness relation sum_k E_k^dagger E_k = I when it is flagged trace-preserving.
"""

import numpy as np

from ..conf import CONF
from ..exceptions import DimensionMismatchError
from ..linalg import as_matrix, dagger, tensor
from .validation import ValidationReport


def _prepare_kraus(kraus):
    if isinstance(kraus, SuperOperator):
        return kraus.kraus
    if isinstance(kraus, np.ndarray) and kraus.ndim == 2:  # a single operator
        kraus = [kraus]
    kraus = tuple(as_matrix(k) for k in kraus)
    if len(kraus) == 0:
        raise DimensionMismatchError("at least one Kraus operator is required")
    shape = kraus[0].shape
    if shape[0] != shape[1]:
        raise DimensionMismatchError(f"Kraus operators must be square, got shape {shape}")
    for k in kraus:
        if k.shape != shape:
            raise DimensionMismatchError(f"inconsistent Kraus operator shapes: {shape} and {k.shape}")
        k.setflags(write=False)
    return kraus


class SuperOperator:
    """
    Linear super-operator in one-sided Kraus form, rho -> sum_k A_k rho A_k^dagger.

    No completeness relation is required.

    Parameters
    ----------
    kraus: typing.Sequence[array-like]
        non-empty list of n x n operators
    """

    def __init__(self, kraus):
        self._kraus = _prepare_kraus(kraus)

    @property
    def kraus(self):
        """
        Get Kraus operators.

        Returns
        -------
        tuple of numpy.ndarray
        """
        return self._kraus

    @property
    def dim(self):
        """
        Get dimension of the space the super-operator acts on.

        Returns
        -------
        int
        """
        return self._kraus[0].shape[0]

    @property
    def trace_preserving(self):
        """
        Check if super-operator is flagged as trace-preserving.

        Returns
        -------
        bool
        """
        return False

    def __len__(self):
        """
        Get number of Kraus operators.

        Returns
        -------
        int
        """
        return len(self._kraus)

    def __repr__(self):
        """
        Repr.

        Returns
        -------
        str
        """
        return f"<{self.__class__.__name__} dim={self.dim}, {len(self)} Kraus operators>"

    def completeness_deviation(self):
        """
        Get max-entry deviation of sum_k E_k^dagger E_k from identity.

        Returns
        -------
        float
        """
        total = sum(dagger(k) @ k for k in self._kraus)
        return float(np.max(np.abs(total - np.eye(self.dim))))

    def apply(self, rho):
        """
        Apply to an operator.

        Parameters
        ----------
        rho: numpy.ndarray

        Returns
        -------
        numpy.ndarray
        """
        return apply(self, rho)

    def to_matrix(self):
        """
        Get the n**2 x n**2 matrix M such that vec(apply(rho)) = M vec(rho) (row-major vec).

        Returns
        -------
        numpy.ndarray
        """
        return superoperator_matrix(self)


class QuantumOperation(SuperOperator):
    """
    Quantum operation in operator-sum representation.

    Parameters
    ----------
    kraus: typing.Sequence[array-like]
        non-empty list of n x n operators
    trace_preserving: bool, default True
        if True, the completeness relation sum_k E_k^dagger E_k = I is required
    check: bool, default True
        if True (and trace_preserving), raises MachineValidationError when the completeness relation is violated
    tol: float or None
        validation tolerance, default CONF.validation_tol
    """

    def __init__(self, kraus, trace_preserving=True, check=True, tol=None):
        super().__init__(kraus)
        self._trace_preserving = trace_preserving
        if check:
            self.validate(tol=tol).raise_if_failed()

    @classmethod
    def identity(cls, dim):
        """
        Create identity channel.

        Parameters
        ----------
        dim: int

        Returns
        -------
        QuantumOperation
        """
        return cls([np.eye(dim, dtype=complex)])

    @classmethod
    def from_unitary(cls, unitary, check=True):
        """
        Create the channel rho -> U rho U^dagger.

        Parameters
        ----------
        unitary: array-like
        check: bool, default True

        Returns
        -------
        QuantumOperation
        """
        return cls([unitary], check=check)

    @property
    def trace_preserving(self):
        """
        Check if operation is flagged as trace-preserving.

        Returns
        -------
        bool
        """
        return self._trace_preserving

    def validate(self, tol=None):
        """
        Validate operation.

        Parameters
        ----------
        tol: float or None

        Returns
        -------
        qfaplus.quantum_ops.validation.ValidationReport
        """
        return validate_operation(self, tol=tol)


def validate_operation(op, tol=None):
    """
    Validate the completeness relation of an operation.

    Parameters
    ----------
    op: SuperOperator or typing.Sequence[array-like]
        operation or Kraus operators (a list of operators is validated as a trace-preserving operation)
    tol: float or None
        default CONF.validation_tol

    Returns
    -------
    qfaplus.quantum_ops.validation.ValidationReport
        max deviation of sum E^dagger E from I; passes iff <= tol, or always if op is not flagged trace-preserving

    Raises
    ------
    DimensionMismatchError
        if Kraus operators have inconsistent dimensions
    """
    tol = CONF.validation_tol if tol is None else tol
    if not isinstance(op, SuperOperator):
        op = QuantumOperation(op, check=False)
    report = ValidationReport(repr(op))
    deviation = op.completeness_deviation()
    report.add_check("completeness", deviation, tol if op.trace_preserving else np.inf)
    return report


def apply(op, rho):
    """
    Apply an operation: sum_k E_k rho E_k^dagger.

    Parameters
    ----------
    op: SuperOperator
    rho: numpy.ndarray

    Returns
    -------
    numpy.ndarray
    """
    if rho.shape != (op.dim, op.dim):
        raise DimensionMismatchError(f"operator of dimension {op.dim} can't act on matrix of shape {rho.shape}")
    result = np.zeros((op.dim, op.dim), dtype=complex)
    for k in op.kraus:
        result += k @ rho @ dagger(k)
    return result


def compose(second, first):
    """
    Compose two operations: compose(g, f)(rho) = g(f(rho)).

    Parameters
    ----------
    second: SuperOperator
    first: SuperOperator

    Returns
    -------
    SuperOperator
        Kraus operators are all products B_j A_i; a QuantumOperation if both operations are, trace-preserving iff
        both are
    """
    if second.dim != first.dim:
        raise DimensionMismatchError(f"can't compose operations of dimensions {second.dim} and {first.dim}")
    kraus = [b @ a for b in second.kraus for a in first.kraus]
    if isinstance(second, QuantumOperation) and isinstance(first, QuantumOperation):
        return QuantumOperation(
            kraus, trace_preserving=second.trace_preserving and first.trace_preserving, check=False)
    return SuperOperator(kraus)


def superoperator_matrix(op):
    """
    Get the matrix of a super-operator with respect to row-major vectorization.

    Parameters
    ----------
    op: SuperOperator

    Returns
    -------
    numpy.ndarray
        M = sum_k E_k kron conj(E_k), so that vec(apply(op, rho)) = M vec(rho)
    """
    return sum(tensor(k, np.conj(k)) for k in op.kraus)
