"""Density operator module."""

import numpy as np

from ..conf import CONF
from ..linalg import as_matrix, check_square, hermitian_deviation, min_eigenvalue, trace
from .validation import ValidationReport


def check_density_matrix(matrix, report, name="rho", tol=None):
    """
    Add Hermiticity, positivity and unit trace checks of a matrix to a report.

    Parameters
    ----------
    matrix: numpy.ndarray
    report: qfaplus.quantum_ops.validation.ValidationReport
    name: str
        check names prefix
    tol: float or None
        default CONF.validation_tol (positivity uses max(tol, CONF.psd_tol))
    """
    tol = CONF.validation_tol if tol is None else tol
    if matrix.shape[0] != matrix.shape[1]:
        report.add_failure(f"{name} square", f"shape {matrix.shape}")
        return
    report.add_check(f"{name} hermitian", hermitian_deviation(matrix), tol)
    report.add_check(f"{name} positive", max(0., -min_eigenvalue(matrix)), max(tol, CONF.psd_tol))
    report.add_check(f"{name} trace", abs(trace(matrix) - 1), tol)


class DensityOperator:
    """
    Density operator: positive semidefinite, Hermitian operator with unit trace.

    Parameters
    ----------
    matrix: array-like
        n x n
    check: bool, default True
        if True, raises MachineValidationError when matrix is not a density operator
    tol: float or None
        validation tolerance, default CONF.validation_tol

    Attributes
    ----------
    matrix: numpy.ndarray
    """

    def __init__(self, matrix, check=True, tol=None):
        if isinstance(matrix, DensityOperator):
            matrix = matrix.matrix
        self.matrix = as_matrix(matrix)
        check_square(self.matrix, "density operator")
        self.matrix.setflags(write=False)
        if check:
            self.validate(tol=tol).raise_if_failed()

    @classmethod
    def from_pure_state(cls, vector):
        """
        Create |psi><psi| from a state vector.

        Parameters
        ----------
        vector: array-like
            normalized vector

        Returns
        -------
        DensityOperator
        """
        psi = np.asarray(vector, dtype=complex).reshape(-1, 1)
        return cls(psi @ np.conj(psi).T)

    @classmethod
    def from_basis_state(cls, dim, index):
        """
        Create |index><index| on a dim-dimensional space.

        Parameters
        ----------
        dim: int
        index: int

        Returns
        -------
        DensityOperator
        """
        matrix = np.zeros((dim, dim), dtype=complex)
        matrix[index, index] = 1
        return cls(matrix)

    @classmethod
    def maximally_mixed(cls, dim):
        """
        Create I/dim.

        Parameters
        ----------
        dim: int

        Returns
        -------
        DensityOperator
        """
        return cls(np.eye(dim, dtype=complex) / dim)

    @property
    def dim(self):
        """
        Get Hilbert space dimension.

        Returns
        -------
        int
        """
        return self.matrix.shape[0]

    def validate(self, tol=None):
        """
        Validate density operator conditions.

        Parameters
        ----------
        tol: float or None

        Returns
        -------
        qfaplus.quantum_ops.validation.ValidationReport
        """
        report = ValidationReport("density operator")
        check_density_matrix(self.matrix, report, tol=tol)
        return report

    def __repr__(self):
        """
        Repr.

        Returns
        -------
        str
        """
        return f"<DensityOperator dim={self.dim}>"
