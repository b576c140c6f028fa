"""Projective measurement module."""

import collections

import numpy as np

from ..conf import CONF
from ..exceptions import DimensionMismatchError
from ..linalg import as_matrix, hermitian_deviation, trace
from .validation import ValidationReport

NON = "non"
ACC = "acc"
REJ = "rej"


class ProjectorSet:
    """
    Ordered set of labelled projectors forming a projective measurement.

    Parameters
    ----------
    projectors: dict or typing.Sequence[(str, array-like)]
        {label: projector}, order is kept
    check: bool, default True
        if True, raises MachineValidationError if projectors are not Hermitian, idempotent, mutually orthogonal
        and complete
    tol: float or None
        validation tolerance, default CONF.validation_tol
    """

    def __init__(self, projectors, check=True, tol=None):
        items = projectors.items() if isinstance(projectors, dict) else projectors
        self._projectors = collections.OrderedDict()
        for label, p in items:
            p = as_matrix(p)
            p.setflags(write=False)
            self._projectors[label] = p
        if len(self._projectors) == 0:
            raise ValueError("a projector set needs at least one projector")
        shapes = {p.shape for p in self._projectors.values()}
        if len(shapes) != 1:
            raise DimensionMismatchError(f"projectors have inconsistent shapes: {shapes}")
        if check:
            self.validate(tol=tol).raise_if_failed()

    @classmethod
    def accept_reject(cls, p_acc, check=True):
        """
        Create {P_acc, P_rej = I - P_acc}.

        Parameters
        ----------
        p_acc: array-like
        check: bool, default True

        Returns
        -------
        ProjectorSet
        """
        p_acc = as_matrix(p_acc)
        return cls([(ACC, p_acc), (REJ, np.eye(p_acc.shape[0]) - p_acc)], check=check)

    @classmethod
    def from_basis_labels(cls, labels, order=(NON, ACC, REJ)):
        """
        Create diagonal projectors from the label of each basis vector.

        Parameters
        ----------
        labels: typing.Sequence[str]
            label of each computational basis vector, for example ["non", "non", "acc", "rej"]
        order: tuple of str
            projector labels, in measurement order

        Returns
        -------
        ProjectorSet
        """
        unknown = set(labels).difference(order)
        if len(unknown) > 0:
            raise ValueError(f"unknown labels: {sorted(unknown)}")
        return cls([
            (label, np.diag([1. if basis_label == label else 0. for basis_label in labels]))
            for label in order
        ])

    @property
    def labels(self):
        """
        Get labels, in measurement order.

        Returns
        -------
        tuple of str
        """
        return tuple(self._projectors)

    @property
    def dim(self):
        """
        Get dimension.

        Returns
        -------
        int
        """
        return next(iter(self._projectors.values())).shape[0]

    def __getitem__(self, label):
        """
        Get projector by label.

        Parameters
        ----------
        label: str

        Returns
        -------
        numpy.ndarray
        """
        return self._projectors[label]

    def __iter__(self):
        """
        Iterate on (label, projector).

        Returns
        -------
        typing.Iterator[(str, numpy.ndarray)]
        """
        return iter(self._projectors.items())

    def __len__(self):
        """
        Get number of projectors.

        Returns
        -------
        int
        """
        return len(self._projectors)

    def __repr__(self):
        """
        Repr.

        Returns
        -------
        str
        """
        return f"<ProjectorSet {', '.join(self.labels)} (dim={self.dim})>"

    def validate(self, tol=None):
        """
        Validate projective measurement conditions.

        Parameters
        ----------
        tol: float or None

        Returns
        -------
        qfaplus.quantum_ops.validation.ValidationReport
        """
        tol = CONF.validation_tol if tol is None else tol
        report = ValidationReport(repr(self))
        for label, p in self:
            if p.shape[0] != p.shape[1]:
                report.add_failure(f"P_{label} square", f"shape {p.shape}")
                return report
            check_projector(p, report, name=f"P_{label}", tol=tol)
        labels = self.labels
        for i, label_i in enumerate(labels):
            for label_j in labels[i+1:]:
                report.add_check(
                    f"P_{label_i} P_{label_j} orthogonal",
                    float(np.max(np.abs(self[label_i] @ self[label_j]))),
                    tol
                )
        total = sum(p for _, p in self)
        report.add_check("completeness", float(np.max(np.abs(total - np.eye(self.dim)))), tol)
        return report


def check_projector(p, report, name="P", tol=None):
    """
    Add Hermiticity and idempotence checks of a matrix to a report.

    Parameters
    ----------
    p: numpy.ndarray
    report: qfaplus.quantum_ops.validation.ValidationReport
    name: str
    tol: float or None
    """
    tol = CONF.validation_tol if tol is None else tol
    report.add_check(f"{name} hermitian", hermitian_deviation(p), tol)
    report.add_check(f"{name} idempotent", float(np.max(np.abs(p @ p - p))), tol)


def measure(rho, projectors):
    """
    Perform a projective measurement on an (unnormalized) state.

    Parameters
    ----------
    rho: numpy.ndarray
    projectors: ProjectorSet

    Returns
    -------
    list of (float, numpy.ndarray)
        for each projector P_l (in measurement order): probability Tr(P_l rho) and unnormalized post-measurement
        state P_l rho P_l
    """
    if rho.shape != (projectors.dim, projectors.dim):
        raise DimensionMismatchError(
            f"projectors of dimension {projectors.dim} can't measure matrix of shape {rho.shape}")
    return [(trace(p @ rho).real, p @ rho @ p) for _, p in projectors]
