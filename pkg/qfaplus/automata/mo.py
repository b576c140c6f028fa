"""Measure-once one-way general quantum finite automaton module."""

import collections

import numpy as np

from ..linalg import as_matrix, trace
from ..quantum_ops.density import DensityOperator, check_density_matrix
from ..quantum_ops.measurement import ProjectorSet, check_projector
from ..quantum_ops.operation import QuantumOperation, apply
from ..quantum_ops.validation import ValidationReport
from .machine import Machine, clamp_probability, prepare_operations, check_operations


class MO1gQFA(Machine):
    """
    Measure-once one-way general quantum finite automaton.

    Each symbol induces a trace-preserving quantum operation; the accepting projector is measured once, after the
    whole word was read: f(s_1...s_n) = Tr(P_acc E_sn(...E_s1(rho0))).

    Parameters
    ----------
    alphabet: qfaplus.automata.alphabet.Alphabet or typing.Iterable[str]
    rho0: array-like or qfaplus.quantum_ops.density.DensityOperator
    ops: dict
        {symbol: QuantumOperation or list of Kraus operators}
    p_acc: array-like
        accepting projector
    check: bool, default True
        if True, raises MachineValidationError on an invalid machine
    tol: float or None
        validation tolerance, default CONF.validation_tol
    name: str or None
    """

    kind = "mo1gqfa"

    def __init__(self, alphabet, rho0, ops, p_acc, check=True, tol=None, name=None):
        super().__init__(alphabet, name=name)
        self.rho0 = DensityOperator(rho0, check=False)
        self.ops = prepare_operations(ops, symbols=self.alphabet)
        self.p_acc = as_matrix(p_acc)
        self.p_acc.setflags(write=False)
        if check:
            self.validate(tol=tol).raise_if_failed()

    @classmethod
    def from_unitaries(cls, alphabet, rho0, unitaries, p_acc, check=True, name=None):
        """
        Create a measure-once 1QFA: every symbol induces a unitary transformation.

        Parameters
        ----------
        alphabet: typing.Iterable[str]
        rho0: array-like
        unitaries: dict
            {symbol: unitary matrix}
        p_acc: array-like
        check: bool, default True
        name: str or None

        Returns
        -------
        MO1gQFA
        """
        ops = collections.OrderedDict(
            (symbol, QuantumOperation.from_unitary(u, check=False)) for symbol, u in unitaries.items())
        return cls(alphabet, rho0, ops, p_acc, check=check, name=name)

    @property
    def dim(self):
        """
        Get Hilbert space dimension.

        Returns
        -------
        int
        """
        return self.rho0.dim

    @property
    def p_rej(self):
        """
        Get rejecting projector I - P_acc.

        Returns
        -------
        numpy.ndarray
        """
        return np.eye(self.dim) - self.p_acc

    @property
    def projectors(self):
        """
        Get final measurement {P_acc, P_rej}.

        Returns
        -------
        qfaplus.quantum_ops.measurement.ProjectorSet
        """
        return ProjectorSet.accept_reject(self.p_acc, check=False)

    def validate(self, tol=None):
        """
        Validate machine: density operator, trace-preserving operations for every symbol, accepting projector.

        Parameters
        ----------
        tol: float or None

        Returns
        -------
        qfaplus.quantum_ops.validation.ValidationReport
        """
        report = ValidationReport(repr(self))
        check_density_matrix(self.rho0.matrix, report, name="rho0", tol=tol)
        check_operations(self.ops, self.alphabet.symbols, self.dim, report, tol=tol)
        for symbol, op in self.ops.items():
            if not op.trace_preserving:
                report.add_failure(f"E_{symbol} trace-preserving", "operation is not flagged trace-preserving")
        if self.p_acc.shape != (self.dim, self.dim):
            report.add_failure("P_acc dimension", f"expected {(self.dim, self.dim)}, got {self.p_acc.shape}")
        else:
            check_projector(self.p_acc, report, name="P_acc", tol=tol)
        return report

    def get_state(self, word):
        """
        Get state after having read a word (before the final measurement).

        Parameters
        ----------
        word: str or typing.Sequence[str]

        Returns
        -------
        numpy.ndarray
        """
        return self._run(word)

    def accept_prob(self, word):
        """
        Get acceptance probability of a word.

        Parameters
        ----------
        word: str or typing.Sequence[str]

        Returns
        -------
        float
        """
        return self.get_value(word)

    # --------------------------------------------- dev api ------------------------------------------------------------
    def _dev_start(self):
        return self.rho0.matrix

    def _dev_advance(self, state, symbol):
        return apply(self.ops[symbol], state)

    def _dev_finish(self, state):
        return clamp_probability(trace(self.p_acc @ state), "acceptance probability")

    def _dev_outcomes(self, state):
        accept = self._dev_finish(state)
        return collections.OrderedDict((("accept", accept), ("reject", 1 - accept)))


def mo_accept_prob(m, word):
    """
    Get acceptance probability of a word by a measure-once machine.

    Parameters
    ----------
    m: MO1gQFA
    word: str or typing.Sequence[str]

    Returns
    -------
    float
    """
    return m.accept_prob(word)
