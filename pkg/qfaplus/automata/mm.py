"""Measure-many one-way general quantum finite automaton module."""

import collections

import numpy as np

from ..conf import CONF
from ..linalg import min_eigenvalue, trace
from ..quantum_ops.density import DensityOperator, check_density_matrix
from ..quantum_ops.measurement import ProjectorSet, measure, NON, ACC, REJ
from ..quantum_ops.operation import QuantumOperation, apply
from ..quantum_ops.validation import ValidationReport
from .alphabet import CENT, DOLLAR, END_MARKERS, check_word
from .machine import Machine, clamp_probability, prepare_operations, check_operations

MEASUREMENT_LABELS = (NON, ACC, REJ)


class TotalState:
    """
    Total state of a measure-many run: (rho, p_acc, p_rej).

    rho is the unnormalized state of the non-halting part, p_acc and p_rej are the cumulative halting probabilities.

    Parameters
    ----------
    rho: numpy.ndarray
    p_acc: float
    p_rej: float
    """

    def __init__(self, rho, p_acc=0., p_rej=0.):
        self.rho = rho
        self.p_acc = float(p_acc)
        self.p_rej = float(p_rej)

    @property
    def p_continue(self):
        """
        Get probability of not having halted: Tr(rho).

        Returns
        -------
        float
        """
        return trace(self.rho).real

    def validate(self, tol=None):
        """
        Validate total state: non-negative probabilities, total probability 1, positive rho.

        Parameters
        ----------
        tol: float or None

        Returns
        -------
        qfaplus.quantum_ops.validation.ValidationReport
        """
        tol = CONF.validation_tol if tol is None else tol
        report = ValidationReport(repr(self))
        report.add_check("p_acc non-negative", max(0., -self.p_acc), CONF.psd_tol)
        report.add_check("p_rej non-negative", max(0., -self.p_rej), CONF.psd_tol)
        report.add_check("rho positive", max(0., -min_eigenvalue(self.rho)), CONF.psd_tol)
        report.add_check("total probability", abs(self.p_acc + self.p_rej + self.p_continue - 1), tol)
        return report

    def __repr__(self):
        """
        Repr.

        Returns
        -------
        str
        """
        return f"<TotalState p_acc={self.p_acc:.6g}, p_rej={self.p_rej:.6g}, p_continue={self.p_continue:.6g}>"


class MM1gQFA(Machine):
    """
    Measure-many one-way general quantum finite automaton.

    The machine reads the end-marked word: after each symbol's operation, the measurement {P_non, P_acc, P_rej} is
    performed; the run halts (accepting or rejecting) or continues with the non-halting part of the state. The
    acceptance probability accumulates the accepting probabilities of all steps.

    Parameters
    ----------
    alphabet: qfaplus.automata.alphabet.Alphabet or typing.Iterable[str]
        input alphabet, without end-markers
    rho0: array-like or qfaplus.quantum_ops.density.DensityOperator
        must be supported by the non-halting subspace
    ops: dict
        {symbol: QuantumOperation or list of Kraus operators}, for every symbol and both end-markers
    projectors: qfaplus.quantum_ops.measurement.ProjectorSet or dict
        {"non": P_non, "acc": P_acc, "rej": P_rej}
    check: bool, default True
    tol: float or None
    name: str or None
    """

    kind = "mm1gqfa"

    def __init__(self, alphabet, rho0, ops, projectors, check=True, tol=None, name=None):
        super().__init__(alphabet, name=name)
        self.rho0 = DensityOperator(rho0, check=False)
        self.ops = prepare_operations(ops, symbols=self.alphabet)
        if not isinstance(projectors, ProjectorSet):
            projectors = ProjectorSet(projectors, check=False)
        self.projectors = projectors
        if check:
            self.validate(tol=tol).raise_if_failed()

    @classmethod
    def from_unitaries(cls, alphabet, rho0, unitaries, projectors, check=True, name=None):
        """
        Create a measure-many 1QFA: every symbol induces a unitary transformation.

        Parameters
        ----------
        alphabet: typing.Iterable[str]
        rho0: array-like
        unitaries: dict
            {symbol: unitary matrix}; a missing end-marker induces the identity
        projectors: qfaplus.quantum_ops.measurement.ProjectorSet or dict
        check: bool, default True
        name: str or None

        Returns
        -------
        MM1gQFA
        """
        unitaries = collections.OrderedDict(unitaries)
        dim = DensityOperator(rho0, check=False).dim
        for marker in END_MARKERS:
            unitaries.setdefault(marker, np.eye(dim))
        ops = collections.OrderedDict(
            (symbol, QuantumOperation.from_unitary(u, check=False)) for symbol, u in unitaries.items())
        return cls(alphabet, rho0, ops, projectors, check=check, name=name)

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
    def p_non(self):
        """
        Get non-halting projector.

        Returns
        -------
        numpy.ndarray
        """
        return self.projectors[NON]

    @property
    def p_acc(self):
        """
        Get accepting projector.

        Returns
        -------
        numpy.ndarray
        """
        return self.projectors[ACC]

    @property
    def p_rej(self):
        """
        Get rejecting projector.

        Returns
        -------
        numpy.ndarray
        """
        return self.projectors[REJ]

    def validate(self, tol=None):
        """
        Validate machine.

        Checks: density operator, trace-preserving operations for every symbol and end-marker, projective
        measurement {P_non, P_acc, P_rej}, initial state supported by the non-halting subspace.

        Parameters
        ----------
        tol: float or None

        Returns
        -------
        qfaplus.quantum_ops.validation.ValidationReport
        """
        tol = CONF.validation_tol if tol is None else tol
        report = ValidationReport(repr(self))
        check_density_matrix(self.rho0.matrix, report, name="rho0", tol=tol)
        check_operations(self.ops, self.alphabet.symbols + END_MARKERS, self.dim, report, tol=tol)
        for symbol, op in self.ops.items():
            if not op.trace_preserving:
                report.add_failure(f"E_{symbol} trace-preserving", "operation is not flagged trace-preserving")
        if set(self.projectors.labels) != set(MEASUREMENT_LABELS):
            report.add_failure("measurement labels", f"expected {MEASUREMENT_LABELS}, got {self.projectors.labels}")
            return report
        if self.projectors.dim != self.dim:
            report.add_failure("measurement dimension", f"expected {self.dim}, got {self.projectors.dim}")
            return report
        report.extend(self.projectors.validate(tol=tol), prefix="measurement ")
        rho0 = self.rho0.matrix
        report.add_check("rho0 support", float(np.max(np.abs(self.p_non @ rho0 @ self.p_non - rho0))), tol)
        return report

    def step(self, total_state, symbol):
        """
        Apply the evolution operator T_symbol to a total state.

        rho <- P_non E(rho) P_non, p_acc += Tr(P_acc E(rho)), p_rej += Tr(P_rej E(rho)).

        Parameters
        ----------
        total_state: TotalState
        symbol: str
            alphabet symbol or end-marker

        Returns
        -------
        TotalState
        """
        evolved = apply(self.ops[symbol], total_state.rho)
        results = dict(zip(self.projectors.labels, measure(evolved, self.projectors)))
        return TotalState(
            results[NON][1],
            total_state.p_acc + results[ACC][0],
            total_state.p_rej + results[REJ][0]
        )

    def iter_total_states(self, word):
        """
        Iterate on the total states of a run: initial, after the left end-marker, after each symbol, after the right
        end-marker.

        Parameters
        ----------
        word: str or typing.Sequence[str]
            word over the input alphabet (without end-markers)

        Returns
        -------
        typing.Iterator[TotalState]
        """
        word = check_word(word, self.alphabet)
        total_state = TotalState(self.rho0.matrix)
        yield total_state
        for symbol in (CENT,) + word + (DOLLAR,):
            total_state = self.step(total_state, symbol)
            yield total_state

    def accept_prob(self, word):
        """
        Get accepting, rejecting and continuing probabilities of a word (end-markers are added).

        Parameters
        ----------
        word: str or typing.Sequence[str]

        Returns
        -------
        float, float, float
            accept, reject, continue
        """
        return tuple(self.get_outcomes(word).values())

    # --------------------------------------------- dev api ------------------------------------------------------------
    def _dev_start(self):
        return self.step(TotalState(self.rho0.matrix), CENT)

    def _dev_advance(self, state, symbol):
        return self.step(state, symbol)

    def _dev_finish(self, state):
        return clamp_probability(self.step(state, DOLLAR).p_acc, "acceptance probability")

    def _dev_outcomes(self, state):
        final = self.step(state, DOLLAR)
        return collections.OrderedDict((
            ("accept", clamp_probability(final.p_acc, "acceptance probability")),
            ("reject", clamp_probability(final.p_rej, "rejection probability")),
            ("continue", clamp_probability(final.p_continue, "continuation probability"))
        ))


def mm_accept_prob(m, word):
    """
    Get (accept, reject, continue) probabilities of a word by a measure-many machine.

    Parameters
    ----------
    m: MM1gQFA
    word: str or typing.Sequence[str]
        word without end-markers

    Returns
    -------
    float, float, float
    """
    return m.accept_prob(word)
