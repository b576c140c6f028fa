"""Classical-side machines: bilinear machines, probabilistic automata and deterministic finite automata."""

import collections

import numpy as np

from ..conf import CONF
from ..exceptions import DimensionMismatchError
from ..linalg import as_matrix
from ..quantum_ops.validation import ValidationReport
from .alphabet import CENT, DOLLAR, END_MARKERS, check_word
from .machine import Machine, clamp_probability, order_by_symbols


def _row(a, dtype):
    return as_matrix(np.asarray(a, dtype=dtype).reshape(1, -1), dtype=dtype)


def _column(a, dtype):
    return as_matrix(np.asarray(a, dtype=dtype).reshape(-1, 1), dtype=dtype)


def _bilinear_value(pi, mats, eta, word):
    # shared arithmetic path of bilinear machines and probabilistic automata
    vector = pi
    for symbol in word:
        vector = vector @ mats[symbol]
    return (vector @ eta)[0, 0]


class BilinearMachine(Machine):
    """
    Bilinear machine: value(x_1...x_m) = pi A(x_1)...A(x_m) eta, with unconstrained complex data.

    Parameters
    ----------
    pi: array-like
        1 x n row vector (a flat sequence is accepted)
    mats: dict
        {symbol: n x n matrix}; symbols may include end-markers
    eta: array-like
        n x 1 column vector (a flat sequence is accepted)
    name: str or None
    alphabet: qfaplus.automata.alphabet.Alphabet or typing.Iterable[str] or None
        input alphabet, which sets the matrices order; default: non end-marker symbols of mats, in mats order

    Notes
    -----
    Arrays keep their dtype (real data stays real), so that embedded probabilistic automata follow exactly the same
    arithmetic.
    """

    kind = "blm"

    def __init__(self, pi, mats, eta, name=None, alphabet=None):
        if alphabet is None:
            alphabet = [s for s in mats if s not in END_MARKERS]
        super().__init__(alphabet, name=name)
        self.pi = _row(pi, None)
        self.eta = _column(eta, None)
        self.mats = collections.OrderedDict(
            (symbol, as_matrix(m, dtype=None)) for symbol, m in order_by_symbols(mats, self.alphabet).items())
        for array in [self.pi, self.eta] + list(self.mats.values()):
            array.setflags(write=False)
        report = self.validate()
        if not report.passed:
            raise DimensionMismatchError(str(report))

    @property
    def states_nb(self):
        """
        Get number of states.

        Returns
        -------
        int
        """
        return self.pi.shape[1]

    @property
    def has_end_markers(self):
        """
        Check if machine has matrices for both end-markers.

        Returns
        -------
        bool
        """
        return all(marker in self.mats for marker in END_MARKERS)

    @property
    def symbols(self):
        """
        Get all symbols the machine has a matrix for.

        Returns
        -------
        tuple of str
        """
        return tuple(self.mats)

    def validate(self, tol=None):
        """
        Validate dimensions.

        Parameters
        ----------
        tol: float or None
            not used (no numerical constraint)

        Returns
        -------
        qfaplus.quantum_ops.validation.ValidationReport
        """
        report = ValidationReport(repr(self))
        n = self.pi.shape[1]
        if self.eta.shape != (n, 1):
            report.add_failure("eta dimension", f"expected {(n, 1)}, got {self.eta.shape}")
        for symbol, m in self.mats.items():
            if m.shape != (n, n):
                report.add_failure(f"A_{symbol} dimension", f"expected {(n, n)}, got {m.shape}")
        missing = [s for s in self.alphabet if s not in self.mats]
        extra = [s for s in self.mats if s not in self.alphabet and s not in END_MARKERS]
        if len(missing) > 0 or len(extra) > 0:
            report.add_failure("matrices", f"missing symbols {missing}, unknown symbols {extra}")
        if len([m for m in END_MARKERS if m in self.mats]) == 1:
            report.add_failure("end-markers", "matrices must be given for both end-markers or none")
        return report

    def value(self, word):
        """
        Get value of a word, read as given.

        Parameters
        ----------
        word: str or typing.Sequence[str]
            may contain end-markers, which are not added

        Returns
        -------
        complex
        """
        return complex(_bilinear_value(self.pi, self.mats, self.eta, check_word(word, self.mats)))

    # --------------------------------------------- dev api ------------------------------------------------------------
    def _dev_start(self):
        return self.pi @ self.mats[CENT] if self.has_end_markers else self.pi

    def _dev_advance(self, state, symbol):
        return state @ self.mats[symbol]

    def _dev_finish(self, state):
        if self.has_end_markers:
            state = state @ self.mats[DOLLAR]
        return complex((state @ self.eta)[0, 0])


def blm_value(b, word):
    """
    Get value pi A(x_1)...A(x_m) eta of a word.

    Parameters
    ----------
    b: BilinearMachine
    word: str or typing.Sequence[str]

    Returns
    -------
    complex
    """
    return b.value(word)


class ProbabilisticAutomaton(Machine):
    """
    Probabilistic automaton: P(x_1...x_m) = pi A(x_1)...A(x_m) eta.

    Parameters
    ----------
    alphabet: qfaplus.automata.alphabet.Alphabet or typing.Iterable[str]
    pi: array-like
        stochastic row vector
    mats: dict
        {symbol: row-stochastic matrix}
    eta: array-like
        0/1 column vector (accepting states indicator)
    check: bool, default True
    tol: float or None
    name: str or None
    """

    kind = "pa"

    def __init__(self, alphabet, pi, mats, eta, check=True, tol=None, name=None):
        super().__init__(alphabet, name=name)
        self.pi = _row(pi, float)
        self.eta = _column(eta, float)
        self.mats = collections.OrderedDict(
            (symbol, as_matrix(m, dtype=float)) for symbol, m in order_by_symbols(mats, self.alphabet).items())
        for array in [self.pi, self.eta] + list(self.mats.values()):
            array.setflags(write=False)
        if check:
            self.validate(tol=tol).raise_if_failed()

    @property
    def states_nb(self):
        """
        Get number of states.

        Returns
        -------
        int
        """
        return self.pi.shape[1]

    def validate(self, tol=None):
        """
        Validate stochastic data.

        Parameters
        ----------
        tol: float or None

        Returns
        -------
        qfaplus.quantum_ops.validation.ValidationReport
        """
        tol = CONF.validation_tol if tol is None else tol
        report = ValidationReport(repr(self))
        n = self.states_nb
        report.add_check("pi non-negative", max(0., -float(np.min(self.pi))), tol)
        report.add_check("pi sum", abs(float(np.sum(self.pi)) - 1), tol)
        if self.eta.shape != (n, 1):
            report.add_failure("eta dimension", f"expected {(n, 1)}, got {self.eta.shape}")
        elif not np.all(np.isin(self.eta, (0., 1.))):
            report.add_failure("eta values", "eta entries must be 0 or 1")
        missing = [s for s in self.alphabet if s not in self.mats]
        extra = [s for s in self.mats if s not in self.alphabet]
        if len(missing) > 0 or len(extra) > 0:
            report.add_failure("matrices", f"missing symbols {missing}, unknown symbols {extra}")
        for symbol, m in self.mats.items():
            if m.shape != (n, n):
                report.add_failure(f"A_{symbol} dimension", f"expected {(n, n)}, got {m.shape}")
                continue
            report.add_check(f"A_{symbol} non-negative", max(0., -float(np.min(m))), tol)
            report.add_check(f"A_{symbol} row sums", float(np.max(np.abs(np.sum(m, axis=1) - 1))), tol)
        return report

    def get_weight(self, word):
        """
        Get the raw (unclamped) value pi A(x_1)...A(x_m) eta.

        Parameters
        ----------
        word: str or typing.Sequence[str]

        Returns
        -------
        float
        """
        return float(_bilinear_value(self.pi, self.mats, self.eta, check_word(word, self.alphabet)))

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
        return clamp_probability(self.get_weight(word), "acceptance probability")

    def to_blm(self):
        """
        Get the same automaton as a bilinear machine (data is shared, not converted).

        Returns
        -------
        BilinearMachine
        """
        return BilinearMachine(self.pi, self.mats, self.eta, name=self.name, alphabet=self.alphabet)

    # --------------------------------------------- dev api ------------------------------------------------------------
    def _dev_start(self):
        return self.pi

    def _dev_advance(self, state, symbol):
        return state @ self.mats[symbol]

    def _dev_finish(self, state):
        return clamp_probability((state @ self.eta)[0, 0], "acceptance probability")


def pa_accept_prob(p, word):
    """
    Get acceptance probability of a word by a probabilistic automaton.

    Parameters
    ----------
    p: ProbabilisticAutomaton
    word: str or typing.Sequence[str]

    Returns
    -------
    float
    """
    return p.accept_prob(word)


class DFA(Machine):
    """
    Deterministic finite automaton with states 0..states-1.

    Parameters
    ----------
    alphabet: qfaplus.automata.alphabet.Alphabet or typing.Iterable[str]
    states: int
        number of states
    start: int
    delta: dict
        {symbol: sequence giving the successor of each state}
    accepting: typing.Iterable[int]
    check: bool, default True
    name: str or None
    """

    kind = "dfa"

    def __init__(self, alphabet, states, start, delta, accepting, check=True, name=None):
        super().__init__(alphabet, name=name)
        self.states = int(states)
        self.start = int(start)
        self.delta = collections.OrderedDict(
            (symbol, tuple(int(q) for q in row)) for symbol, row in order_by_symbols(delta, self.alphabet).items())
        self.accepting = frozenset(int(q) for q in accepting)
        if check:
            self.validate().raise_if_failed()

    def validate(self, tol=None):
        """
        Validate transition table: total, states in range.

        Parameters
        ----------
        tol: float or None
            not used

        Returns
        -------
        qfaplus.quantum_ops.validation.ValidationReport
        """
        report = ValidationReport(repr(self))
        if self.states < 1:
            report.add_failure("states", "a DFA needs at least one state")
            return report
        if not 0 <= self.start < self.states:
            report.add_failure("start", f"start state {self.start} out of range")
        if not all(0 <= q < self.states for q in self.accepting):
            report.add_failure("accepting", "accepting states out of range")
        for symbol in self.alphabet:
            row = self.delta.get(symbol)
            if row is None:
                report.add_failure(f"delta {symbol}", "missing transitions")
            elif len(row) != self.states or not all(0 <= q < self.states for q in row):
                report.add_failure(f"delta {symbol}", "transition row must give a valid successor for each state")
        extra = [s for s in self.delta if s not in self.alphabet]
        if len(extra) > 0:
            report.add_failure("delta", f"transitions given for unknown symbols {extra}")
        return report

    def run(self, word):
        """
        Get state reached after reading a word.

        Parameters
        ----------
        word: str or typing.Sequence[str]

        Returns
        -------
        int
        """
        return self._run(word)

    def accepts(self, word):
        """
        Check if a word is accepted.

        Parameters
        ----------
        word: str or typing.Sequence[str]

        Returns
        -------
        bool
        """
        return self._run(word) in self.accepting

    # --------------------------------------------- dev api ------------------------------------------------------------
    def _dev_start(self):
        return self.start

    def _dev_advance(self, state, symbol):
        return self.delta[symbol][state]

    def _dev_finish(self, state):
        return 1. if state in self.accepting else 0.


def dfa_accepts(d, word):
    """
    Check if a DFA accepts a word.

    Parameters
    ----------
    d: DFA
    word: str or typing.Sequence[str]

    Returns
    -------
    bool
    """
    return d.accepts(word)
