"""Measure-once linear machine module."""

from ..linalg import as_matrix, trace
from ..quantum_ops.density import DensityOperator, check_density_matrix
from ..quantum_ops.measurement import check_projector
from ..quantum_ops.operation import apply
from ..quantum_ops.validation import ValidationReport
from .alphabet import CENT, DOLLAR, END_MARKERS, check_word
from .machine import Machine, prepare_operations, check_operations


class MOLM(Machine):
    """
    Measure-once linear machine: a measure-once machine whose symbols induce general linear super-operators.

    f(x_1...x_m) = Tr(Theta_xm(...Theta_x1(rho0)) P_acc). Values are not clamped: super-operators need not be
    trace-preserving.

    Parameters
    ----------
    alphabet: qfaplus.automata.alphabet.Alphabet or typing.Iterable[str]
        input alphabet, without end-markers
    rho0: array-like or qfaplus.quantum_ops.density.DensityOperator
    ops: dict
        {symbol: SuperOperator or list of Kraus operators}, for every alphabet symbol and optionally both end-markers
    p_acc: array-like
    check: bool, default True
    tol: float or None
    name: str or None

    Notes
    -----
    molm_accept_prob takes words as given (end-markers included by the caller), while get_value (used by comparison
    tools) wraps words over the input alphabet between end-markers when the machine has end-marker operations.
    """

    kind = "molm"

    def __init__(self, alphabet, rho0, ops, p_acc, check=True, tol=None, name=None):
        super().__init__(alphabet, name=name)
        self.rho0 = DensityOperator(rho0, check=False)
        self.ops = prepare_operations(ops, trace_preserving=False, symbols=self.alphabet)
        self.p_acc = as_matrix(p_acc)
        self.p_acc.setflags(write=False)
        if check:
            self.validate(tol=tol).raise_if_failed()

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
    def has_end_markers(self):
        """
        Check if machine has operations for both end-markers.

        Returns
        -------
        bool
        """
        return all(marker in self.ops for marker in END_MARKERS)

    @property
    def symbols(self):
        """
        Get all symbols the machine has an operation for (alphabet first, then end-markers).

        Returns
        -------
        tuple of str
        """
        markers = END_MARKERS if self.has_end_markers else ()
        return self.alphabet.symbols + markers

    def validate(self, tol=None):
        """
        Validate machine: density operator, consistent dimensions, accepting projector.

        Parameters
        ----------
        tol: float or None

        Returns
        -------
        qfaplus.quantum_ops.validation.ValidationReport
        """
        report = ValidationReport(repr(self))
        check_density_matrix(self.rho0.matrix, report, name="rho0", tol=tol)
        markers = [m for m in END_MARKERS if m in self.ops]
        if len(markers) == 1:
            report.add_failure("end-markers", "operations must be given for both end-markers or none")
        check_operations(self.ops, self.alphabet.symbols + tuple(markers), self.dim, report, tol=tol)
        if self.p_acc.shape != (self.dim, self.dim):
            report.add_failure("P_acc dimension", f"expected {(self.dim, self.dim)}, got {self.p_acc.shape}")
        else:
            check_projector(self.p_acc, report, name="P_acc", tol=tol)
        return report

    def get_state(self, word):
        """
        Get state after having read a word (end-markers are not added).

        Parameters
        ----------
        word: str or typing.Sequence[str]

        Returns
        -------
        numpy.ndarray
        """
        state = self.rho0.matrix
        for symbol in check_word(word, self.symbols):
            state = apply(self.ops[symbol], state)
        return state

    def accept_prob(self, word):
        """
        Get acceptance value of a word, read as given.

        Parameters
        ----------
        word: str or typing.Sequence[str]
            may contain end-markers, which are not added

        Returns
        -------
        float
        """
        return trace(self.get_state(word) @ self.p_acc).real

    # --------------------------------------------- dev api ------------------------------------------------------------
    def _dev_start(self):
        if self.has_end_markers:
            return apply(self.ops[CENT], self.rho0.matrix)
        return self.rho0.matrix

    def _dev_advance(self, state, symbol):
        return apply(self.ops[symbol], state)

    def _dev_finish(self, state):
        if self.has_end_markers:
            state = apply(self.ops[DOLLAR], state)
        return trace(state @ self.p_acc).real


def molm_accept_prob(m, word):
    """
    Get acceptance value of a word by a measure-once linear machine.

    Parameters
    ----------
    m: MOLM
    word: str or typing.Sequence[str]
        read as given (end-markers must be included by the caller)

    Returns
    -------
    float
    """
    return m.accept_prob(word)
