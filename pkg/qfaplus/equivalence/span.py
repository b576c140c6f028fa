"""Reachable-state span closure."""

import collections
import logging

from ..conf import CONF
from ..linalg import span_insert

logger = logging.getLogger(__name__)


class SpanClosure:
    """
    Breadth-first closure of the states reached by a machine.

    Starting from the initial state, each symbol's operation is applied to every generator, and the result is kept
    as a new generator if it is linearly independent from the span built so far. Generators come in
    length-then-lexicographic order of their generating words; the closure stops when a whole frontier adds nothing.

    Works on any machine whose dev api states are matrices or row vectors (measure-once machines, linear machines,
    bilinear machines).

    Parameters
    ----------
    machine: qfaplus.automata.machine.Machine
    tol: float or None
        span_insert tolerance, default CONF.span_tol
    max_len: int or None
        generating words are not extended beyond this length

    Notes
    -----
    Iterating yields (word, state) for every generator (raw reached state, not the orthonormalized basis element).
    Iteration may be stopped early.
    """

    def __init__(self, machine, tol=None, max_len=None):
        self._machine = machine
        self._tol = CONF.span_tol if tol is None else tol
        self._max_len = max_len
        self.basis = []
        self.words = []
        self.words_explored = 0

    def _dev_insert(self, word, state):
        self.words_explored += 1
        inserted, self.basis = span_insert(self.basis, state, tol=self._tol)
        if inserted:
            self.words.append(word)
        return inserted

    def __iter__(self):
        """
        Iterate on generators.

        Returns
        -------
        typing.Iterator[(tuple of str, numpy.ndarray)]
        """
        machine = self._machine
        start = machine._dev_start()
        queue = collections.deque()
        if self._dev_insert((), start):
            queue.append(((), start))
            yield (), start
        while len(queue) > 0:
            word, state = queue.popleft()
            if self._max_len is not None and len(word) >= self._max_len:
                continue
            for symbol in machine.alphabet:
                new_word, new_state = word + (symbol,), machine._dev_advance(state, symbol)
                if self._dev_insert(new_word, new_state):
                    logger.debug(f"span closure: basis size {len(self.basis)} (word {new_word!r})")
                    queue.append((new_word, new_state))
                    yield new_word, new_state

    def run(self):
        """
        Run the whole closure.

        Returns
        -------
        SpanClosure
            self
        """
        for _ in self:
            pass
        return self


def reachable_basis(machine, tol=None):
    """
    Get an orthonormal basis of the span of all reachable states.

    Parameters
    ----------
    machine: qfaplus.automata.mo.MO1gQFA or qfaplus.automata.molm.MOLM
        for a linear machine with end-marker operations, the closure starts from Theta_¢(rho0)
    tol: float or None

    Returns
    -------
    list of numpy.ndarray, list of tuple of str
        basis (at most dim**2 elements) and generating word of each element
    """
    closure = SpanClosure(machine, tol=tol).run()
    return closure.basis, closure.words
