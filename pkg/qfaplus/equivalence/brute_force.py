"""Brute-force k-equivalence."""

import logging

from ..conf import CONF
from ..automata.machine import check_alphabets, iter_word_values
from .verdict import EquivalenceVerdict

logger = logging.getLogger(__name__)


def k_equivalent_bruteforce(a, b, k, tol=None):
    """
    Compare acceptance values of two machines on every word of length <= k.

    Parameters
    ----------
    a: qfaplus.automata.machine.Machine
    b: qfaplus.automata.machine.Machine
    k: int
    tol: float or None
        default CONF.equivalence_tol

    Returns
    -------
    qfaplus.equivalence.verdict.EquivalenceVerdict
        the counterexample is the first violating word in length-then-lexicographic order

    Raises
    ------
    AlphabetMismatchError
    EnumerationGuardError
        if there are more than CONF.enumeration_limit words of length <= k
    """
    tol = CONF.equivalence_tol if tol is None else tol
    check_alphabets(a, b)
    explored = 0
    for (word, a_value), (_, b_value) in zip(iter_word_values(a, k), iter_word_values(b, k)):
        explored += 1
        gap = abs(a_value - b_value)
        if gap > tol:
            logger.info(f"machines differ on {word!r} (gap {gap:.6g}, {explored} words explored)")
            return EquivalenceVerdict(
                False, counterexample=word, value_gap=gap, words_explored=explored, tolerance=tol, method="brute")
    logger.info(f"machines agree on all {explored} words of length <= {k}")
    return EquivalenceVerdict(True, words_explored=explored, tolerance=tol, method="brute")
