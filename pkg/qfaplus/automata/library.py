"""
Example machines.

Footnote machine: a measure-many 1QFA recognizing a{a,b}* with bounded error, on the basis (q0, q1, q_acc, q_rej).
Only the transitions that matter are described; the other unitary columns are completed by orthonormal extension.
It accepts the empty word with probability 1 (U_$ sends q0 to q_acc), although the empty word is not in a{a,b}*.
"""

import collections

import numpy as np

from ..linalg import complete_unitary
from ..quantum_ops.density import DensityOperator
from ..quantum_ops.measurement import ProjectorSet
from .alphabet import CENT, DOLLAR
from .classical import DFA, ProbabilisticAutomaton
from .mm import MM1gQFA

Q0, Q1, Q_ACC, Q_REJ = 0, 1, 2, 3
_BASIS_LABELS = ("non", "non", "acc", "rej")


def _basis(index, dim=4):
    vector = np.zeros(dim, dtype=complex)
    vector[index] = 1
    return vector


def _superposition(i, j, sign=1):
    return (_basis(i) + sign * _basis(j)) / np.sqrt(2)


def _footnote_machine(b_columns, name):
    unitaries = collections.OrderedDict((
        ("a", complete_unitary({Q0: _superposition(Q1, Q_ACC), Q1: _superposition(Q1, Q_ACC, -1)}, 4)),
        ("b", complete_unitary(b_columns, 4)),
        (CENT, np.eye(4)),
        (DOLLAR, complete_unitary({Q0: _basis(Q_ACC), Q1: _basis(Q_REJ)}, 4))
    ))
    return MM1gQFA.from_unitaries(
        ("a", "b"),
        DensityOperator.from_basis_state(4, Q0).matrix,
        unitaries,
        ProjectorSet.from_basis_labels(_BASIS_LABELS),
        name=name
    )


def footnote_mm():
    """
    Measure-many 1QFA for a{a,b}*.

    Acceptance: 1/2 on "a", 3/4 on "aa", 0 on every word starting with b, 1 on the empty word.

    Returns
    -------
    qfaplus.automata.mm.MM1gQFA
    """
    return _footnote_machine({Q0: _basis(Q_REJ), Q1: _superposition(Q1, Q_ACC)}, "footnote2")


def footnote_b_accepting_mm():
    """
    Variant of the footnote machine where b sends q0 to q_acc.

    U_b q1 = (q1 + q_rej) / sqrt(2) here, so that U_b stays unitary. Differs from footnote_mm on "b" (1 instead of 0).

    Returns
    -------
    qfaplus.automata.mm.MM1gQFA
    """
    return _footnote_machine({Q0: _basis(Q_ACC), Q1: _superposition(Q1, Q_REJ)}, "footnote2-b-accepting")


def ab_star_dfa():
    """
    DFA for a{a,b}*: states 0 (start), 1 (accepting), 2 (sink).

    Returns
    -------
    qfaplus.automata.classical.DFA
    """
    return DFA(
        ("a", "b"),
        3,
        0,
        collections.OrderedDict((("a", (1, 1, 2)), ("b", (2, 1, 2)))),
        (1,),
        name="ab-star-dfa"
    )


def swap_pa():
    """
    Deterministic 2-state PA: a swaps the states, pi = (1, 0), eta = (0, 1).

    Returns
    -------
    qfaplus.automata.classical.ProbabilisticAutomaton
    """
    return ProbabilisticAutomaton(("a",), [1, 0], {"a": [[0, 1], [1, 0]]}, [0, 1], name="swap-pa")


def uniform_pa():
    """
    2-state PA with uniform rows, pi = (1, 0), eta = (0, 1).

    Returns
    -------
    qfaplus.automata.classical.ProbabilisticAutomaton
    """
    return ProbabilisticAutomaton(("a",), [1, 0], {"a": [[.5, .5], [.5, .5]]}, [0, 1], name="uniform-pa")
