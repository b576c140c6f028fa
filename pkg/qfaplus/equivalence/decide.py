"""
Equivalence decisions.

direct: the two machines are run side by side on the direct sum of their spaces, from rho0 = (rho0_1 + rho0_2) / 2
(direct sum), with observable P = -P_acc_1 + P_acc_2 (direct sum). Tr(P rho_x) = (f_2(x) - f_1(x)) / 2, so the
machines are equivalent iff the observable vanishes on a basis of the reachable span.

blm: both machines are vectorized to bilinear machines, which are run side by side with final vector
(eta_1, -eta_2).

Every counterexample found algebraically is checked by evaluating both machines on it.
"""

import collections
import logging

import numpy as np

from ..conf import CONF
from ..linalg import direct_sum
from ..quantum_ops.operation import QuantumOperation
from ..automata.alphabet import END_MARKERS
from ..automata.classical import BilinearMachine, ProbabilisticAutomaton, DFA
from ..automata.machine import check_alphabets
from ..automata.mm import MM1gQFA
from ..automata.mo import MO1gQFA
from ..automata.molm import MOLM
from ..transforms.closure import direct_sum_operation
from ..transforms.embedding import pa_to_mo, dfa_to_pa
from ..transforms.simulation import mm_to_molm
from ..transforms.vectorization import mo_to_blm
from .span import SpanClosure
from .verdict import EquivalenceVerdict

logger = logging.getLogger(__name__)

METHODS = ("direct", "blm")


def _marker_symbols(*machines):
    return END_MARKERS if any(getattr(m, "has_end_markers", False) for m in machines) else ()


def _combined_linear_machine(m1, m2):
    symbols = m1.alphabet.symbols + _marker_symbols(m1, m2)
    ops = collections.OrderedDict()
    for symbol in symbols:
        op1 = m1.ops.get(symbol, QuantumOperation.identity(m1.dim))
        op2 = m2.ops.get(symbol, QuantumOperation.identity(m2.dim))
        ops[symbol] = direct_sum_operation(op1, op2)
    return MOLM(
        m1.alphabet,
        direct_sum(m1.rho0.matrix, m2.rho0.matrix) / 2,
        ops,
        direct_sum(-m1.p_acc, m2.p_acc),
        check=False
    )


def _combined_blm(b1, b2):
    symbols = b1.alphabet.symbols + _marker_symbols(b1, b2)
    mats = collections.OrderedDict()
    for symbol in symbols:
        a1 = b1.mats.get(symbol, np.eye(b1.states_nb))
        a2 = b2.mats.get(symbol, np.eye(b2.states_nb))
        mats[symbol] = direct_sum(a1, a2)
    return BilinearMachine(np.hstack([b1.pi, b2.pi]), mats, np.vstack([b1.eta, -b2.eta]), alphabet=b1.alphabet)


def _decide(combined, m1, m2, scale, tol, method, max_len=None):
    # scale: factor turning the combined machine's value into f_2 - f_1 (up to sign)
    closure = SpanClosure(combined, max_len=max_len)
    for word, state in closure:
        estimate = scale * abs(combined._dev_finish(state))
        if estimate <= tol:
            continue
        gap = abs(m1.get_value(word) - m2.get_value(word))
        if gap > tol:
            logger.info(f"machines differ on {word!r} (gap {gap:.6g})")
            return EquivalenceVerdict(
                False, counterexample=word, value_gap=gap, basis_size=len(closure.basis),
                words_explored=closure.words_explored, tolerance=tol, method=method)
        logger.warning(
            f"algebraic difference {estimate:.3g} on {word!r} is not confirmed by direct evaluation (gap {gap:.3g}), "
            f"going on")
    return EquivalenceVerdict(
        True, basis_size=len(closure.basis), words_explored=closure.words_explored, tolerance=tol, method=method)


def _check_method(method):
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")


def _linear_verdict(m1, m2, l1, l2, method, tol):
    # m1, m2: machines as given (for direct evaluation), l1, l2: their linear (MO or MOLM) versions
    if method == "direct":
        return _decide(_combined_linear_machine(l1, l2), m1, m2, 2, tol, method)
    b1, b2 = mo_to_blm(l1), mo_to_blm(l2)
    max_len = b1.states_nb + b2.states_nb - 1
    return _decide(_combined_blm(b1, b2), m1, m2, 1, tol, method, max_len=max_len)


def equivalent_mo(m1, m2, method="direct", tol=None):
    """
    Decide if two measure-once machines (or linear machines) have the same acceptance function.

    Parameters
    ----------
    m1: qfaplus.automata.mo.MO1gQFA or qfaplus.automata.molm.MOLM
    m2: qfaplus.automata.mo.MO1gQFA or qfaplus.automata.molm.MOLM
    method: {"direct", "blm"}
        direct: span closure on the (n_1 + n_2)-dimensional combined machine; blm: span closure of the combined
        bilinear machine, words of length <= n_1**2 + n_2**2 - 1
    tol: float or None
        default CONF.equivalence_tol

    Returns
    -------
    qfaplus.equivalence.verdict.EquivalenceVerdict
        the counterexample, if any, is a shortest word where the machines differ by more than tol

    Raises
    ------
    AlphabetMismatchError
    """
    tol = CONF.equivalence_tol if tol is None else tol
    _check_method(method)
    check_alphabets(m1, m2)
    return _linear_verdict(m1, m2, m1, m2, method, tol)


def equivalent_mm(m1, m2, method="direct", tol=None):
    """
    Decide if two measure-many machines have the same acceptance function.

    Both machines are compiled to linear machines, then compared as equivalent_mo does, words being read as ¢x$.
    Counterexamples are reported without end-markers.

    Parameters
    ----------
    m1: qfaplus.automata.mm.MM1gQFA
    m2: qfaplus.automata.mm.MM1gQFA
    method: {"direct", "blm"}
    tol: float or None

    Returns
    -------
    qfaplus.equivalence.verdict.EquivalenceVerdict

    Raises
    ------
    AlphabetMismatchError
    """
    tol = CONF.equivalence_tol if tol is None else tol
    _check_method(method)
    check_alphabets(m1, m2)
    return _linear_verdict(m1, m2, mm_to_molm(m1), mm_to_molm(m2), method, tol)


def _to_quantum(machine):
    if isinstance(machine, DFA):
        machine = dfa_to_pa(machine)
    if isinstance(machine, ProbabilisticAutomaton):
        machine = pa_to_mo(machine)
    return machine


def equivalent(m1, m2, method="direct", tol=None):
    """
    Decide if two machines of any kinds have the same acceptance function.

    DFA and probabilistic automata are embedded in measure-once machines, measure-many machines are compiled to linear
    machines (a machine without end-marker operations reads them as the identity). Bilinear machines are only
    compared with the blm method.

    Parameters
    ----------
    m1: qfaplus.automata.machine.Machine
    m2: qfaplus.automata.machine.Machine
    method: {"direct", "blm"}
    tol: float or None

    Returns
    -------
    qfaplus.equivalence.verdict.EquivalenceVerdict
    """
    tol = CONF.equivalence_tol if tol is None else tol
    _check_method(method)
    check_alphabets(m1, m2)
    q1, q2 = _to_quantum(m1), _to_quantum(m2)

    if isinstance(q1, BilinearMachine) or isinstance(q2, BilinearMachine):
        if method != "blm":
            raise ValueError("bilinear machines can only be compared with the blm method")
        b1, b2 = [q if isinstance(q, BilinearMachine) else mo_to_blm(_to_linear(q)) for q in (q1, q2)]
        return _decide(_combined_blm(b1, b2), m1, m2, 1, tol, method, max_len=b1.states_nb + b2.states_nb - 1)

    return _linear_verdict(m1, m2, _to_linear(q1), _to_linear(q2), method, tol)


def _to_linear(machine):
    if isinstance(machine, MM1gQFA):
        return mm_to_molm(machine)
    if isinstance(machine, (MO1gQFA, MOLM)):
        return machine
    raise TypeError(f"can't compare {machine!r}")
