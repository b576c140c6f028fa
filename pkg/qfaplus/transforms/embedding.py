"""Embeddings of classical automata and measure-once machines."""

import collections
import logging

import numpy as np

from ..linalg import direct_sum
from ..quantum_ops.measurement import ProjectorSet, NON, ACC, REJ
from ..quantum_ops.operation import QuantumOperation
from ..automata.alphabet import CENT, DOLLAR
from ..automata.classical import ProbabilisticAutomaton
from ..automata.mm import MM1gQFA
from ..automata.mo import MO1gQFA
from .closure import direct_sum_operation

logger = logging.getLogger(__name__)


def _ket_bra(i, j, dim):
    m = np.zeros((dim, dim), dtype=complex)
    m[i, j] = 1
    return m


def pa_to_mo(p):
    """
    Simulate a probabilistic automaton exactly by a measure-once machine.

    Kraus operators of symbol s are E_ij = sqrt(A(s)_ij) |q_j><q_i| (zero entries are skipped), rho0 is the diagonal
    of pi and P_acc the diagonal of eta.

    Parameters
    ----------
    p: qfaplus.automata.classical.ProbabilisticAutomaton

    Returns
    -------
    qfaplus.automata.mo.MO1gQFA
    """
    p.validate().raise_if_failed()
    n = p.states_nb
    ops = collections.OrderedDict()
    for symbol in p.alphabet:
        a = p.mats[symbol]
        ops[symbol] = QuantumOperation(
            [np.sqrt(a[i, j]) * _ket_bra(j, i, n) for i in range(n) for j in range(n) if a[i, j] > 0],
            check=False
        )
    logger.info(f"embedded {p!r} in a measure-once machine of dimension {n}")
    return MO1gQFA(p.alphabet, np.diag(p.pi[0]), ops, np.diag(p.eta[:, 0]), name=p.name)


def dfa_to_pa(d):
    """
    See a DFA as a probabilistic automaton with 0/1 transition matrices.

    Parameters
    ----------
    d: qfaplus.automata.classical.DFA

    Returns
    -------
    qfaplus.automata.classical.ProbabilisticAutomaton
    """
    d.validate().raise_if_failed()
    pi = np.zeros(d.states)
    pi[d.start] = 1
    mats = collections.OrderedDict()
    for symbol in d.alphabet:
        a = np.zeros((d.states, d.states))
        for q, successor in enumerate(d.delta[symbol]):
            a[q, successor] = 1
        mats[symbol] = a
    eta = [1. if q in d.accepting else 0. for q in range(d.states)]
    logger.info(f"converted {d!r} to a probabilistic automaton")
    return ProbabilisticAutomaton(d.alphabet, pi, mats, eta, name=d.name)


def mo_to_mm(m):
    """
    Simulate a measure-once machine by a measure-many machine.

    The space is H + span{q_acc, q_rej}; symbols act as E_s on H and as the identity on the halting states, the
    left end-marker is the identity and the right end-marker sends the range of P_acc to q_acc and its complement
    to q_rej. Acceptance probabilities are equal on every word.

    Parameters
    ----------
    m: qfaplus.automata.mo.MO1gQFA

    Returns
    -------
    qfaplus.automata.mm.MM1gQFA
    """
    n = m.dim
    dim = n + 2
    q_acc, q_rej = n, n + 1
    ops = collections.OrderedDict(
        (symbol, direct_sum_operation(op, QuantumOperation.identity(2))) for symbol, op in m.ops.items())
    ops[CENT] = QuantumOperation.identity(dim)

    eigenvalues, eigenvectors = np.linalg.eigh(m.p_acc)
    end_kraus = [_ket_bra(q_acc, q_acc, dim) + _ket_bra(q_rej, q_rej, dim)]
    for value, vector in zip(eigenvalues, eigenvectors.T):
        bra = np.zeros((1, dim), dtype=complex)
        bra[0, :n] = np.conj(vector)
        ket = np.zeros((dim, 1), dtype=complex)
        ket[q_acc if value > .5 else q_rej, 0] = 1
        end_kraus.append(ket @ bra)
    ops[DOLLAR] = QuantumOperation(end_kraus, check=False)

    projectors = ProjectorSet([
        (NON, direct_sum(np.eye(n), np.zeros((2, 2)))),
        (ACC, _ket_bra(q_acc, q_acc, dim)),
        (REJ, _ket_bra(q_rej, q_rej, dim))
    ])
    rho0 = direct_sum(m.rho0.matrix, np.zeros((2, 2)))
    logger.info(f"lifted {m!r} to a measure-many machine of dimension {dim}")
    return MM1gQFA(m.alphabet, rho0, ops, projectors, name=m.name)
