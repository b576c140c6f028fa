"""
Closure constructions on measure-once machines.

complement: 1 - f. convex_combination: sum c_i f_i. product: prod f_i.
k-ary constructions fold the binary ones from the left.
"""

import collections
import functools
import logging

import numpy as np

from ..conf import CONF
from ..linalg import direct_sum, tensor
from ..quantum_ops.operation import QuantumOperation
from ..automata.machine import check_alphabets
from ..automata.mo import MO1gQFA

logger = logging.getLogger(__name__)


def direct_sum_operation(first, second):
    """
    Direct sum of two quantum operations.

    Kraus operators are (1/sqrt(|F|)) E_i + (1/sqrt(|E|)) F_j (direct sums) for all pairs, so that
    E(rho_1 + rho_2) = E_1(rho_1) + E_2(rho_2) on block-diagonal inputs.

    Parameters
    ----------
    first: qfaplus.quantum_ops.operation.SuperOperator
    second: qfaplus.quantum_ops.operation.SuperOperator

    Returns
    -------
    qfaplus.quantum_ops.operation.QuantumOperation
        not validated
    """
    first_scale = 1 / np.sqrt(len(second))
    second_scale = 1 / np.sqrt(len(first))
    return QuantumOperation(
        [direct_sum(first_scale * e, second_scale * f) for e in first.kraus for f in second.kraus],
        check=False
    )


def tensor_operation(first, second):
    """
    Tensor product of two quantum operations, Kraus operators E_i kron F_j.

    Parameters
    ----------
    first: qfaplus.quantum_ops.operation.SuperOperator
    second: qfaplus.quantum_ops.operation.SuperOperator

    Returns
    -------
    qfaplus.quantum_ops.operation.QuantumOperation
        not validated
    """
    return QuantumOperation([tensor(e, f) for e in first.kraus for f in second.kraus], check=False)


def complement(m):
    """
    Same machine with accepting projector I - P_acc: f_out = 1 - f.

    Parameters
    ----------
    m: qfaplus.automata.mo.MO1gQFA

    Returns
    -------
    qfaplus.automata.mo.MO1gQFA
    """
    name = None if m.name is None else f"not-{m.name}"
    return MO1gQFA(m.alphabet, m.rho0.matrix, m.ops, m.p_rej, name=name)


def _combine(m1, m2, c1, c2):
    ops = collections.OrderedDict(
        (symbol, direct_sum_operation(m1.ops[symbol], m2.ops[symbol])) for symbol in m1.alphabet)
    return MO1gQFA(
        m1.alphabet,
        direct_sum(c1 * m1.rho0.matrix, c2 * m2.rho0.matrix),
        ops,
        direct_sum(m1.p_acc, m2.p_acc)
    )


def convex_combination(ms, cs):
    """
    Convex combination of measure-once machines: f_out = sum c_i f_i.

    The state space is the direct sum of the machines' spaces, rho0 = sum c_i rho0_i (direct sum).

    Parameters
    ----------
    ms: typing.Sequence[qfaplus.automata.mo.MO1gQFA]
    cs: typing.Sequence[float]
        positive weights summing to 1

    Returns
    -------
    qfaplus.automata.mo.MO1gQFA

    Raises
    ------
    ValueError
        invalid weights
    AlphabetMismatchError
    """
    ms, cs = list(ms), [float(c) for c in cs]
    if len(ms) == 0 or len(ms) != len(cs):
        raise ValueError(f"need one weight per machine, got {len(ms)} machines and {len(cs)} weights")
    if min(cs) <= 0 or abs(sum(cs) - 1) > CONF.validation_tol:
        raise ValueError(f"weights must be positive and sum to 1, got {cs}")
    check_alphabets(*ms)

    combined, total = ms[0], cs[0]
    for m, c in zip(ms[1:], cs[1:]):
        new_total = total + c
        combined = _combine(combined, m, total / new_total, c / new_total)
        total = new_total
    if len(ms) == 1:
        combined = MO1gQFA(combined.alphabet, combined.rho0.matrix, combined.ops, combined.p_acc)
    logger.info(f"convex combination of {len(ms)} machines, dimension {combined.dim}")
    return combined


def _tensor(m1, m2):
    ops = collections.OrderedDict(
        (symbol, tensor_operation(m1.ops[symbol], m2.ops[symbol])) for symbol in m1.alphabet)
    return MO1gQFA(
        m1.alphabet,
        tensor(m1.rho0.matrix, m2.rho0.matrix),
        ops,
        tensor(m1.p_acc, m2.p_acc)
    )


def product(ms):
    """
    Product of measure-once machines: f_out = prod f_i.

    The state space is the tensor product of the machines' spaces.

    Parameters
    ----------
    ms: typing.Sequence[qfaplus.automata.mo.MO1gQFA]

    Returns
    -------
    qfaplus.automata.mo.MO1gQFA

    Raises
    ------
    AlphabetMismatchError
    """
    ms = list(ms)
    if len(ms) == 0:
        raise ValueError("product needs at least one machine")
    check_alphabets(*ms)
    result = functools.reduce(_tensor, ms)
    logger.info(f"product of {len(ms)} machines, dimension {result.dim}")
    return result
