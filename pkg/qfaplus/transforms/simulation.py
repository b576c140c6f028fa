"""
Simulation of measure-many machines by measure-once linear machines.

Each Kraus operator E_m splits along the measurement subspaces: E_m = E_m P_non + E_m P_acc + E_m P_rej. For a
trace-preserving operation, sum_m (E_m P_l)^dagger (E_m P_l) is the identity of subspace l and cross terms vanish.
"""

import collections
import logging

import numpy as np

from ..conf import CONF
from ..exceptions import DimensionMismatchError
from ..linalg import as_matrix, dagger
from ..quantum_ops.measurement import ProjectorSet, NON, ACC, REJ
from ..quantum_ops.operation import QuantumOperation, SuperOperator, compose
from ..quantum_ops.validation import ValidationReport
from ..automata.alphabet import END_MARKERS
from ..automata.molm import MOLM

logger = logging.getLogger(__name__)


def _check_projectors(projectors):
    if not isinstance(projectors, ProjectorSet):
        projectors = ProjectorSet(projectors, check=False)
    if set(projectors.labels) != {NON, ACC, REJ}:
        raise ValueError(f"expected projectors {(NON, ACC, REJ)}, got {projectors.labels}")
    projectors.validate().raise_if_failed()
    return projectors


def decompose_kraus_blocks(e, projectors):
    """
    Split a Kraus operator along a (non, acc, rej) measurement.

    Parameters
    ----------
    e: array-like
    projectors: qfaplus.quantum_ops.measurement.ProjectorSet or dict

    Returns
    -------
    numpy.ndarray, numpy.ndarray, numpy.ndarray
        e P_non, e P_acc, e P_rej
    """
    e = as_matrix(e)
    projectors = _check_projectors(projectors)
    if e.shape != (projectors.dim, projectors.dim):
        raise DimensionMismatchError(
            f"operator of shape {e.shape} does not match projectors of dimension {projectors.dim}")
    return tuple(e @ projectors[label] for label in (NON, ACC, REJ))


def validate_kraus_blocks(kraus, projectors, tol=None):
    """
    Check block identities of a trace-preserving Kraus set.

    sum_m e_l^dagger e_l = P_l for every label l, and sum_m e_l^dagger e_l' = 0 for l != l'.

    Parameters
    ----------
    kraus: typing.Sequence[array-like]
    projectors: qfaplus.quantum_ops.measurement.ProjectorSet or dict
    tol: float or None

    Returns
    -------
    qfaplus.quantum_ops.validation.ValidationReport
    """
    tol = CONF.validation_tol if tol is None else tol
    projectors = _check_projectors(projectors)
    blocks = [decompose_kraus_blocks(e, projectors) for e in kraus]
    labels = (NON, ACC, REJ)
    report = ValidationReport("kraus blocks")
    for i, left in enumerate(labels):
        for j, right in enumerate(labels):
            total = sum(dagger(b[i]) @ b[j] for b in blocks)
            expected = projectors[left] if i == j else np.zeros_like(total)
            name = f"{left} identity" if i == j else f"{left}/{right} cross terms"
            report.add_check(name, float(np.max(np.abs(total - expected))), tol)
    return report


def mm_to_molm(m):
    """
    Compile a measure-many machine to a measure-once linear machine.

    For a symbol with Kraus operators E_1..E_M: F_m = E_m P_non + (P_acc + P_rej) / sqrt(M), and
    Theta = F' o F with F' = {P_non, P_acc, P_rej}. Halted probability mass is parked in the halting subspaces, so
    that mm_accept_prob(m, x) accept = molm_accept_prob(out, ¢x$).

    Parameters
    ----------
    m: qfaplus.automata.mm.MM1gQFA

    Returns
    -------
    qfaplus.automata.molm.MOLM
        operations are kept in Kraus form (3M operators per symbol)
    """
    m.validate().raise_if_failed()
    p_non, p_acc, p_rej = m.p_non, m.p_acc, m.p_rej
    measurement = QuantumOperation([p_non, p_acc, p_rej], check=False)
    ops = collections.OrderedDict()
    for symbol in m.alphabet.symbols + END_MARKERS:
        kraus = m.ops[symbol].kraus
        parked = (p_acc + p_rej) / np.sqrt(len(kraus))
        ops[symbol] = compose(measurement, SuperOperator([e @ p_non + parked for e in kraus]))
    logger.info(f"compiled {m!r} to a measure-once linear machine")
    return MOLM(m.alphabet, m.rho0.matrix, ops, p_acc, name=m.name)
