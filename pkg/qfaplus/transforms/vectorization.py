"""Vectorization of measure-once machines to bilinear machines."""

import collections

from ..linalg import vec
from ..quantum_ops.operation import superoperator_matrix
from ..automata.classical import BilinearMachine


def mo_to_blm(m):
    """
    Get the n**2-state bilinear machine of a measure-once machine (or linear machine).

    With row-major vec: pi = vec(rho0)^T, A(s) = S_s^T where S_s is the super-operator matrix, eta = vec(P_acc^T), so
    that pi A(x_1)...A(x_m) eta = Tr(P_acc rho_x).

    Parameters
    ----------
    m: qfaplus.automata.mo.MO1gQFA or qfaplus.automata.molm.MOLM
        end-marker operations of a linear machine are kept as end-marker matrices

    Returns
    -------
    qfaplus.automata.classical.BilinearMachine
    """
    mats = collections.OrderedDict((symbol, superoperator_matrix(op).T) for symbol, op in m.ops.items())
    return BilinearMachine(vec(m.rho0.matrix).T, mats, vec(m.p_acc.T), name=m.name, alphabet=m.alphabet)
