import collections

import numpy as np
from scipy.stats import unitary_group

from qfaplus import MO1gQFA, MM1gQFA, ProbabilisticAutomaton, ProjectorSet
from qfaplus.automata.alphabet import END_MARKERS

SEED = 1234


def get_rng(seed=SEED):
    return np.random.default_rng(seed)


def random_unitary(dim, rng):
    if dim == 1:
        return np.exp(2j * np.pi * rng.uniform()) * np.eye(1)
    return unitary_group.rvs(dim, random_state=rng)


def random_density(dim, rng):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_kraus(dim, rng, kraus_nb=2):
    # first columns of a unitary dilation: sum E_i^dagger E_i = I
    u = random_unitary(dim * kraus_nb, rng)
    return [u[i * dim:(i + 1) * dim, :dim] for i in range(kraus_nb)]


def random_projector(dim, rng, rank=None):
    rank = rng.integers(1, dim + 1) if rank is None else rank
    v = random_unitary(dim, rng)[:, :rank]
    return v @ v.conj().T


def random_mo(dim, rng, symbols=("a", "b"), kraus_nb=2):
    ops = collections.OrderedDict((s, random_kraus(dim, rng, kraus_nb=kraus_nb)) for s in symbols)
    return MO1gQFA(symbols, random_density(dim, rng), ops, random_projector(dim, rng))


def random_measurement(dim, rng):
    # non-halting subspace of dimension >= 1, the other basis vectors split at random, then a random rotation
    labels = ["non"] + [str(rng.choice(["non", "acc", "rej"])) for _ in range(dim - 1)]
    w = random_unitary(dim, rng)
    diagonal = ProjectorSet.from_basis_labels(labels)
    return ProjectorSet([(label, w @ p @ w.conj().T) for label, p in diagonal]), w, labels


def random_mm(dim, rng, symbols=("a", "b"), kraus_nb=2):
    projectors, w, labels = random_measurement(dim, rng)
    non_indexes = [i for i, label in enumerate(labels) if label == "non"]
    small = random_density(len(non_indexes), rng)
    rho = np.zeros((dim, dim), dtype=complex)
    rho[np.ix_(non_indexes, non_indexes)] = small
    ops = collections.OrderedDict(
        (s, random_kraus(dim, rng, kraus_nb=kraus_nb)) for s in tuple(symbols) + END_MARKERS)
    return MM1gQFA(symbols, w @ rho @ w.conj().T, ops, projectors)


def random_pa(states, rng, symbols=("a", "b")):
    mats = collections.OrderedDict((s, rng.dirichlet(np.ones(states), size=states)) for s in symbols)
    return ProbabilisticAutomaton(
        symbols, rng.dirichlet(np.ones(states)), mats, rng.integers(0, 2, size=states).astype(float))


def permutation_matrix(permutation):
    n = len(permutation)
    p = np.zeros((n, n))
    for i, j in enumerate(permutation):
        p[j, i] = 1
    return p


def permuted_copy(m, permutation):
    p = permutation_matrix(permutation)
    ops = collections.OrderedDict((s, [p @ k @ p.T for k in op.kraus]) for s, op in m.ops.items())
    return MO1gQFA(m.alphabet, p @ m.rho0.matrix @ p.T, ops, p @ m.p_acc @ p.T)


def constant_mo(symbols, accept):
    # 1-dimensional machine accepting every word with probability 1 (accept) or 0
    ops = collections.OrderedDict((s, [np.eye(1)]) for s in symbols)
    return MO1gQFA(symbols, np.eye(1), ops, np.eye(1) if accept else np.zeros((1, 1)))


def parity_mo(symbols=("a", "b")):
    # accepts even-length words; operations are given in reverse alphabet order
    x = np.array([[0, 1], [1, 0]])
    ops = collections.OrderedDict((s, [x]) for s in reversed(tuple(symbols)))
    return MO1gQFA(symbols, np.diag([1, 0]), ops, np.diag([1, 0]))
