"""
Dense complex linear algebra for small Hilbert spaces.

Matrices are plain numpy arrays of complex scalars (dimension up to a few tens). All functions are pure and never
modify their inputs.

Conventions
-----------
vec: row-major flattening, vec(A)[i * n + j] = A[i, j] (0-based), so that vec(A X B) = (A kron B.T) vec(X).
Hilbert-Schmidt inner product: <A, B> = Tr(A^dagger B).
"""

import logging

import numpy as np
import scipy.linalg

from .conf import CONF
from .exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


def as_matrix(a, dtype=complex):
    """
    Convert to a 2-dimensional numpy array.

    Parameters
    ----------
    a: array-like
    dtype: numpy dtype or None
        if None, numpy's inferred dtype is kept

    Returns
    -------
    numpy.ndarray
    """
    matrix = np.array(a, dtype=dtype)
    if matrix.ndim == 0:
        matrix = matrix.reshape(1, 1)
    if matrix.ndim != 2:
        raise DimensionMismatchError(f"expected a matrix, got an array of shape {matrix.shape}")
    if matrix.shape[0] < 1 or matrix.shape[1] < 1:
        raise DimensionMismatchError(f"matrix must have at least one row and one column, got {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise ValueError("matrix contains non finite entries")
    return matrix


def check_square(a, name="matrix"):
    """
    Check that a matrix is square.

    Parameters
    ----------
    a: numpy.ndarray
    name: str
        used in error message

    Returns
    -------
    int
        dimension

    Raises
    ------
    DimensionMismatchError
    """
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {a.shape}")
    return a.shape[0]


def tensor(a, b):
    """
    Tensor (Kronecker) product.

    Block (i, j) of the result is a[i, j] * b.

    Parameters
    ----------
    a: numpy.ndarray
    b: numpy.ndarray

    Returns
    -------
    numpy.ndarray
        shape (a.rows * b.rows, a.cols * b.cols)
    """
    return np.kron(a, b)


def direct_sum(a, b):
    """
    Direct sum: block-diagonal matrix [[a, 0], [0, b]].

    Parameters
    ----------
    a: numpy.ndarray
    b: numpy.ndarray

    Returns
    -------
    numpy.ndarray
    """
    return scipy.linalg.block_diag(a, b)


def dagger(a):
    """
    Conjugate transpose.

    Parameters
    ----------
    a: numpy.ndarray

    Returns
    -------
    numpy.ndarray
    """
    return np.conj(a).T


def trace(a):
    """
    Trace of a square matrix.

    Parameters
    ----------
    a: numpy.ndarray

    Returns
    -------
    complex
    """
    check_square(a)
    return complex(np.trace(a))


def singular_values(a):
    """
    Singular values, computed from the eigenvalues of A^dagger A.

    Negative round-off eigenvalues are clamped to 0 before the square root.

    Parameters
    ----------
    a: numpy.ndarray

    Returns
    -------
    numpy.ndarray
        real, descending order
    """
    eigenvalues = np.linalg.eigvalsh(dagger(a) @ a)
    return np.sqrt(np.clip(eigenvalues, 0, None))[::-1]


def trace_norm(a):
    """
    Trace norm, sum of the singular values: ||A||_tr = Tr(sqrt(A^dagger A)).

    Parameters
    ----------
    a: numpy.ndarray
        square matrix

    Returns
    -------
    float
    """
    check_square(a)
    return float(np.sum(singular_values(a)))


def frobenius_norm(a):
    """
    Frobenius norm, sqrt(<A, A>).

    Parameters
    ----------
    a: numpy.ndarray

    Returns
    -------
    float
    """
    return float(np.linalg.norm(a, "fro"))


def trace_distance(rho, sigma):
    """
    Trace distance between two operators: ||rho - sigma||_tr / 2.

    Parameters
    ----------
    rho: numpy.ndarray
    sigma: numpy.ndarray

    Returns
    -------
    float
    """
    if rho.shape != sigma.shape:
        raise DimensionMismatchError(f"shapes differ: {rho.shape} and {sigma.shape}")
    return trace_norm(rho - sigma) / 2


def hs_inner(a, b):
    """
    Hilbert-Schmidt inner product Tr(A^dagger B).

    Parameters
    ----------
    a: numpy.ndarray
    b: numpy.ndarray

    Returns
    -------
    complex
    """
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shapes differ: {a.shape} and {b.shape}")
    return complex(np.vdot(a, b))


def vec(a):
    """
    Row-major vectorization of a square matrix.

    Parameters
    ----------
    a: numpy.ndarray
        n x n

    Returns
    -------
    numpy.ndarray
        n**2 x 1 column vector, entry i * n + j is a[i, j]
    """
    n = check_square(a)
    return a.reshape(n * n, 1).copy()


def unvec(v):
    """
    Inverse of vec.

    Parameters
    ----------
    v: numpy.ndarray
        n**2 x 1 (or flat n**2) vector

    Returns
    -------
    numpy.ndarray
        n x n
    """
    size = v.size
    n = int(round(np.sqrt(size)))
    if n * n != size:
        raise DimensionMismatchError(f"vector of size {size} is not the vectorization of a square matrix")
    return v.reshape(n, n).copy()


def hermitian_deviation(a):
    """
    Max-entry deviation between a matrix and its conjugate transpose.

    Parameters
    ----------
    a: numpy.ndarray

    Returns
    -------
    float
    """
    check_square(a)
    return float(np.max(np.abs(a - dagger(a))))


def min_eigenvalue(a):
    """
    Smallest eigenvalue of the Hermitian part of a square matrix.

    Parameters
    ----------
    a: numpy.ndarray

    Returns
    -------
    float
    """
    check_square(a)
    return float(np.linalg.eigvalsh((a + dagger(a)) / 2)[0])


def span_insert(basis, candidate, tol=None):
    """
    Insert a candidate in an orthonormal basis if it is linearly independent from it.

    The candidate is orthogonalized against the basis (Gram-Schmidt, two passes, Hilbert-Schmidt inner product).
    If the Frobenius norm of the residual is greater than tol, the normalized residual is appended.

    Parameters
    ----------
    basis: list of numpy.ndarray
        mutually orthonormal matrices (not modified)
    candidate: numpy.ndarray
    tol: float or None
        default CONF.span_tol

    Returns
    -------
    bool, list of numpy.ndarray
        inserted flag and new basis (a new list, equal in content to given basis if nothing was inserted)
    """
    tol = CONF.span_tol if tol is None else tol
    residual = np.array(candidate, dtype=complex)
    for element in basis:
        if element.shape != residual.shape:
            raise DimensionMismatchError(
                f"candidate of shape {residual.shape} does not match basis element shape {element.shape}")

    for _ in range(2):
        for element in basis:
            residual = residual - hs_inner(element, residual) * element

    norm = frobenius_norm(residual)
    if norm <= tol:
        return False, list(basis)
    return True, list(basis) + [residual / norm]


def complete_unitary(columns, dim):
    """
    Complete partially specified columns into a unitary matrix.

    Parameters
    ----------
    columns: dict
        {column index: column vector}, given columns must be orthonormal
    dim: int

    Returns
    -------
    numpy.ndarray
        unitary dim x dim matrix whose given columns are unchanged; missing columns are filled, in increasing index
        order, with an orthonormal basis of the orthogonal complement of given columns
    """
    given = np.zeros((dim, len(columns)), dtype=complex)
    for k, (index, column) in enumerate(sorted(columns.items())):
        column = np.asarray(column, dtype=complex).reshape(dim)
        given[:, k] = column
    gram = dagger(given) @ given
    if not np.allclose(gram, np.eye(len(columns)), atol=CONF.validation_tol):
        raise ValueError("given columns are not orthonormal, they can't be completed to a unitary")

    complement = scipy.linalg.null_space(dagger(given)) if len(columns) > 0 else np.eye(dim, dtype=complex)
    u = np.zeros((dim, dim), dtype=complex)
    free_indexes = [i for i in range(dim) if i not in columns]
    for index, column in columns.items():
        u[:, index] = np.asarray(column, dtype=complex).reshape(dim)
    for k, index in enumerate(free_indexes):
        u[:, index] = complement[:, k]
    return u
