"""
Json codec of numbers and matrices.

Complex numbers are written as [re, im] pairs, real numbers as bare numbers; both forms are read. Matrices are
row-major nested lists.
"""

import numbers

import numpy as np

from ..exceptions import MachineFileError


def encode_number(value):
    """
    Encode a complex number as a [re, im] pair.

    Parameters
    ----------
    value: complex

    Returns
    -------
    list of float
    """
    value = complex(value)
    return [value.real, value.imag]


def decode_number(data, name="value"):
    """
    Decode a [re, im] pair or a bare real number.

    Parameters
    ----------
    data: list or float
    name: str
        used in error messages

    Returns
    -------
    complex
    """
    if isinstance(data, numbers.Real) and not isinstance(data, bool):
        return complex(data)
    if (isinstance(data, list) and len(data) == 2 and
            all(isinstance(x, numbers.Real) and not isinstance(x, bool) for x in data)):
        return complex(data[0], data[1])
    raise MachineFileError(f"{name}: expected a number or a [re, im] pair, got {data!r}")


def encode_matrix(matrix, complex_entries=True):
    """
    Encode a matrix as nested lists.

    Parameters
    ----------
    matrix: numpy.ndarray
    complex_entries: bool, default True
        if False, entries are written as bare real numbers

    Returns
    -------
    list of list
    """
    if complex_entries:
        return [[encode_number(x) for x in row] for row in np.asarray(matrix)]
    return [[float(np.real(x)) for x in row] for row in np.asarray(matrix)]


def decode_matrix(data, name="matrix", dtype=complex):
    """
    Decode a matrix written as nested lists.

    Parameters
    ----------
    data: list of list
    name: str
    dtype: complex or float
        if float, entries must be real

    Returns
    -------
    numpy.ndarray

    Raises
    ------
    MachineFileError
    """
    if not isinstance(data, list) or len(data) == 0 or not all(isinstance(row, list) for row in data):
        raise MachineFileError(f"{name}: expected a non-empty list of rows")
    if len({len(row) for row in data}) != 1 or len(data[0]) == 0:
        raise MachineFileError(f"{name}: rows must be non-empty and have the same length")
    matrix = np.array([[decode_number(x, name=name) for x in row] for row in data], dtype=complex)
    if dtype is float:
        if np.any(matrix.imag != 0):
            raise MachineFileError(f"{name}: entries must be real")
        return matrix.real.copy()
    return matrix


def decode_vector(data, name="vector"):
    """
    Decode a real vector written as a flat list.

    Parameters
    ----------
    data: list of float
    name: str

    Returns
    -------
    numpy.ndarray
    """
    if not isinstance(data, list) or len(data) == 0:
        raise MachineFileError(f"{name}: expected a non-empty list")
    return decode_matrix([data], name=name, dtype=float)[0]


def encode_kraus(op):
    """
    Encode the Kraus operators of an operation.

    Parameters
    ----------
    op: qfaplus.quantum_ops.operation.SuperOperator

    Returns
    -------
    list
    """
    return [encode_matrix(k) for k in op.kraus]


def decode_kraus(data, name="ops"):
    """
    Decode a list of Kraus operators.

    Parameters
    ----------
    data: list
    name: str

    Returns
    -------
    list of numpy.ndarray
    """
    if not isinstance(data, list) or len(data) == 0:
        raise MachineFileError(f"{name}: expected a non-empty list of Kraus operators")
    return [decode_matrix(k, name=f"{name}[{i}]") for i, k in enumerate(data)]
