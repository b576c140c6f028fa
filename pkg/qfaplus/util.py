"""Utilities functions for qfaplus."""

import os
import itertools
import json
import logging

from charset_normalizer import from_path

from .conf import CONF
from .exceptions import EnumerationGuardError

logger = logging.getLogger(__name__)


def to_buffer(buffer_or_path):
    """
    Get a buffer from a buffer or a path.

    Parameters
    ----------
    buffer_or_path: typing.StringIO or str

    Returns
    -------
    str or None, typing.StringIO
        Path (None if a buffer was given) and buffer.
    """
    if isinstance(buffer_or_path, str):
        if not os.path.isfile(buffer_or_path):
            raise FileNotFoundError(f"no file found at given path: {buffer_or_path}")
        path = buffer_or_path
        match = from_path(buffer_or_path).best()
        encoding = CONF.encoding if match is None else match.encoding
        buffer = open(buffer_or_path, encoding=encoding, errors="ignore")
    else:
        path = None
        buffer = buffer_or_path
    return path, buffer


def multi_mode_write(buffer_writer, string_writer, buffer_or_path=None):
    """
    Write to a buffer, a path, or return a string.

    Parameters
    ----------
    buffer_writer: typing.Callable
    string_writer: typing.Callable
    buffer_or_path: typing.StringIO or str or None

    Returns
    -------
    str or None
        str if buffer_or_path is None
    """
    # manage string mode
    if buffer_or_path is None:
        return string_writer()

    # manage buffer mode
    if isinstance(buffer_or_path, str):
        buffer = open(buffer_or_path, "w", encoding=CONF.encoding)
    else:
        buffer = buffer_or_path

    with buffer:
        buffer_writer(buffer)


def json_data_to_json(json_data, buffer_or_path=None, indent=2):
    """
    Write a json-serializable dict to a string or file.

    Parameters
    ----------
    json_data: dict
    buffer_or_path: typing.StringIO or str or None
        buffer or file path to write the json to, if None (default) the function returns a json string
    indent: int or None
        indent parameter passed to json.dump

    Returns
    -------
    str or None
        str if buffer_or_path is None else None
    """
    return multi_mode_write(
        lambda buffer: json.dump(json_data, buffer, indent=indent, ensure_ascii=False),
        lambda: json.dumps(json_data, indent=indent, ensure_ascii=False),
        buffer_or_path=buffer_or_path
    )


def get_words_nb(symbols_nb, max_len):
    """
    Get number of words of length <= max_len.

    Parameters
    ----------
    symbols_nb: int
    max_len: int

    Returns
    -------
    int
    """
    if symbols_nb == 1:
        return max_len + 1
    return (symbols_nb ** (max_len + 1) - 1) // (symbols_nb - 1)


def check_enumeration(symbols_nb, max_len, limit=None):
    """
    Check that an exhaustive enumeration of all words of length <= max_len is affordable.

    Parameters
    ----------
    symbols_nb: int
    max_len: int
    limit: int or None
        max number of words, default CONF.enumeration_limit

    Raises
    ------
    EnumerationGuardError
    """
    limit = CONF.enumeration_limit if limit is None else limit
    if max_len < 0:
        raise ValueError(f"max length must be positive, got {max_len}")
    # a length above the limit never fits
    if max_len >= limit or get_words_nb(symbols_nb, max_len) > limit:
        raise EnumerationGuardError(
            f"enumeration of words up to length {max_len} over {symbols_nb} symbols exceeds limit ({limit} words)"
        )


def iter_words(symbols, max_len):
    """
    Iterate on all words of length <= max_len, in length-then-lexicographic order.

    Lexicographic order follows the order of given symbols.

    Parameters
    ----------
    symbols: typing.Sequence[str]
    max_len: int

    Returns
    -------
    typing.Iterator[tuple of str]
    """
    check_enumeration(len(symbols), max_len)
    for length in range(max_len + 1):
        yield from itertools.product(symbols, repeat=length)


def format_word(word, sep=""):
    """
    Format a word (tuple of symbols) as a string.

    Parameters
    ----------
    word: tuple of str
    sep: str

    Returns
    -------
    str
    """
    return sep.join(word)


def format_number(value, digits=None):
    """
    Format a real or complex number with a given number of significant digits.

    Parameters
    ----------
    value: float or complex
    digits: int or None
        default CONF.output_digits

    Returns
    -------
    str
    """
    digits = CONF.output_digits if digits is None else digits
    if isinstance(value, complex):
        if value.imag == 0:
            value = value.real
        else:
            return f"{value.real:.{digits}g}{value.imag:+.{digits}g}j"
    return f"{value:.{digits}g}"


def to_json_number(value):
    """
    Get a json-serializable number: a float, or a [re, im] pair for a complex number with an imaginary part.

    Parameters
    ----------
    value: float or complex

    Returns
    -------
    float or list of float
    """
    if isinstance(value, complex):
        if value.imag != 0:
            return [value.real, value.imag]
        value = value.real
    return float(value)
