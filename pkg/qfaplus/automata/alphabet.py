"""Alphabet and word module."""

from ..exceptions import UnknownSymbolError
from ..util import iter_words

CENT = "¢"
DOLLAR = "$"
END_MARKERS = (CENT, DOLLAR)


class Alphabet:
    """
    Ordered input alphabet.

    The declared symbol order defines the lexicographic order used by every word enumeration.

    Parameters
    ----------
    symbols: typing.Iterable[str]
        distinct, non-empty symbol names; end-markers are not allowed
    """

    def __init__(self, symbols):
        if isinstance(symbols, Alphabet):
            symbols = symbols.symbols
        self._symbols = tuple(symbols)
        if len(set(self._symbols)) != len(self._symbols):
            raise ValueError(f"alphabet contains duplicate symbols: {self._symbols}")
        for symbol in self._symbols:
            if not isinstance(symbol, str) or symbol == "":
                raise ValueError(f"symbols must be non-empty strings, got {symbol!r}")
            if symbol in END_MARKERS:
                raise ValueError(f"end-marker {symbol!r} can't be an alphabet symbol")

    @property
    def symbols(self):
        """
        Get symbols, in declared order.

        Returns
        -------
        tuple of str
        """
        return self._symbols

    @property
    def single_char(self):
        """
        Check if all symbols are one character long (words may then be written as plain strings).

        Returns
        -------
        bool
        """
        return all(len(s) == 1 for s in self._symbols)

    def __iter__(self):
        """
        Iterate on symbols.

        Returns
        -------
        typing.Iterator[str]
        """
        return iter(self._symbols)

    def __len__(self):
        """
        Get number of symbols.

        Returns
        -------
        int
        """
        return len(self._symbols)

    def __contains__(self, symbol):
        """
        Check membership.

        Returns
        -------
        bool
        """
        return symbol in self._symbols

    def __eq__(self, other):
        """
        Alphabets are equal if they have the same symbols in the same order.

        Returns
        -------
        bool
        """
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self._symbols == other._symbols

    def __hash__(self):
        """
        Hash.

        Returns
        -------
        int
        """
        return hash(self._symbols)

    def __repr__(self):
        """
        Repr.

        Returns
        -------
        str
        """
        return f"<Alphabet {{{', '.join(self._symbols)}}}>"

    def iter_words(self, max_len):
        """
        Iterate on all words of length <= max_len, in length-then-lexicographic order.

        Parameters
        ----------
        max_len: int

        Returns
        -------
        typing.Iterator[tuple of str]
        """
        return iter_words(self._symbols, max_len)


def to_word(word):
    """
    Convert a word to a tuple of symbols.

    Parameters
    ----------
    word: str or typing.Sequence[str]
        a str is split in one-character symbols

    Returns
    -------
    tuple of str
    """
    return tuple(word)


def parse_word(text, sep=None):
    """
    Parse a command line word.

    Parameters
    ----------
    text: str
    sep: str or None
        symbols separator; if None, each character is a symbol

    Returns
    -------
    tuple of str
    """
    if text == "":
        return ()
    if sep is None:
        return tuple(text)
    return tuple(text.split(sep))


def check_word(word, symbols):
    """
    Check that all symbols of a word belong to a symbol set.

    Parameters
    ----------
    word: str or typing.Sequence[str]
    symbols: typing.Container[str]

    Returns
    -------
    tuple of str

    Raises
    ------
    UnknownSymbolError
    """
    word = to_word(word)
    for symbol in word:
        if symbol not in symbols:
            raise UnknownSymbolError(f"unknown symbol {symbol!r} in word {word!r}")
    return word
