"""
Machine base module.

Every machine evaluates words through the same small protocol (dev api):
 - machine._dev_start(): state before the first input symbol
 - machine._dev_advance(state, symbol): state after reading one symbol
 - machine._dev_finish(state): acceptance value of the word read so far
This lets enumerations share prefixes (one step per enumerated word) and lets comparison tools treat every machine
kind alike.
"""

import collections
import logging
from concurrent.futures import ThreadPoolExecutor

from ..conf import CONF
from ..exceptions import AlphabetMismatchError, InternalConsistencyError
from ..quantum_ops.operation import QuantumOperation, SuperOperator, validate_operation
from ..util import check_enumeration, iter_words
from .alphabet import Alphabet, END_MARKERS, check_word

logger = logging.getLogger(__name__)


def clamp_probability(value, name="probability"):
    """
    Clamp a computed probability to [0, 1].

    Parameters
    ----------
    value: float or complex
        imaginary part (round-off) is dropped
    name: str
        used in messages

    Returns
    -------
    float

    Raises
    ------
    InternalConsistencyError
        if value is further than CONF.probability_error_tol from [0, 1]
    """
    value = complex(value).real
    if value < -CONF.probability_error_tol or value > 1 + CONF.probability_error_tol:
        raise InternalConsistencyError(f"{name} out of range: {value}")
    if value < -CONF.probability_tol or value > 1 + CONF.probability_tol:
        logger.warning(f"{name} slightly out of range ({value}), clamping to [0, 1]")
    return min(max(value, 0.), 1.)


class Machine:
    """
    Base class of executable machines.

    Parameters
    ----------
    alphabet: qfaplus.automata.alphabet.Alphabet or typing.Iterable[str]
    name: str or None
    """

    kind = None

    def __init__(self, alphabet, name=None):
        self._alphabet = Alphabet(alphabet)
        self.name = name

    # --------------------------------------------- dev api ------------------------------------------------------------
    def _dev_start(self):
        raise NotImplementedError

    def _dev_advance(self, state, symbol):
        raise NotImplementedError

    def _dev_finish(self, state):
        raise NotImplementedError

    def _dev_outcomes(self, state):
        return collections.OrderedDict(value=self._dev_finish(state))

    # --------------------------------------------- public api ---------------------------------------------------------
    @property
    def alphabet(self):
        """
        Get input alphabet (end-markers excluded).

        Returns
        -------
        qfaplus.automata.alphabet.Alphabet
        """
        return self._alphabet

    def validate(self, tol=None):
        """
        Validate machine.

        Parameters
        ----------
        tol: float or None

        Returns
        -------
        qfaplus.quantum_ops.validation.ValidationReport
        """
        raise NotImplementedError

    def get_value(self, word):
        """
        Get the acceptance value of a word over the input alphabet.

        This is the value compared by equivalence and recognition tools.

        Parameters
        ----------
        word: str or typing.Sequence[str]

        Returns
        -------
        float or complex
        """
        return self._dev_finish(self._run(word))

    def get_outcomes(self, word):
        """
        Get all outcomes of a word (for example accept/reject/continue for measure-many machines).

        Parameters
        ----------
        word: str or typing.Sequence[str]

        Returns
        -------
        collections.OrderedDict
        """
        return self._dev_outcomes(self._run(word))

    def _run(self, word):
        state = self._dev_start()
        for symbol in check_word(word, self._alphabet):
            state = self._dev_advance(state, symbol)
        return state

    def __repr__(self):
        """
        Repr.

        Returns
        -------
        str
        """
        name = "" if self.name is None else f" {self.name}"
        return f"<{self.__class__.__name__}{name} over {{{', '.join(self._alphabet)}}}>"


def iter_word_values(machine, max_len, outcomes=False):
    """
    Iterate on all words of length <= max_len with their values, sharing prefixes.

    Words come in length-then-lexicographic order (alphabet order).

    Parameters
    ----------
    machine: Machine
    max_len: int
    outcomes: bool, default False
        if True, yields outcome dicts instead of acceptance values

    Returns
    -------
    typing.Iterator[(tuple of str, float or complex or collections.OrderedDict)]
    """
    check_enumeration(len(machine.alphabet), max_len)
    finish = machine._dev_outcomes if outcomes else machine._dev_finish
    frontier = [((), machine._dev_start())]
    for length in range(max_len + 1):
        for word, state in frontier:
            yield word, finish(state)
        if length == max_len:
            break
        frontier = [
            (word + (symbol,), machine._dev_advance(state, symbol))
            for word, state in frontier
            for symbol in machine.alphabet
        ]


def evaluate_words(machine, max_len, outcomes=False, max_workers=None):
    """
    Evaluate all words of length <= max_len, sequentially or in a thread pool.

    Parameters
    ----------
    machine: Machine
    max_len: int
    outcomes: bool, default False
    max_workers: int or None
        default CONF.max_workers; None or 1 means sequential prefix-sharing evaluation

    Returns
    -------
    list of (tuple of str, float or complex or collections.OrderedDict)
        in length-then-lexicographic order, whatever the number of workers
    """
    max_workers = CONF.max_workers if max_workers is None else max_workers
    if max_workers is None or max_workers <= 1:
        return list(iter_word_values(machine, max_len, outcomes=outcomes))
    words = list(iter_words(machine.alphabet.symbols, max_len))
    function = machine.get_outcomes if outcomes else machine.get_value
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(zip(words, executor.map(function, words)))


def order_by_symbols(mapping, symbols):
    """
    Reorder a symbol-keyed mapping: alphabet symbols in declared order, then end-markers, then unknown keys.

    Parameters
    ----------
    mapping: dict
    symbols: typing.Iterable[str]

    Returns
    -------
    collections.OrderedDict
    """
    ordered = collections.OrderedDict(
        (symbol, mapping[symbol]) for symbol in tuple(symbols) + END_MARKERS if symbol in mapping)
    # unknown keys are kept so that validation can report them
    ordered.update((symbol, value) for symbol, value in mapping.items() if symbol not in ordered)
    return ordered


def prepare_operations(ops, trace_preserving=True, symbols=None):
    """
    Convert a {symbol: operation or Kraus list} mapping to operations (no validation).

    Parameters
    ----------
    ops: dict
    trace_preserving: bool, default True
        if True, QuantumOperation objects are built, else SuperOperator objects
    symbols: typing.Iterable[str] or None
        if given, operations are ordered as these symbols (see order_by_symbols)

    Returns
    -------
    collections.OrderedDict
    """
    if symbols is not None:
        ops = order_by_symbols(ops, symbols)
    prepared = collections.OrderedDict()
    for symbol, op in ops.items():
        if trace_preserving:
            if not isinstance(op, QuantumOperation):
                op = QuantumOperation(op, check=False)
        elif not isinstance(op, SuperOperator):
            op = SuperOperator(op)
        prepared[symbol] = op
    return prepared


def check_operations(ops, symbols, dim, report, tol=None):
    """
    Add operations checks to a report: one operation per symbol, dimensions, completeness when trace-preserving.

    Parameters
    ----------
    ops: dict
        {symbol: qfaplus.quantum_ops.operation.SuperOperator}
    symbols: typing.Sequence[str]
        expected symbols
    dim: int
    report: qfaplus.quantum_ops.validation.ValidationReport
    tol: float or None
    """
    missing = [s for s in symbols if s not in ops]
    extra = [s for s in ops if s not in symbols]
    if len(missing) > 0:
        report.add_failure("operations", f"missing operations for symbols {missing}")
    if len(extra) > 0:
        report.add_failure("operations", f"operations given for unknown symbols {extra}")
    for symbol, op in ops.items():
        if op.dim != dim:
            report.add_failure(f"E_{symbol} dimension", f"expected {dim}, got {op.dim}")
            continue
        report.extend(validate_operation(op, tol=tol), prefix=f"E_{symbol} ")


def check_alphabets(*machines):
    """
    Check that machines share the same alphabet (same symbols, same order).

    Parameters
    ----------
    machines: Machine

    Returns
    -------
    qfaplus.automata.alphabet.Alphabet

    Raises
    ------
    AlphabetMismatchError
    """
    alphabet = machines[0].alphabet
    for machine in machines[1:]:
        if machine.alphabet != alphabet:
            raise AlphabetMismatchError(f"alphabets differ: {alphabet!r} and {machine.alphabet!r}")
    return alphabet
