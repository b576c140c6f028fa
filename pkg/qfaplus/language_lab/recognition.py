"""
Bounded-error recognition.

A machine recognizes a language L with cut-point lambda and margin epsilon if it accepts words of L with probability
>= lambda + epsilon and other words with probability <= lambda - epsilon. Checks run on all words up to a length
bound, classified by a reference DFA.
"""

import collections
import logging

import pandas as pd

from ..conf import CONF
from ..automata.alphabet import to_word
from ..automata.machine import check_alphabets, evaluate_words, iter_word_values
from ..util import format_word

logger = logging.getLogger(__name__)


def _witness_to_json_data(witness, sep):
    if witness is None:
        return None
    word, value = witness
    return collections.OrderedDict((("word", format_word(word, sep)), ("value", value)))


def _extremes(machine, reference, max_len, skip=None, max_workers=None):
    """
    Get (min over in-language words, max over out-of-language words), as (word, value) pairs or None.

    Ties are broken by length-then-lexicographic order (first word wins).
    """
    check_alphabets(machine, reference)
    skip = set() if skip is None else {to_word(w) for w in skip}
    values = evaluate_words(machine, max_len, max_workers=max_workers)
    worst_in, worst_out = None, None
    for (word, value), (_, membership) in zip(values, iter_word_values(reference, max_len)):
        if word in skip:
            continue
        if membership >= .5:
            if worst_in is None or value < worst_in[1]:
                worst_in = (word, value)
        elif worst_out is None or value > worst_out[1]:
            worst_out = (word, value)
    return worst_in, worst_out


class RecognitionReport:
    """
    Bounded-error recognition report.

    Parameters
    ----------
    lambda_: float
        cut-point
    epsilon: float
        margin
    max_len: int
    worst_in: (tuple of str, float) or None
        in-language word with minimal acceptance (None if no in-language word was checked)
    worst_out: (tuple of str, float) or None
        out-of-language word with maximal acceptance
    """

    def __init__(self, lambda_, epsilon, max_len, worst_in, worst_out):
        self.lambda_ = lambda_
        self.epsilon = epsilon
        self.max_len = max_len
        self.worst_in = worst_in
        self.worst_out = worst_out

    @property
    def passed(self):
        """
        Check recognition: worst_in >= lambda + epsilon and worst_out <= lambda - epsilon (up to CONF.margin_slack).

        Returns
        -------
        bool
        """
        slack = CONF.margin_slack
        in_ok = self.worst_in is None or self.worst_in[1] >= self.lambda_ + self.epsilon - slack
        out_ok = self.worst_out is None or self.worst_out[1] <= self.lambda_ - self.epsilon + slack
        return in_ok and out_ok

    def __repr__(self):
        """
        Repr.

        Returns
        -------
        str
        """
        return (f"<RecognitionReport lambda={self.lambda_}, epsilon={self.epsilon}, max_len={self.max_len}: "
                f"{'pass' if self.passed else 'fail'}>")

    def to_json_data(self, sep=""):
        """
        Get json data.

        Parameters
        ----------
        sep: str
            symbols separator of witness words

        Returns
        -------
        collections.OrderedDict
            keys: lambda, epsilon, worst_in, worst_out, pass
        """
        return collections.OrderedDict((
            ("lambda", self.lambda_),
            ("epsilon", self.epsilon),
            ("worst_in", _witness_to_json_data(self.worst_in, sep)),
            ("worst_out", _witness_to_json_data(self.worst_out, sep)),
            ("pass", self.passed)
        ))


def check_bounded_error(machine, reference, lambda_, epsilon, max_len, skip=None, max_workers=None):
    """
    Check bounded-error recognition of the language of a DFA on all words of length <= max_len.

    Parameters
    ----------
    machine: qfaplus.automata.machine.Machine
    reference: qfaplus.automata.classical.DFA
    lambda_: float
        cut-point, in (0, 1]
    epsilon: float
        margin, > 0
    max_len: int
    skip: typing.Iterable[str or typing.Sequence[str]] or None
        words left out of the check
    max_workers: int or None

    Returns
    -------
    RecognitionReport

    Raises
    ------
    ValueError
        invalid lambda or epsilon
    EnumerationGuardError
    """
    if not 0 < lambda_ <= 1:
        raise ValueError(f"lambda must be in (0, 1], got {lambda_}")
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    worst_in, worst_out = _extremes(machine, reference, max_len, skip=skip, max_workers=max_workers)
    report = RecognitionReport(lambda_, epsilon, max_len, worst_in, worst_out)
    logger.info(f"{machine!r} vs {reference!r}: {report!r}")
    return report


class MarginScan:
    """
    Best cut-point and margin separating a language from its complement.

    Parameters
    ----------
    worst_in: (tuple of str, float) or None
    worst_out: (tuple of str, float) or None

    Notes
    -----
    With a the minimal in-language acceptance (1 if no in-language word) and b the maximal out-of-language acceptance
    (0 if none): separating iff a > b, then lambda = (a + b) / 2 and epsilon = (a - b) / 2. Otherwise lambda and
    epsilon are None and worst_in, worst_out are the overlapping witnesses.
    """

    def __init__(self, worst_in, worst_out):
        self.worst_in = worst_in
        self.worst_out = worst_out
        a = 1. if worst_in is None else worst_in[1]
        b = 0. if worst_out is None else worst_out[1]
        self.separating = a - b > CONF.margin_slack
        self.lambda_ = (a + b) / 2 if self.separating else None
        self.epsilon = (a - b) / 2 if self.separating else None

    def __repr__(self):
        """
        Repr.

        Returns
        -------
        str
        """
        if self.separating:
            return f"<MarginScan lambda={self.lambda_:.6g}, epsilon={self.epsilon:.6g}>"
        return f"<MarginScan not separating, witnesses {self.worst_in!r} and {self.worst_out!r}>"

    def to_json_data(self, sep=""):
        """
        Get json data.

        Parameters
        ----------
        sep: str

        Returns
        -------
        collections.OrderedDict
        """
        return collections.OrderedDict((
            ("lambda", self.lambda_),
            ("epsilon", self.epsilon),
            ("separating", self.separating),
            ("worst_in", _witness_to_json_data(self.worst_in, sep)),
            ("worst_out", _witness_to_json_data(self.worst_out, sep))
        ))


def margin_scan(machine, reference, max_len, skip=None, max_workers=None):
    """
    Find the cut-point maximizing the recognition margin on all words of length <= max_len.

    Parameters
    ----------
    machine: qfaplus.automata.machine.Machine
    reference: qfaplus.automata.classical.DFA
    max_len: int
    skip: typing.Iterable[str or typing.Sequence[str]] or None
    max_workers: int or None

    Returns
    -------
    MarginScan
    """
    return MarginScan(*_extremes(machine, reference, max_len, skip=skip, max_workers=max_workers))


def acceptance_table(machine, max_len, sep="", max_workers=None):
    """
    Get outcomes of all words of length <= max_len.

    Parameters
    ----------
    machine: qfaplus.automata.machine.Machine
    max_len: int
    sep: str
        symbols separator used in the index
    max_workers: int or None

    Returns
    -------
    pandas.DataFrame
        index: word, columns: length and the machine outcomes (accept/reject/continue for measure-many machines,
        accept/reject for measure-once machines, value otherwise)
    """
    rows = evaluate_words(machine, max_len, outcomes=True, max_workers=max_workers)
    df = pd.DataFrame.from_records(
        [collections.OrderedDict(length=len(word), **outcomes) for word, outcomes in rows],
        index=[format_word(word, sep) for word, _ in rows]
    )
    df.index.name = "word"
    return df
