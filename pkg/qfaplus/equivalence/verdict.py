"""Equivalence verdict module."""

import collections

from ..util import format_word


class EquivalenceVerdict:
    """
    Outcome of an equivalence decision.

    Parameters
    ----------
    equivalent: bool
    counterexample: tuple of str or None
        word where the machines differ, required iff not equivalent
    value_gap: float or None
        |f_1(w) - f_2(w)| at the counterexample
    basis_size: int
        size of the spanning basis built by the decision (0 for brute force)
    words_explored: int
    tolerance: float
    method: str
    """

    def __init__(self, equivalent, counterexample=None, value_gap=None, basis_size=0, words_explored=0,
                 tolerance=None, method=None):
        if equivalent != (counterexample is None):
            raise ValueError("a counterexample must be given if and only if machines are not equivalent")
        self.equivalent = bool(equivalent)
        self.counterexample = None if counterexample is None else tuple(counterexample)
        self.value_gap = None if value_gap is None else float(value_gap)
        self.basis_size = basis_size
        self.words_explored = words_explored
        self.tolerance = tolerance
        self.method = method

    def __bool__(self):
        """
        Truth value is the verdict.

        Returns
        -------
        bool
        """
        return self.equivalent

    def __repr__(self):
        """
        Repr.

        Returns
        -------
        str
        """
        if self.equivalent:
            return f"<EquivalenceVerdict equivalent (basis size {self.basis_size}, tol {self.tolerance})>"
        return (f"<EquivalenceVerdict not equivalent, counterexample {format_word(self.counterexample, ' ')!r}, "
                f"gap {self.value_gap:.6g}>")

    def to_json_data(self, sep=""):
        """
        Get json data.

        Parameters
        ----------
        sep: str
            symbols separator of the counterexample

        Returns
        -------
        collections.OrderedDict
            keys: verdict, counterexample, gap, basis_size, tolerance
        """
        return collections.OrderedDict((
            ("verdict", "equivalent" if self.equivalent else "not-equivalent"),
            ("counterexample", None if self.counterexample is None else format_word(self.counterexample, sep)),
            ("gap", self.value_gap),
            ("basis_size", self.basis_size),
            ("tolerance", self.tolerance)
        ))
