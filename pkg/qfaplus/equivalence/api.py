"""equivalence api."""

__all__ = ["EquivalenceVerdict", "SpanClosure", "reachable_basis", "equivalent_mo", "equivalent_mm", "equivalent",
           "k_equivalent_bruteforce"]

from .verdict import EquivalenceVerdict
from .span import SpanClosure, reachable_basis
from .decide import equivalent_mo, equivalent_mm, equivalent
from .brute_force import k_equivalent_bruteforce
