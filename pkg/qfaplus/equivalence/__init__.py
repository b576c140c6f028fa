"""Equivalence of machines: reachable-state span closure, counterexamples, brute-force oracle."""
