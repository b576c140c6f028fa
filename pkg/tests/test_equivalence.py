import collections
import unittest

import numpy as np

from qfaplus import MO1gQFA, EquivalenceVerdict, AlphabetMismatchError, EnumerationGuardError, reachable_basis, \
    equivalent_mo, equivalent_mm, equivalent, k_equivalent_bruteforce, complement, convex_combination, pa_to_mo, \
    dfa_to_pa, mo_to_mm, mo_to_blm, load_machine
from qfaplus.automata.api import footnote_mm, footnote_b_accepting_mm, ab_star_dfa, swap_pa
from tests.resources import Resources
from tests.util import get_rng, random_mo, random_mm, random_density, random_kraus, random_projector, \
    permuted_copy, constant_mo, parity_mo

METHODS = ("direct", "blm")


def _rotation_mo(angle):
    c, s = np.cos(angle), np.sin(angle)
    return MO1gQFA.from_unitaries("a", np.diag([1, 0]), {"a": np.array([[c, -s], [s, c]])}, np.diag([1, 0]))


class ReachableBasisTest(unittest.TestCase):
    def test_constant(self):
        basis, words = reachable_basis(constant_mo("ab", True))
        self.assertEqual(1, len(basis))
        self.assertEqual([()], words)

    def test_identity_operations(self):
        ops = {"a": [np.eye(3)], "b": [np.eye(3)]}
        m = MO1gQFA("ab", random_density(3, get_rng()), ops, np.diag([1, 0, 0]))
        self.assertEqual(1, len(reachable_basis(m)[0]))

    def test_swap(self):
        basis, words = reachable_basis(pa_to_mo(swap_pa()))
        self.assertEqual(2, len(basis))
        self.assertEqual([(), ("a",)], words)

    def test_bound(self):
        rng = get_rng()
        for _ in range(200):
            dim = int(rng.integers(1, 4))
            basis, words = reachable_basis(random_mo(dim, rng))
            self.assertLessEqual(len(basis), dim ** 2)
            self.assertEqual(len(basis), len(words))
            self.assertEqual(sorted(words, key=lambda w: (len(w), w)), words)


class VerdictTest(unittest.TestCase):
    def test_consistency(self):
        with self.assertRaises(ValueError):
            EquivalenceVerdict(True, counterexample=("a",))
        with self.assertRaises(ValueError):
            EquivalenceVerdict(False)

    def test_json_data(self):
        verdict = EquivalenceVerdict(False, counterexample=("a", "b"), value_gap=.5, basis_size=3, tolerance=1e-7)
        self.assertFalse(verdict)
        self.assertEqual(
            collections.OrderedDict((
                ("verdict", "not-equivalent"), ("counterexample", "ab"), ("gap", .5), ("basis_size", 3),
                ("tolerance", 1e-7))),
            verdict.to_json_data())
        self.assertEqual("a b", verdict.to_json_data(sep=" ")["counterexample"])
        verdict = EquivalenceVerdict(True, basis_size=1, tolerance=1e-7)
        self.assertTrue(verdict)
        self.assertEqual("equivalent", verdict.to_json_data()["verdict"])
        self.assertIsNone(verdict.to_json_data()["counterexample"])


class EquivalentMOTest(unittest.TestCase):
    def test_self(self):
        rng = get_rng()
        for method in METHODS:
            m = random_mo(3, rng)
            with self.subTest(method=method):
                verdict = equivalent_mo(m, m, method=method)
                self.assertTrue(verdict.equivalent)
                self.assertIsNone(verdict.counterexample)
                self.assertGreaterEqual(verdict.basis_size, 1)

    def test_permuted(self):
        rng = get_rng()
        m = random_mo(3, rng)
        for method in METHODS:
            with self.subTest(method=method):
                self.assertTrue(equivalent_mo(m, permuted_copy(m, (2, 0, 1)), method=method))

    def test_convex_self_combination(self):
        m = random_mo(2, get_rng())
        for method in METHODS:
            with self.subTest(method=method):
                self.assertTrue(equivalent_mo(m, convex_combination([m, m], [.4, .6]), method=method))

    def test_opposite_rotations(self):
        for method in METHODS:
            with self.subTest(method=method):
                self.assertTrue(equivalent_mo(_rotation_mo(.3), _rotation_mo(-.3), method=method))
                verdict = equivalent_mo(_rotation_mo(.3), _rotation_mo(.4), method=method)
                self.assertEqual(("a",), verdict.counterexample)

    def test_complement(self):
        m = random_mo(3, get_rng())
        for method in METHODS:
            with self.subTest(method=method):
                verdict = equivalent_mo(m, complement(m), method=method)
                self.assertFalse(verdict.equivalent)
                self.assertEqual((), verdict.counterexample)
                self.assertAlmostEqual(abs(1 - 2 * m.get_value("")), verdict.value_gap, delta=1e-10)

    def test_same_start_different_operations(self):
        rng = get_rng()
        rho0, p_acc = random_density(2, rng), random_projector(2, rng, rank=1)
        m1 = MO1gQFA("ab", rho0, {"a": random_kraus(2, rng), "b": random_kraus(2, rng)}, p_acc)
        m2 = MO1gQFA("ab", rho0, {"a": random_kraus(2, rng), "b": m1.ops["b"]}, p_acc)
        for method in METHODS:
            with self.subTest(method=method):
                verdict = equivalent_mo(m1, m2, method=method)
                self.assertEqual(("a",), verdict.counterexample)
                self.assertAlmostEqual(abs(m1.get_value("a") - m2.get_value("a")), verdict.value_gap, delta=1e-12)

    def test_alphabet_mismatch(self):
        with self.assertRaises(AlphabetMismatchError):
            equivalent_mo(constant_mo("ab", True), constant_mo("ba", True))

    def test_operations_out_of_alphabet_order(self):
        m, accept_all = parity_mo(), constant_mo("ab", True)
        for method in METHODS:
            with self.subTest(method=method):
                self.assertEqual(("a",), equivalent_mo(m, accept_all, method=method).counterexample)
        self.assertTrue(equivalent(mo_to_blm(m), m, method="blm"))
        self.assertEqual(("a",), equivalent(mo_to_blm(m), accept_all, method="blm").counterexample)

    def test_unknown_method(self):
        m = constant_mo("a", True)
        with self.assertRaises(ValueError):
            equivalent_mo(m, m, method="unknown")


class CompletenessTest(unittest.TestCase):
    def _check_against_brute_force(self, m1, m2):
        n1, n2 = m1.dim, m2.dim
        brute = k_equivalent_bruteforce(m1, m2, (n1 + n2) ** 2)
        for method, bound in (("direct", (n1 + n2) ** 2), ("blm", n1 ** 2 + n2 ** 2)):
            verdict = equivalent_mo(m1, m2, method=method)
            self.assertEqual(brute.equivalent, verdict.equivalent, msg=method)
            self.assertEqual(brute.counterexample, verdict.counterexample, msg=method)
            self.assertLessEqual(verdict.basis_size, bound, msg=method)
            if not verdict.equivalent:
                self.assertGreater(verdict.value_gap, verdict.tolerance, msg=method)

    def test_unary_random_pairs(self):
        rng = get_rng()
        for _ in range(60):
            n1, n2 = int(rng.integers(1, 4)), int(rng.integers(1, 4))
            m1, m2 = random_mo(n1, rng, symbols=("a",)), random_mo(n2, rng, symbols=("a",))
            self._check_against_brute_force(m1, m2)

    def test_unary_equivalent_pairs(self):
        rng = get_rng()
        for _ in range(5):
            m = random_mo(int(rng.integers(1, 4)), rng, symbols=("a",))
            self._check_against_brute_force(m, permuted_copy(m, list(reversed(range(m.dim)))))

    def test_unary_mm_pairs(self):
        rng = get_rng()
        for _ in range(30):
            n1, n2 = int(rng.integers(2, 4)), int(rng.integers(2, 4))
            m1, m2 = random_mm(n1, rng, symbols=("a",)), random_mm(n2, rng, symbols=("a",))
            brute = k_equivalent_bruteforce(m1, m2, (n1 + n2) ** 2)
            for method in METHODS:
                verdict = equivalent_mm(m1, m2, method=method)
                self.assertEqual(brute.equivalent, verdict.equivalent, msg=method)
                self.assertEqual(brute.counterexample, verdict.counterexample, msg=method)
                if not verdict.equivalent:
                    self.assertGreater(verdict.value_gap, verdict.tolerance)

    def test_binary_small_pairs(self):
        rng = get_rng()
        for _ in range(10):
            m1, m2 = random_mo(int(rng.integers(1, 3)), rng), random_mo(int(rng.integers(1, 3)), rng)
            self._check_against_brute_force(m1, m2)
        m = random_mo(2, rng)
        self._check_against_brute_force(m, permuted_copy(m, (1, 0)))

    def test_long_counterexample(self):
        long_words = load_machine(Resources.Json.long_words_dfa)
        reject_all = load_machine(Resources.Json.reject_all_dfa)
        brute = k_equivalent_bruteforce(long_words, reject_all, 3)
        for method in METHODS:
            with self.subTest(method=method):
                verdict = equivalent(long_words, reject_all, method=method)
                self.assertEqual(("a", "a", "a"), verdict.counterexample)
                self.assertEqual(brute.counterexample, verdict.counterexample)
                self.assertAlmostEqual(1, verdict.value_gap, delta=1e-12)

    def test_methods_agree(self):
        rng = get_rng()
        for _ in range(10):
            m1, m2 = random_mo(int(rng.integers(1, 4)), rng), random_mo(int(rng.integers(1, 4)), rng)
            direct, blm = equivalent_mo(m1, m2, method="direct"), equivalent_mo(m1, m2, method="blm")
            self.assertEqual(direct.equivalent, blm.equivalent)
            self.assertEqual(direct.counterexample, blm.counterexample)


class EquivalentMMTest(unittest.TestCase):
    def test_footnote(self):
        for method in METHODS:
            with self.subTest(method=method):
                self.assertTrue(equivalent_mm(footnote_mm(), footnote_mm(), method=method))
                verdict = equivalent_mm(footnote_mm(), footnote_b_accepting_mm(), method=method)
                self.assertEqual(("b",), verdict.counterexample)
                self.assertAlmostEqual(1, verdict.value_gap, delta=1e-9)

    def test_random_self(self):
        m = random_mm(3, get_rng())
        for method in METHODS:
            with self.subTest(method=method):
                self.assertTrue(equivalent_mm(m, m, method=method))

    def test_lifted_mo(self):
        rng = get_rng()
        for _ in range(5):
            m = random_mo(int(rng.integers(1, 3)), rng)
            for method in METHODS:
                with self.subTest(method=method):
                    self.assertTrue(equivalent(m, mo_to_mm(m), method=method))
                    self.assertFalse(equivalent(complement(m), mo_to_mm(m), method=method))


class EquivalentTest(unittest.TestCase):
    def test_classical(self):
        d = ab_star_dfa()
        p = dfa_to_pa(d)
        for method in METHODS:
            with self.subTest(method=method):
                self.assertTrue(equivalent(d, p, method=method))
                self.assertTrue(equivalent(d, pa_to_mo(p), method=method))

    def test_bilinear(self):
        p = dfa_to_pa(ab_star_dfa())
        self.assertTrue(equivalent(p.to_blm(), ab_star_dfa(), method="blm"))
        with self.assertRaises(ValueError):
            equivalent(p.to_blm(), p, method="direct")


class BruteForceTest(unittest.TestCase):
    def test_long_words(self):
        long_words = load_machine(Resources.Json.long_words_dfa)
        reject_all = load_machine(Resources.Json.reject_all_dfa)
        verdict = k_equivalent_bruteforce(long_words, reject_all, 2)
        self.assertTrue(verdict.equivalent)
        self.assertEqual(7, verdict.words_explored)
        verdict = k_equivalent_bruteforce(long_words, reject_all, 3)
        self.assertEqual(("a", "a", "a"), verdict.counterexample)
        self.assertEqual("brute", verdict.method)

    def test_empty_word(self):
        verdict = k_equivalent_bruteforce(constant_mo("ab", True), constant_mo("ab", False), 0)
        self.assertEqual((), verdict.counterexample)
        self.assertEqual(1, verdict.value_gap)

    def test_guard(self):
        big = load_machine(Resources.Json.big_alphabet_dfa)
        with self.assertRaises(EnumerationGuardError):
            k_equivalent_bruteforce(big, big, 8)
        self.assertTrue(k_equivalent_bruteforce(big, big, 2))

    def test_monotone_in_length(self):
        rng = get_rng()
        m = random_mo(2, rng)
        pairs = [
            (load_machine(Resources.Json.long_words_dfa), load_machine(Resources.Json.reject_all_dfa)),
            (_rotation_mo(.3), _rotation_mo(.4)),
            (random_mo(2, rng), random_mo(3, rng)),
            (m, permuted_copy(m, (1, 0))),
            (parity_mo(), constant_mo("ab", True))
        ]
        for a, b in pairs:
            first_failure = None
            for k in range(6):
                verdict = k_equivalent_bruteforce(a, b, k)
                if first_failure is None:
                    if not verdict.equivalent:
                        first_failure = verdict
                        self.assertEqual(k, len(verdict.counterexample))
                    continue
                self.assertFalse(verdict.equivalent, msg=k)
                self.assertEqual(first_failure.counterexample, verdict.counterexample, msg=k)
                self.assertEqual(first_failure.words_explored, verdict.words_explored, msg=k)

    def test_logs_verdict(self):
        with self.assertLogs("qfaplus.equivalence.brute_force", level="INFO") as cm:
            k_equivalent_bruteforce(constant_mo("ab", True), constant_mo("ab", False), 2)
        self.assertIn("machines differ on ()", cm.output[0])
