import unittest

import numpy as np

from qfaplus import MOLM, ProjectorSet, AlphabetMismatchError, complement, convex_combination, product, pa_to_mo, \
    dfa_to_pa, mo_to_mm, decompose_kraus_blocks, validate_kraus_blocks, mm_to_molm, mo_to_blm, molm_accept_prob, \
    mo_accept_prob, pa_accept_prob, check_bounded_error
from qfaplus.linalg import min_eigenvalue, trace
from qfaplus.automata.api import iter_word_values, footnote_mm, ab_star_dfa, swap_pa, uniform_pa
from tests.util import get_rng, random_mo, random_mm, random_pa, random_kraus, constant_mo, parity_mo


def _assert_same_values(test_case, expected_machine, machine, max_len, delta):
    for (word, expected), (_, value) in zip(
            iter_word_values(expected_machine, max_len), iter_word_values(machine, max_len)):
        test_case.assertAlmostEqual(expected, complex(value).real, delta=delta, msg=word)


class ClosureTest(unittest.TestCase):
    def test_complement(self):
        rng = get_rng()
        for _ in range(5):
            m = random_mo(3, rng)
            c = complement(m)
            for (word, value), (_, c_value) in zip(iter_word_values(m, 4), iter_word_values(c, 4)):
                self.assertAlmostEqual(1, value + c_value, delta=1e-12, msg=word)

    def test_complement_name(self):
        m = constant_mo("a", True)
        m.name = "all"
        self.assertEqual("not-all", complement(m).name)
        self.assertEqual(0, complement(m).get_value("aa"))

    def test_convex_combination_constant(self):
        m = convex_combination([constant_mo("ab", True), constant_mo("ab", False)], [.5, .5])
        self.assertEqual(2, m.dim)
        for word, value in iter_word_values(m, 3):
            self.assertAlmostEqual(.5, value, delta=1e-12, msg=word)

    def test_convex_combination(self):
        rng = get_rng()
        m1, m2, m3 = random_mo(2, rng), random_mo(3, rng), random_mo(2, rng)
        m = convex_combination([m1, m2], [.3, .7])
        for word in m.alphabet.iter_words(3):
            self.assertAlmostEqual(
                .3 * m1.get_value(word) + .7 * m2.get_value(word), m.get_value(word), delta=1e-10, msg=word)
        m = convex_combination([m1, m2, m3], [.2, .3, .5])
        self.assertEqual(7, m.dim)
        for word in m.alphabet.iter_words(3):
            expected = .2 * m1.get_value(word) + .3 * m2.get_value(word) + .5 * m3.get_value(word)
            self.assertAlmostEqual(expected, m.get_value(word), delta=1e-10, msg=word)

    def test_convex_combination_errors(self):
        m = constant_mo("a", True)
        for weights in ([.5, .6], [1.2, -.2], [1.]):
            with self.subTest(weights=weights):
                with self.assertRaises(ValueError):
                    convex_combination([m, m], weights)
        with self.assertRaises(AlphabetMismatchError):
            convex_combination([m, constant_mo("b", True)], [.5, .5])

    def test_product(self):
        rng = get_rng()
        m1, m2 = random_mo(2, rng), random_mo(2, rng)
        m = product([m1, m2])
        self.assertEqual(4, m.dim)
        for word in m.alphabet.iter_words(3):
            self.assertAlmostEqual(m1.get_value(word) * m2.get_value(word), m.get_value(word), delta=1e-10)
        with self.assertRaises(AlphabetMismatchError):
            product([constant_mo("a", True), constant_mo("ab", True)])


class EmbeddingTest(unittest.TestCase):
    def test_pa_to_mo_examples(self):
        m = pa_to_mo(swap_pa())
        self.assertAlmostEqual(1, mo_accept_prob(m, "a"), delta=1e-12)
        self.assertAlmostEqual(0, mo_accept_prob(m, "aa"), delta=1e-12)
        m = pa_to_mo(uniform_pa())
        self.assertAlmostEqual(.5, mo_accept_prob(m, "a"), delta=1e-12)

    def test_pa_to_mo_random(self):
        rng = get_rng()
        for _ in range(20):
            p = random_pa(int(rng.integers(1, 5)), rng)
            m = pa_to_mo(p)
            self.assertAlmostEqual(pa_accept_prob(p, "abba"), mo_accept_prob(m, "abba"), delta=1e-12)
            _assert_same_values(self, p, m, 6, 1e-12)

    def test_dfa_to_pa(self):
        d = ab_star_dfa()
        p = dfa_to_pa(d)
        self.assertEqual(3, p.states_nb)
        _assert_same_values(self, d, p, 6, 0)
        m = pa_to_mo(p)
        _assert_same_values(self, d, m, 6, 1e-12)
        for word, value in iter_word_values(m, 6):
            self.assertAlmostEqual(round(value), value, delta=1e-12, msg=word)
        self.assertTrue(check_bounded_error(m, d, .5, .5, 6).passed)

    def test_mo_to_mm(self):
        rng = get_rng()
        for _ in range(10):
            m = random_mo(int(rng.integers(1, 4)), rng)
            mm = mo_to_mm(m)
            self.assertEqual(m.dim + 2, mm.dim)
            _assert_same_values(self, m, mm, 4, 1e-10)

    def test_logs_constructions(self):
        with self.assertLogs("qfaplus.transforms.embedding", level="INFO") as cm:
            mo_to_mm(pa_to_mo(dfa_to_pa(ab_star_dfa())))
        self.assertEqual(3, len(cm.output))


class SimulationTest(unittest.TestCase):
    def setUp(self):
        self.projectors = ProjectorSet.from_basis_labels(("non", "acc", "rej"))

    def test_decompose(self):
        e = np.arange(9).reshape(3, 3)
        e_non, e_acc, e_rej = decompose_kraus_blocks(e, self.projectors)
        np.testing.assert_array_equal([[0, 0, 0], [3, 0, 0], [6, 0, 0]], e_non)
        np.testing.assert_array_equal([[0, 1, 0], [0, 4, 0], [0, 7, 0]], e_acc)
        np.testing.assert_array_equal(e, e_non + e_acc + e_rej)

    def test_decompose_errors(self):
        with self.assertRaises(ValueError):
            decompose_kraus_blocks(np.eye(2), {"acc": np.diag([1, 0]), "rej": np.diag([0, 1])})

    def test_validate_kraus_blocks(self):
        rng = get_rng()
        for _ in range(10):
            m = random_mm(4, rng)
            for symbol, op in m.ops.items():
                report = validate_kraus_blocks(op.kraus, m.projectors, tol=1e-10)
                self.assertTrue(report.passed, msg=f"{symbol}: {report}")
        half = [np.eye(3) / 2]
        self.assertFalse(validate_kraus_blocks(half, self.projectors).passed)

    def test_footnote(self):
        molm = mm_to_molm(footnote_mm())
        self.assertIsInstance(molm, MOLM)
        self.assertTrue(molm.has_end_markers)
        self.assertAlmostEqual(.5, molm_accept_prob(molm, "¢a$"), delta=1e-12)
        self.assertAlmostEqual(0, molm_accept_prob(molm, "¢b$"), delta=1e-12)
        self.assertAlmostEqual(.75, molm_accept_prob(molm, "¢aa$"), delta=1e-12)

    def test_random_machines(self):
        rng = get_rng()
        for _ in range(50):
            m = random_mm(int(rng.integers(2, 5)), rng)
            molm = mm_to_molm(m)
            _assert_same_values(self, m, molm, 6, 1e-9)

    def test_running_state(self):
        # compiled machine states stay positive with unit trace along every run
        rng = get_rng()
        for _ in range(10):
            m = random_mm(int(rng.integers(2, 5)), rng)
            molm = mm_to_molm(m)
            for word in m.alphabet.iter_words(4):
                for state in (molm.get_state(("¢",) + word), molm.get_state(("¢",) + word + ("$",))):
                    self.assertGreaterEqual(min_eigenvalue(state), -1e-10, msg=word)
                    self.assertAlmostEqual(1, trace(state).real, delta=1e-9, msg=word)
                    self.assertAlmostEqual(0, trace(state).imag, delta=1e-9, msg=word)

    def test_explicit_end_markers(self):
        m = random_mm(3, get_rng())
        molm = mm_to_molm(m)
        for word in ("", "a", "abb", "baab"):
            expected = m.accept_prob(word)[0]
            self.assertAlmostEqual(expected, molm_accept_prob(molm, ("¢",) + tuple(word) + ("$",)), delta=1e-9)

    def test_kraus_count(self):
        m = random_mm(3, get_rng())
        molm = mm_to_molm(m)
        self.assertEqual(3 * len(m.ops["a"]), len(molm.ops["a"]))


class VectorizationTest(unittest.TestCase):
    def test_identity(self):
        b = mo_to_blm(constant_mo("a", True))
        self.assertEqual(1, b.states_nb)
        self.assertEqual(1, b.value("aaa"))

    def test_random_mo(self):
        rng = get_rng()
        for _ in range(10):
            m = random_mo(int(rng.integers(1, 4)), rng)
            b = mo_to_blm(m)
            self.assertEqual(m.dim ** 2, b.states_nb)
            for word, value in iter_word_values(b, 4):
                self.assertAlmostEqual(m.get_value(word), value.real, delta=1e-10, msg=word)
                self.assertAlmostEqual(0, value.imag, delta=1e-10, msg=word)

    def test_linear_machine(self):
        m = random_mm(2, get_rng())
        b = mo_to_blm(mm_to_molm(m))
        self.assertTrue(b.has_end_markers)
        _assert_same_values(self, m, b, 4, 1e-9)

    def test_non_trace_preserving(self):
        kraus = random_kraus(2, get_rng())
        m = MOLM("a", np.diag([1, 0]), {"a": [2 * k for k in kraus]}, np.eye(2))
        b = mo_to_blm(m)
        self.assertAlmostEqual(16, b.value("aa").real, delta=1e-9)

    def test_alphabet_order(self):
        m = parity_mo()
        b = mo_to_blm(m)
        self.assertEqual(m.alphabet, b.alphabet)
        self.assertEqual(("a", "b"), b.symbols)
        _assert_same_values(self, m, b, 3, 1e-12)
