import contextlib
import io
import json
import os
import tempfile
import unittest
from unittest import mock

from qfaplus import run_cli, load_machine, get_fixture_path, InternalConsistencyError, MO1gQFA, MOLM, \
    BilinearMachine, MM1gQFA
from qfaplus.version import version
from tests.resources import Resources

FOOTNOTE = get_fixture_path("footnote2")
FOOTNOTE_B_ACCEPTING = get_fixture_path("footnote2_b_accepting")
AB_STAR = get_fixture_path("ab_star_dfa")
SWAP_PA = get_fixture_path("swap_pa")


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        code = run_cli(list(argv))
    return code, stdout.getvalue(), stderr.getvalue()


class CliTest(unittest.TestCase):
    def setUp(self):
        self.dir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.dir.cleanup()

    def out_path(self, name):
        return os.path.join(self.dir.name, name)

    def test_version(self):
        code, out, _ = run("--version")
        self.assertEqual(0, code)
        self.assertIn(version, out)

    def test_validate(self):
        code, out, _ = run("validate", FOOTNOTE)
        self.assertEqual(0, code)
        code, out, _ = run("validate", Resources.Json.non_trace_preserving, "--json")
        self.assertEqual(2, code)
        self.assertFalse(json.loads(out)["passed"])

    def test_accept(self):
        code, out, _ = run("accept", FOOTNOTE, "aa", "--json")
        self.assertEqual(0, code)
        json_data = json.loads(out)
        self.assertEqual(["word", "accept", "reject", "continue"], list(json_data))
        self.assertAlmostEqual(.75, json_data["accept"], delta=1e-12)

        code, out, _ = run("accept", FOOTNOTE, "a")
        self.assertEqual(0, code)
        self.assertTrue(out.startswith("accept=0.5 reject=0.5 continue="))

        code, out, _ = run("accept", FOOTNOTE, "--empty", "--json")
        self.assertAlmostEqual(1, json.loads(out)["accept"], delta=1e-12)

        code, out, _ = run("accept", AB_STAR, "ab")
        self.assertEqual("value=1\n", out)

    def test_accept_separator(self):
        code, out, _ = run("--sep", ",", "accept", SWAP_PA, "a,a", "--json")
        self.assertEqual(0, code)
        json_data = json.loads(out)
        self.assertEqual("a,a", json_data["word"])
        self.assertEqual(0, json_data["value"])

    def test_accept_errors(self):
        self.assertEqual(1, run("accept", FOOTNOTE, "ac")[0])
        self.assertEqual(1, run("accept", FOOTNOTE)[0])
        self.assertEqual(1, run("accept", FOOTNOTE, "a", "--empty")[0])
        self.assertEqual(2, run("accept", self.out_path("missing.json"), "a")[0])
        self.assertEqual(2, run("accept", Resources.Json.bad_json, "a")[0])
        self.assertEqual(2, run("accept", Resources.Json.non_trace_preserving, "a")[0])

    def test_usage_errors(self):
        self.assertEqual(1, run()[0])
        self.assertEqual(1, run("unknown-command")[0])
        self.assertEqual(1, run("table", FOOTNOTE)[0])

    def test_table(self):
        code, out, _ = run("table", FOOTNOTE, "--max-len", "2", "--json")
        self.assertEqual(0, code)
        rows = json.loads(out)
        self.assertEqual(7, len(rows))
        self.assertEqual("aa", rows[3]["word"])
        self.assertAlmostEqual(.75, rows[3]["accept"], delta=1e-12)
        code, out, _ = run("table", AB_STAR, "--max-len", "1", "--workers", "2")
        self.assertEqual(0, code)
        self.assertIn("value", out)

    def test_guard(self):
        self.assertEqual(4, run("table", Resources.Json.big_alphabet_dfa, "--max-len", "8")[0])
        self.assertEqual(4, run("equiv", AB_STAR, AB_STAR, "--method", "brute", "--k", "30")[0])

    def test_internal_consistency(self):
        with mock.patch("qfaplus.cli.acceptance_table", side_effect=InternalConsistencyError("out of range")):
            self.assertEqual(3, run("table", FOOTNOTE, "--max-len", "1")[0])

    def test_compile(self):
        path = self.out_path("footnote-molm.json")
        code, out, _ = run("compile", FOOTNOTE, "--to", "molm", "-o", path)
        self.assertEqual(0, code)
        self.assertEqual(os.path.abspath(path), out.strip())
        molm = load_machine(path)
        self.assertIsInstance(molm, MOLM)
        self.assertAlmostEqual(.5, molm.accept_prob("¢a$"), delta=1e-12)

        code, out, _ = run("accept", path, "¢aa$", "--json")
        self.assertAlmostEqual(.75, json.loads(out)["value"], delta=1e-12)

        path = self.out_path("footnote-blm.json")
        self.assertEqual(0, run("compile", FOOTNOTE, "--to", "blm", "-o", path)[0])
        blm = load_machine(path)
        self.assertIsInstance(blm, BilinearMachine)
        self.assertAlmostEqual(.75, blm.get_value("aa").real, delta=1e-9)

        self.assertEqual(1, run("compile", AB_STAR, "--to", "molm", "-o", path)[0])

    def test_default_output_name(self):
        cwd = os.getcwd()
        try:
            os.chdir(self.dir.name)
            code, out, _ = run("build", "embed-dfa", AB_STAR)
        finally:
            os.chdir(cwd)
        self.assertEqual(0, code)
        self.assertEqual("ab-star-dfa-embed-dfa.json", os.path.basename(out.strip()))
        self.assertTrue(os.path.isfile(out.strip()))

    def test_build(self):
        swap_mo = self.out_path("swap-mo.json")
        self.assertEqual(0, run("build", "embed-pa", SWAP_PA, "-o", swap_mo)[0])
        self.assertIsInstance(load_machine(swap_mo), MO1gQFA)

        complement = self.out_path("complement.json")
        self.assertEqual(0, run("build", "complement", swap_mo, "-o", complement)[0])
        self.assertAlmostEqual(0, load_machine(complement).get_value("a"), delta=1e-12)

        mix = self.out_path("mix.json")
        self.assertEqual(0, run("build", "mix", swap_mo, complement, "--weights", ".5", ".5", "-o", mix)[0])
        self.assertAlmostEqual(.5, load_machine(mix).get_value("aaa"), delta=1e-12)
        self.assertEqual(1, run("build", "mix", swap_mo, complement, "--weights", "1", "-o", mix)[0])

        product = self.out_path("product.json")
        self.assertEqual(0, run("build", "product", swap_mo, swap_mo, "-o", product)[0])
        self.assertAlmostEqual(1, load_machine(product).get_value("a"), delta=1e-12)

        lifted = self.out_path("lifted.json")
        self.assertEqual(0, run("build", "lift-mm", swap_mo, "-o", lifted)[0])
        self.assertIsInstance(load_machine(lifted), MM1gQFA)

        self.assertEqual(1, run("build", "complement", AB_STAR, "-o", complement)[0])
        self.assertEqual(1, run("build", "embed-pa", AB_STAR, "-o", complement)[0])

    def test_equiv(self):
        code, out, _ = run("equiv", FOOTNOTE, FOOTNOTE)
        self.assertEqual(0, code)
        self.assertTrue(out.startswith("equivalent"))

        for method in ("direct", "blm"):
            with self.subTest(method=method):
                code, out, _ = run("equiv", FOOTNOTE, FOOTNOTE_B_ACCEPTING, "--method", method, "--json")
                self.assertEqual(0, code)
                json_data = json.loads(out)
                self.assertEqual("not-equivalent", json_data["verdict"])
                self.assertEqual("b", json_data["counterexample"])

        code, out, _ = run("equiv", Resources.Json.long_words_dfa, Resources.Json.reject_all_dfa, "--method", "brute",
                           "--k", "2", "--json")
        self.assertEqual("equivalent", json.loads(out)["verdict"])
        self.assertEqual(1, run("equiv", AB_STAR, AB_STAR, "--method", "brute")[0])
        self.assertEqual(1, run("equiv", AB_STAR, SWAP_PA)[0])

    def test_check_language(self):
        code, out, _ = run("check-language", FOOTNOTE, AB_STAR, "--lambda", ".25", "--epsilon", ".24", "--max-len",
                           "7", "--skip-empty")
        self.assertEqual(0, code)
        self.assertEqual("pass", out.strip().splitlines()[-1])

        code, out, _ = run("check-language", FOOTNOTE, AB_STAR, "--lambda", ".25", "--epsilon", ".24", "--max-len",
                           "7", "--json")
        self.assertEqual(0, code)
        json_data = json.loads(out)
        self.assertFalse(json_data["pass"])
        self.assertEqual("", json_data["worst_out"]["word"])

        self.assertEqual(1, run("check-language", FOOTNOTE, SWAP_PA, "--lambda", ".5", "--epsilon", ".1",
                                "--max-len", "2")[0])
        self.assertEqual(1, run("check-language", FOOTNOTE, AB_STAR, "--lambda", "2", "--epsilon", ".1",
                                "--max-len", "2")[0])
