"""
qfaplus command line interface.

Exit codes: 0 success, 1 usage error, 2 invalid machine or machine file, 3 internal consistency error (probability
out of range), 4 enumeration guard exceeded.
"""

import argparse
import collections
import json
import logging
import os
import sys

from slugify import slugify

from .exceptions import DimensionMismatchError, MachineValidationError, UnknownSymbolError, AlphabetMismatchError, \
    InternalConsistencyError, EnumerationGuardError, MachineFileError
from .automata.alphabet import END_MARKERS, parse_word
from .automata.classical import BilinearMachine, DFA, ProbabilisticAutomaton
from .automata.mm import MM1gQFA
from .automata.mo import MO1gQFA
from .automata.molm import MOLM
from .equivalence.brute_force import k_equivalent_bruteforce
from .equivalence.decide import equivalent, METHODS
from .language_lab.recognition import acceptance_table, check_bounded_error
from .machine_file.machine_file import MachineFile
from .transforms.closure import complement, convex_combination, product
from .transforms.embedding import pa_to_mo, dfa_to_pa, mo_to_mm
from .transforms.simulation import mm_to_molm
from .transforms.vectorization import mo_to_blm
from .util import format_number, format_word, to_json_number
from .version import version

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3
EXIT_GUARD = 4


class UsageError(Exception):
    """Invalid command line."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _load(path, check=True):
    return MachineFile.load(path).to_machine(check=check)


def _get_word(args):
    if args.empty:
        if args.word not in (None, ""):
            raise UsageError("--empty and a word can't be given together")
        return ()
    if args.word is None:
        raise UsageError("a word (or --empty) is required")
    return parse_word(args.word, sep=args.sep)


def _print_json(json_data):
    print(json.dumps(json_data, indent=2, ensure_ascii=False))


def _save(machine, args, suffix):
    path = args.output
    if path is None:
        path = f"{slugify(f'{machine.name or machine.kind} {suffix}')}.json"
    MachineFile.from_machine(machine).save(path)
    logger.info(f"{machine!r} written to {path}")
    print(os.path.abspath(path))


# --------------------------------------------------- commands ---------------------------------------------------------
def _validate(args):
    machine = _load(args.file, check=False)
    report = machine.validate()
    if args.json:
        _print_json(report.to_json_data())
    else:
        print(report)
    return EXIT_OK if report.passed else EXIT_INVALID


def _accept(args):
    machine = _load(args.file)
    word = _get_word(args)
    if isinstance(machine, (MOLM, BilinearMachine)) and any(s in END_MARKERS for s in word):
        # word given with its end-markers, read as given
        value = machine.accept_prob(word) if isinstance(machine, MOLM) else machine.value(word)
        outcomes = collections.OrderedDict(value=value)
    else:
        outcomes = machine.get_outcomes(word)
    if args.json:
        json_data = collections.OrderedDict(word=format_word(word, args.sep or ""))
        json_data.update((k, to_json_number(v)) for k, v in outcomes.items())
        _print_json(json_data)
    else:
        print(" ".join(f"{k}={format_number(v)}" for k, v in outcomes.items()))
    return EXIT_OK


def _table(args):
    machine = _load(args.file)
    df = acceptance_table(machine, args.max_len, sep=args.sep or "", max_workers=args.workers)
    if args.json:
        _print_json([
            collections.OrderedDict(
                [("word", word), ("length", int(row["length"]))] +
                [(column, to_json_number(row[column])) for column in df.columns if column != "length"])
            for word, row in df.iterrows()
        ])
    else:
        print(df.to_string(float_format=format_number))
    return EXIT_OK


def _compile(args):
    machine = _load(args.file)
    if args.to == "molm":
        if not isinstance(machine, MM1gQFA):
            raise UsageError(f"only measure-many machines can be compiled to molm, got {machine.kind}")
        _save(mm_to_molm(machine), args, "molm")
        return EXIT_OK
    if isinstance(machine, MM1gQFA):
        machine = mm_to_molm(machine)
    if not isinstance(machine, (MO1gQFA, MOLM)):
        raise UsageError(f"{machine.kind} machines can't be compiled to blm")
    _save(mo_to_blm(machine), args, "blm")
    return EXIT_OK


def _load_mo(path):
    machine = _load(path)
    if not isinstance(machine, MO1gQFA):
        raise UsageError(f"{path}: a mo1gqfa machine is required, got {machine.kind}")
    return machine


def _build(args):
    if args.construction == "complement":
        result = complement(_load_mo(args.file))
    elif args.construction == "mix":
        if len(args.weights) != len(args.files):
            raise UsageError(f"{len(args.files)} machines but {len(args.weights)} weights")
        result = convex_combination([_load_mo(path) for path in args.files], args.weights)
    elif args.construction == "product":
        result = product([_load_mo(path) for path in args.files])
    elif args.construction == "embed-pa":
        machine = _load(args.file)
        if not isinstance(machine, ProbabilisticAutomaton):
            raise UsageError(f"a pa machine is required, got {machine.kind}")
        result = pa_to_mo(machine)
    elif args.construction == "embed-dfa":
        machine = _load(args.file)
        if not isinstance(machine, DFA):
            raise UsageError(f"a dfa machine is required, got {machine.kind}")
        result = pa_to_mo(dfa_to_pa(machine))
    else:
        result = mo_to_mm(_load_mo(args.file))
    _save(result, args, args.construction)
    return EXIT_OK


def _equiv(args):
    m1, m2 = _load(args.file1), _load(args.file2)
    if args.method == "brute":
        if args.k is None:
            raise UsageError("--k is required by the brute method")
        verdict = k_equivalent_bruteforce(m1, m2, args.k, tol=args.tol)
    else:
        verdict = equivalent(m1, m2, method=args.method, tol=args.tol)
    if args.json:
        _print_json(verdict.to_json_data(sep=args.sep or ""))
    elif verdict.equivalent:
        print(f"equivalent (basis_size={verdict.basis_size}, tolerance={format_number(verdict.tolerance)})")
    else:
        print(f"not equivalent: counterexample={format_word(verdict.counterexample, args.sep or '')!r} "
              f"gap={format_number(verdict.value_gap)}")
    return EXIT_OK


def _check_language(args):
    machine, reference = _load(args.machine), _load(args.dfa)
    if not isinstance(reference, DFA):
        raise UsageError(f"reference language must be given by a dfa, got {reference.kind}")
    skip = [parse_word(w, sep=args.sep) for w in args.skip]
    if args.skip_empty:
        skip.append(())
    report = check_bounded_error(
        machine, reference, args.lambda_, args.epsilon, args.max_len, skip=skip, max_workers=args.workers)
    if args.json:
        _print_json(report.to_json_data(sep=args.sep or ""))
    else:
        sep = args.sep or ""
        for label, witness in (("worst_in", report.worst_in), ("worst_out", report.worst_out)):
            if witness is None:
                print(f"{label}: none")
            else:
                print(f"{label}: {format_word(witness[0], sep)!r} {format_number(witness[1])}")
        print("pass" if report.passed else "fail")
    return EXIT_OK


# ---------------------------------------------------- parser ----------------------------------------------------------
def _add_output(parser):
    parser.add_argument("-o", "--output", help="output machine file (default: slug of machine name)")


def get_parser():
    """
    Get command line parser.

    Returns
    -------
    argparse.ArgumentParser
    """
    parser = _ArgumentParser(prog="qfaplus", description="One-way general quantum finite automata toolkit.")
    parser.add_argument("--version", action="version", version=version)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v: info, -vv: debug")
    parser.add_argument("--sep", default=None, help="symbols separator in words (default: one symbol per character)")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    p = subparsers.add_parser("validate", help="validate a machine file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(function=_validate)

    p = subparsers.add_parser("accept", help="acceptance probability of a word")
    p.add_argument("file")
    p.add_argument("word", nargs="?", default=None)
    p.add_argument("--empty", action="store_true", help="use the empty word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(function=_accept)

    p = subparsers.add_parser("table", help="acceptance values of all words up to a length")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(function=_table)

    p = subparsers.add_parser("compile", help="compile a machine (mm1gqfa to molm, mo1gqfa/molm/mm1gqfa to blm)")
    p.add_argument("file")
    p.add_argument("--to", choices=("molm", "blm"), required=True)
    _add_output(p)
    p.set_defaults(function=_compile)

    p = subparsers.add_parser("build", help="closure and embedding constructions")
    constructions = p.add_subparsers(dest="construction", metavar="construction")
    constructions.required = True
    for name, help_text in (
            ("complement", "mo1gqfa accepting with probability 1 - f"),
            ("embed-pa", "mo1gqfa simulating a probabilistic automaton"),
            ("embed-dfa", "mo1gqfa simulating a dfa"),
            ("lift-mm", "mm1gqfa simulating a mo1gqfa")):
        c = constructions.add_parser(name, help=help_text)
        c.add_argument("file")
        _add_output(c)
    c = constructions.add_parser("mix", help="convex combination of mo1gqfa machines")
    c.add_argument("files", nargs="+")
    c.add_argument("--weights", type=float, nargs="+", required=True)
    _add_output(c)
    c = constructions.add_parser("product", help="product of mo1gqfa machines")
    c.add_argument("files", nargs="+")
    _add_output(c)
    p.set_defaults(function=_build)

    p = subparsers.add_parser("equiv", help="decide equivalence of two machines")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--method", choices=METHODS + ("brute",), default="direct")
    p.add_argument("--k", type=int, default=None, help="length bound of the brute method")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(function=_equiv)

    p = subparsers.add_parser("check-language", help="check bounded-error recognition of a dfa language")
    p.add_argument("machine")
    p.add_argument("dfa")
    p.add_argument("--lambda", dest="lambda_", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--skip-empty", action="store_true", help="leave the empty word out of the check")
    p.add_argument("--skip", nargs="*", default=[], help="words left out of the check")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(function=_check_language)

    return parser


def run_cli(argv=None):
    """
    Run command line.

    Parameters
    ----------
    argv: list of str or None
        default sys.argv[1:]

    Returns
    -------
    int
        exit code
    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"qfaplus: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help, --version
        return e.code

    logging.basicConfig(
        level={0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG),
        format="%(levelname)s:%(name)s:%(message)s"
    )
    try:
        return args.function(args)
    except (UsageError, UnknownSymbolError, AlphabetMismatchError, ValueError) as e:
        print(f"qfaplus: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (MachineFileError, MachineValidationError, DimensionMismatchError, FileNotFoundError) as e:
        print(f"qfaplus: invalid machine: {e}", file=sys.stderr)
        return EXIT_INVALID
    except InternalConsistencyError as e:
        print(f"qfaplus: internal consistency error: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except EnumerationGuardError as e:
        print(f"qfaplus: {e}", file=sys.stderr)
        return EXIT_GUARD


def main():
    """Console script entry point."""
    sys.exit(run_cli())
