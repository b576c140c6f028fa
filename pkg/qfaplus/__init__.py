"""qfaplus package, one-way general quantum finite automata: simulation, constructions and equivalence."""

__all__ = ["__version__", "CONF", "DimensionMismatchError", "MachineValidationError", "UnknownSymbolError",
           "AlphabetMismatchError", "InternalConsistencyError", "EnumerationGuardError", "MachineFileError",
           "ValidationReport", "DensityOperator", "SuperOperator", "QuantumOperation", "ProjectorSet",
           "validate_operation", "apply", "compose", "superoperator_matrix", "measure",
           "Alphabet", "MO1gQFA", "MM1gQFA", "TotalState", "MOLM", "BilinearMachine", "ProbabilisticAutomaton", "DFA",
           "mo_accept_prob", "mm_accept_prob", "molm_accept_prob", "blm_value", "pa_accept_prob", "dfa_accepts",
           "complement", "convex_combination", "product", "pa_to_mo", "dfa_to_pa", "mo_to_mm",
           "decompose_kraus_blocks", "validate_kraus_blocks", "mm_to_molm", "mo_to_blm",
           "EquivalenceVerdict", "reachable_basis", "equivalent_mo", "equivalent_mm", "equivalent",
           "k_equivalent_bruteforce", "RecognitionReport", "MarginScan", "check_bounded_error", "margin_scan",
           "acceptance_table", "MachineFile", "load_machine", "save_machine", "get_fixture_path", "run_cli"]

from .version import version as __version__

from qfaplus.conf import CONF
from qfaplus.quantum_ops.api import ValidationReport, DensityOperator, SuperOperator, QuantumOperation, \
    ProjectorSet, validate_operation, apply, compose, superoperator_matrix, measure
from qfaplus.automata.api import Alphabet, MO1gQFA, MM1gQFA, TotalState, MOLM, BilinearMachine, \
    ProbabilisticAutomaton, DFA, mo_accept_prob, mm_accept_prob, molm_accept_prob, blm_value, pa_accept_prob, \
    dfa_accepts
from qfaplus.transforms.api import complement, convex_combination, product, pa_to_mo, dfa_to_pa, mo_to_mm, \
    decompose_kraus_blocks, validate_kraus_blocks, mm_to_molm, mo_to_blm
from qfaplus.equivalence.api import EquivalenceVerdict, reachable_basis, equivalent_mo, equivalent_mm, equivalent, \
    k_equivalent_bruteforce
from qfaplus.language_lab.api import RecognitionReport, MarginScan, check_bounded_error, margin_scan, \
    acceptance_table
from qfaplus.machine_file.api import MachineFile, load_machine, save_machine
from qfaplus.resources import get_fixture_path
from qfaplus.cli import run_cli
from .exceptions import DimensionMismatchError, MachineValidationError, UnknownSymbolError, AlphabetMismatchError, \
    InternalConsistencyError, EnumerationGuardError, MachineFileError
