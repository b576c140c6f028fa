"""quantum_ops api."""

__all__ = ["ValidationReport", "DensityOperator", "SuperOperator", "QuantumOperation", "ProjectorSet",
           "validate_operation", "apply", "compose", "superoperator_matrix", "measure", "NON", "ACC", "REJ"]

from .validation import ValidationReport
from .density import DensityOperator
from .operation import SuperOperator, QuantumOperation, validate_operation, apply, compose, superoperator_matrix
from .measurement import ProjectorSet, measure, NON, ACC, REJ
