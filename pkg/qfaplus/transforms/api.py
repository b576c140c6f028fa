"""transforms api."""

__all__ = ["complement", "convex_combination", "product", "direct_sum_operation", "tensor_operation", "pa_to_mo",
           "dfa_to_pa", "mo_to_mm", "decompose_kraus_blocks", "validate_kraus_blocks", "mm_to_molm", "mo_to_blm"]

from .closure import complement, convex_combination, product, direct_sum_operation, tensor_operation
from .embedding import pa_to_mo, dfa_to_pa, mo_to_mm
from .simulation import decompose_kraus_blocks, validate_kraus_blocks, mm_to_molm
from .vectorization import mo_to_blm
