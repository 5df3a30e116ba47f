"""Exact Kronecker, reduced Kronecker and Littlewood-Richardson coefficients."""

__version__ = "0.1.0"

from .characters import character, character_table  # noqa: E402
from .kronecker import kron, kron_prime, kron_value  # noqa: E402
from .partitions import Partition, parse, render  # noqa: E402
from .reduced import ReducedTriple, reduced, reduced_by_bdo, reduced_by_stabilization  # noqa: E402
from .tableaux import lr_coefficient, multi_lr  # noqa: E402

__all__ = [
    "Partition", "parse", "render", "character", "character_table", "kron", "kron_value",
    "kron_prime", "ReducedTriple", "reduced", "reduced_by_bdo", "reduced_by_stabilization",
    "lr_coefficient", "multi_lr", "__version__",
]
