"""Exact Littlewood-Richardson computations.

Puzzle rules for Grassmannians and partial flag varieties in ordinary,
K-theoretic and equivariant flavours, the Mondrian tableau game, small
quantum products of Grassmannians, and classical oracles to check them.
"""

from .core import (FlagString, SchubertIndex, Space, UpperLowerIndex, codim, degeneration_order, dual,
                   flag_permutation, flag_strings, flagstring_from_upperlower, grassmannian_strings,
                   parse_partition, parse_space, partition_to_string, string_codim, string_to_partition,
                   upperlower_from_flagstring)
from .engine import Filling, PieceSet, coefficient, count_fillings, enumerate_fillings, expand_product, render
from .mondrian import init_product, play, quantum_tableau, step
from .og import OGIndex, associated_partition, discrepancy, typeB_from_typeC
from .oracle import flag_structure_constants, giambelli_product, lr_expand, lr_tableaux, pieri_multiply
from .pieces import pieces_for
from .quantum import degree_condition, gw_invariant, quantum_product, vanishing_predicate
from .rings import Poly, format_coeff, parse_coeff
from .trace import read, read_alpha, read_beta, trace_filling, truncate

__version__ = "0.1.0"

__all__ = [
    "FlagString", "SchubertIndex", "Space", "UpperLowerIndex", "codim", "degeneration_order", "dual",
    "flag_permutation", "flag_strings", "flagstring_from_upperlower", "grassmannian_strings",
    "parse_partition", "parse_space", "partition_to_string", "string_codim", "string_to_partition",
    "upperlower_from_flagstring", "Filling", "PieceSet", "coefficient", "count_fillings",
    "enumerate_fillings", "expand_product", "render", "init_product", "play", "quantum_tableau", "step",
    "OGIndex", "associated_partition", "discrepancy", "typeB_from_typeC", "flag_structure_constants",
    "giambelli_product", "lr_expand", "lr_tableaux", "pieri_multiply", "pieces_for", "degree_condition",
    "gw_invariant", "quantum_product", "vanishing_predicate", "Poly", "format_coeff", "parse_coeff",
    "read", "read_alpha", "read_beta", "trace_filling", "truncate",
]
