"""Modular Catalan numbers: k-associativity on binary trees and related families."""

from .counting import (
    c_modular,
    catalan,
    d_intersections,
    largest_class_size_formula,
    m_general,
)
from .exceptions import (
    ModcatError,
    OracleBoundError,
    ParseError,
    PatternMismatchError,
    ValidationError,
)
from .rewrite import KComponent, RotationSite, canonicalize, class_size, k_components, k_equivalent
from .trees import LEAF, Node, binary_to_plane, comb, left_depth, plane_to_binary

__version__ = "0.1.0"

__all__ = [
    "LEAF",
    "Node",
    "comb",
    "left_depth",
    "binary_to_plane",
    "plane_to_binary",
    "catalan",
    "c_modular",
    "m_general",
    "d_intersections",
    "largest_class_size_formula",
    "RotationSite",
    "KComponent",
    "canonicalize",
    "class_size",
    "k_components",
    "k_equivalent",
    "ModcatError",
    "ValidationError",
    "ParseError",
    "PatternMismatchError",
    "OracleBoundError",
]
