"""Exact computation in the groups generated by quadruple symbols (ijkl)
subject to involutive, commutative, pentagon and dihedral relations.

For n >= 6 these groups are finite 2-step nilpotent 2-groups of order
2^C(n,3); the package computes in their normal form via a central
extension (Z/2) x~ H1, builds the defining presentations, machine-checks
all relations, and confirms group orders independently by Todd-Coxeter
coset enumeration.
"""

from .symbols import (
    QuadSymbol,
    GenClass,
    canonicalize,
    classify,
    enumerate_canonical,
    shared_count,
)
from .normal_form import (
    Element,
    NormalFormContext,
    circ,
    commutator,
    decompose,
    element_order,
    eps_table,
    evaluate,
    image_order,
    inverse,
    lambda_basis,
    multiply,
)
from .presentation import (
    Presentation,
    abelianize,
    build_gamma,
    build_gamma_hat,
    parse_presentation,
    serialize,
)
from .homology import abelianization_rank, lambda_coordinates, phi2, phi3
from .symmetry import Permutation, act_element, act_symbol
from .words import GroupWord, parse_word
from .enumeration import CosetTable, EnumerationConfig, enumerate_cosets, verify_table
from .verification import (
    SweepReport,
    verify_center_candidates,
    verify_commutator_classes,
    verify_pentagon_tables,
    verify_relations,
)

__all__ = [
    "QuadSymbol", "GenClass", "canonicalize", "classify", "enumerate_canonical",
    "shared_count",
    "Element", "NormalFormContext", "circ", "commutator", "decompose",
    "element_order", "eps_table", "evaluate", "image_order", "inverse",
    "lambda_basis", "multiply",
    "Presentation", "abelianize", "build_gamma", "build_gamma_hat", "parse_presentation",
    "serialize",
    "abelianization_rank", "lambda_coordinates", "phi2", "phi3",
    "Permutation", "act_element", "act_symbol",
    "GroupWord", "parse_word",
    "CosetTable", "EnumerationConfig", "enumerate_cosets", "verify_table",
    "SweepReport", "verify_center_candidates", "verify_commutator_classes",
    "verify_pentagon_tables", "verify_relations",
]
