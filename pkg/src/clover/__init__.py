"""Exact clover calculus: Jacobi diagrams, A_k, LP-surgery data and linking coefficients."""
from .contraction import Coefficient, bracket, calL, ell, ell_sigma, ell_sigma_expansion, ell_zero
from .diagram import (
    JacobiDiagram,
    SignedIso,
    automorphism_counts,
    canonical_form,
    isomorphisms,
    validate,
)
from .enumerator import DiagramCatalog, enumerate_degree, representatives_up_to
from .errors import (
    ArityError,
    CloverError,
    DegreeMismatchError,
    DivisibilityError,
    LimitError,
    ValidationError,
)
from .estimators import BracketExpansion, GradedSpace
from .freegroup import free_group_identity_check
from .graded import FormalSum, SpaceStructure, as_normalize, ihx_relations, reduce, space_structure
from .lp import LPComponent, LPSurgeryData, restrict, split_component, triple_eval, validate_lp
from .ylink import YLinkData, lp_from_jacobi, lp_from_ylink, verify_fondjac

__version__ = "0.1.0"
