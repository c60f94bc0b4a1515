"""Affine semigroup rings: decompositions over subalgebras, ring properties,
Castelnuovo-Mumford regularity and Eisenbud-Goto sweeps."""

__version__ = "0.1.0"

from .decompose import Decomposition, DecompositionComponent, decompose, hilbert_identity, module_generators
from .egharness import EGRecord, eg_sweep, enumerate_semigroups, random_semigroup, verify_eg
from .errors import (
    AffsemiError,
    AlgebraicPreconditionError,
    ConeMismatch,
    ContainmentViolation,
    DegenerateInput,
    Infeasible,
    InfiniteDimension,
    InputError,
    NonHilbert,
    NotHomogeneous,
    NotSimplicial,
    OracleMismatch,
)
from .intlin import QuotientGroup, hnf, snf, snf_quotient, solve_integral
from .regdeg import RegularityResult, degree_codim, direct_regularity, regularity
from .ringprops import PropertyReport, ring_properties
from .semigroup import AffineSemigroup, DegreeFunctional, cones_equal, extremal_subset, grading, member
from .toric import ToricIdeal, toric_ideal

__all__ = [
    "AffineSemigroup",
    "AffsemiError",
    "AlgebraicPreconditionError",
    "ConeMismatch",
    "ContainmentViolation",
    "Decomposition",
    "DecompositionComponent",
    "DegenerateInput",
    "DegreeFunctional",
    "EGRecord",
    "Infeasible",
    "InfiniteDimension",
    "InputError",
    "NonHilbert",
    "NotHomogeneous",
    "NotSimplicial",
    "OracleMismatch",
    "PropertyReport",
    "QuotientGroup",
    "RegularityResult",
    "ToricIdeal",
    "cones_equal",
    "decompose",
    "degree_codim",
    "direct_regularity",
    "eg_sweep",
    "enumerate_semigroups",
    "extremal_subset",
    "grading",
    "hilbert_identity",
    "hnf",
    "member",
    "module_generators",
    "random_semigroup",
    "regularity",
    "ring_properties",
    "snf",
    "snf_quotient",
    "solve_integral",
    "toric_ideal",
    "verify_eg",
]
