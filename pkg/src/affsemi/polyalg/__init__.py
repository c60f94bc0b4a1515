"""Polynomial arithmetic, Groebner bases, Hilbert series and Betti numbers."""

from .betti import (
    BettiTable,
    FreeModule,
    SemigroupModule,
    minimal_resolution,
    monomial_betti,
    quotient_betti,
    taylor_betti,
    two_variable_regularity,
)
from .field import QQ, Field, field_of
from .groebner import (
    GroebnerBasis,
    binomial_groebner,
    groebner,
    is_groebner,
    normal_form,
    standard_monomials,
)
from .hilbert import dimension_and_degree, hilbert_numerator
from .orders import DEGREVLEX, LEX, MonomialOrder
from .polynomial import Polynomial

__all__ = [
    "BettiTable",
    "DEGREVLEX",
    "Field",
    "FreeModule",
    "GroebnerBasis",
    "LEX",
    "MonomialOrder",
    "Polynomial",
    "QQ",
    "SemigroupModule",
    "binomial_groebner",
    "dimension_and_degree",
    "field_of",
    "groebner",
    "hilbert_numerator",
    "is_groebner",
    "minimal_resolution",
    "monomial_betti",
    "normal_form",
    "quotient_betti",
    "standard_monomials",
    "taylor_betti",
    "two_variable_regularity",
]
