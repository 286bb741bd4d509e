"""Prime ideal factorization in quartic fields defined by X^4 + aX + b."""

from .classify import (
    NoRowMatched,
    PrimeFactorization,
    PrimeIdealFactor,
    classify,
    dedekind_factorization,
    factor_all_ramified,
)
from .polyz import AlgebraicElement, QuarticField, normalize
from .verify import VerificationReport, check_factorization, dedekind_criterion

__version__ = "0.1.0"

__all__ = [
    "AlgebraicElement",
    "NoRowMatched",
    "PrimeFactorization",
    "PrimeIdealFactor",
    "QuarticField",
    "VerificationReport",
    "check_factorization",
    "classify",
    "dedekind_criterion",
    "dedekind_factorization",
    "factor_all_ramified",
    "normalize",
]
