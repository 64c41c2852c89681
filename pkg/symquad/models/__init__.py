from .rational import Rational, format_rational, parse_rational_list, to_rational
from .polynomial import (
    Monomial,
    MultilinearPoly,
    QuadForm,
    canonical_terms,
    monomial_order,
    parse_var,
    xvar,
    yvar,
)
from .spec import LiftSpec, SymmetricSpec
from .representation import AlphaTerm, IdentityKind, NegPartRep, ZeroIdentity
from .result import Counterexample, QuadratizationFamily, QuadratizationResult, VerifyReport
from .report import CatalogEntry, ReportRow

__all__ = [
    "Rational",
    "format_rational",
    "parse_rational_list",
    "to_rational",
    "Monomial",
    "MultilinearPoly",
    "QuadForm",
    "canonical_terms",
    "monomial_order",
    "parse_var",
    "xvar",
    "yvar",
    "LiftSpec",
    "SymmetricSpec",
    "AlphaTerm",
    "IdentityKind",
    "NegPartRep",
    "ZeroIdentity",
    "Counterexample",
    "QuadratizationFamily",
    "QuadratizationResult",
    "VerifyReport",
    "CatalogEntry",
    "ReportRow",
]
