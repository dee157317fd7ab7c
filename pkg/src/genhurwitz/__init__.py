"""Exact root-location classification of real univariate polynomials.

The package decides, with rational arithmetic only, where the zeros of a
real polynomial sit relative to the imaginary axis and the real line:
Hurwitz stable, quasi-stable, self-interlacing (type I or II), almost or
quasi self-interlacing, or generalized Hurwitz of some order k.  The
decisions run through determinant criteria (Hurwitz and Hankel minors),
Stieltjes continued fractions and a pair of duality transforms, and a
floating-point root oracle cross-checks everything in the test suite.
"""

from .polyalg import (
    Polynomial,
    RationalFunction,
    LaurentSeries,
    EvenOddSplit,
    even_odd_split,
    associated_function,
    reflect,
    poly_gcd,
    laurent_expand,
    parse_polynomial,
    format_polynomial,
)
from .minors import (
    HankelMinors,
    HurwitzMinors,
    NablaMinors,
    hankel_minors,
    hurwitz_minors,
    nabla_minors,
    scf_frobenius,
    strong_sign_changes,
    total_nonnegativity_scan,
    hankel_character_test,
)
from .stieltjes import (
    StieltjesCF,
    ExtendedCF,
    stieltjes_expand,
    extended_expand,
    cf_from_hurwitz_minors,
    cf_reconstruct,
    pole_sign_summary,
)
from .classify import (
    ClassificationReport,
    RFunctionCertificate,
    classify,
    is_r_function,
    pole_sign_count,
    lienard_chipart,
    generalized_lienard_chipart_order,
    dual_transform,
    derivative_family,
    subsample_family,
    new_stability_criterion,
)

__version__ = "0.1.0"

__all__ = [
    "Polynomial", "RationalFunction", "LaurentSeries", "EvenOddSplit",
    "even_odd_split", "associated_function", "reflect", "poly_gcd",
    "laurent_expand", "parse_polynomial", "format_polynomial",
    "HankelMinors", "HurwitzMinors", "NablaMinors",
    "hankel_minors", "hurwitz_minors", "nabla_minors",
    "scf_frobenius", "strong_sign_changes",
    "total_nonnegativity_scan", "hankel_character_test",
    "StieltjesCF", "ExtendedCF", "stieltjes_expand", "extended_expand",
    "cf_from_hurwitz_minors", "cf_reconstruct", "pole_sign_summary",
    "ClassificationReport", "RFunctionCertificate", "classify",
    "is_r_function", "pole_sign_count", "lienard_chipart",
    "generalized_lienard_chipart_order", "dual_transform",
    "derivative_family", "subsample_family", "new_stability_criterion",
    "__version__",
]
