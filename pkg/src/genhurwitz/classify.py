"""Root-location classification of real polynomials, all in exact arithmetic.

The taxonomy, decided purely from determinant signs:

    hurwitz-stable            all zeros in the open left half plane
    quasi-stable (m)          closed left half plane, m zeros on the axis
    self-interlacing (I/II)   real simple zeros with strictly alternating
                              signs and increasing moduli
    almost-self-interlacing   z times a self-interlacing polynomial of the
                              opposite type
    quasi-self-interlacing    dual image is quasi-stable with degeneracy m
    generalized-hurwitz (k)   exactly k zeros in the closed right half
                              plane, all real simple, interlacing the
                              negative real zeros; the rest in the open
                              left half plane
    unclassified              none of the above

The decision tree runs on the Hurwitz minor chain: a gate of odd-position
minors, then a Frobenius-rule sign change count for the order k, with the
failure branches handled by an even-factor decomposition, the duality
transform, and one reflection z -> -z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple, Union

from .polyalg import (
    DegenerateSplitError,
    InvalidInputError,
    Polynomial,
    RationalFunction,
    compose_even,
    even_odd_split,
    laurent_expand,
    pole_count,
    poly_gcd,
    reflect,
    times_z,
)
from .minors import (
    HurwitzMinors,
    InvalidSequenceError,
    hankel_minors,
    hurwitz_minors,
    scf_frobenius,
    strong_sign_changes,
)

__all__ = [
    "LABELS", "ClassificationReport", "RFunctionCertificate",
    "classify", "is_r_function", "pole_sign_count", "lienard_chipart",
    "generalized_lienard_chipart_order", "dual_transform",
    "derivative_family", "subsample_family", "new_stability_criterion",
]

LABEL_STABLE = "hurwitz-stable"
LABEL_QUASI = "quasi-stable"
LABEL_SI = "self-interlacing"
LABEL_ALMOST_SI = "almost-self-interlacing"
LABEL_QUASI_SI = "quasi-self-interlacing"
LABEL_GH = "generalized-hurwitz"
LABEL_NONE = "unclassified"

LABELS = (LABEL_STABLE, LABEL_QUASI, LABEL_SI, LABEL_ALMOST_SI,
          LABEL_QUASI_SI, LABEL_GH, LABEL_NONE)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Polynomial):
        return [str(c) for c in value.coeffs]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class ClassificationReport:
    label: str
    order_k: Optional[int] = None
    degeneracy_m: Optional[int] = None
    si_type: Optional[str] = None
    certificates: Dict = field(default_factory=dict)

    def to_json_dict(self) -> Dict:
        return {
            "label": self.label,
            "order_k": self.order_k,
            "degeneracy_m": self.degeneracy_m,
            "si_type": self.si_type,
            "certificates": _jsonable(self.certificates),
        }


# ---------------------------------------------------------------------------
# R-function certification

@dataclass(frozen=True)
class RFunctionCertificate:
    """Witness that a rational function maps the upper half plane down.

    `hankel_chain` holds the positive minors D_1..D_r; the pole counts
    come from the sign change count over the second minor family.
    """
    pole_count: int
    hankel_chain: Tuple[Fraction, ...]
    negative_pole_count: int
    positive_pole_count: int
    pole_at_zero: bool


def is_r_function(R: RationalFunction) -> Optional[RFunctionCertificate]:
    """Certificate if R maps the upper half plane into the lower, else None.

    Criterion: after reduction the degrees differ by at most one, the
    z-coefficient of the expansion at infinity is <= 0, and the first
    Hankel minor family is positive through the pole count.
    """
    red = R.reduced()
    if red.num.is_zero():
        return RFunctionCertificate(0, (), 0, 0, False)
    dn, dd = red.num.degree, red.den.degree
    if abs(dn - dd) > 1:
        return None
    r = dd
    series = laurent_expand(red, r)
    if series.s_minus2 > 0:
        return None
    mn = hankel_minors(series, r)
    if any(d <= 0 for d in mn.D):
        return None
    pole_at_zero = (red.den.power_coeff(0) == 0)
    limit = r - 1 if pole_at_zero else r
    negative = scf_frobenius([Fraction(1)] + list(mn.Dhat[:limit]))
    positive = r - negative - (1 if pole_at_zero else 0)
    return RFunctionCertificate(r, mn.D, negative, positive, pole_at_zero)


def pole_sign_count(R: RationalFunction,
                    cert: Optional[RFunctionCertificate] = None
                    ) -> Tuple[int, int, bool]:
    """(negative poles, positive poles, pole at zero) for an R-function."""
    if cert is None:
        cert = is_r_function(R)
    if cert is None:
        raise InvalidInputError(
            "pole sign counting needs an upper-to-lower half-plane map")
    return (cert.negative_pole_count, cert.positive_pole_count,
            cert.pole_at_zero)


# ---------------------------------------------------------------------------
# building blocks for classify

def _delta_stable(p: Polynomial) -> bool:
    """Hurwitz stability by full minor positivity (sign-normalized)."""
    if p.coeffs[0] < 0:
        p = -p
    n = p.degree
    if n == 0:
        return True
    return all(d > 0 for d in hurwitz_minors(p).delta)


def _real_nonpositive_u_roots(f: Polynomial) -> bool:
    """Do all roots of f (a polynomial in u) lie in (-inf, 0]?

    Via the logarithmic derivative: f'/f is a sum of m_i/(u - lambda_i),
    so all roots are real iff its first Hankel family is positive through
    the rank, and all negative iff the second family alternates.  Roots
    at the origin are stripped first; they are fine.
    """
    if f.degree == 0:
        return True
    u = Polynomial([1, 0])
    while f.power_coeff(0) == 0:
        f = f // u
    if f.degree == 0:
        return True
    G = RationalFunction(f.derivative(), f)
    r = pole_count(G)
    mn = hankel_minors(laurent_expand(G.reduced(), r), r)
    if any(d <= 0 for d in mn.D):
        return False
    return all((dh if j % 2 == 0 else -dh) > 0
               for j, dh in enumerate(mn.Dhat, start=1))


def _quasi_stable_check(p: Polynomial):
    """Exact quasi-stability with degeneracy count.

    Splits off the largest even divisor f(z^2) with f = gcd(p0, p1); the
    remaining cofactor is coprime in its halves, so it carries at most a
    simple origin zero.  p is quasi-stable iff f has only real nonpositive
    u-roots and the (origin-stripped) cofactor is Hurwitz stable.

    Returns (ok, m, certificate).
    """
    split = even_odd_split(p)
    if split.p0.is_zero() or split.p1.is_zero():
        f = (split.p1 if split.p0.is_zero() else split.p0).monic()
    else:
        f = poly_gcd(split.p0, split.p1)
    q, rem = divmod(p, compose_even(f))
    assert rem.is_zero()
    m = 2 * f.degree
    cert = {"even_factor_u": f, "cofactor": q}
    origin = q.power_coeff(0) == 0
    if origin:
        q = q // Polynomial([1, 0])
        m += 1
        cert["cofactor_origin_zero"] = True
        if q.power_coeff(0) == 0:
            cert["reason"] = "multiple origin zero outside the even factor"
            return False, None, cert
    if q.degree >= 1 and not _delta_stable(q):
        cert["reason"] = "cofactor is not stable"
        return False, None, cert
    if f.degree >= 1 and not _real_nonpositive_u_roots(f):
        cert["reason"] = "even factor has roots off the nonpositive ray"
        return False, None, cert
    return True, m, cert


def dual_transform(p: Polynomial) -> Polynomial:
    """The sign-twisted even/odd recombination q with q(0-axis) duality.

    q = s * (p0(-z^2) - z p1(-z^2)) with s = (-1)^{n(n+1)/2}, which acts
    on coefficients as b_j = sigma_j a_j for sigma_j = (-1)^{j(j-1)/2}
    (n even) or (-1)^{j(j+1)/2} (n odd); the map is an involution.  It
    exchanges self-interlacing of type I with Hurwitz stability.

    >>> dual_transform(Polynomial([1, 1, -2])).coeffs
    (Fraction(1, 1), Fraction(1, 1), Fraction(2, 1))
    """
    if p.is_zero():
        raise InvalidInputError("dual transform of the zero polynomial")
    n = p.degree
    split = even_odd_split(p)
    raw = compose_even(split.p0, -1) - times_z(compose_even(split.p1, -1))
    sign = -1 if (n * (n + 1) // 2) % 2 else 1
    q = raw * sign
    # coefficient form of the same map, asserted against the composition
    for j in range(n + 1):
        e = (j * (j - 1) // 2) if n % 2 == 0 else (j * (j + 1) // 2)
        sigma = -1 if e % 2 else 1
        assert q.power_coeff(n - j) == sigma * p.coeff(j)
    return q


# ---------------------------------------------------------------------------
# the classifier

def classify(p: Union[Polynomial, Sequence], *, _reflect_depth: int = 0
             ) -> ClassificationReport:
    """Classify a real polynomial by zero location, exactly.

    The zero polynomial is refused; constants are unclassified.  The
    leading coefficient is normalized positive first (recorded in the
    certificates), which never moves a zero.
    """
    if not isinstance(p, Polynomial):
        p = Polynomial(p)
    if p.is_zero():
        raise InvalidInputError("cannot classify the zero polynomial")
    flipped = p.coeffs[0] < 0
    if flipped:
        p = -p
    n = p.degree
    cert: Dict = {"degree": n, "sign_normalized": flipped}
    if n == 0:
        cert["reason"] = "constant polynomial has no zeros"
        return ClassificationReport(LABEL_NONE, certificates=cert)
    if n == 1:
        # closed form: the single zero is -a1/a0
        a1 = p.coeff(1)
        cert["zero"] = -a1 / p.coeff(0)
        if a1 > 0:
            return ClassificationReport(LABEL_STABLE, order_k=0,
                                        certificates=cert)
        if a1 == 0:
            return ClassificationReport(LABEL_QUASI, degeneracy_m=1,
                                        certificates=cert)
        return ClassificationReport(LABEL_SI, order_k=1, si_type="I",
                                    certificates=cert)

    hm = hurwitz_minors(p)
    cert["delta"] = list(hm.delta)
    gate_idx = list(range(n - 1, 0, -2))
    gate = all(hm.delta[i - 1] > 0 for i in gate_idx)
    cert["gate_indices"] = gate_idx
    cert["gate_passed"] = gate
    kmax = (n + 1) // 2

    if gate:
        const_zero = (p.power_coeff(0) == 0)
        if const_zero:
            seq = [hm.delta[i - 1] for i in range(n - 2, 0, -2)] + [Fraction(1)]
        else:
            seq = [hm.delta[i - 1] for i in range(n, 0, -2)] + [Fraction(1)]
        k = None
        try:
            k = scf_frobenius(seq) + (1 if const_zero else 0)
        except InvalidSequenceError:
            # unreachable under the gate by the pole-at-zero bridge, but
            # fall through to the non-gate branches rather than crash
            cert["scf_aborted"] = True
        if k is not None:
            cert["scf_sequence"] = seq
            cert["order"] = k
            cert["constant_term_zero"] = const_zero
            if k == 0:
                assert all(d > 0 for d in hm.delta)
                return ClassificationReport(LABEL_STABLE, order_k=0,
                                            certificates=cert)
            if const_zero and k == 1:
                # z times a stable polynomial: the whole minor chain
                # below the top is positive
                return ClassificationReport(LABEL_QUASI, degeneracy_m=1,
                                            certificates=cert)
            if k == kmax and not const_zero:
                return ClassificationReport(LABEL_SI, order_k=k, si_type="I",
                                            certificates=cert)
            if k == kmax and const_zero:
                return ClassificationReport(LABEL_ALMOST_SI, order_k=k,
                                            si_type="I", certificates=cert)
            return ClassificationReport(LABEL_GH, order_k=k, si_type="I",
                                        certificates=cert)

    ok, m, qcert = _quasi_stable_check(p)
    if ok:
        cert["quasi_certificate"] = qcert
        return ClassificationReport(LABEL_QUASI, degeneracy_m=m,
                                    certificates=cert)
    dual = dual_transform(p)
    ok, m, qcert = _quasi_stable_check(dual)
    if ok and m >= 2:
        # m = 1 cannot reach this branch (that shape passes the gate);
        # the bound keeps the label disjoint from almost-self-interlacing
        cert["dual_image"] = dual
        cert["dual_quasi_certificate"] = qcert
        return ClassificationReport(LABEL_QUASI_SI, degeneracy_m=m,
                                    si_type="I", certificates=cert)

    if _reflect_depth == 0:
        inner = classify(reflect(p), _reflect_depth=1)
        cert["reflected_label"] = inner.label
        if inner.si_type == "I":
            return ClassificationReport(inner.label, order_k=inner.order_k,
                                        degeneracy_m=inner.degeneracy_m,
                                        si_type="II", certificates=cert)
        if inner.label == LABEL_QUASI and inner.degeneracy_m == 1:
            # z times an anti-stable polynomial: one closed-right zero
            cert["order"] = 1
            return ClassificationReport(LABEL_GH, order_k=1, si_type="II",
                                        certificates=cert)

    cert["reason"] = "no criterion matched"
    return ClassificationReport(LABEL_NONE, certificates=cert)


# ---------------------------------------------------------------------------
# coefficient-test criteria

def lienard_chipart(p: Polynomial, variant: int = 1) -> bool:
    """Stability by one of the four reduced coefficient/minor tests.

    Coefficient chain: even positions a_n, a_{n-2}, ... (variants 1, 2) or
    a_n, a_{n-1}, a_{n-3}, ... (variants 3, 4).  Minor chain: Delta_{n-1},
    Delta_{n-3}, ... (variants 1, 3) or Delta_n, Delta_{n-2}, ...
    (variants 2, 4).  All four agree with full Hurwitz positivity.
    """
    if variant not in (1, 2, 3, 4):
        raise InvalidInputError(f"variant must be 1..4, got {variant}")
    if p.is_zero():
        raise InvalidInputError("stability of the zero polynomial")
    if p.coeffs[0] < 0:
        p = -p
    n = p.degree
    if n == 0:
        return True
    if variant in (1, 2):
        coeff_idx = list(range(n, -1, -2))
    else:
        coeff_idx = [n] + list(range(n - 1, -1, -2))
    if not all(p.coeff(i) > 0 for i in coeff_idx):
        return False
    hm = hurwitz_minors(p)
    start = n - 1 if variant in (1, 3) else n
    return all(hm.delta[i - 1] > 0 for i in range(start, 0, -2))


def generalized_lienard_chipart_order(p: Polynomial) -> Optional[int]:
    """Order k from coefficient sign changes, when the minor gate holds.

    Both coefficient chains are counted and asserted equal:

        a_n != 0:  k = v(a_n, a_{n-2}, ..., 1) = v(a_n, a_{n-1}, a_{n-3}, ..., 1)
        a_n  = 0:  k = v(a_{n-2}, ..., 1) + 1 = v(a_{n-1}, a_{n-3}, ..., 1) + 1

    where v counts strong sign changes (zeros skipped).  Returns None if
    the gate fails (the count is meaningless there).
    """
    if p.is_zero():
        raise InvalidInputError("order of the zero polynomial")
    if p.coeffs[0] < 0:
        p = -p
    n = p.degree
    if n < 1:
        raise InvalidInputError("order needs degree >= 1")
    if n == 1:
        a1 = p.coeff(1)
        return 0 if a1 > 0 else 1
    hm = hurwitz_minors(p)
    if not all(hm.delta[i - 1] > 0 for i in range(n - 1, 0, -2)):
        return None

    def a(i: int) -> Fraction:
        return p.coeff(i)

    one = [Fraction(1)]
    if a(n) != 0:
        v1 = strong_sign_changes([a(i) for i in range(n, -1, -2)] + one)
        v2 = strong_sign_changes([a(n)] + [a(i) for i in range(n - 1, -1, -2)]
                                 + one)
        extra = 0
    else:
        v1 = strong_sign_changes([a(i) for i in range(n - 2, -1, -2)] + one)
        v2 = strong_sign_changes([a(i) for i in range(n - 1, -1, -2)] + one)
        extra = 1
    assert v1 == v2, "the two coefficient chains disagree"
    return v1 + extra


def new_stability_criterion(p: Polynomial) -> bool:
    """Stability through the reflection quotient, no Hurwitz matrix at all.

    Let q(z) = (-1)^n p(-z) (coefficients b_j = (-1)^j a_j) and R = q/p.
    p is stable iff R keeps full rank after reduction and the Hankel
    minors of R alternate as (-1)^{j(j+1)/2} D_j > 0 for j = 1..n.
    """
    if p.is_zero():
        raise InvalidInputError("stability of the zero polynomial")
    if p.coeffs[0] < 0:
        p = -p
    n = p.degree
    if n == 0:
        return True
    q = Polynomial([(-1) ** j * c for j, c in enumerate(p.coeffs)])
    red = RationalFunction(q, p).reduced()
    if red.den.degree < n:
        # a common factor pairs a zero with its negative, or parks one on
        # the imaginary axis; either way p is not stable
        return False
    mn = hankel_minors(laurent_expand(red, n), n)
    for j in range(1, n + 1):
        want_neg = (j * (j + 1) // 2) % 2
        d = mn.D[j - 1]
        if (d >= 0 if want_neg else d <= 0):
            return False
    return True


# ---------------------------------------------------------------------------
# structured families

def derivative_family(p: Polynomial) -> Tuple[Polynomial, ...]:
    """Recombinations of the j-th derivatives of the split halves.

    Members are p0^(j)(z^2) + z p1^(j)(z^2) for j = 1..n//2 - 1; they
    inherit the zero-location class of p.  Degrees below 4 give no
    members.
    """
    n = p.degree
    if not isinstance(n, int) or n < 2:
        return ()
    split = even_odd_split(p)
    out = []
    for j in range(1, n // 2):
        q = (compose_even(split.p0.derivative(j))
             + times_z(compose_even(split.p1.derivative(j))))
        out.append(q)
    return tuple(out)


def subsample_family(p: Polynomial, r: int) -> Polynomial:
    """Keep every r-th pair of coefficients, preserving the parity shape.

    r = 1 is the identity.  For n = 2l the member is
    a_0 z^{2k} + a_{2r-1} z^{2k-1} + a_{2r} z^{2k-2} + a_{4r-1} z^{2k-3} + ...
    with k = n // r, and the odd-degree shape keeps (a_0, a_1) up front.
    """
    n = p.degree
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError("subsampling needs degree >= 1")
    if not 1 <= r <= n:
        raise InvalidInputError(f"stride must lie in 1..{n}, got {r}")
    if r == 1:
        return p
    k = n // r
    if n % 2 == 0:
        cs = [p.coeff(0)]
        for t in range(1, k + 1):
            cs.append(p.coeff(2 * r * t - 1))
            cs.append(p.coeff(2 * r * t))
    else:
        cs = [p.coeff(0), p.coeff(1)]
        for t in range(1, k + 1):
            cs.append(p.coeff(2 * r * t))
            cs.append(p.coeff(2 * r * t + 1))
    return Polynomial(cs)
