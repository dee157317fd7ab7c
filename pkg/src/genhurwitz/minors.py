"""Determinant machinery for the stability criteria.

Exact determinants (fraction-free Bareiss over the integers), the Hankel
minor families D_j and Dhat_j of a series at infinity, Hurwitz minors of a
polynomial, the interleaved minors of a polynomial pair, Frobenius-rule
sign change counting, and brute-force total nonnegativity scans.

No floats here either; every sign that leaves this module is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .polyalg import (
    InvalidInputError,
    LaurentSeries,
    Polynomial,
    _rat,
)

__all__ = [
    "SeriesLengthError", "InvalidSequenceError", "InvalidPairError",
    "HankelMinors", "HurwitzMinors", "NablaMinors", "TNNScan",
    "exact_det", "leading_principal_minors", "hankel_minors",
    "hurwitz_minors", "nabla_minors", "scf_frobenius",
    "strong_sign_changes", "total_nonnegativity_scan",
    "hankel_character_test", "finite_hurwitz_matrix",
    "infinite_hurwitz_block",
]


class SeriesLengthError(InvalidInputError):
    """Not enough series coefficients for the requested minor order."""


class InvalidSequenceError(InvalidInputError):
    """A sign-change count was asked of a sequence it is not defined for."""


class InvalidPairError(InvalidInputError):
    """Pair minors need deg q <= deg p."""


# ---------------------------------------------------------------------------
# exact determinants

def _int_bareiss(m: List[List[int]]) -> int:
    """Determinant of an integer matrix, fraction-free, with row pivoting."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - f * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return sign * m[-1][-1]


def _integerize(rows: Sequence[Sequence[Fraction]]):
    """Clear denominators row by row; returns (int matrix, row multipliers).

    The multipliers are positive, so minor signs are unchanged and the
    original values come back by dividing the product out.
    """
    mults = []
    m = []
    for row in rows:
        mult = 1
        for x in row:
            d = x.denominator
            mult = mult * d // gcd(mult, d)
        mults.append(mult)
        m.append([int(x * mult) for x in row])
    return m, mults


def exact_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a square matrix of Fractions.

    The empty matrix has determinant 1 (the convention every minor chain
    below relies on for its 0th entry).
    """
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise InvalidInputError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    m, mults = _integerize(rows)
    scale = 1
    for f in mults:
        scale *= f
    return Fraction(_int_bareiss(m), scale)


def leading_principal_minors(rows: Sequence[Sequence[Fraction]]) -> List[Fraction]:
    """All leading principal minors M_1..M_n in one sweep.

    The pivots of a fraction-free elimination are exactly these minors, so
    the common case costs a single O(n^3) pass.  A zero pivot stalls the
    sweep; the remaining orders then fall back to independent determinants,
    which only happens on the degenerate inputs where some minor vanishes.
    """
    n = len(rows)
    m, mults = _integerize(rows)
    # minor_j of the scaled matrix = minor_j * product of the first j row
    # multipliers, so divide prefix products back out.
    prefix = [1]
    for f in mults:
        prefix.append(prefix[-1] * f)

    out: List[Fraction] = []
    prev = 1
    stalled = None
    for k in range(n):
        piv = m[k][k]
        out.append(Fraction(piv, prefix[k + 1]))
        if piv == 0:
            stalled = k
            break
        if k < n - 1:
            for i in range(k + 1, n):
                row_i, row_k = m[i], m[k]
                f = row_i[k]
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * piv - f * row_k[j]) // prev
                row_i[k] = 0
            prev = piv
    if stalled is not None:
        for k in range(stalled + 1, n):
            out.append(exact_det([row[:k + 1] for row in rows[:k + 1]]))
    return out


# ---------------------------------------------------------------------------
# Hankel minors of a series at infinity

@dataclass(frozen=True)
class HankelMinors:
    """D_j = det[s_{i+k}] and Dhat_j = det[s_{i+k+1}], i,k < j; D_0 = 1."""
    D: Tuple[Fraction, ...]
    Dhat: Tuple[Fraction, ...]
    order: int

    def d(self, j: int) -> Fraction:
        return Fraction(1) if j == 0 else self.D[j - 1]

    def dhat(self, j: int) -> Fraction:
        return Fraction(1) if j == 0 else self.Dhat[j - 1]


def hankel_minors(series: LaurentSeries, order: int) -> HankelMinors:
    """Both Hankel minor families through index `order`.

    D_order consumes s_0..s_{2*order-2} and Dhat_order consumes
    s_1..s_{2*order-1}, so the series must carry 2*order terms.
    """
    if order < 0:
        raise InvalidInputError("negative Hankel order")
    if len(series.s) < 2 * order:
        raise SeriesLengthError(
            f"need {2 * order} series terms for order {order}, "
            f"have {len(series.s)}")
    s = series.s
    D = [exact_det([[s[i + k] for k in range(j)] for i in range(j)])
         for j in range(1, order + 1)]
    Dhat = [exact_det([[s[i + k + 1] for k in range(j)] for i in range(j)])
            for j in range(1, order + 1)]
    return HankelMinors(tuple(D), tuple(Dhat), order)


def hankel_character_test(minors: HankelMinors, mode: str) -> bool:
    """Sign pattern of the two minor families up to the given order.

    mode 'strict-tp':     D_j > 0 and Dhat_j > 0 for all j
    mode 'sign-regular':  D_j > 0 and (-1)^j Dhat_j > 0 for all j
    """
    if mode == "strict-tp":
        return (all(d > 0 for d in minors.D)
                and all(dh > 0 for dh in minors.Dhat))
    if mode == "sign-regular":
        return (all(d > 0 for d in minors.D)
                and all((dh if j % 2 == 0 else -dh) > 0
                        for j, dh in enumerate(minors.Dhat, start=1)))
    raise InvalidInputError(f"unknown character mode {mode!r}")


# ---------------------------------------------------------------------------
# Hurwitz minors

def finite_hurwitz_matrix(p: Polynomial) -> List[List[Fraction]]:
    """The n x n Hurwitz matrix: row t, column c holds a_{2c+1-t}."""
    if p.is_zero():
        raise InvalidInputError("Hurwitz matrix of the zero polynomial")
    n = p.degree
    return [[p.coeff(2 * c + 1 - t) for c in range(n)] for t in range(n)]


def infinite_hurwitz_block(p: Polynomial, size: int) -> List[List[Fraction]]:
    """Leading block of the doubly infinite layout: row t, col c is a_{2c-t}."""
    if p.is_zero():
        raise InvalidInputError("Hurwitz block of the zero polynomial")
    return [[p.coeff(2 * c - t) for c in range(size)] for t in range(size)]


@dataclass(frozen=True)
class HurwitzMinors:
    """delta = (Delta_1..Delta_n), eta = (eta_1..eta_{n+1})."""
    delta: Tuple[Fraction, ...]
    eta: Tuple[Fraction, ...]
    n: int

    def d(self, j: int) -> Fraction:
        """Delta_j with the conventions Delta_0 = 1 and Delta_{-1} = 1/a_0
        (the latter needs the caller to scale; raw chain only here)."""
        if j == 0:
            return Fraction(1)
        return self.delta[j - 1]


def hurwitz_minors(p: Polynomial) -> HurwitzMinors:
    """Leading principal minors of both Hurwitz layouts.

    eta_j = a_0 * Delta_{j-1} ties the two chains together and is asserted
    on every call as an internal cross-check.
    """
    if p.is_zero():
        raise InvalidInputError("Hurwitz minors of the zero polynomial")
    n = p.degree
    delta = tuple(leading_principal_minors(finite_hurwitz_matrix(p))) if n else ()
    eta = tuple(leading_principal_minors(infinite_hurwitz_block(p, n + 1)))
    a0 = p.coeffs[0]
    assert eta[0] == a0
    for j in range(1, n + 1):
        assert eta[j] == a0 * delta[j - 1], "minor chain bridge violated"
    return HurwitzMinors(delta, eta, n)


# ---------------------------------------------------------------------------
# interleaved minors of a pair

@dataclass(frozen=True)
class NablaMinors:
    """Leading principal minors of the interleaved coefficient matrix."""
    nabla: Tuple[Fraction, ...]
    size: int


def nabla_minors(p: Polynomial, q: Polynomial,
                 size: Optional[int] = None) -> NablaMinors:
    """Minors of the row-interleaved matrix of the pair (p, q).

    Two layouts exist and the degree case picks one:

    - deg q = deg p = n: (2n+1)-square, rows alternate starting with the
      p row; row 2t column c holds a_{c-t}, row 2t+1 holds b_{c-t}.
    - deg q < deg p: 2n-square, rows alternate starting with a shifted q
      row; row 2t column c holds b_{c+1-t}, row 2t+1 holds a_{c-t}.

    Here b_i is the coefficient of z^{n-i} in q, aligned to p's degree.
    Passing size=2n+1 forces the equal-degree layout with a zero-padded
    b vector, which is what the identity checks for pair resolvents need
    when q's formal leading coefficients vanish.
    """
    if p.is_zero():
        raise InvalidPairError("first polynomial must be nonzero")
    n = p.degree
    dq = q.degree
    if isinstance(dq, int) and dq > n:
        raise InvalidPairError(
            f"second polynomial degree {dq} exceeds first degree {n}")
    equal = (dq == n)
    if size is None:
        size = 2 * n + 1 if equal else 2 * n
    if size not in (2 * n, 2 * n + 1):
        raise InvalidInputError(f"size must be {2*n} or {2*n+1}, got {size}")
    if size == 2 * n and equal:
        raise InvalidPairError(
            "the 2n layout drops b_0 and needs deg q < deg p")

    def a(i: int) -> Fraction:
        return p.coeff(i)

    def b(i: int) -> Fraction:
        return q.power_coeff(n - i)

    rows: List[List[Fraction]] = []
    if size == 2 * n + 1:
        for t in range(n + 1):
            rows.append([a(c - t) for c in range(size)])
            if len(rows) < size:
                rows.append([b(c - t) for c in range(size)])
    else:
        for t in range(n):
            rows.append([b(c + 1 - t) for c in range(size)])
            rows.append([a(c - t) for c in range(size)])
    return NablaMinors(tuple(leading_principal_minors(rows)), size)


# ---------------------------------------------------------------------------
# sign change counting

def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def scf_frobenius(seq: Sequence) -> int:
    """Sign changes with the Frobenius rule filling internal zero runs.

    Trailing zeros are dropped.  A zero run of length j bracketed by
    nonzero entries gets the signs sgn(D_{i+v}) = (-1)^{v(v-1)/2} sgn(D_i)
    for v = 1..j, after which changes are counted normally.  A leading
    zero leaves the rule without an anchor and is refused.
    """
    vals = [_rat(x) for x in seq]
    while vals and vals[-1] == 0:
        vals.pop()
    if not vals:
        raise InvalidSequenceError("sign changes of an all-zero sequence")
    if vals[0] == 0:
        raise InvalidSequenceError(
            "leading zero: the zero-run fill rule has no anchor")
    signs = []
    anchor = 0
    run = 0
    for x in vals:
        s = _sign(x)
        if s != 0:
            anchor, run = s, 0
        else:
            run += 1
            s = anchor * (-1) ** (run * (run - 1) // 2)
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def strong_sign_changes(seq: Sequence) -> int:
    """Sign changes among the nonzero entries only."""
    vals = [s for s in (_sign(_rat(x)) for x in seq) if s != 0]
    if not vals:
        raise InvalidSequenceError("sign changes of an all-zero sequence")
    return sum(1 for a, b in zip(vals, vals[1:]) if a != b)


# ---------------------------------------------------------------------------
# total nonnegativity scan

@dataclass(frozen=True)
class TNNScan:
    ok: bool
    witness_rows: Optional[Tuple[int, ...]]
    witness_cols: Optional[Tuple[int, ...]]
    checked_order: int


def _combinations(pool: int, k: int):
    # itertools.combinations, but local so the scan can short-circuit
    from itertools import combinations
    return combinations(range(pool), k)


def total_nonnegativity_scan(rows: Sequence[Sequence[Fraction]],
                             max_order: Optional[int] = None) -> TNNScan:
    """Check every minor up to max_order for nonnegativity.

    Exhaustive by construction (the point is certification, not speed);
    the first negative minor is returned as a witness.  Matrices larger
    than 8x8 are refused, the minor count doubles four times per step.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    if any(len(r) != ncols for r in rows):
        raise InvalidInputError("ragged matrix")
    if max(m, ncols) > 8:
        raise InvalidInputError(
            "total nonnegativity scan is capped at 8x8 "
            "(minor count grows as 4^n)")
    top = min(m, ncols)
    if max_order is not None:
        top = min(top, max_order)
    mat = [[_rat(x) for x in row] for row in rows]
    for k in range(1, top + 1):
        for ridx in _combinations(m, k):
            for cidx in _combinations(ncols, k):
                det = exact_det([[mat[i][j] for j in cidx] for i in ridx])
                if det < 0:
                    return TNNScan(False, ridx, cidx, k)
    return TNNScan(True, None, None, top)
