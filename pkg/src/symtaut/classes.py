"""Numeric invariants and cycle classes attached to linear series on curves.

Closed-form classes of the classical loci inside a symmetric product: the
Brill-Noether loci of divisors moving in large linear systems, subordinate
loci of a fixed linear system, their translates by a base point, and the
hyperelliptic variants.  All formulas expand to exact-rational polynomials in
x and theta; binomial coefficients with negative upper index follow the
falling-factorial convention of :func:`symtaut.ring.binom`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .ring import (
    CurveKind,
    CurveParams,
    ParameterError,
    TautClass,
    binom,
    generic_gonality,
    is_zero,
    monomial,
    multiply,
)


def rho(g: int, r: int, d: int) -> int:
    """Expected dimension defect parameter g - (r+1)(g-d+r); may be negative."""
    return g - (r + 1) * (g - d + r)


@dataclass(frozen=True)
class GonalityBounds:
    """Interval of possible values for a gonality index that the curve kind
    does not determine: [2r, generic bound]."""

    lower: int
    upper: int


def gonality_index(ctx: CurveParams, r: int) -> Union[int, GonalityBounds]:
    """Least degree of an r-dimensional linear system on the curve.

    Exact for every curve when r >= g-1 (g+r for r >= g, 2g-2 for r = g-1);
    below that it is the generic bound for Brill-Noether general curves, 2r
    for hyperelliptic ones, the override for custom curves if present, and
    otherwise only the interval [2r, generic bound] is known.
    """
    if r < 1:
        raise ParameterError(f"gonality index needs r >= 1, got {r}")
    g = ctx.g
    if r >= g:
        return g + r
    if r == g - 1:
        return 2 * g - 2
    if ctx.kind is CurveKind.BN_GENERAL:
        return generic_gonality(g, r)
    if ctx.kind is CurveKind.HYPERELLIPTIC:
        return 2 * r
    override = ctx.override_for(r)
    if override is not None:
        return override
    return GonalityBounds(2 * r, generic_gonality(g, r))


def admits_series(ctx: CurveParams, r: int) -> Optional[bool]:
    """Whether the curve carries a linear system of degree d and dimension r.

    True/False when decidable from the kind or an override; None when the
    custom kind leaves the gonality index undetermined and d falls inside the
    open interval.
    """
    gon = gonality_index(ctx, r)
    if isinstance(gon, GonalityBounds):
        if ctx.d >= gon.upper:
            return True
        if ctx.d < gon.lower:
            return False
        return None
    return ctx.d >= gon


def castelnuovo_count(g: int, r: int, d: int) -> tuple[Fraction, Fraction]:
    """Count of r-dimensional degree-d series on a generic curve when the
    defect parameter vanishes.

    Two index conventions circulate for the product: over i = 1..r and over
    i = 0..r (they differ by the factor (g-d+r)!).  The classical plane count
    at (g, r, d) = (4, 1, 3) is 2, matching the zero-based variant; both
    evaluations are returned as (one-based, zero-based) and the caller picks.
    """
    if rho(g, r, d) != 0:
        raise ParameterError(f"count needs vanishing defect, rho = {rho(g, r, d)}")
    s = g - d + r
    one_based = Fraction(math.factorial(g))
    for i in range(1, r + 1):
        one_based *= Fraction(math.factorial(i), math.factorial(s + i))
    zero_based = one_based / math.factorial(s)
    return one_based, zero_based


def _require(condition: bool, message: str):
    if not condition:
        raise ParameterError(message)


def bn_locus_class(ctx: CurveParams, r: int) -> TautClass:
    """Class of the locus of degree-d divisors moving in an r-dimensional
    linear system, valid when the locus is empty or of expected dimension.

    Codimension r*(g-d+r); requires d <= 2g-2, r >= max(1, d-g+1) and a
    non-negative expected dimension so the class lives in the ring.
    """
    g, d = ctx.g, ctx.d
    _require(0 <= d <= 2 * g - 2, f"degree {d} outside 0..{2 * g - 2}")
    _require(r >= max(1, d - g + 1), f"series dimension {r} below max(1, d-g+1)")
    s = g - d + r
    codim = r * s
    _require(codim <= d, f"expected codimension {codim} exceeds the degree {d}")
    prefactor = Fraction(1)
    for i in range(r + 1):
        prefactor *= Fraction(math.factorial(i), math.factorial(s + i - 1))
    coeffs = {}
    for alpha in range(r + 1):
        q = (
            prefactor
            * (-1) ** alpha
            * Fraction(math.factorial(s + alpha - 1))
            / (math.factorial(alpha) * math.factorial(r - alpha))
        )
        coeffs[(alpha, codim - alpha)] = q
    return TautClass(ctx, codim, coeffs)


def bn_canonical_class(ctx: CurveParams) -> TautClass:
    """Class of the top nonempty Brill-Noether locus for g <= d <= 2g-2 (the
    one subordinate to the canonical system, of dimension g-1):
    sum over alpha of (-1)^alpha x^alpha theta^(d-g+1-alpha)/(d-g+1-alpha)!."""
    g, d = ctx.g, ctx.d
    _require(g <= d <= 2 * g - 2, f"degree {d} outside {g}..{2 * g - 2}")
    m = d - g + 1
    coeffs = {
        (alpha, m - alpha): Fraction((-1) ** alpha, math.factorial(m - alpha))
        for alpha in range(m + 1)
    }
    return TautClass(ctx, m, coeffs)


def subordinate_class(ctx: CurveParams, series_degree: int, series_dim: int) -> TautClass:
    """Class of the divisors dominated by a member of a fixed linear system of
    the given degree and dimension: sum of C(l-g-s, k) x^k theta^(d-s-k)/(d-s-k)!."""
    l, s = series_degree, series_dim
    _require(l >= ctx.d >= s >= 0, f"need series degree {l} >= d >= dimension {s} >= 0")
    m = ctx.d - s
    coeffs = {}
    for k in range(m + 1):
        q = binom(l - ctx.g - s, k) / math.factorial(m - k)
        if q:
            coeffs[(k, m - k)] = q
    return TautClass(ctx, m, coeffs)


def subordinate_face_generator(ctx: CurveParams, n: int, i: int) -> TautClass:
    """Class of a dimension-n subordinate locus translated by i copies of a
    base point; its Abel-Jacobi image has dimension exactly i.

    Needs an n-dimensional degree-d system on the curve (decidable from the
    kind) and 0 <= i <= min(n, g).
    """
    g, d = ctx.g, ctx.d
    _require(1 <= n <= d, f"dimension {n} outside 1..{d}")
    if admits_series(ctx, n) is not True:
        raise ParameterError(
            f"curve kind {ctx.kind.value} does not guarantee a degree-{d} system of dimension {n}"
        )
    _require(0 <= i <= min(n, g), f"shift {i} outside 0..min({n}, {g})")
    m = d - n
    coeffs = {}
    for k in range(m - i + 1):
        q = binom(d - g - n, k) / math.factorial(m - i - k)
        if q:
            coeffs[(k + i, m - i - k)] = q
    return TautClass(ctx, m, coeffs)


def bn_face_generator(ctx: CurveParams, i: int) -> TautClass:
    """Class of the translated top Brill-Noether locus in dimension g-1; its
    Abel-Jacobi image has dimension 2g-2-d+i.  Needs g <= d <= 2g-2 and
    0 <= i <= d-g."""
    g, d = ctx.g, ctx.d
    _require(g <= d <= 2 * g - 2, f"degree {d} outside {g}..{2 * g - 2}")
    _require(0 <= i <= d - g, f"shift {i} outside 0..{d - g}")
    m = d - g + 1
    coeffs = {
        (alpha + i, m - alpha - i): Fraction((-1) ** alpha, math.factorial(m - alpha - i))
        for alpha in range(m - i + 1)
    }
    return TautClass(ctx, m, coeffs)


def hyperelliptic_bn_class(ctx: CurveParams, r: int) -> TautClass:
    """Normalized representative of the Brill-Noether locus class on a
    hyperelliptic curve (the true class is a positive multiple):
    sum of C(d-r-g, k) x^k theta^(r-k)/(r-k)!.

    The expansion describes the locus itself for r >= max(0, d-g+1); below
    that the locus is the whole space and the formula is only the stated
    normalized expansion.
    """
    g, d = ctx.g, ctx.d
    _require(ctx.kind is CurveKind.HYPERELLIPTIC, "needs a hyperelliptic curve")
    _require(0 <= d <= 2 * g - 2, f"degree {d} outside 0..{2 * g - 2}")
    _require(0 <= r, f"series dimension {r} is negative")
    _require(2 * r <= d, f"series dimension {r} above d/2")
    coeffs = {}
    for k in range(r + 1):
        q = binom(d - r - g, k) / math.factorial(r - k)
        if q:
            coeffs[(k, r - k)] = q
    return TautClass(ctx, r, coeffs)


def hyperelliptic_face_generator(ctx: CurveParams, n: int, i: int) -> TautClass:
    """Normalized class of the translated hyperelliptic Brill-Noether locus of
    dimension n; its Abel-Jacobi image has dimension 2n-d+i.  Needs
    0 <= d-n <= n < g and 0 <= i <= d-n."""
    g, d = ctx.g, ctx.d
    _require(ctx.kind is CurveKind.HYPERELLIPTIC, "needs a hyperelliptic curve")
    _require(0 <= d - n <= n < g, f"need 0 <= d-n <= n < g, got n={n}, d={d}, g={g}")
    _require(0 <= i <= d - n, f"shift {i} outside 0..{d - n}")
    m = d - n
    coeffs = {}
    for k in range(m - i + 1):
        q = binom(n - g, k) / math.factorial(m - i - k)
        if q:
            coeffs[(k + i, m - i - k)] = q
    return TautClass(ctx, m, coeffs)


def pushed_subordinate_class(
    g: int, r: int, i: int, kind: CurveKind = CurveKind.BN_GENERAL
) -> TautClass:
    """i-fold base-point push of the subordinate class of an r-fold multiple of
    a degree-2 pencil, in ambient degree 2r+i:

        i! * sum of C(r-g+i, k) x^k theta^(r-k)/(r-k)!

    At i = 0 this is the plain subordinate class; at i = d-2r it is i! times
    the normalized hyperelliptic Brill-Noether class.
    """
    if r < 1:
        raise ParameterError(f"need r >= 1, got {r}")
    if i < 0:
        raise ParameterError(f"need i >= 0, got {i}")
    ctx = CurveParams(g, 2 * r + i, kind)
    coeffs = {}
    for k in range(r + 1):
        q = math.factorial(i) * binom(r - g + i, k) / math.factorial(r - k)
        if q:
            coeffs[(k, r - k)] = q
    return TautClass(ctx, r, coeffs)


def contractibility_index(cls: TautClass) -> int:
    """Largest c <= k+1 (k the dimension of the class) such that the product
    with theta^(k+1-c) vanishes numerically.  Equals k+1 exactly for the zero
    class; the product with theta^(k+1) vanishes for dimension reasons, so the
    index is always defined."""
    k = cls.ctx.d - cls.codim
    for c in range(k + 1, 0, -1):
        # monomial() already collapses theta powers beyond the genus to zero
        if is_zero(multiply(cls, monomial(cls.ctx, 0, k + 1 - c))):
            return c
    return 0


def diagonal_dual_divisor(ctx: CurveParams) -> TautClass:
    """The divisor class d*g*x - theta, spanning the ray of the nef cone dual
    to the small diagonal."""
    return monomial(ctx, 1, 0, ctx.d * ctx.g) - monomial(ctx, 0, 1)
