"""The theta filtration of the graded ring.

The piece with parameters (i, m) is the span, inside the codimension-m graded
piece, of the monomials carrying at least i powers of theta.  The pieces form
an exhaustive decreasing multiplicative filtration; their orthogonals under
the intersection pairing cut out the linear hulls of the Abel-Jacobi faces.

Dimensions follow from one fact: any r(m)+1 of the monomials
x^m, x^(m-1)*theta, ..., x^(m-min(m,g))*theta^min(m,g) form a basis of the
piece.  Hence the filtration step spanned by the monomials with theta
exponent in [i, min(m, g)] has dimension min(min(m,g) - i + 1, r(m) + 1), is
stationary below a threshold, and its codimension reproduces the three-case
closed form keyed on r(m).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import Subspace
from .ring import (
    CurveParams,
    ParameterError,
    TautClass,
    monomial,
    normal_form,
    orthogonal_in_complement,
    piece_dim,
    piece_rank,
)


def _check_inputs(ctx: CurveParams, m: int, i: int):
    if not 0 <= m <= ctx.d:
        raise ParameterError(f"codimension {m} outside 0..{ctx.d}")
    if i < 0:
        raise ParameterError(f"filtration index {i} is negative")


def _exponent_window(ctx: CurveParams, m: int, i: int) -> tuple[int, int]:
    """Theta exponents [lo, hi] of the canonical basis of the (i, m) piece.

    Returns lo > hi for the zero piece.  When the raw monomial list from
    exponent i up is linearly dependent (the stationary range), the basis of
    the largest coinciding piece is used instead, i.e. the window is clamped
    to the top r(m)+1 exponents.
    """
    top = min(m, ctx.g)
    if i > top:
        return (1, 0)
    count = min(top - i + 1, piece_rank(ctx, m) + 1)
    return (top - count + 1, top)


def theta_dim(ctx: CurveParams, m: int, i: int) -> int:
    _check_inputs(ctx, m, i)
    lo, hi = _exponent_window(ctx, m, i)
    return max(hi - lo + 1, 0)


def theta_codim(ctx: CurveParams, m: int, i: int) -> int:
    """Codimension of the (i, m) filtration piece inside its graded piece.

    Matches the closed form: i when r(m) = m or r(m) = g;
    max(i - g + d - m, 0) when d - m <= g <= m;
    max(i - 2m + d, 0) when d - m <= m <= g.  Indices beyond the top theta
    exponent clamp to the zero piece.
    """
    return piece_dim(ctx, m) - theta_dim(ctx, m, i)


def theta_basis(ctx: CurveParams, m: int, i: int) -> tuple[tuple[int, int], ...]:
    """Exponent pairs (x power, theta power) of the canonical basis."""
    _check_inputs(ctx, m, i)
    lo, hi = _exponent_window(ctx, m, i)
    return tuple((m - j, j) for j in range(lo, hi + 1))


def theta_monomials(ctx: CurveParams, m: int, i: int) -> tuple[TautClass, ...]:
    return tuple(monomial(ctx, a, b) for a, b in theta_basis(ctx, m, i))


def theta_subspace(ctx: CurveParams, m: int, i: int) -> Subspace:
    """The piece as a subspace of R^m in standard-basis coordinates."""
    vectors = [normal_form(cls).coords for cls in theta_monomials(ctx, m, i)]
    return Subspace(piece_dim(ctx, m), vectors)


def theta_perp(ctx: CurveParams, m: int, i: int) -> Subspace:
    """Orthogonal of the (i, m) piece inside the complementary graded piece
    R^(d-m); its dimension equals theta_codim by perfectness of the pairing."""
    _check_inputs(ctx, m, i)
    return orthogonal_in_complement(ctx, m, theta_monomials(ctx, m, i))


@dataclass(frozen=True)
class ThetaPiece:
    """One filtration step: its basis monomials and its subspace of R^m."""

    ctx: CurveParams
    m: int
    i: int
    basis_monomials: tuple[tuple[int, int], ...]
    subspace: Subspace


def theta_piece(ctx: CurveParams, m: int, i: int) -> ThetaPiece:
    return ThetaPiece(ctx, m, i, theta_basis(ctx, m, i), theta_subspace(ctx, m, i))


EQUAL_GENUS_RANGE = "genus-at-most-max"
EQUAL_BOTH_FULL = "both-sides-full"
EQUAL_BOTH_ZERO = "both-sides-zero"


@dataclass(frozen=True)
class PerpComparison:
    """Outcome of comparing the orthogonal of the (i, m) piece with the
    (g+1-i, d-m) piece: the inclusion 'perp contains piece' always holds and
    is an equality exactly in the three listed situations."""

    equal: bool
    reason: Optional[str]


def perp_equality_case(ctx: CurveParams, m: int, i: int) -> PerpComparison:
    """Classify whether (theta piece (i, m)) perp equals theta piece
    (g+1-i, d-m), by the closed-form criteria:

    * g <= max(m, d-m);
    * i >= g+1, or m <= d-m <= g with g-(d-m)+m+1 <= i: both sides are the
      whole complementary piece;
    * i = 0, or d-m <= m <= g with i <= 2m-d: both sides are zero.

    Anything else is a strict inclusion.
    """
    _check_inputs(ctx, m, i)
    g, d = ctx.g, ctx.d
    if g <= max(m, d - m):
        return PerpComparison(True, EQUAL_GENUS_RANGE)
    if i >= g + 1 or (m <= d - m <= g and i >= g - (d - m) + m + 1):
        return PerpComparison(True, EQUAL_BOTH_FULL)
    if i == 0 or (d - m <= m <= g and i <= 2 * m - d):
        return PerpComparison(True, EQUAL_BOTH_ZERO)
    return PerpComparison(False, None)
