"""Abel-Jacobi face spans of the pseudoeffective cone and their certificates.

For cycles of dimension n, the face with contraction index r has linear hull
contained in the orthogonal of the theta-filtration piece (n+1-r, n).  In four
parameter regimes the hull is known exactly and is spanned by explicit
effective classes:

* theta regime (g <= max(n, d-n)): spanned by monomials, the orthogonal being
  a filtration piece of the complementary degree;
* subordinate regime (the curve has a degree-d system of dimension n):
  spanned by translated subordinate classes;
* dimension g-1 regime (g <= d <= 2g-2): spanned by translated top
  Brill-Noether classes;
* hyperelliptic regime (n, d-n < g, d <= 2n): spanned by translated
  hyperelliptic Brill-Noether classes.

Each produced face carries a certificate recording the linear-algebra facts
that make it a perfect face: the generators are independent, they lie in the
orthogonal, and they are as many as its dimension.  Outside all regimes only
upper/lower dimension bounds are available.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .classes import (
    admits_series,
    bn_face_generator,
    bn_locus_class,
    hyperelliptic_face_generator,
    rho,
    subordinate_face_generator,
)
from .filtration import theta_basis, theta_codim, theta_perp
from .linalg import RatMatrix, Subspace, rank
from .ring import (
    CurveKind,
    CurveParams,
    ParameterError,
    TautClass,
    monomial,
    normal_form,
    piece_dim,
    piece_rank,
)


class NoRegimeError(ParameterError):
    """No face theorem applies to the requested (curve, dimension) pair."""


class Regime(str, Enum):
    THETA = "theta-faces"
    SUBORDINATE = "subordinate"
    BN_DIM_G_MINUS_1 = "bn-dim-g-1"
    HYPERELLIPTIC_BN = "hyperelliptic-bn"


@dataclass(frozen=True)
class Certificate:
    """Linear-algebra facts backing perfectness of one face: the generators
    are independent, their normal forms lie in the face span, and there are
    exactly as many of them as the codimension of the dual filtration piece."""

    span_dim: int
    theta_codim: int
    generator_count: int
    independent: bool
    generators_in_span: bool

    @property
    def perfect(self) -> bool:
        return (
            self.independent
            and self.generators_in_span
            and self.generator_count == self.theta_codim
        )


@dataclass(frozen=True)
class FaceDescriptor:
    """One face: its linear span, effective generator witnesses, the dual
    filtration piece (i, m) = (n+1-r, n), and the perfectness certificate.

    For chain faces the span is the full orthogonal of the dual piece; for a
    Brill-Noether ray it is the one-dimensional span of the locus class, which
    may sit strictly inside the orthogonal (then the certificate is imperfect).
    """

    ctx: CurveParams
    n: int
    r: int
    span: Subspace
    generators: tuple[TautClass, ...]
    dual_piece: tuple[int, int]
    certificate: Certificate


@dataclass(frozen=True)
class FaceChain:
    """All faces of one regime for fixed n, ordered by increasing dimension.

    ``regimes`` lists every theorem applicable at these parameters (their
    chains are checked to agree on spans); ``primary`` names the one whose
    generators are reported.
    """

    ctx: CurveParams
    n: int
    regimes: tuple[Regime, ...]
    primary: Regime
    faces: tuple[FaceDescriptor, ...]

    @property
    def dual_pieces(self) -> tuple[tuple[int, int], ...]:
        return tuple(face.dual_piece for face in self.faces)

    @property
    def all_perfect(self) -> bool:
        return all(face.certificate.perfect for face in self.faces)


def aj_span(ctx: CurveParams, n: int, r: int) -> Subspace:
    """Upper bound for the linear hull of the face with contraction index r in
    dimension n: the orthogonal of the theta piece (n+1-r, n), inside the
    complementary graded piece."""
    if not 0 <= n <= ctx.d:
        raise ParameterError(f"dimension {n} outside 0..{ctx.d}")
    if not 1 + max(0, n - ctx.g) <= r <= n:
        raise ParameterError(
            f"index {r} outside {1 + max(0, n - ctx.g)}..{n} for dimension {n}"
        )
    return theta_perp(ctx, n, n + 1 - r)


def regime(ctx: CurveParams, n: int) -> tuple[Regime, ...]:
    """Applicable face-theorem regimes at cycle dimension n, empty when only
    dimension bounds are available.

    Where two theorems provably produce the same faces, only the more specific
    tag is kept: the dimension g-1 regime subsumes the subordinate one (they
    meet only at d = 2g-2, n = g-1) and the hyperelliptic regime subsumes the
    dimension g-1 one.
    """
    g, d = ctx.g, ctx.d
    if not 0 <= n <= d:
        raise ParameterError(f"dimension {n} outside 0..{d}")
    tags = []
    if g <= max(n, d - n):
        tags.append(Regime.THETA)
    if 1 <= n and admits_series(ctx, n) is True:
        tags.append(Regime.SUBORDINATE)
    if n == g - 1 and g <= d <= 2 * g - 2:
        tags.append(Regime.BN_DIM_G_MINUS_1)
    if (
        ctx.kind is CurveKind.HYPERELLIPTIC
        and 1 <= n < g
        and 1 <= d - n < g
        and d <= 2 * n
    ):
        tags.append(Regime.HYPERELLIPTIC_BN)
    if Regime.HYPERELLIPTIC_BN in tags and Regime.BN_DIM_G_MINUS_1 in tags:
        tags.remove(Regime.BN_DIM_G_MINUS_1)
    if Regime.BN_DIM_G_MINUS_1 in tags and Regime.SUBORDINATE in tags:
        tags.remove(Regime.SUBORDINATE)
    return tuple(tags)


def _index_range(ctx: CurveParams, n: int, tag: Regime) -> range:
    """Contraction indices with a non-trivial face, largest first."""
    g, d = ctx.g, ctx.d
    if tag is Regime.THETA:
        lo, hi = 1 + max(0, n - g), min(n, d - g)
    elif tag is Regime.SUBORDINATE:
        lo, hi = 1 + max(0, n - g), n
    elif tag is Regime.BN_DIM_G_MINUS_1:
        lo, hi = 1, d - g + 1
    else:
        lo, hi = 1, d - n
    return range(hi, lo - 1, -1)


def expected_face_dim(ctx: CurveParams, n: int, r: int, tag: Regime) -> int:
    """Face dimension asserted by the regime's theorem."""
    g, d = ctx.g, ctx.d
    if tag is Regime.THETA:
        return min(n, d - g) - r + 1
    if tag is Regime.SUBORDINATE:
        return n + 1 - r
    if tag is Regime.BN_DIM_G_MINUS_1:
        return d - g + 2 - r
    return d - n + 1 - r


def _generators(ctx: CurveParams, n: int, r: int, tag: Regime) -> tuple[TautClass, ...]:
    g, d = ctx.g, ctx.d
    if tag is Regime.THETA:
        return tuple(
            monomial(ctx, a, b) for a, b in theta_basis(ctx, d - n, g - n + r)
        )
    if tag is Regime.SUBORDINATE:
        return tuple(subordinate_face_generator(ctx, n, i) for i in range(n - r + 1))
    if tag is Regime.BN_DIM_G_MINUS_1:
        return tuple(bn_face_generator(ctx, i) for i in range(d - g + 2 - r))
    return tuple(hyperelliptic_face_generator(ctx, n, i) for i in range(d - n + 1 - r))


def _build_face(ctx: CurveParams, n: int, r: int, tag: Regime) -> FaceDescriptor:
    i = n + 1 - r
    span = theta_perp(ctx, n, i)
    generators = _generators(ctx, n, r, tag)
    coords = [normal_form(cls).coords for cls in generators]
    certificate = Certificate(
        span_dim=span.dim,
        theta_codim=theta_codim(ctx, n, i),
        generator_count=len(generators),
        independent=rank(RatMatrix(coords)) == len(coords),
        generators_in_span=all(span.contains(v) for v in coords),
    )
    return FaceDescriptor(ctx, n, r, span, generators, (i, n), certificate)


def face_chain(ctx: CurveParams, n: int) -> FaceChain:
    """Maximal chain of faces at cycle dimension n for the primary applicable
    regime; raises NoRegimeError when only bounds apply.

    All applicable regimes are computed and their spans are required to agree
    face by face, so overlapping theorems cross-check each other.
    """
    tags = regime(ctx, n)
    if not tags:
        raise NoRegimeError(
            f"no face theorem applies at g={ctx.g}, d={ctx.d}, n={n}"
        )
    chains: dict[Regime, dict[int, FaceDescriptor]] = {}
    for tag in tags:
        chains[tag] = {r: _build_face(ctx, n, r, tag) for r in _index_range(ctx, n, tag)}
    for tag, other in zip(tags, tags[1:]):
        shared = chains[tag].keys() & chains[other].keys()
        for r in shared:
            assert chains[tag][r].span == chains[other][r].span, (
                f"regimes {tag.value} and {other.value} disagree at r={r}"
            )
    primary = next(
        tag
        for tag in (
            Regime.HYPERELLIPTIC_BN,
            Regime.BN_DIM_G_MINUS_1,
            Regime.SUBORDINATE,
            Regime.THETA,
        )
        if tag in tags
    )
    ordered = tuple(
        chains[primary][r] for r in sorted(chains[primary], reverse=True)
    )
    return FaceChain(ctx, n, tags, primary, ordered)


def dim_bounds(ctx: CurveParams, n: int, r: int) -> tuple[int, int]:
    """Lower and upper bounds for the face dimension when no regime applies:
    (max(d+1-g-r, 0), r(n)-r+1).  Valid for g >= max(n, d-n) and
    1 <= r <= min(n, d-n)."""
    g, d = ctx.g, ctx.d
    if g < max(n, d - n):
        raise ParameterError(f"bounds need g >= max(n, d-n), got g={g}, n={n}, d={d}")
    if not 1 <= r <= min(n, d - n):
        raise ParameterError(f"index {r} outside 1..{min(n, d - n)}")
    return max(d + 1 - g - r, 0), piece_rank(ctx, n) - r + 1


def bn_ray_perfect(g: int, r: int, d: int) -> bool:
    """Whether a Brill-Noether ray is certified perfect: exactly when the
    defect parameter vanishes or d = g+r-1 (then the orthogonal of its dual
    filtration piece is itself one-dimensional)."""
    return rho(g, r, d) == 0 or d == g + r - 1


def bn_ray(ctx: CurveParams, r: int) -> FaceDescriptor:
    """One-dimensional face spanned by a Brill-Noether locus class on a
    Brill-Noether general curve, in cycle dimension r + rho."""
    g, d = ctx.g, ctx.d
    if ctx.kind is not CurveKind.BN_GENERAL:
        raise ParameterError("Brill-Noether rays need a Brill-Noether general curve")
    if r < max(1, d - g + 1):
        raise ParameterError(f"index {r} below max(1, d-g+1)")
    if not (r + 1) * d >= r * (g + r + 1):
        raise ParameterError(f"degree {d} below the existence bound for r={r}")
    if d > 2 * g - 2:
        raise ParameterError(f"degree {d} above 2g-2 = {2 * g - 2}")
    defect = rho(g, r, d)
    n = r + defect
    cls = bn_locus_class(ctx, r)
    coords = normal_form(cls).coords
    span = Subspace(piece_dim(ctx, d - n), [coords])
    i = defect + 1
    perp = theta_perp(ctx, n, i)
    certificate = Certificate(
        span_dim=span.dim,
        theta_codim=theta_codim(ctx, n, i),
        generator_count=1,
        independent=span.dim == 1,
        generators_in_span=perp.contains(coords),
    )
    return FaceDescriptor(ctx, n, r, span, (cls,), (i, n), certificate)


FACET_HIGH_DIMENSION = "aj-facet-high-dimension"
FACET_GONALITY = "gonality"
FACET_DIM_G_MINUS_1 = "dim-g-minus-1"
FACET_VERY_GENERAL = "very-general-only"


@dataclass(frozen=True)
class Nontriviality:
    """Existence flags for non-trivial faces and facets at fixed n.

    ``facet_case`` names the hypothesis yielding a facet: high-dimension (the
    index n+1-g face when g <= n), the dimension g-1 case, an n-dimensional
    system of degree d (gonality), the very-general fallback for g <= d, or
    None.  ``very_general_facet`` flags the fallback range independently.
    """

    exists: bool
    exists_tautological: bool
    facet_case: Optional[str]
    very_general_facet: bool


def nontriviality(ctx: CurveParams, n: int) -> Nontriviality:
    """Closed-form non-triviality tests for 1 <= n <= d-1: faces exist once
    2d >= n+g+1; tautological ones once d >= g+1, or for Brill-Noether general
    curves in the same range."""
    g, d = ctx.g, ctx.d
    if not 1 <= n <= d - 1:
        raise ParameterError(f"dimension {n} outside 1..{d - 1}")
    exists = 2 * d >= n + g + 1
    exists_taut = d >= g + 1 or (exists and ctx.kind is CurveKind.BN_GENERAL)
    if g <= n:
        case = FACET_HIGH_DIMENSION
    elif n == g - 1 and d <= 2 * g - 2:
        case = FACET_DIM_G_MINUS_1
    elif admits_series(ctx, n) is True:
        case = FACET_GONALITY
    elif g <= d:
        case = FACET_VERY_GENERAL
    else:
        case = None
    return Nontriviality(exists, exists_taut, case, g <= d)


@dataclass(frozen=True)
class RegionCell:
    """Classification of one lattice point (n, m), with d = n+m: which face
    families exist there and under which hypothesis."""

    n: int
    m: int
    nontrivial_aj: bool
    theta_faces: bool
    subordinate_faces: bool
    bn_ray_indices: tuple[int, ...]
    bn_dim_g_minus_1: bool
    facet: bool
    very_general_facet: bool

    @property
    def d(self) -> int:
        return self.n + self.m


def _bn_line_indices(g: int, n: int, m: int) -> tuple[int, ...]:
    """Indices r whose Brill-Noether ray lives at (n, m): integer points of
    (r+1)m + rn = r^2 + rg within the existence range."""
    hits = []
    if n + m > 2 * g - 2:
        return ()
    for r in range(1, g + 1):
        if (r + 1) * m + r * n != r * r + r * g:
            continue
        if m % r != 0:
            continue
        s = m // r
        if s >= 1 and g - (r + 1) * s >= 0:
            hits.append(r)
    return tuple(hits)


def region_map(
    g: int, kind: Union[CurveKind, str], extent: int, gonality_overrides=()
) -> tuple[RegionCell, ...]:
    """Region classification over the grid 0 <= n, m <= extent.

    Border cells with n = 0 or m = 0 carry no flags.  All conditions are the
    exact integer forms of the defining inequalities; the subordinate flag
    follows the gonality of the given curve kind and stays off when a custom
    kind leaves it undecidable.
    """
    if g < 1:
        raise ParameterError(f"region map needs genus >= 1, got {g}")
    if extent < 1:
        raise ParameterError(f"extent must be positive, got {extent}")
    kind = CurveKind(kind)
    cells = []
    for n in range(extent + 1):
        for m in range(extent + 1):
            if n == 0 or m == 0:
                cells.append(RegionCell(n, m, False, False, False, (), False, False, False))
                continue
            d = n + m
            ctx = CurveParams(g, d, kind, gonality_overrides)
            nontrivial = 2 * d >= n + g + 1
            theta = g <= max(n, m)
            subordinate = admits_series(ctx, n) is True
            rays = _bn_line_indices(g, n, m)
            bn_dim = n == g - 1 and 1 <= m <= g - 1
            facet = theta or subordinate or bn_dim
            cells.append(
                RegionCell(
                    n,
                    m,
                    nontrivial,
                    theta,
                    subordinate,
                    rays,
                    bn_dim,
                    facet,
                    d >= g,
                )
            )
    return tuple(cells)
