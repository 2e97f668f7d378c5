"""Exhaustive small-parameter verification sweeps.

Each check runs one family of identities or certificates over every admissible
parameter tuple inside the given genus/degree bounds and reports how many
cases were checked.  These back the ``verify`` command; the test suite calls
them with pinned bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import classes as cl
from . import faces as fc
from . import filtration as fl
from .linalg import RatMatrix, rank
from .ring import (
    CurveKind,
    CurveParams,
    TautClass,
    equals,
    eval_top,
    gram_matrix,
    intersection_number,
    is_positive_multiple,
    is_zero,
    monomial,
    multiply,
    normal_form,
    orthogonal_in_complement,
    pairing,
    piece_dim,
    piece_rank,
    standard_basis,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""


class _Collector:
    def __init__(self, name: str, max_failures: int = 4):
        self.name = name
        self.cases = 0
        self.failures: list[str] = []
        self.max_failures = max_failures

    def check(self, ok: bool, describe: Callable[[], str]):
        self.cases += 1
        if not ok and len(self.failures) < self.max_failures:
            self.failures.append(describe())

    def result(self) -> CheckResult:
        return CheckResult(
            self.name, not self.failures, self.cases, "; ".join(self.failures)
        )


def _contexts(max_g: int, max_d: int, kinds=(CurveKind.BN_GENERAL,)) -> Iterable[CurveParams]:
    for g in range(0, max_g + 1):
        for d in range(1, max_d + 1):
            for kind in kinds:
                if kind is CurveKind.HYPERELLIPTIC and g < 2:
                    continue
                yield CurveParams(g, d, kind)


def _sample_classes(ctx: CurveParams, m: int) -> list[TautClass]:
    """Deterministic exercise classes of codimension m."""
    top = min(m, ctx.g)
    samples = [
        TautClass(ctx, m, {(m - b, b): b + 1 for b in range(top + 1)}),
        TautClass(ctx, m, {(m - b, b): Fraction((-1) ** b, b + 2) for b in range(top + 1)}),
        monomial(ctx, m - top, top),
    ]
    return samples


# ---------------------------------------------------------------------------
# ring checks


def check_intersection_numbers(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("intersection-numbers")
    for g in range(0, max_g + 1):
        for d in range(1, max_d + 1):
            ctx = CurveParams(g, d)
            for s in range(d + 1):
                expected = math.factorial(s) * math.comb(g, s) if s <= g else 0
                got = eval_top(multiply(monomial(ctx, 0, s), monomial(ctx, d - s, 0)))
                ok = got == expected == intersection_number(ctx, s)
                out.check(ok, lambda g=g, d=d, s=s, got=got, e=expected: (
                    f"g={g} d={d} s={s}: got {got}, expected {e}"
                ))
    return out.result()


def check_gram_nondegenerate(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("gram-nondegenerate")
    for ctx in _contexts(max_g, max_d):
        for m in range(ctx.d + 1):
            matrix = gram_matrix(ctx, m)
            out.check(
                rank(matrix) == piece_dim(ctx, m),
                lambda ctx=ctx, m=m: f"g={ctx.g} d={ctx.d} m={m}: Gram matrix singular",
            )
    return out.result()


def check_gram_hankel(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("gram-hankel")
    for ctx in _contexts(max_g, max_d):
        for m in range(ctx.d + 1):
            matrix = gram_matrix(ctx, m)
            ok = all(
                matrix.entries[i][j] == matrix.entries[0][i + j]
                for i in range(matrix.rows)
                for j in range(matrix.cols)
                if i + j < matrix.cols
            ) and matrix == matrix.transpose()
            out.check(ok, lambda ctx=ctx, m=m: f"g={ctx.g} d={ctx.d} m={m}: not Hankel")
    return out.result()


def check_normal_form(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("normal-form")
    for ctx in _contexts(max_g, max_d):
        for m in range(ctx.d + 1):
            for cls in _sample_classes(ctx, m):
                nf = normal_form(cls)
                again = normal_form(nf.as_class())
                preserved = all(
                    pairing(cls, monomial(ctx, a, b))
                    == pairing(nf.as_class(), monomial(ctx, a, b))
                    for a, b in standard_basis(ctx, ctx.d - m)
                )
                out.check(
                    nf == again and preserved and len(nf.coords) == piece_dim(ctx, m),
                    lambda ctx=ctx, m=m: f"g={ctx.g} d={ctx.d} m={m}: normal form unstable",
                )
    return out.result()


def check_product_laws(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("product-laws")
    for ctx in _contexts(max_g, max_d):
        d = ctx.d
        splits = [(a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a)]
        for ma, mb, mc in splits[:12]:
            a = _sample_classes(ctx, ma)[0]
            b = _sample_classes(ctx, mb)[1]
            c = _sample_classes(ctx, mc)[0]
            comm = equals(multiply(a, b), multiply(b, a))
            assoc = equals(multiply(multiply(a, b), c), multiply(a, multiply(b, c)))
            graded = multiply(a, b).codim == ma + mb
            out.check(
                comm and assoc and graded,
                lambda ctx=ctx, ma=ma, mb=mb, mc=mc: (
                    f"g={ctx.g} d={ctx.d} codims ({ma},{mb},{mc}): product law fails"
                ),
            )
    return out.result()


# ---------------------------------------------------------------------------
# filtration checks


def check_filtration_dimensions(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("filtration-dimensions")
    for ctx in _contexts(max_g, max_d):
        for m in range(ctx.d + 1):
            for i in range(ctx.g + 2):
                space = fl.theta_subspace(ctx, m, i)
                codim = fl.theta_codim(ctx, m, i)
                perp = fl.theta_perp(ctx, m, i)
                ok = (
                    piece_dim(ctx, m) - space.dim == codim
                    and perp.dim == codim
                    and space.dim == len(fl.theta_basis(ctx, m, i))
                )
                out.check(ok, lambda ctx=ctx, m=m, i=i: (
                    f"g={ctx.g} d={ctx.d} m={m} i={i}: dimension formula fails"
                ))
    return out.result()


def check_filtration_containment(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("filtration-containment")
    for ctx in _contexts(max_g, max_d):
        for m in range(ctx.d + 1):
            for i in range(ctx.g + 1):
                big = fl.theta_subspace(ctx, m, i)
                small = fl.theta_subspace(ctx, m, i + 1)
                out.check(
                    big.contains_subspace(small),
                    lambda ctx=ctx, m=m, i=i: (
                        f"g={ctx.g} d={ctx.d} m={m}: piece {i + 1} not inside piece {i}"
                    ),
                )
    return out.result()


def check_filtration_multiplicative(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("filtration-multiplicative")
    for ctx in _contexts(max_g, max_d):
        d = ctx.d
        for m in range(d + 1):
            for l in range(d + 1 - m):
                for i in range(0, min(m, ctx.g) + 1, 2):
                    for j in range(0, min(l, ctx.g) + 1, 2):
                        basis_u = fl.theta_basis(ctx, m, i)
                        basis_v = fl.theta_basis(ctx, l, j)
                        if not basis_u or not basis_v:
                            continue
                        u = monomial(ctx, *basis_u[0])
                        v = monomial(ctx, *basis_v[0])
                        target = fl.theta_subspace(ctx, m + l, i + j)
                        out.check(
                            target.contains(normal_form(multiply(u, v)).coords),
                            lambda ctx=ctx, m=m, l=l, i=i, j=j: (
                                f"g={ctx.g} d={ctx.d}: piece({i},{m})*piece({j},{l}) "
                                f"escapes piece({i + j},{m + l})"
                            ),
                        )
    return out.result()


def check_perp_classifier(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("perp-classifier")
    for ctx in _contexts(max_g, max_d):
        for m in range(ctx.d + 1):
            for i in range(ctx.g + 2):
                perp = fl.theta_perp(ctx, m, i)
                dual = fl.theta_subspace(ctx, ctx.d - m, ctx.g + 1 - i)
                included = perp.contains_subspace(dual)
                equal = perp == dual
                verdict = fl.perp_equality_case(ctx, m, i)
                out.check(
                    included and equal == verdict.equal,
                    lambda ctx=ctx, m=m, i=i, eq=equal, v=verdict: (
                        f"g={ctx.g} d={ctx.d} m={m} i={i}: direct comparison {eq} "
                        f"vs classifier {v.equal}"
                    ),
                )
    return out.result()


# ---------------------------------------------------------------------------
# class-formula checks


def check_class_identities(max_g: int) -> CheckResult:
    out = _Collector("class-identities")
    for g in range(2, max_g + 1):
        for d in range(g, 2 * g - 1):
            ctx = CurveParams(g, d)
            canonical = cl.bn_canonical_class(ctx)
            out.check(
                equals(cl.bn_locus_class(ctx, d - g + 1), canonical),
                lambda g=g, d=d: f"g={g} d={d}: locus class != canonical form",
            )
            out.check(
                equals(cl.subordinate_class(ctx, 2 * g - 2, g - 1), canonical),
                lambda g=g, d=d: f"g={g} d={d}: canonical subordinate class mismatch",
            )
            out.check(
                equals(cl.bn_face_generator(ctx, 0), canonical),
                lambda g=g, d=d: f"g={g} d={d}: face generator at shift 0 mismatch",
            )
            if d - (g - 1) <= g - 1:
                hyp = CurveParams(g, d, CurveKind.HYPERELLIPTIC)
                out.check(
                    equals(
                        cl.hyperelliptic_face_generator(hyp, g - 1, 0),
                        cl.bn_canonical_class(hyp),
                    ),
                    lambda g=g, d=d: (
                        f"g={g} d={d}: hyperelliptic generator at dimension g-1 mismatch"
                    ),
                )
            for n in range(1, d + 1):
                if cl.admits_series(ctx, n) is not True:
                    continue
                out.check(
                    equals(
                        cl.subordinate_face_generator(ctx, n, 0),
                        cl.subordinate_class(ctx, d, n),
                    ),
                    lambda g=g, d=d, n=n: (
                        f"g={g} d={d} n={n}: shifted subordinate at 0 mismatch"
                    ),
                )
    return out.result()


def _image_dimension_pattern(out, cls, image_dim: int, label: str):
    n = cls.ctx.d - cls.codim
    for j in range(min(n, cls.ctx.g) + 1):
        value = pairing(cls, monomial(cls.ctx, n - j, j))
        ok = value == 0 if j > image_dim else value > 0
        out.check(ok, lambda label=label, j=j, v=value: (
            f"{label}: pairing with theta^{j} is {v}"
        ))


def check_image_dimension_pairings(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("image-dimension-pairings")
    for g in range(1, max_g + 1):
        for d in range(2, max_d + 1):
            ctx = CurveParams(g, d)
            for n in range(1, d + 1):
                if cl.admits_series(ctx, n) is True:
                    for i in range(min(n, g) + 1):
                        _image_dimension_pattern(
                            out,
                            cl.subordinate_face_generator(ctx, n, i),
                            i,
                            f"g={g} d={d} subordinate(n={n}, i={i})",
                        )
            if g <= d <= 2 * g - 2:
                for i in range(d - g + 1):
                    _image_dimension_pattern(
                        out,
                        cl.bn_face_generator(ctx, i),
                        2 * g - 2 - d + i,
                        f"g={g} d={d} bn-face(i={i})",
                    )
            if g >= 2:
                hyp = CurveParams(g, d, CurveKind.HYPERELLIPTIC)
                for n in range(1, g):
                    if not 0 <= d - n <= n:
                        continue
                    for i in range(d - n + 1):
                        _image_dimension_pattern(
                            out,
                            cl.hyperelliptic_face_generator(hyp, n, i),
                            2 * n - d + i,
                            f"g={g} d={d} hyper-face(n={n}, i={i})",
                        )
    return out.result()


def check_contractibility(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("contractibility")
    for g in range(1, max_g + 1):
        for d in range(2, max_d + 1):
            for kind in (CurveKind.BN_GENERAL, CurveKind.HYPERELLIPTIC):
                if kind is CurveKind.HYPERELLIPTIC and g < 2:
                    continue
                ctx = CurveParams(g, d, kind)
                for n in range(1, d + 1):
                    if cl.admits_series(ctx, n) is not True:
                        continue
                    for i in range(min(n, g) + 1):
                        got = cl.contractibility_index(
                            cl.subordinate_face_generator(ctx, n, i)
                        )
                        out.check(got == n - i, lambda g=g, d=d, n=n, i=i, got=got: (
                            f"g={g} d={d} {ctx.kind.value} n={n} i={i}: index {got} != {n - i}"
                        ))
    return out.result()


def check_push_specializations(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("push-specializations")
    for g in range(2, max_g + 1):
        for r in range(1, g):
            base = cl.pushed_subordinate_class(g, r, 0)
            out.check(
                equals(base, cl.subordinate_class(base.ctx, 2 * r, r)),
                lambda g=g, r=r: f"g={g} r={r}: push at 0 is not the subordinate class",
            )
            for i in range(0, max_d - 2 * r + 1):
                d = 2 * r + i
                if d > 2 * g - 2:
                    continue
                pushed = cl.pushed_subordinate_class(g, r, i, CurveKind.HYPERELLIPTIC)
                target = cl.hyperelliptic_bn_class(pushed.ctx, r)
                out.check(
                    is_positive_multiple(pushed, target),
                    lambda g=g, r=r, i=i: (
                        f"g={g} r={r} i={i}: push is not a positive multiple of the locus class"
                    ),
                )
    return out.result()


# ---------------------------------------------------------------------------
# face checks


def check_face_chains(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("face-chains")
    for ctx in _contexts(max_g, max_d, (CurveKind.BN_GENERAL, CurveKind.HYPERELLIPTIC)):
        for n in range(ctx.d + 1):
            tags = fc.regime(ctx, n)
            if not tags:
                continue
            chain = fc.face_chain(ctx, n)
            previous = None
            for k, face in enumerate(chain.faces):
                expected = fc.expected_face_dim(ctx, n, face.r, chain.primary)
                ok = (
                    face.certificate.perfect
                    and face.span.dim == expected
                    and face.span.dim == k + 1
                    and (previous is None or face.span.contains_subspace(previous))
                )
                out.check(ok, lambda ctx=ctx, n=n, face=face: (
                    f"g={ctx.g} d={ctx.d} {ctx.kind.value} n={n} r={face.r}: "
                    f"certificate or dimension fails"
                ))
                previous = face.span
    return out.result()


def check_sigma_perp(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("sigma-perp-filtration")
    for ctx in _contexts(max_g, max_d, (CurveKind.BN_GENERAL, CurveKind.HYPERELLIPTIC)):
        for n in range(1, ctx.d + 1):
            if cl.admits_series(ctx, n) is not True:
                continue
            gens = [
                cl.subordinate_face_generator(ctx, n, i)
                for i in range(min(n, ctx.g) + 1)
            ]
            coords = [normal_form(c).coords for c in gens]
            out.check(
                rank(RatMatrix(coords)) == len(gens),
                lambda ctx=ctx, n=n: f"g={ctx.g} d={ctx.d} n={n}: generators dependent",
            )
            for i in range(min(n, ctx.g) + 1):
                perp = orthogonal_in_complement(ctx, ctx.d - n, gens[: i + 1])
                out.check(
                    perp == fl.theta_subspace(ctx, n, i + 1),
                    lambda ctx=ctx, n=n, i=i: (
                        f"g={ctx.g} d={ctx.d} n={n}: span perp != filtration piece {i + 1}"
                    ),
                )
    return out.result()


def check_generator_positivity(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("generator-positivity")
    for ctx in _contexts(max_g, max_d, (CurveKind.BN_GENERAL, CurveKind.HYPERELLIPTIC)):
        for n in range(ctx.d + 1):
            if not fc.regime(ctx, n):
                continue
            chain = fc.face_chain(ctx, n)
            for face in chain.faces:
                for gen in face.generators:
                    for a, b in standard_basis(ctx, ctx.d - gen.codim):
                        value = pairing(gen, monomial(ctx, a, b))
                        out.check(value >= 0, lambda ctx=ctx, n=n, v=value: (
                            f"g={ctx.g} d={ctx.d} n={n}: generator pairs to {v} < 0"
                        ))
    return out.result()


def check_bn_rays(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("bn-rays")
    for g in range(2, max_g + 1):
        for d in range(2, min(max_d, 2 * g - 2) + 1):
            ctx = CurveParams(g, d)
            for r in range(max(1, d - g + 1), d // 2 + 1):
                if (r + 1) * d < r * (g + r + 1):
                    continue
                defect = cl.rho(g, r, d)
                n = r + defect
                face = fc.bn_ray(ctx, r)
                agrees = fc.bn_ray_perfect(g, r, d) == (
                    fl.theta_codim(ctx, n, defect + 1) == 1
                )
                closed_form = fc.bn_ray_perfect(g, r, d) == (
                    defect == 0 or d == g + r - 1
                )
                out.check(
                    agrees and closed_form and face.certificate.generators_in_span,
                    lambda g=g, d=d, r=r: f"g={g} d={d} r={r}: ray certificate mismatch",
                )
                out.check(
                    cl.contractibility_index(face.generators[0]) == r,
                    lambda g=g, d=d, r=r: f"g={g} d={d} r={r}: ray contractibility != r",
                )
    return out.result()


def check_theta_regime_dimensions(max_g: int, max_d: int) -> CheckResult:
    out = _Collector("theta-regime-dimensions")
    for g in range(1, max_g + 1):
        for d in range(2, max_d + 1):
            ctx = CurveParams(g, d)
            for n in range(d + 1):
                if g > max(n, d - n):
                    continue
                lo, hi = 1 + max(0, n - g), min(n, d - g)
                for r in range(max(1, 1 + max(0, n - g)), n + 1):
                    width = fl.theta_codim(ctx, n, n + 1 - r)
                    expected = min(n, d - g) - r + 1 if lo <= r <= hi else 0
                    out.check(width == max(expected, 0), lambda g=g, d=d, n=n, r=r: (
                        f"g={g} d={d} n={n} r={r}: span dimension mismatch"
                    ))
    return out.result()


def check_genus_one_cones(max_d: int) -> CheckResult:
    out = _Collector("genus-one-cones")
    for d in range(2, max_d + 1):
        ctx = CurveParams(1, d)
        for m in range(1, d):
            n = d - m
            chain = fc.face_chain(ctx, n)
            edge = monomial(ctx, m - 1, 1)
            span_ok = (
                len(chain.faces) == 1
                and chain.faces[0].span.dim == 1
                and chain.faces[0].span.contains(normal_form(edge).coords)
            )
            out.check(span_ok, lambda d=d, m=m: (
                f"d={d} m={m}: face span is not the theta edge"
            ))
            w_m = monomial(ctx, m, 0) - monomial(ctx, m - 1, 1, Fraction(m, d))
            w_c = monomial(ctx, d - m, 0) - monomial(ctx, d - m - 1, 1, Fraction(d - m, d))
            theta_m = monomial(ctx, m - 1, 1)
            theta_c = monomial(ctx, d - m - 1, 1)
            ok = (
                pairing(w_m, w_c) == 0
                and pairing(theta_m, theta_c) == 0
                and pairing(w_m, theta_c) > 0
                and pairing(theta_m, w_c) > 0
            )
            out.check(ok, lambda d=d, m=m: f"d={d} m={m}: boundary pairings wrong")
    return out.result()


# ---------------------------------------------------------------------------
# scopes


SCOPES = {
    "ring": (
        check_intersection_numbers,
        check_gram_nondegenerate,
        check_gram_hankel,
        check_normal_form,
        check_product_laws,
    ),
    "filtration": (
        check_filtration_dimensions,
        check_filtration_containment,
        check_filtration_multiplicative,
        check_perp_classifier,
    ),
    "classes": (
        lambda max_g, max_d: check_class_identities(max_g),
        check_image_dimension_pairings,
        check_contractibility,
        check_push_specializations,
    ),
    "faces": (
        check_face_chains,
        check_sigma_perp,
        check_generator_positivity,
        check_bn_rays,
        check_theta_regime_dimensions,
        lambda max_g, max_d: check_genus_one_cones(max_d),
    ),
}


def run_scope(scope: str, max_g: int, max_d: int) -> list[CheckResult]:
    if scope == "all":
        names = ("ring", "filtration", "classes", "faces")
    elif scope in SCOPES:
        names = (scope,)
    else:
        raise ValueError(f"unknown scope {scope!r}; use all|ring|filtration|classes|faces")
    results = []
    for name in names:
        for check in SCOPES[name]:
            results.append(check(max_g, max_d))
    return results
