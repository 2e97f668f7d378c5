"""Acceptance suite: one test per criterion, each at its stated bounds.

Every test prints a single pass/fail line (visible with ``pytest -s``) and
asserts the criterion, so a red test always names its criterion.  All
comparisons are exact; there are no tolerances anywhere.
"""

import math

from symtaut.classes import (
    admits_series,
    bn_canonical_class,
    bn_face_generator,
    contractibility_index,
    hyperelliptic_bn_class,
    hyperelliptic_face_generator,
    rho,
    subordinate_face_generator,
)
from symtaut.faces import Regime, aj_span, bn_ray_perfect, face_chain, region_map
from symtaut.filtration import theta_codim, theta_subspace
from symtaut.linalg import Subspace, rank
from symtaut.report import region_svg, region_text
from symtaut.ring import (
    CurveKind,
    CurveParams,
    equals,
    eval_top,
    gram_matrix,
    intersection_number,
    monomial,
    multiply,
    normal_form,
    pairing,
    piece_dim,
    theta_class,
    x_class,
)
from symtaut.verify import (
    check_class_identities,
    check_genus_one_cones,
    check_perp_classifier,
)


def _report(number: int, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"acceptance criterion {number:2d}: {status}" + (f"  [{detail}]" if detail else ""))
    assert ok, f"criterion {number} failed: {detail}"


def test_criterion_01_intersection_numbers():
    # theta^s . x^(d-s) = s! C(g, s) exactly, for all s <= d, g <= 10, d <= 14
    bad = []
    for g in range(0, 11):
        for d in range(1, 15):
            ctx = CurveParams(g, d)
            for s in range(d + 1):
                oracle = math.factorial(s) * math.comb(g, s) if s <= g else 0
                via_ring = eval_top(multiply(monomial(ctx, 0, s), monomial(ctx, d - s, 0)))
                if not (via_ring == oracle == intersection_number(ctx, s)):
                    bad.append((g, d, s))
    _report(1, not bad, f"first failures: {bad[:3]}" if bad else "g<=10 d<=14")


def test_criterion_02_gram_nondegenerate():
    bad = []
    for g in range(0, 9):
        for d in range(1, 13):
            ctx = CurveParams(g, d)
            for m in range(d + 1):
                if rank(gram_matrix(ctx, m)) != piece_dim(ctx, m):
                    bad.append((g, d, m))
    _report(2, not bad, f"failures: {bad[:3]}" if bad else "g<=8 d<=12")


def test_criterion_03_normal_form_fixed_points():
    ctx = CurveParams(2, 3)
    # oracle: hand-solved 2x2 Gram system [[1,2],[2,2]] c = (2,0) gives (-2, 2)
    ok = normal_form(monomial(ctx, 0, 2)).coords == (-2, 2)
    for d in range(3, 11):
        elliptic = CurveParams(1, d)
        ok = ok and normal_form(monomial(elliptic, 0, 2)).is_zero
    _report(3, ok)


def test_criterion_04_class_formula_cross_checks():
    result = check_class_identities(8)
    _report(4, result.passed, f"{result.cases} identities" if result.passed else result.detail)


def test_criterion_05_worked_chain_g3_d4():
    ctx = CurveParams(3, 4)
    gen = bn_face_generator(ctx, 0)
    pairings = [pairing(gen, monomial(ctx, 2 - j, j)) for j in (2, 1, 0)]
    ok = pairings == [0, 0, 1]
    chain = face_chain(ctx, 2)
    ok = ok and [f.span.dim for f in chain.faces] == [1, 2] and chain.all_perfect
    _report(5, ok, f"pairings {pairings}")


def test_criterion_06_nef_span_equality():
    bad = []
    cases = 0
    for kind in (CurveKind.BN_GENERAL, CurveKind.HYPERELLIPTIC):
        for g in range(1 if kind is CurveKind.BN_GENERAL else 2, 7):
            for d in range(2, 13):
                ctx = CurveParams(g, d, kind)
                for n in range(1, d + 1):
                    if admits_series(ctx, n) is not True:
                        continue
                    for r in range(1 + max(0, n - g), n + 1):
                        cases += 1
                        gens = [
                            subordinate_face_generator(ctx, n, i)
                            for i in range(n - r + 1)
                        ]
                        span = Subspace(
                            piece_dim(ctx, d - n),
                            [normal_form(c).coords for c in gens],
                        )
                        target = aj_span(ctx, n, r)
                        if span != target or span.dim != n + 1 - r:
                            bad.append((kind.value, g, d, n, r))
    _report(6, not bad, f"{cases} faces" if not bad else f"failures: {bad[:3]}")


def test_criterion_07_pseff_theta_dims():
    # face dims min(n, d-g) - r + 1 on the stated range, and dual codims per
    # the literal three-case formula, for g <= 6, d <= 14, g <= max(n, d-n)
    def literal_codim(g, d, m, i):
        r = min(m, d - m, g)
        if r == m or r == g:
            value = i
        elif g <= m:  # r = d - m <= g <= m
            value = max(i - g + d - m, 0)
        else:  # r = d - m <= m <= g
            value = max(i - 2 * m + d, 0)
        return min(value, r + 1)

    bad = []
    cases = 0
    for g in range(1, 7):
        for d in range(2, 15):
            ctx = CurveParams(g, d)
            for n in range(d + 1):
                if g > max(n, d - n):
                    continue
                lo, hi = 1 + max(0, n - g), min(n, d - g)
                for r in range(1 + max(0, n - g), n + 1):
                    cases += 1
                    dim = theta_codim(ctx, n, n + 1 - r)
                    expected = hi - r + 1 if lo <= r <= hi else 0
                    if dim != expected:
                        bad.append(("dim", g, d, n, r))
                for i in range(g + 2):
                    cases += 1
                    if theta_codim(ctx, n, i) != literal_codim(g, d, n, i):
                        bad.append(("codim", g, d, n, i))
                    if piece_dim(ctx, n) - theta_subspace(ctx, n, i).dim != theta_codim(ctx, n, i):
                        bad.append(("rank", g, d, n, i))
    _report(7, not bad, f"{cases} cases" if not bad else f"failures: {bad[:3]}")


def test_criterion_08_genus_one_closed_form():
    result = check_genus_one_cones(10)
    _report(8, result.passed, f"{result.cases} cases" if result.passed else result.detail)


def test_criterion_09_contractibility():
    ok = contractibility_index(theta_class(CurveParams(1, 2))) == 1
    ctx33 = CurveParams(3, 3)
    ok = ok and contractibility_index(theta_class(ctx33) - x_class(ctx33)) == 1
    bad = []
    for kind in (CurveKind.BN_GENERAL, CurveKind.HYPERELLIPTIC):
        for g in range(1 if kind is CurveKind.BN_GENERAL else 2, 5):
            for d in range(2, 11):
                ctx = CurveParams(g, d, kind)
                for n in range(1, d + 1):
                    if admits_series(ctx, n) is not True:
                        continue
                    for i in range(min(n, g) + 1):
                        got = contractibility_index(subordinate_face_generator(ctx, n, i))
                        if got != n - i:
                            bad.append((kind.value, g, d, n, i, got))
    _report(9, ok and not bad, f"failures: {bad[:3]}" if bad else "")


def test_criterion_10_perp_classifier():
    result = check_perp_classifier(6, 12)
    _report(10, result.passed, f"{result.cases} cases" if result.passed else result.detail)


def test_criterion_11_hyperelliptic_chain():
    ctx = CurveParams(4, 5, CurveKind.HYPERELLIPTIC)
    chain = face_chain(ctx, 3)
    ok = (
        chain.primary is Regime.HYPERELLIPTIC_BN
        and [(f.r, f.span.dim) for f in chain.faces] == [(2, 1), (1, 2)]
        and chain.all_perfect
        and all(
            f.generators
            == tuple(hyperelliptic_face_generator(ctx, 3, i) for i in range(f.span.dim))
            for f in chain.faces
        )
    )
    g2 = CurveParams(2, 2, CurveKind.HYPERELLIPTIC)
    ok = ok and equals(hyperelliptic_bn_class(g2, 1), bn_canonical_class(g2))
    ok = ok and hyperelliptic_bn_class(g2, 1) == theta_class(g2) - x_class(g2)
    _report(11, ok)


def test_criterion_12_region_figure():
    cells = region_map(10, CurveKind.BN_GENERAL, 12)
    lookup = {(c.n, c.m): c for c in cells}
    ok = 4 in lookup[(4, 8)].bn_ray_indices and 4 in lookup[(9, 4)].bn_ray_indices
    for cell in cells:
        if cell.n == 0 or cell.m == 0:
            continue
        ok = ok and cell.theta_faces == (10 <= max(cell.n, cell.m))
        ok = ok and cell.nontrivial_aj == (2 * cell.d >= cell.n + 10 + 1)
    text_a = region_text(10, CurveKind.BN_GENERAL, 12, cells)
    text_b = region_text(10, CurveKind.BN_GENERAL, 12, region_map(10, "bn-general", 12))
    svg_a = region_svg(10, CurveKind.BN_GENERAL, 12, cells)
    svg_b = region_svg(10, CurveKind.BN_GENERAL, 12, cells)
    ok = ok and text_a == text_b and svg_a == svg_b
    _report(12, ok)


def test_criterion_13_bn_ray_perfection():
    bad = []
    cases = 0
    for g in range(2, 9):
        for d in range(2, 2 * g - 1):
            ctx = CurveParams(g, d)
            for r in range(max(1, d - g + 1), d // 2 + 1):
                if (r + 1) * d < r * (g + r + 1):
                    continue
                cases += 1
                defect = rho(g, r, d)
                predicted = bn_ray_perfect(g, r, d)
                direct = theta_codim(ctx, r + defect, defect + 1) == 1
                closed = defect == 0 or d == g + r - 1
                if predicted != direct or predicted != closed:
                    bad.append((g, r, d))
    _report(13, not bad, f"{cases} rays" if not bad else f"failures: {bad[:3]}")
