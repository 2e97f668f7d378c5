import pytest

from symtaut.filtration import (
    EQUAL_BOTH_FULL,
    EQUAL_BOTH_ZERO,
    EQUAL_GENUS_RANGE,
    perp_equality_case,
    theta_basis,
    theta_codim,
    theta_dim,
    theta_perp,
    theta_piece,
    theta_subspace,
)
from symtaut.linalg import Subspace
from symtaut.ring import (
    CurveParams,
    ParameterError,
    monomial,
    multiply,
    normal_form,
    piece_dim,
)


def test_theta_codim_examples():
    assert theta_codim(CurveParams(3, 7), 5, 2) == 1
    assert theta_codim(CurveParams(3, 7), 2, 1) == 1
    assert theta_codim(CurveParams(4, 9), 6, 0) == 0


def test_theta_basis_examples():
    assert theta_basis(CurveParams(3, 7), 5, 2) == ((3, 2), (2, 3))
    assert theta_basis(CurveParams(3, 7), 2, 1) == ((1, 1), (0, 2))
    ctx = CurveParams(4, 9)
    assert theta_basis(ctx, 3, 4) == ()
    assert theta_dim(ctx, 3, 4) == 0


def test_theta_basis_stationary_range():
    # d - m <= m <= g: the raw monomial tail is dependent below the threshold,
    # so the basis of the largest coinciding piece is returned
    ctx = CurveParams(5, 6)
    assert theta_basis(ctx, 4, 0) == theta_basis(ctx, 4, 2 * 4 - 6)
    assert theta_codim(ctx, 4, 0) == 0
    assert len(theta_basis(ctx, 4, 0)) == piece_dim(ctx, 4)


def test_theta_perp_examples():
    ctx = CurveParams(1, 3)
    space = theta_perp(ctx, 1, 1)
    assert space.dim == 1
    assert space.contains(normal_form(monomial(ctx, 1, 1)).coords)

    any_ctx = CurveParams(4, 6)
    assert theta_perp(any_ctx, 3, 0) == Subspace.zero(piece_dim(any_ctx, 3))

    witness = CurveParams(3, 4)
    space = theta_perp(witness, 2, 1)
    assert space.dim == 1
    from fractions import Fraction

    assert space.contains((1, -1, Fraction(1, 2)))


def test_theta_piece_type():
    ctx = CurveParams(3, 7)
    piece = theta_piece(ctx, 5, 2)
    assert piece.basis_monomials == ((3, 2), (2, 3))
    assert piece.subspace.dim == len(piece.basis_monomials)


def test_perp_equality_examples():
    verdict = perp_equality_case(CurveParams(3, 8), 2, 1)
    assert verdict.equal and verdict.reason == EQUAL_GENUS_RANGE
    assert not perp_equality_case(CurveParams(5, 6), 3, 2).equal
    assert perp_equality_case(CurveParams(5, 6), 3, 6).reason == EQUAL_BOTH_FULL
    assert perp_equality_case(CurveParams(5, 6), 4, 0).reason == EQUAL_BOTH_ZERO
    # stationary step: both sides vanish below the threshold
    assert perp_equality_case(CurveParams(5, 6), 4, 1).reason == EQUAL_BOTH_ZERO


def test_perp_strict_inclusion_direct():
    ctx = CurveParams(5, 6)
    perp = theta_perp(ctx, 3, 2)
    dual = theta_subspace(ctx, 3, 5 + 1 - 2)
    assert perp.contains_subspace(dual)
    assert perp.dim == 2 and dual.dim == 0


def test_containment_chain_sweep():
    for g in range(0, 5):
        for d in range(1, 8):
            ctx = CurveParams(g, d)
            for m in range(d + 1):
                previous = None
                for i in range(g + 2):
                    space = theta_subspace(ctx, m, i)
                    assert piece_dim(ctx, m) - space.dim == theta_codim(ctx, m, i)
                    if previous is not None:
                        assert previous.contains_subspace(space)
                    previous = space


def test_multiplicativity_samples():
    ctx = CurveParams(3, 6)
    for m, i in ((2, 1), (3, 2), (1, 1)):
        for l, j in ((2, 1), (1, 0), (3, 1)):
            if m + l > ctx.d:
                continue
            for a, b in theta_basis(ctx, m, i):
                for c, e in theta_basis(ctx, l, j):
                    product = multiply(monomial(ctx, a, b), monomial(ctx, c, e))
                    target = theta_subspace(ctx, m + l, i + j)
                    assert target.contains(normal_form(product).coords)


def test_input_validation():
    ctx = CurveParams(2, 4)
    with pytest.raises(ParameterError):
        theta_codim(ctx, 5, 0)
    with pytest.raises(ParameterError):
        theta_basis(ctx, 2, -1)
