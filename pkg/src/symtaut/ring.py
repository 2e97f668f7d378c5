"""The graded ring of numerical cycle classes on a symmetric product of a curve.

For a smooth curve of genus ``g`` the ``d``-fold symmetric product carries two
natural divisor classes: ``x`` (divisors through a fixed point, ample) and
``theta`` (pullback of the theta divisor under the Abel-Jacobi morphism, nef).
They generate a graded subring of the numerical cycle classes whose structure
is independent of the curve.  The classical facts this module encodes are:

* top intersections: ``theta^s . x^(d-s) = s! * C(g, s)``, zero once ``s > g``;
* the graded piece in codimension ``m`` has dimension ``r(m) + 1`` with
  ``r(m) = min(m, d - m, g)``, freely spanned by the standard monomials
  ``x^m, x^(m-1)*theta, ..., x^(m-r(m))*theta^r(m)``;
* the intersection pairing between complementary graded pieces is perfect.

Numerical equivalence is decided through the pairing: the normal form of a
class is the unique standard-basis combination with the same pairings against
the complementary standard basis, obtained by solving the (Hankel) Gram
system.  All coefficients are exact rationals throughout.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .linalg import RatMatrix, Subspace, Vector, kernel_basis, solve

Rational = Union[int, Fraction]


class ParameterError(ValueError):
    """A computation was requested outside its admissible parameter range."""


class CurveKind(str, Enum):
    BN_GENERAL = "bn-general"
    HYPERELLIPTIC = "hyperelliptic"
    CUSTOM = "custom"


def binom(upper: Rational, n: int) -> Fraction:
    """Binomial coefficient with arbitrary (possibly negative) upper index:
    upper*(upper-1)*...*(upper-n+1)/n! for n > 0, and 1 for n = 0."""
    if n < 0:
        raise ParameterError("binomial lower index must be non-negative")
    result = Fraction(1)
    for t in range(n):
        result *= Fraction(upper) - t
    return result / math.factorial(n)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def generic_gonality(g: int, r: int) -> int:
    """Least degree of an r-dimensional linear system on the generic genus-g
    curve: ceil(r*g/(r+1)) + r.  Also the upper bound for every curve."""
    if r < 1:
        raise ParameterError("gonality index needs r >= 1")
    return ceil_div(r * g, r + 1) + r


@dataclass(frozen=True)
class CurveParams:
    """Ambient data shared by every computation: genus ``g``, symmetric-product
    degree ``d``, curve kind, and optional per-index gonality overrides.

    Overrides are only accepted for the custom kind and only in the range
    1 <= r <= g-2 where the gonality is not pinned down; each one must sit in
    the interval [2r, generic_gonality(g, r)].
    """

    g: int
    d: int
    kind: CurveKind = CurveKind.BN_GENERAL
    gonality_overrides: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.g, int) or self.g < 0:
            raise ParameterError(f"genus must be a non-negative integer, got {self.g}")
        if not isinstance(self.d, int) or self.d < 1:
            raise ParameterError(f"degree must be a positive integer, got {self.d}")
        if not isinstance(self.kind, CurveKind):
            object.__setattr__(self, "kind", CurveKind(self.kind))
        if self.kind is CurveKind.HYPERELLIPTIC and self.g < 2:
            raise ParameterError("hyperelliptic curves need genus >= 2")
        overrides = self.gonality_overrides
        if isinstance(overrides, Mapping):
            overrides = tuple(sorted((int(r), int(v)) for r, v in overrides.items()))
            object.__setattr__(self, "gonality_overrides", overrides)
        else:
            overrides = tuple(sorted((int(r), int(v)) for r, v in overrides))
            object.__setattr__(self, "gonality_overrides", overrides)
        if overrides and self.kind is not CurveKind.CUSTOM:
            raise ParameterError("gonality overrides are only meaningful for custom curves")
        for r, v in overrides:
            if not 1 <= r <= self.g - 2:
                raise ParameterError(f"override index {r} outside 1..g-2")
            if not 2 * r <= v <= generic_gonality(self.g, r):
                raise ParameterError(
                    f"override gon_{r} = {v} outside [{2 * r}, {generic_gonality(self.g, r)}]"
                )

    def override_for(self, r: int):
        for key, value in self.gonality_overrides:
            if key == r:
                return value
        return None


def _check_codim(ctx: CurveParams, m: int):
    if not 0 <= m <= ctx.d:
        raise ParameterError(f"codimension {m} outside 0..{ctx.d}")


def piece_rank(ctx: CurveParams, m: int) -> int:
    """Top theta exponent r(m) = min(m, d-m, g) of the standard basis of the
    codimension-m graded piece."""
    _check_codim(ctx, m)
    return min(m, ctx.d - m, ctx.g)


def piece_dim(ctx: CurveParams, m: int) -> int:
    return piece_rank(ctx, m) + 1


def standard_basis(ctx: CurveParams, m: int) -> tuple[tuple[int, int], ...]:
    """Exponent pairs (x power, theta power) of the standard basis of R^m."""
    return tuple((m - k, k) for k in range(piece_dim(ctx, m)))


def intersection_number(ctx: CurveParams, s: int) -> int:
    """Top intersection theta^s . x^(d-s) = s! * C(g, s); zero for s > g."""
    if not 0 <= s <= ctx.d:
        raise ParameterError(f"theta exponent {s} outside 0..{ctx.d}")
    if s > ctx.g:
        return 0
    return math.factorial(s) * math.comb(ctx.g, s)


@lru_cache(maxsize=None)
def _gram_cached(g: int, d: int, m: int) -> RatMatrix:
    size = min(m, d - m, g) + 1

    def top(s: int) -> int:
        return math.factorial(s) * math.comb(g, s) if s <= g else 0

    return RatMatrix([[top(i + j) for j in range(size)] for i in range(size)])


def gram_matrix(ctx: CurveParams, m: int) -> RatMatrix:
    """Pairing matrix of the standard bases of the complementary pieces R^m and
    R^(d-m).  Entry (i, j) is (i+j)! * C(g, i+j), so the matrix is Hankel; it
    is invertible because the pairing is perfect."""
    _check_codim(ctx, m)
    return _gram_cached(ctx.g, ctx.d, m)


class TautClass:
    """A graded cycle class: an exact-rational polynomial in x and theta of a
    fixed codimension.

    Monomials are exponent pairs (a, b) meaning x^a * theta^b with a + b equal
    to the codimension.  Powers of theta beyond the genus vanish in the ring
    and are dropped at construction; zero coefficients are pruned.  Instances
    are immutable by convention and all operations return new objects.
    """

    __slots__ = ("ctx", "codim", "coeffs")

    def __init__(self, ctx: CurveParams, codim: int, coeffs: Mapping[tuple[int, int], Rational]):
        if not 0 <= codim <= ctx.d:
            raise ParameterError(f"codimension {codim} outside 0..{ctx.d}")
        clean: dict[tuple[int, int], Fraction] = {}
        for (a, b), value in coeffs.items():
            if a < 0 or b < 0:
                raise ParameterError(f"negative exponent in monomial x^{a}*theta^{b}")
            if a + b != codim:
                raise ParameterError(
                    f"monomial x^{a}*theta^{b} has codimension {a + b}, expected {codim}"
                )
            if b > ctx.g:
                continue
            q = Fraction(value)
            if q != 0:
                clean[(a, b)] = clean.get((a, b), Fraction(0)) + q
        self.ctx = ctx
        self.codim = codim
        self.coeffs = {key: q for key, q in clean.items() if q != 0}

    def _require_same_ring(self, other: "TautClass"):
        if (self.ctx.g, self.ctx.d) != (other.ctx.g, other.ctx.d):
            raise ParameterError(
                f"classes live in different rings: (g={self.ctx.g}, d={self.ctx.d})"
                f" vs (g={other.ctx.g}, d={other.ctx.d})"
            )

    def __add__(self, other: "TautClass") -> "TautClass":
        self._require_same_ring(other)
        if self.codim != other.codim:
            raise ParameterError(
                f"cannot add codimension {self.codim} to codimension {other.codim}"
            )
        merged = dict(self.coeffs)
        for key, q in other.coeffs.items():
            merged[key] = merged.get(key, Fraction(0)) + q
        return TautClass(self.ctx, self.codim, merged)

    def __neg__(self) -> "TautClass":
        return TautClass(self.ctx, self.codim, {k: -q for k, q in self.coeffs.items()})

    def __sub__(self, other: "TautClass") -> "TautClass":
        return self + (-other)

    def scale(self, factor: Rational) -> "TautClass":
        f = Fraction(factor)
        return TautClass(self.ctx, self.codim, {k: f * q for k, q in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, TautClass):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, factor):
        return self.scale(factor)

    def __truediv__(self, factor):
        return self.scale(Fraction(1, 1) / Fraction(factor))

    def __pow__(self, exponent: int) -> "TautClass":
        if exponent < 0:
            raise ParameterError("negative powers are not defined")
        result = unit(self.ctx)
        for _ in range(exponent):
            result = multiply(result, self)
        return result

    def __eq__(self, other) -> bool:
        # Structural equality only; use equals() for numerical equivalence.
        return (
            isinstance(other, TautClass)
            and (self.ctx.g, self.ctx.d) == (other.ctx.g, other.ctx.d)
            and self.codim == other.codim
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx.g, self.ctx.d, self.codim, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"TautClass(g={self.ctx.g}, d={self.ctx.d}, codim={self.codim}: {pretty(self)})"


def monomial(ctx: CurveParams, x_exp: int, theta_exp: int, coeff: Rational = 1) -> TautClass:
    return TautClass(ctx, x_exp + theta_exp, {(x_exp, theta_exp): coeff})


def x_class(ctx: CurveParams) -> TautClass:
    return monomial(ctx, 1, 0)


def theta_class(ctx: CurveParams) -> TautClass:
    return monomial(ctx, 0, 1)


def unit(ctx: CurveParams) -> TautClass:
    return monomial(ctx, 0, 0)


def zero_class(ctx: CurveParams, codim: int) -> TautClass:
    return TautClass(ctx, codim, {})


def multiply(a: TautClass, b: TautClass) -> TautClass:
    """Intersection product.  Codimensions add; monomials with theta exponent
    beyond the genus are dropped by the construction of the result."""
    a._require_same_ring(b)
    total = a.codim + b.codim
    if total > a.ctx.d:
        raise ParameterError(
            f"product codimension {total} exceeds the ambient dimension {a.ctx.d}"
        )
    coeffs: dict[tuple[int, int], Fraction] = {}
    for (ax, at), qa in a.coeffs.items():
        for (bx, bt), qb in b.coeffs.items():
            key = (ax + bx, at + bt)
            coeffs[key] = coeffs.get(key, Fraction(0)) + qa * qb
    return TautClass(a.ctx, total, coeffs)


def eval_top(a: TautClass) -> Fraction:
    """Degree of a top-codimension class: sum of coefficients times the top
    intersection numbers of their monomials."""
    if a.codim != a.ctx.d:
        raise ParameterError(f"class has codimension {a.codim}, need {a.ctx.d}")
    return sum(
        (q * intersection_number(a.ctx, b) for (_, b), q in a.coeffs.items()),
        Fraction(0),
    )


def pairing(a: TautClass, b: TautClass) -> Fraction:
    """Intersection pairing of two classes of complementary codimension."""
    a._require_same_ring(b)
    if a.codim + b.codim != a.ctx.d:
        raise ParameterError(
            f"codimensions {a.codim} + {b.codim} do not add up to {a.ctx.d}"
        )
    return eval_top(multiply(a, b))


def pairing_vector(a: TautClass) -> Vector:
    """Pairings of a class against the standard basis of the complementary
    graded piece, in basis order."""
    out = []
    for j in range(piece_dim(a.ctx, a.codim)):
        total = Fraction(0)
        for (_, b), q in a.coeffs.items():
            total += q * intersection_number(a.ctx, b + j)
        out.append(total)
    return tuple(out)


@dataclass(frozen=True)
class NormalForm:
    """Coordinates of a class in the standard basis of its graded piece.

    Two classes are numerically equivalent exactly when their normal forms
    agree, because the intersection pairing is perfect.
    """

    ctx: CurveParams
    codim: int
    coords: Vector

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def as_class(self) -> TautClass:
        m = self.codim
        return TautClass(
            self.ctx, m, {(m - k, k): c for k, c in enumerate(self.coords) if c != 0}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NormalForm)
            and (self.ctx.g, self.ctx.d) == (other.ctx.g, other.ctx.d)
            and self.codim == other.codim
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.ctx.g, self.ctx.d, self.codim, self.coords))


def normal_form(a: TautClass) -> NormalForm:
    """Standard-basis coordinates with the same pairings as the input, found
    by solving the Gram system.  Idempotent and linear."""
    coords = solve(gram_matrix(a.ctx, a.codim), pairing_vector(a))
    return NormalForm(a.ctx, a.codim, coords)


def is_zero(a: TautClass) -> bool:
    """Numerical vanishing: every pairing against the complementary standard
    basis is zero (the Gram matrix is invertible, so no solve is needed)."""
    return all(p == 0 for p in pairing_vector(a))


def equals(a: TautClass, b: TautClass) -> bool:
    """Numerical equivalence of two classes of the same codimension."""
    a._require_same_ring(b)
    if a.codim != b.codim:
        raise ParameterError(
            f"cannot compare codimension {a.codim} with codimension {b.codim}"
        )
    return is_zero(a - b)


def is_positive_multiple(a: TautClass, b: TautClass) -> bool:
    """Whether the classes span the same ray: a = lambda*b numerically for
    some rational lambda > 0, or both are numerically zero."""
    a._require_same_ring(b)
    if a.codim != b.codim:
        return False
    na, nb = normal_form(a), normal_form(b)
    if nb.is_zero:
        return na.is_zero
    if na.is_zero:
        return False
    k = next(i for i, c in enumerate(nb.coords) if c != 0)
    lam = na.coords[k] / nb.coords[k]
    if lam <= 0:
        return False
    return all(ca == lam * cb for ca, cb in zip(na.coords, nb.coords))


def orthogonal_in_complement(ctx: CurveParams, m: int, classes) -> Subspace:
    """Subspace of the complementary piece R^(d-m) pairing to zero with every
    given codimension-m class, in standard-basis coordinates."""
    _check_codim(ctx, m)
    ambient = piece_dim(ctx, ctx.d - m)
    rows = []
    for cls in classes:
        if cls.codim != m:
            raise ParameterError(f"expected codimension {m}, got {cls.codim}")
        rows.append(pairing_vector(cls))
    if not rows:
        return Subspace.full(ambient)
    return Subspace(ambient, kernel_basis(RatMatrix(rows)))


# ---------------------------------------------------------------------------
# text and JSON encodings


def _monomial_str(a: int, b: int) -> str:
    parts = []
    if a == 1:
        parts.append("x")
    elif a > 1:
        parts.append(f"x^{a}")
    if b == 1:
        parts.append("theta")
    elif b > 1:
        parts.append(f"theta^{b}")
    return "*".join(parts)


def pretty(cls: TautClass) -> str:
    """Readable polynomial form, monomials ordered by decreasing theta power."""
    if not cls.coeffs:
        return "0"
    pieces = []
    for (a, b) in sorted(cls.coeffs, key=lambda ab: (-ab[1], ab[0])):
        q = cls.coeffs[(a, b)]
        mono = _monomial_str(a, b)
        mag = abs(q)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if q > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if q > 0 else f"- {body}")
    return " ".join(pieces)


def to_json_dict(cls: TautClass) -> dict:
    coeffs = []
    for (a, b) in sorted(cls.coeffs, key=lambda ab: ab[1]):
        q = cls.coeffs[(a, b)]
        coeffs.append(
            {"x": a, "theta": b, "num": str(q.numerator), "den": str(q.denominator)}
        )
    return {"g": cls.ctx.g, "d": cls.ctx.d, "codim": cls.codim, "coeffs": coeffs}


def from_json_dict(data: dict, kind: CurveKind = CurveKind.BN_GENERAL) -> TautClass:
    ctx = CurveParams(int(data["g"]), int(data["d"]), kind)
    coeffs = {}
    for entry in data["coeffs"]:
        key = (int(entry["x"]), int(entry["theta"]))
        coeffs[key] = Fraction(int(entry["num"]), int(entry["den"]))
    return TautClass(ctx, int(data["codim"]), coeffs)


def dumps(cls: TautClass) -> str:
    return json.dumps(to_json_dict(cls))


def loads(text: str) -> TautClass:
    return from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# expression parsing for the command line


class ClassSyntaxError(ParameterError):
    """The textual class expression could not be parsed or evaluated."""


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif c.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            name = text[i:j]
            if name not in ("x", "theta"):
                raise ClassSyntaxError(f"unknown symbol {name!r}; use x and theta")
            tokens.append(("name", name))
            i = j
        elif c in "+-*/^()":
            tokens.append((c, c))
            i += 1
        else:
            raise ClassSyntaxError(f"unexpected character {c!r}")
    return tokens


class _Parser:
    # expr := term (('+'|'-') term)*
    # term := unary (('*'|'/')? unary)*   with juxtaposition as multiplication
    # unary := '-' unary | power
    # power := atom ('^' int)?
    # atom := int | 'x' | 'theta' | '(' expr ')'

    def __init__(self, tokens, ctx: CurveParams):
        self.tokens = tokens
        self.pos = 0
        self.ctx = ctx

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> TautClass:
        value = self.expr()
        if self.peek() is not None:
            raise ClassSyntaxError(f"trailing input near token {self.tokens[self.pos]}")
        return value

    def expr(self) -> TautClass:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> TautClass:
        value = self.unary()
        while True:
            nxt = self.peek()
            if nxt in ("*", "/"):
                op = self.take()[0]
                rhs = self.unary()
                value = self._mul(value, rhs) if op == "*" else self._div(value, rhs)
            elif nxt in ("int", "name", "("):
                value = self._mul(value, self.unary())
            else:
                return value

    def unary(self) -> TautClass:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> TautClass:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            if self.peek() != "int":
                raise ClassSyntaxError("exponent must be an integer literal")
            exponent = self.take()[1]
            try:
                return base ** exponent
            except ParameterError as exc:
                raise ClassSyntaxError(str(exc)) from exc
        return base

    def atom(self) -> TautClass:
        kind = self.peek()
        if kind == "int":
            return unit(self.ctx).scale(self.take()[1])
        if kind == "name":
            name = self.take()[1]
            return x_class(self.ctx) if name == "x" else theta_class(self.ctx)
        if kind == "(":
            self.take()
            value = self.expr()
            if self.peek() != ")":
                raise ClassSyntaxError("missing closing parenthesis")
            self.take()
            return value
        raise ClassSyntaxError("expected a number, x, theta or parenthesis")

    def _mul(self, a: TautClass, b: TautClass) -> TautClass:
        try:
            return multiply(a, b)
        except ParameterError as exc:
            raise ClassSyntaxError(str(exc)) from exc

    def _div(self, a: TautClass, b: TautClass) -> TautClass:
        if b.codim != 0:
            raise ClassSyntaxError("division is only defined by rational constants")
        value = b.coeffs.get((0, 0), Fraction(0))
        if value == 0:
            raise ClassSyntaxError("division by zero")
        return a.scale(Fraction(1) / value)


def parse_class(text: str, ctx: CurveParams) -> TautClass:
    """Evaluate a textual expression in x and theta to a graded class.

    Accepts rational coefficients written with '/', explicit '*' or plain
    juxtaposition for products, '^' for integer powers and parentheses.  The
    result must be homogeneous; mixing codimensions raises ClassSyntaxError.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ClassSyntaxError("empty expression")
    try:
        return _Parser(tokens, ctx).parse()
    except ParameterError as exc:
        raise ClassSyntaxError(str(exc)) from exc
