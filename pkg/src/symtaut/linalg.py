"""Exact dense linear algebra over the rationals.

Every matrix in this project is tiny (Gram matrices and coordinate blocks
with at most a few hundred entries), so plain Gaussian elimination on
``fractions.Fraction`` entries is both the simplest and a perfectly fast
choice.  No floating point appears anywhere; all results are exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


class SingularMatrixError(ValueError):
    """A solve was attempted on a rank-deficient square matrix."""


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def as_vector(values: Iterable) -> Vector:
    return tuple(_frac(v) for v in values)


class RatMatrix:
    """Immutable dense matrix with exact rational entries."""

    def __init__(self, entries: Iterable[Iterable]):
        self.entries: tuple[Vector, ...] = tuple(as_vector(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("rows have unequal lengths")

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self.entries)) if self.rows else RatMatrix([])

    def mat_vec(self, v: Sequence) -> Vector:
        vec = as_vector(v)
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != {self.cols} columns")
        return tuple(sum(row[j] * vec[j] for j in range(self.cols)) for row in self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in row) for row in self.entries)
        return f"RatMatrix({self.rows}x{self.cols}: {body})"


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns the rows and pivot columns."""
    pivots: list[int] = []
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [e / inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: RatMatrix) -> int:
    """Row rank over the rationals, exact."""
    rows = [list(row) for row in matrix.entries]
    _, pivots = _rref(rows)
    return len(pivots)


def kernel_basis(matrix: RatMatrix) -> list[Vector]:
    """Exact basis of the right kernel; empty exactly when the columns are independent.

    One basis vector per free column: the free coordinate is set to one and
    the pivot coordinates are read off the reduced echelon form.
    """
    if matrix.rows == 0:
        return [as_vector(row) for row in RatMatrix.identity(matrix.cols).entries]
    rows = [list(row) for row in matrix.entries]
    reduced, pivots = _rref(rows)
    free = [c for c in range(matrix.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * matrix.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        basis.append(tuple(v))
    return basis


def solve(matrix: RatMatrix, rhs: Sequence) -> Vector:
    """Unique exact solution of a square invertible system."""
    n = matrix.rows
    if matrix.cols != n:
        raise SingularMatrixError(f"matrix is {matrix.rows}x{matrix.cols}, not square")
    b = as_vector(rhs)
    if len(b) != n:
        raise ValueError(f"right-hand side length {len(b)} != {n}")
    aug = [list(row) + [b[i]] for i, row in enumerate(matrix.entries)]
    reduced, pivots = _rref(aug)
    if [p for p in pivots if p < n] != list(range(n)):
        raise SingularMatrixError(f"rank {len([p for p in pivots if p < n])} < size {n}")
    return tuple(reduced[i][n] for i in range(n))


def orthogonal_complement(subspace_rows: RatMatrix, form: RatMatrix) -> list[Vector]:
    """Basis of the vectors pairing to zero with each row of ``subspace_rows``
    under the bilinear form ``form``: all v with s.B.v = 0 for every row s."""
    if form.rows != form.cols:
        raise ValueError("bilinear form must be square")
    if subspace_rows.rows and subspace_rows.cols != form.rows:
        raise ValueError(
            f"subspace vectors have length {subspace_rows.cols}, form has size {form.rows}"
        )
    if subspace_rows.rows == 0:
        return [as_vector(row) for row in RatMatrix.identity(form.cols).entries]
    constraints = RatMatrix([form.transpose().mat_vec(row) for row in subspace_rows.entries])
    return kernel_basis(constraints)


class Subspace:
    """A linear subspace of Q^n stored by its canonical echelon basis.

    The stored basis is the reduced row echelon basis with leading entry
    one, which is unique.  Two subspaces are therefore equal as sets of
    vectors exactly when their stored rows compare equal.
    """

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        self.ambient_dim = ambient_dim
        rows = [list(as_vector(v)) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError(f"vector length {len(row)} != ambient {ambient_dim}")
        reduced, pivots = _rref(rows) if rows else ([], [])
        self.basis: tuple[Vector, ...] = tuple(tuple(r) for r in reduced[: len(pivots)])
        self._pivots = tuple(pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RatMatrix.identity(ambient_dim).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence) -> bool:
        v = list(as_vector(vector))
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector length {len(v)} != ambient {self.ambient_dim}")
        for row, p in zip(self.basis, self._pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return all(e == 0 for e in v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"
