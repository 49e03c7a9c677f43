"""Exact rational linear algebra: vectors, matrices and canonical subspaces.

All scalars are ``fractions.Fraction``; nothing here ever rounds. Subspaces
are kept in reduced row-echelon form so that equal subspaces are structurally
equal objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]


def rat(x) -> Fraction:
    """Coerce ints, strings like ``-3/7`` and Fractions to Fraction."""
    return Fraction(x)


def vector(coords: Iterable) -> Vector:
    return tuple(Fraction(c) for c in coords)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def is_zero_vector(v: Vector) -> bool:
    return all(a == 0 for a in v)


@dataclass(frozen=True)
class Matrix:
    """Immutable rectangular matrix; action convention (Mv)_r = sum_c M[r][c] v_c."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged matrix")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        return Matrix(tuple(tuple(Fraction(x) for x in r) for r in rows))

    @staticmethod
    def from_columns(cols: Sequence[Sequence]) -> "Matrix":
        return Matrix.from_rows(list(zip(*cols, strict=True)))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(tuple(unit_vector(n, i) for i in range(n)))

    @staticmethod
    def zero(nrows: int, ncols: int) -> "Matrix":
        return Matrix(tuple((Fraction(0),) * ncols for _ in range(nrows)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows, strict=True))) if self.rows else self

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(sum((r[c] * v[c] for c in range(self.ncols)), Fraction(0))
                     for r in self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch in matrix sum")
        return Matrix(tuple(tuple(a + b for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.transpose().rows
        return Matrix(tuple(
            tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols)
            for r in self.rows))

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix(tuple(tuple(c * x for x in r) for r in self.rows))

    def power(self, k: int) -> "Matrix":
        if not self.is_square():
            raise ValueError("power of non-square matrix")
        result = Matrix.identity(self.nrows)
        for _ in range(k):
            result = result * self
        return result

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of non-square matrix")
        # Gaussian elimination with exact pivoting.
        n = self.nrows
        m = [list(r) for r in self.rows]
        d = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                d = -d
            d *= m[col][col]
            inv = 1 / m[col][col]
            for r in range(col + 1, n):
                f = m[r][col] * inv
                if f:
                    for c in range(col, n):
                        m[r][c] -= f * m[col][c]
        return d

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of non-square matrix")
        n = self.nrows
        if self.det() == 0:
            raise ValueError("matrix is singular")
        aug = [list(r) + list(unit_vector(n, i)) for i, r in enumerate(self.rows)]
        reduced, _ = _rref_rows(aug)
        return Matrix(tuple(tuple(r[n:]) for r in reduced[:n]))

    def is_invertible(self) -> bool:
        return self.is_square() and self.det() != 0


def _rref_rows(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], int]:
    """In-place-style RREF on a list of row lists; returns (rows, rank)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    piv_row = 0
    for col in range(ncols):
        piv = next((r for r in range(piv_row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[piv_row], m[piv] = m[piv], m[piv_row]
        inv = 1 / m[piv_row][col]
        m[piv_row] = [x * inv for x in m[piv_row]]
        for r in range(nrows):
            if r != piv_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[piv_row])]
        piv_row += 1
        if piv_row == nrows:
            break
    return m, piv_row


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form and rank."""
    if m.nrows == 0:
        return m, 0
    reduced, rank = _rref_rows([list(r) for r in m.rows])
    return Matrix(tuple(tuple(r) for r in reduced)), rank


def rank(m: Matrix) -> int:
    return rref(m)[1]


@dataclass(frozen=True)
class Subspace:
    """Subspace of K^n held as an RREF-canonical row basis.

    Two equal subspaces compare equal structurally: the basis rows have
    leading ones, strictly increasing pivot columns and zeros above pivots.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @staticmethod
    def from_vectors(ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [list(Fraction(x) for x in v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if not rows:
            return Subspace(ambient_dim, ())
        reduced, rk = _rref_rows(rows)
        return Subspace(ambient_dim, tuple(tuple(r) for r in reduced[:rk]))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim,
                        tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x != 0) for row in self.basis)


def kernel(m: Matrix) -> Subspace:
    """Canonical basis of {v : Mv = 0}."""
    reduced, rk = rref(m)
    ncols = m.ncols
    pivots = []
    col = 0
    for r in range(rk):
        while reduced.rows[r][col] == 0:
            col += 1
        pivots.append(col)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced.rows[r][f]
        basis.append(v)
    return Subspace.from_vectors(ncols, basis)


def image(m: Matrix) -> Subspace:
    """Column space of m, canonicalized."""
    return Subspace.from_vectors(m.nrows, [m.column(j) for j in range(m.ncols)])


def row_space(m: Matrix) -> Subspace:
    return Subspace.from_vectors(m.ncols, m.rows)


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch")


def intersect(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(u.ambient_dim)
    # Solve a*U = b*V: kernel of the (n x (du+dv)) matrix [U^T | -V^T].
    cols = [list(row) for row in u.basis] + [[-x for x in row] for row in v.basis]
    m = Matrix.from_columns(cols)
    combos = kernel(m)
    vectors = []
    for c in combos.basis:
        vec = zero_vector(u.ambient_dim)
        for coeff, row in zip(c[: u.dim], u.basis):
            vec = vec_add(vec, vec_scale(coeff, row))
        vectors.append(vec)
    return Subspace.from_vectors(u.ambient_dim, vectors)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return Subspace.from_vectors(u.ambient_dim, list(u.basis) + list(v.basis))


def contains(u: Subspace, x: Sequence) -> bool:
    v = vector(x)
    if len(v) != u.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace.from_vectors(u.ambient_dim, list(u.basis) + [v]).dim == u.dim


def contains_subspace(u: Subspace, v: Subspace) -> bool:
    return all(contains(u, row) for row in v.basis)


def is_direct_sum(parts: Sequence[Subspace]) -> bool:
    """True iff the sum of the parts has dimension equal to the dimension sum."""
    if not parts:
        return True
    total = parts[0]
    for p in parts[1:]:
        total = subspace_sum(total, p)
    return total.dim == sum(p.dim for p in parts)


def coordinates(u: Subspace, x: Sequence) -> Vector | None:
    """Coordinates of x in u's RREF basis, or None if x is outside u."""
    v = vector(x)
    coords = tuple(v[p] for p in u.pivots())
    rebuilt = zero_vector(u.ambient_dim)
    for c, row in zip(coords, u.basis):
        rebuilt = vec_add(rebuilt, vec_scale(c, row))
    return coords if rebuilt == v else None


def char_poly(m: Matrix) -> tuple[Fraction, ...]:
    """Characteristic polynomial coefficients, highest degree first (monic).

    Faddeev-LeVerrier over the rationals; exact in characteristic zero.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of non-square matrix")
    n = m.nrows
    coeffs = [Fraction(1)]
    acc = Matrix.identity(n)
    for k in range(1, n + 1):
        acc = m * acc
        c = -acc.trace() / k
        coeffs.append(c)
        acc = acc + Matrix.identity(n).scale(c)
    return tuple(coeffs)


def is_diagonalizable_2x2(m: Matrix) -> bool:
    """Diagonalizable iff the discriminant is nonzero, or the matrix is scalar."""
    if m.nrows != 2 or m.ncols != 2:
        raise ValueError("test implemented for 2x2 matrices only")
    disc = m.trace() ** 2 - 4 * m.det()
    if disc != 0:
        return True
    return m.rows[0][1] == 0 and m.rows[1][0] == 0 and m.rows[0][0] == m.rows[1][1]
