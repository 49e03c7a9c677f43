"""Structure-constant Lie algebras: brackets, axiom checks, series, invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exactla import (
    Matrix,
    Subspace,
    Vector,
    contains,
    coordinates,
    is_zero_vector,
    kernel,
    rank,
    unit_vector,
    vec_add,
    vec_scale,
    vector,
    zero_vector,
)

BracketTable = tuple[tuple[Vector, ...], ...]
SparseSC = Mapping[tuple[int, int], Sequence[tuple[int, object]]]


@dataclass(frozen=True)
class LieAlgebra:
    """Lie algebra given by its full antisymmetric bracket table.

    ``table[i][j]`` holds the coordinates of [e_i, e_j]. Antisymmetry is
    enforced by construction; Jacobi is a separate check so malformed tables
    can be diagnosed rather than rejected blindly.
    """

    dim: int
    table: BracketTable
    basis_labels: tuple[str, ...]

    @staticmethod
    def from_brackets(dim: int, sc: SparseSC,
                      basis_labels: Sequence[str] | None = None) -> "LieAlgebra":
        """Build from sparse constants sc[(i, j)] = [(k, c), ...] with i < j."""
        table = [[list(zero_vector(dim)) for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in sc.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket indices ({i},{j}) must satisfy 0 <= i < j < dim")
            for k, c in terms:
                table[i][j][k] += Fraction(c)
            for k in range(dim):
                table[j][i][k] = -table[i][j][k]
        frozen = tuple(tuple(tuple(entry) for entry in row) for row in table)
        labels = tuple(basis_labels) if basis_labels else tuple(f"e{i+1}" for i in range(dim))
        if len(labels) != dim:
            raise ValueError("label count does not match dimension")
        return LieAlgebra(dim, frozen, labels)

    @staticmethod
    def from_table(dim: int, table: Sequence[Sequence[Sequence]],
                   basis_labels: Sequence[str] | None = None) -> "LieAlgebra":
        frozen = tuple(tuple(vector(entry) for entry in row) for row in table)
        for i in range(dim):
            for j in range(dim):
                if frozen[i][j] != tuple(-x for x in frozen[j][i]):
                    raise ValueError("bracket table is not antisymmetric")
        labels = tuple(basis_labels) if basis_labels else tuple(f"e{i+1}" for i in range(dim))
        return LieAlgebra(dim, frozen, labels)

    @staticmethod
    def abelian(dim: int) -> "LieAlgebra":
        return LieAlgebra.from_brackets(dim, {})

    def sparse_brackets(self) -> dict[tuple[int, int], list[tuple[int, Fraction]]]:
        """Nonzero constants for i < j, suitable for emission."""
        out: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                terms = [(k, c) for k, c in enumerate(self.table[i][j]) if c != 0]
                if terms:
                    out[(i, j)] = terms
        return out


def bracket(L: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    """Bilinear extension of the structure constants."""
    xv, yv = vector(x), vector(y)
    if len(xv) != L.dim or len(yv) != L.dim:
        raise ValueError("dimension mismatch in bracket")
    out = zero_vector(L.dim)
    for i, xi in enumerate(xv):
        if xi == 0:
            continue
        for j, yj in enumerate(yv):
            if yj == 0:
                continue
            out = vec_add(out, vec_scale(xi * yj, L.table[i][j]))
    return out


def jacobi_failure(L: LieAlgebra) -> tuple[int, int, int] | None:
    """First basis triple violating the Jacobi identity, or None."""
    for i in range(L.dim):
        ei = unit_vector(L.dim, i)
        for j in range(i + 1, L.dim):
            ej = unit_vector(L.dim, j)
            for k in range(j + 1, L.dim):
                ek = unit_vector(L.dim, k)
                total = vec_add(
                    vec_add(bracket(L, L.table[i][j], ek), bracket(L, L.table[j][k], ei)),
                    bracket(L, L.table[k][i], ej))
                if not is_zero_vector(total):
                    return (i, j, k)
    return None


def check_jacobi(L: LieAlgebra) -> bool:
    return jacobi_failure(L) is None


def ad_matrix(L: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of ad(x): column j is [x, e_j]."""
    xv = vector(x)
    cols = [bracket(L, xv, unit_vector(L.dim, j)) for j in range(L.dim)]
    return Matrix.from_columns(cols)


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    """Block structure constants, no cross terms."""
    n1, n2 = L1.dim, L2.dim
    dim = n1 + n2
    sc: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
    for (i, j), terms in L1.sparse_brackets().items():
        sc[(i, j)] = list(terms)
    for (i, j), terms in L2.sparse_brackets().items():
        sc[(i + n1, j + n1)] = [(k + n1, c) for k, c in terms]
    labels = tuple(f"{l}'" for l in L1.basis_labels) + tuple(f"{l}''" for l in L2.basis_labels)
    return LieAlgebra.from_brackets(dim, sc, labels)


def bracket_span(L: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """Span of [u, v]."""
    vecs = [bracket(L, a, b) for a in u.basis for b in v.basis]
    return Subspace.from_vectors(L.dim, vecs)


def subalgebra_closure(L: LieAlgebra, S: Subspace) -> bool:
    if S.ambient_dim != L.dim:
        raise ValueError("subspace ambient dimension mismatch")
    for a in S.basis:
        for b in S.basis:
            if not contains(S, bracket(L, a, b)):
                return False
    return True


def is_ideal(L: LieAlgebra, S: Subspace) -> bool:
    if S.ambient_dim != L.dim:
        raise ValueError("subspace ambient dimension mismatch")
    for i in range(L.dim):
        ei = unit_vector(L.dim, i)
        for b in S.basis:
            if not contains(S, bracket(L, ei, b)):
                return False
    return True


def _series(L: LieAlgebra, step) -> list[Subspace]:
    chain = [Subspace.full(L.dim)]
    for _ in range(L.dim + 1):
        nxt = step(chain[-1])
        chain.append(nxt)
        if nxt.dim == 0 or nxt == chain[-2]:
            break
    return chain


def derived_series(L: LieAlgebra) -> list[Subspace]:
    """g^(1) = g, g^(i+1) = [g^(i), g^(i)], until stabilization."""
    return _series(L, lambda cur: bracket_span(L, cur, cur))


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    """g^1 = g, g^(i+1) = [g, g^i], until stabilization."""
    full = Subspace.full(L.dim)
    return _series(L, lambda cur: bracket_span(L, full, cur))


def center(L: LieAlgebra) -> Subspace:
    """{x : [x, e_j] = 0 for all j} as the kernel of the stacked ad system."""
    rows = []
    for j in range(L.dim):
        for r in range(L.dim):
            rows.append([L.table[i][j][r] for i in range(L.dim)])
    return kernel(Matrix.from_rows(rows))


def killing_form(L: LieAlgebra) -> Matrix:
    ads = [ad_matrix(L, unit_vector(L.dim, i)) for i in range(L.dim)]
    return Matrix.from_rows([[(ads[i] * ads[j]).trace() for j in range(L.dim)]
                             for i in range(L.dim)])


def killing_rank(L: LieAlgebra) -> int:
    return rank(killing_form(L))


def is_semisimple(L: LieAlgebra) -> bool:
    """Cartan criterion: the Killing form is nondegenerate (char 0)."""
    return killing_rank(L) == L.dim


def is_unimodular(L: LieAlgebra) -> bool:
    return all(ad_matrix(L, unit_vector(L.dim, i)).trace() == 0 for i in range(L.dim))


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L)[-1].dim == 0


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


@dataclass(frozen=True)
class Fingerprint:
    """Basis-independent invariants used to certify isomorphism-type claims."""

    dim: int
    derived_dims: tuple[int, ...]
    lcs_dims: tuple[int, ...]
    center_dim: int
    killing_rank: int
    unimodular: bool
    solvable: bool
    nilpotent: bool


def fingerprint(L: LieAlgebra) -> Fingerprint:
    dd = tuple(s.dim for s in derived_series(L))
    ld = tuple(s.dim for s in lower_central_series(L))
    return Fingerprint(
        dim=L.dim,
        derived_dims=dd,
        lcs_dims=ld,
        center_dim=center(L).dim,
        killing_rank=killing_rank(L),
        unimodular=is_unimodular(L),
        solvable=dd[-1] == 0,
        nilpotent=ld[-1] == 0,
    )


def change_basis(L: LieAlgebra, P: Matrix) -> LieAlgebra:
    """Transport structure constants to the basis f_i = P e_i (columns of P)."""
    if not P.is_invertible() or P.nrows != L.dim:
        raise ValueError("basis change must be an invertible dim x dim matrix")
    inv = P.inverse()
    table = []
    for i in range(L.dim):
        fi = P.column(i)
        row = []
        for j in range(L.dim):
            fj = P.column(j)
            row.append(inv.apply(bracket(L, fi, fj)))
        table.append(row)
    return LieAlgebra.from_table(L.dim, table, L.basis_labels)


def restrict(L: LieAlgebra, S: Subspace,
             basis_labels: Sequence[str] | None = None) -> LieAlgebra:
    """Structure constants of a closed subspace in its own canonical basis."""
    if not subalgebra_closure(L, S):
        raise ValueError("subspace is not closed under the bracket")
    k = S.dim
    table = []
    for a in S.basis:
        row = []
        for b in S.basis:
            coords = coordinates(S, bracket(L, a, b))
            assert coords is not None
            row.append(coords)
        table.append(row)
    return LieAlgebra.from_table(k, table, basis_labels)
