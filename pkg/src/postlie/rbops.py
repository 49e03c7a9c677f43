"""Rota-Baxter operators: the defining identity and the standard constructions.

An operator R of weight lam on a Lie algebra (n, {,}) satisfies

    {R(x), R(y)} = R({R(x), y} + {x, R(y)} + lam {x, y})

for all x, y; bilinearity makes checking basis pairs sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactla import (
    Matrix,
    Subspace,
    contains,
    is_direct_sum,
    subspace_sum,
    unit_vector,
    vec_add,
    vec_scale,
    zero_vector,
)
from .liealg import LieAlgebra, bracket, direct_sum, restrict, subalgebra_closure


@dataclass(frozen=True)
class RBOperator:
    algebra: LieAlgebra
    matrix: Matrix
    weight: Fraction

    def __post_init__(self):
        if self.matrix.nrows != self.algebra.dim or self.matrix.ncols != self.algebra.dim:
            raise ValueError("operator matrix must be square of the algebra dimension")


def first_rb_failure(n: LieAlgebra, R: Matrix, lam) -> tuple[int, int] | None:
    """First basis pair (i, j), i < j, violating the RB identity, or None."""
    lam = Fraction(lam)
    if R.nrows != n.dim or R.ncols != n.dim:
        raise ValueError("operator dimension mismatch")
    for i in range(n.dim):
        ei = unit_vector(n.dim, i)
        ri = R.column(i)
        for j in range(i + 1, n.dim):
            ej = unit_vector(n.dim, j)
            rj = R.column(j)
            lhs = bracket(n, ri, rj)
            inner = vec_add(vec_add(bracket(n, ri, ej), bracket(n, ei, rj)),
                            vec_scale(lam, n.table[i][j]))
            rhs = R.apply(inner)
            if lhs != rhs:
                return (i, j)
    return None


def is_rb_operator(n: LieAlgebra, R: Matrix, lam) -> bool:
    return first_rb_failure(n, R, lam) is None


def verified_operator(n: LieAlgebra, R: Matrix, lam) -> RBOperator:
    """Wrap a matrix as an RBOperator, insisting the identity holds."""
    pair = first_rb_failure(n, R, lam)
    if pair is not None:
        raise ValueError(f"RB identity fails at basis pair {pair}")
    return RBOperator(n, R, Fraction(lam))


def phi_involution(op: RBOperator) -> RBOperator:
    """R -> -R - lam*id; an involution preserving the RB identity."""
    n = op.algebra.dim
    m = op.matrix.scale(-1) - Matrix.identity(n).scale(op.weight)
    return RBOperator(op.algebra, m, op.weight)


def rescale_to_weight_one(op: RBOperator) -> RBOperator:
    if op.weight == 0:
        raise ValueError("cannot rescale a weight-zero operator")
    if op.weight == 1:
        return op
    return RBOperator(op.algebra, op.matrix.scale(1 / op.weight), Fraction(1))


def is_lie_automorphism(n: LieAlgebra, psi: Matrix) -> bool:
    if psi.nrows != n.dim or psi.ncols != n.dim:
        return False
    if not psi.is_invertible():
        return False
    for i in range(n.dim):
        ci = psi.column(i)
        for j in range(i + 1, n.dim):
            if psi.apply(n.table[i][j]) != bracket(n, ci, psi.column(j)):
                return False
    return True


def conjugate(op: RBOperator, psi: Matrix) -> RBOperator:
    """psi^-1 R psi for an automorphism psi of the underlying algebra."""
    if not is_lie_automorphism(op.algebra, psi):
        raise ValueError("psi is not a Lie algebra automorphism")
    return RBOperator(op.algebra, psi.inverse() * op.matrix * psi, op.weight)


def split_operator(n: LieAlgebra, A1: Subspace, A2: Subspace, lam) -> RBOperator:
    """R(a1 + a2) = -lam a2 for a direct decomposition into subalgebras A1, A2."""
    lam = Fraction(lam)
    if not subalgebra_closure(n, A1) or not subalgebra_closure(n, A2):
        raise ValueError("split parts must be subalgebras")
    if not is_direct_sum([A1, A2]) or A1.dim + A2.dim != n.dim:
        raise ValueError("split parts must decompose the algebra as a direct sum")
    cols = list(A1.basis) + list(A2.basis)
    P = Matrix.from_columns(cols)
    diag = Matrix.from_rows([
        [(-lam if (r == c and r >= A1.dim) else 0) for c in range(n.dim)]
        for r in range(n.dim)])
    return RBOperator(n, P * diag * P.inverse(), lam)


def is_split(op: RBOperator) -> bool:
    """Split criterion R(R + lam*id) = 0; requires nonzero weight."""
    if op.weight == 0:
        raise ValueError("split criterion requires nonzero weight")
    n = op.algebra.dim
    return (op.matrix * (op.matrix + Matrix.identity(n).scale(op.weight))).is_zero()


def diagonal_sum(op1: RBOperator, op2: RBOperator) -> RBOperator:
    """Block-diagonal operator on the direct sum of the two algebras."""
    if op1.weight != op2.weight:
        raise ValueError("diagonal sum requires equal weights")
    n1, n2 = op1.algebra.dim, op2.algebra.dim
    rows = []
    for r in range(n1):
        rows.append(list(op1.matrix.rows[r]) + [Fraction(0)] * n2)
    for r in range(n2):
        rows.append([Fraction(0)] * n1 + list(op2.matrix.rows[r]))
    return RBOperator(direct_sum(op1.algebra, op2.algebra),
                      Matrix.from_rows(rows), op1.weight)


def double_construction(s: LieAlgebra, psi: Matrix, variant: str) -> RBOperator:
    """Weight-1 operators on s + s: (a1,a2) -> (0, psi a1) or (-a1, -psi a1)."""
    if not is_lie_automorphism(s, psi):
        raise ValueError("psi is not a Lie algebra automorphism")
    if variant not in ("nilpotent", "negative"):
        raise ValueError("variant must be 'nilpotent' or 'negative'")
    n = s.dim
    rows = []
    if variant == "nilpotent":
        for r in range(n):
            rows.append([Fraction(0)] * (2 * n))
        for r in range(n):
            rows.append(list(psi.rows[r]) + [Fraction(0)] * n)
    else:
        for r in range(n):
            rows.append([-Fraction(1) if c == r else Fraction(0) for c in range(2 * n)])
        for r in range(n):
            rows.append([-x for x in psi.rows[r]] + [Fraction(0)] * n)
    return RBOperator(direct_sum(s, s), Matrix.from_rows(rows), Fraction(1))


@dataclass(frozen=True)
class TriangularSplitSpec:
    """Three-block data: P = 0 on a_minus, r_zero on a_zero, -lam*id on a_plus."""

    a_minus: Subspace
    a_zero: Subspace
    a_plus: Subspace
    r_zero: Matrix


def triangular_split(n: LieAlgebra, spec: TriangularSplitSpec, lam) -> RBOperator:
    lam = Fraction(lam)
    a_m, a_0, a_p = spec.a_minus, spec.a_zero, spec.a_plus
    if not is_direct_sum([a_m, a_0, a_p]) or a_m.dim + a_0.dim + a_p.dim != n.dim:
        raise ValueError("triangular-split parts must decompose the algebra")
    for name, part in (("a_minus", a_m), ("a_zero", a_0), ("a_plus", a_p)):
        if not subalgebra_closure(n, part):
            raise ValueError(f"{name} is not a subalgebra")
    if spec.r_zero.nrows != a_0.dim or spec.r_zero.ncols != a_0.dim:
        raise ValueError("r_zero must act on a_zero coordinates")
    a0_alg = restrict(n, a_0)
    if not is_rb_operator(a0_alg, spec.r_zero, lam):
        raise ValueError("r_zero is not an RB-operator on a_zero")

    def span_image(m: Matrix) -> list:
        # Images of a_zero basis vectors under the coordinate operator m.
        out = []
        for j in range(a_0.dim):
            col = m.column(j)
            v = zero_vector(n.dim)
            for c, b in zip(col, a_0.basis):
                v = vec_add(v, vec_scale(c, b))
            out.append(v)
        return out

    ident0 = Matrix.identity(a_0.dim)
    for v in span_image(spec.r_zero + ident0):
        for w in a_m.basis:
            if not contains(a_m, bracket(n, v, w)):
                raise ValueError("a_minus is not a module over (r_zero + id)(a_zero)")
    for v in span_image(spec.r_zero):
        for w in a_p.basis:
            if not contains(a_p, bracket(n, v, w)):
                raise ValueError("a_plus is not a module over r_zero(a_zero)")

    cols = list(a_m.basis) + list(a_0.basis) + list(a_p.basis)
    P = Matrix.from_columns(cols)
    d = n.dim
    block = [[Fraction(0)] * d for _ in range(d)]
    off = a_m.dim
    for r in range(a_0.dim):
        for c in range(a_0.dim):
            block[off + r][off + c] = spec.r_zero.rows[r][c]
    off = a_m.dim + a_0.dim
    for r in range(a_p.dim):
        block[off + r][off + r] = -lam
    return RBOperator(n, P * Matrix.from_rows(block) * P.inverse(), lam)


def enumerate_split_operators(n: LieAlgebra,
                              candidates: Sequence[Subspace]) -> list[RBOperator]:
    """All weight-1 split operators from ordered candidate pairs (A1, A2)."""
    for S in candidates:
        if not subalgebra_closure(n, S):
            raise ValueError("candidate subspace is not a subalgebra")
    out = []
    for A1 in candidates:
        for A2 in candidates:
            if A1.dim + A2.dim != n.dim:
                continue
            if subspace_sum(A1, A2).dim != n.dim:
                continue
            out.append(split_operator(n, A1, A2, 1))
    return out
