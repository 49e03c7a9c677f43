"""Post-Lie algebra structures and the derived bracket of a weight-1 operator.

A PA-structure on a pair of brackets ([,], {,}) on one space is a bilinear
product x.y with

    x.y - y.x       = [x,y] - {x,y}
    [x,y].z         = x.(y.z) - y.(x.z)
    x.{y,z}         = {x.y, z} + {y, x.z}

Every weight-1 RB-operator R yields the inner product x.y = {R(x), y} and the
derived bracket [x,y] = {R(x),y} - {R(y),x} + {x,y}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactla import (
    Matrix,
    Subspace,
    Vector,
    contains,
    image,
    intersect,
    is_direct_sum,
    kernel,
    unit_vector,
    vec_add,
    vec_scale,
    vector,
    zero_vector,
)
from .liealg import (
    Fingerprint,
    LieAlgebra,
    bracket,
    check_jacobi,
    fingerprint,
    is_ideal,
    is_solvable,
    restrict,
    subalgebra_closure,
)
from .rbops import RBOperator

ProductTable = tuple[tuple[Vector, ...], ...]


@dataclass(frozen=True)
class PAProduct:
    """Bilinear product on a pair (g, n) of brackets sharing one space."""

    g: LieAlgebra
    n: LieAlgebra
    coeffs: ProductTable  # coeffs[i][j] = e_i . e_j

    def __post_init__(self):
        if self.g.dim != self.n.dim:
            raise ValueError("pair brackets must share one dimension")

    def product(self, x: Sequence, y: Sequence) -> Vector:
        xv, yv = vector(x), vector(y)
        out = zero_vector(self.n.dim)
        for i, xi in enumerate(xv):
            if xi == 0:
                continue
            for j, yj in enumerate(yv):
                if yj == 0:
                    continue
                out = vec_add(out, vec_scale(xi * yj, self.coeffs[i][j]))
        return out


def first_pa_failure(p: PAProduct) -> tuple[str, tuple[int, ...]] | None:
    """First failing axiom instance as (axiom name, basis indices), or None."""
    d = p.n.dim
    units = [unit_vector(d, i) for i in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            lhs = tuple(a - b for a, b in zip(p.coeffs[i][j], p.coeffs[j][i]))
            rhs = tuple(a - b for a, b in zip(p.g.table[i][j], p.n.table[i][j]))
            if lhs != rhs:
                return ("difference", (i, j))
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = p.product(p.g.table[i][j], units[k])
                rhs = tuple(a - b for a, b in zip(
                    p.product(units[i], p.coeffs[j][k]),
                    p.product(units[j], p.coeffs[i][k])))
                if lhs != rhs:
                    return ("representation", (i, j, k))
                lhs = p.product(units[i], p.n.table[j][k])
                rhs = vec_add(bracket(p.n, p.coeffs[i][j], units[k]),
                              bracket(p.n, units[j], p.coeffs[i][k]))
                if lhs != rhs:
                    return ("derivation", (i, j, k))
    return None


def check_pa_axioms(p: PAProduct) -> bool:
    return first_pa_failure(p) is None


def left_multiplications_are_derivations(p: PAProduct) -> bool:
    """L(x){y,z} = {L(x)y, z} + {y, L(x)z} on all basis triples."""
    d = p.n.dim
    units = [unit_vector(d, i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = p.product(units[i], p.n.table[j][k])
                rhs = vec_add(bracket(p.n, p.coeffs[i][j], units[k]),
                              bracket(p.n, units[j], p.coeffs[i][k]))
                if lhs != rhs:
                    return False
    return True


def _require_weight_one(op: RBOperator) -> None:
    if op.weight != 1:
        raise ValueError("derived bracket requires weight 1; rescale first")


def is_lie_homomorphism(phi: Matrix, g: LieAlgebra, n: LieAlgebra) -> bool:
    """phi [x,y]_g = {phi x, phi y}_n on all basis pairs."""
    for i in range(g.dim):
        ci = phi.column(i)
        for j in range(i + 1, g.dim):
            if phi.apply(g.table[i][j]) != bracket(n, ci, phi.column(j)):
                return False
    return True


def derived_bracket(op: RBOperator) -> LieAlgebra:
    """[x,y] = {R(x),y} - {R(y),x} + {x,y}; verified to be a Lie bracket."""
    _require_weight_one(op)
    n = op.algebra
    d = n.dim
    units = [unit_vector(d, i) for i in range(d)]
    table = []
    for i in range(d):
        ri = op.matrix.column(i)
        row = []
        for j in range(d):
            rj = op.matrix.column(j)
            v = vec_add(
                tuple(a - b for a, b in zip(bracket(n, ri, units[j]),
                                            bracket(n, rj, units[i]))),
                n.table[i][j])
            row.append(v)
        table.append(row)
    g = LieAlgebra.from_table(d, table, n.basis_labels)
    if not check_jacobi(g):
        raise ArithmeticError("derived bracket fails Jacobi; operator is not RB")
    rid = op.matrix + Matrix.identity(d)
    if not (is_lie_homomorphism(op.matrix, g, n) and is_lie_homomorphism(rid, g, n)):
        raise ArithmeticError("R or R+id fails to be a homomorphism g -> n")
    return g


def inner_pa_from_rb(op: RBOperator) -> PAProduct:
    """x.y = {R(x), y} together with the derived bracket as g."""
    _require_weight_one(op)
    n = op.algebra
    d = n.dim
    units = [unit_vector(d, i) for i in range(d)]
    coeffs = tuple(
        tuple(bracket(n, op.matrix.column(i), units[j]) for j in range(d))
        for i in range(d))
    return PAProduct(derived_bracket(op), n, coeffs)


@dataclass(frozen=True)
class BracketTower:
    """Levels g_0 = n, g_1, ... of the iterated derived bracket recursion."""

    operator: RBOperator
    levels: tuple[LieAlgebra, ...]


def bracket_tower(op: RBOperator, depth: int) -> BracketTower:
    """[x,y]_{i+1} = [R(x),y]_i - [R(y),x]_i + [x,y]_i, checked level by level."""
    _require_weight_one(op)
    levels = [op.algebra]
    d = op.algebra.dim
    rid = op.matrix + Matrix.identity(d)
    for _ in range(depth):
        cur = levels[-1]
        nxt = derived_bracket(RBOperator(cur, op.matrix, op.weight))
        if not (is_lie_homomorphism(op.matrix, nxt, cur)
                and is_lie_homomorphism(rid, nxt, cur)):
            raise ArithmeticError("tower homomorphism check failed")
        levels.append(nxt)
    return BracketTower(op, tuple(levels))


def derived_dim_inequality(op: RBOperator, depth: int) -> bool:
    """dim g^(i) <= dim n^(i) for i = 1..depth."""
    from .liealg import derived_series
    g = derived_bracket(op)
    n = op.algebra

    def dims(L: LieAlgebra) -> list[int]:
        ds = [s.dim for s in derived_series(L)]
        while len(ds) < depth:
            ds.append(ds[-1])
        return ds[:depth]

    return all(a <= b for a, b in zip(dims(g), dims(n)))


def kernel_ideal_checks(op: RBOperator, depth: int) -> bool:
    """ker(R^i) and ker((R+id)^i) are ideals in g_j for all 1 <= i <= j <= depth."""
    _require_weight_one(op)
    d = op.algebra.dim
    tower = bracket_tower(op, depth)
    rid = op.matrix + Matrix.identity(d)
    for j in range(1, depth + 1):
        gj = tower.levels[j]
        for i in range(1, j + 1):
            if not is_ideal(gj, kernel(op.matrix.power(i))):
                return False
            if not is_ideal(gj, kernel(rid.power(i))):
                return False
    return True


@dataclass(frozen=True)
class TripleDecomposition:
    """n1 = ker R^n, n2 = ker (R+id)^n, n3 = im R^n intersect im (R+id)^n."""

    n1: Subspace
    n2: Subspace
    n3: Subspace


def triple_decomposition(op: RBOperator) -> TripleDecomposition:
    """Canonical three-part decomposition; all invariants verified."""
    _require_weight_one(op)
    d = op.algebra.dim
    rn = op.matrix.power(d)
    ridn = (op.matrix + Matrix.identity(d)).power(d)
    n1 = kernel(rn)
    n2 = kernel(ridn)
    n3 = intersect(image(rn), image(ridn))
    dec = TripleDecomposition(n1, n2, n3)
    report = triple_decomposition_report(op, dec)
    if not all(report.values()):
        failing = [k for k, v in report.items() if not v]
        raise ArithmeticError(f"triple decomposition invariants failed: {failing}")
    return dec


def triple_decomposition_report(op: RBOperator,
                                dec: TripleDecomposition) -> dict[str, bool]:
    n = op.algebra
    out = {
        "direct_sum": is_direct_sum([dec.n1, dec.n2, dec.n3])
                      and dec.n1.dim + dec.n2.dim + dec.n3.dim == n.dim,
        "n1_n3_in_n1": all(contains(dec.n1, bracket(n, a, b))
                           for a in dec.n1.basis for b in dec.n3.basis),
        "n2_n3_in_n2": all(contains(dec.n2, bracket(n, a, b))
                           for a in dec.n2.basis for b in dec.n3.basis),
    }
    out["n3_subalgebra"] = subalgebra_closure(n, dec.n3)
    out["n3_solvable"] = out["n3_subalgebra"] and is_solvable(restrict(n, dec.n3))
    return out


@dataclass(frozen=True)
class KernelDichotomyReport:
    dim_ker_r: int
    dim_ker_r_id: int
    fingerprints_equal: bool
    n_solvable: bool
    consistent: bool
    g_fingerprint: Fingerprint
    n_fingerprint: Fingerprint


def kernel_dichotomy_check(op: RBOperator) -> KernelDichotomyReport:
    """Instance check: non-isomorphic pair forces two nontrivial kernels;
    a non-solvable side forces at least one."""
    _require_weight_one(op)
    d = op.algebra.dim
    g = derived_bracket(op)
    fg, fn = fingerprint(g), fingerprint(op.algebra)
    k1 = kernel(op.matrix).dim
    k2 = kernel(op.matrix + Matrix.identity(d)).dim
    ok = True
    if fg != fn and not (k1 > 0 and k2 > 0):
        ok = False
    if not (fg.solvable and fn.solvable) and not (k1 > 0 or k2 > 0):
        ok = False
    return KernelDichotomyReport(k1, k2, fg == fn, fn.solvable, ok, fg, fn)
