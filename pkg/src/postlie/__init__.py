"""Exact-arithmetic toolkit for Rota-Baxter operators and post-Lie structures
on finite-dimensional Lie algebras given by structure constants."""

from .exactla import Matrix, Rational, Subspace, Vector, rat
from .liealg import LieAlgebra, Fingerprint, bracket, fingerprint
from .rbops import RBOperator, is_rb_operator, verified_operator
from .pastruct import PAProduct, check_pa_axioms, derived_bracket, inner_pa_from_rb
from .classify import Class3, classify3, is_lie_isomorphism, j_invariant
from .catalog import Witness, make_sl2, make_sl2sl2, make_table1, make_type, witnesses

__all__ = [
    "Matrix", "Rational", "Subspace", "Vector", "rat",
    "LieAlgebra", "Fingerprint", "bracket", "fingerprint",
    "RBOperator", "is_rb_operator", "verified_operator",
    "PAProduct", "check_pa_axioms", "derived_bracket", "inner_pa_from_rb",
    "Class3", "classify3", "is_lie_isomorphism", "j_invariant",
    "Witness", "make_sl2", "make_sl2sl2", "make_table1", "make_type", "witnesses",
]

__version__ = "1.0.0"
