"""Constructions on Hom-algebras.

* Yau twisting of an algebra along an endomorphism.
* The ternary product ``{x,y,z}`` of a left Hom-Leibniz algebra, in its
  three equivalent forms (via Hom-associators, via the product, via the
  commutator bracket).
* The Hom-Akivis structure (commutator, Hom-associator) of any Hom-algebra.
* The Hom-Lie-Yamaguti structure carried by every multiplicative left
  Hom-Leibniz algebra, and its anticommutative special case.
"""
from __future__ import annotations

from fractions import Fraction

from .coeff import Scalar
from .core import (
    AlgebraSpec,
    BinaryTensor,
    HomLYSpec,
    TernaryTensor,
    Vector,
    apply_map,
    hom_associator,
    product,
    skew_symmetrize,
)
from .errors import PreconditionError
from .identities import (
    check_anticommutative,
    check_left_hom_leibniz,
    check_multiplicative,
)

__all__ = [
    "yau_twist",
    "ternary_from_associators",
    "ternary_from_product",
    "ternary_from_bracket",
    "hom_akivis_from_algebra",
    "natural_hom_ly",
    "hom_ly_from_hom_leibniz",
    "hom_ly_from_hom_lie",
    "ternary_eq_3_5",
    "ternary_eq_3_6",
    "ternary_eq_3_7",
]


def yau_twist(S: AlgebraSpec, name: str | None = None) -> AlgebraSpec:
    """Replace the product by ``x * y = alpha(x . y)``; ``alpha`` is kept.

    Raises :class:`PreconditionError` (with the multiplicativity report)
    unless ``alpha`` is an endomorphism of the product.
    """
    report = check_multiplicative(S.product, S.alpha)
    if not report.holds:
        raise PreconditionError(f"twisting map of {S.name!r} is not an endomorphism", report)
    twisted = S.product.map_entries(lambda v: apply_map(S.alpha, v))
    return AlgebraSpec(name or S.name, S.dim, S.params, twisted, S.alpha)


def _basis(S) -> list[Vector]:
    return [Vector.basis(S.dim, i, S.params) for i in range(S.dim)]


def ternary_from_product(S: AlgebraSpec) -> TernaryTensor:
    """``{x,y,z} = -(x.y).alpha(z)``."""
    B, a = S.product, S.alpha.images
    return TernaryTensor.from_function(S.dim, lambda i, j, k: -product(B, B[i][j], a[k]))


def ternary_from_associators(S: AlgebraSpec) -> TernaryTensor:
    """``{x,y,z} = as(y,x,z) - as(x,y,z)`` with the Hom-associator of ``S``."""
    B, A = S.product, S.alpha
    e = _basis(S)
    return TernaryTensor.from_function(
        S.dim,
        lambda i, j, k: hom_associator(B, A, e[j], e[i], e[k]) - hom_associator(B, A, e[i], e[j], e[k]))


def ternary_from_bracket(S: AlgebraSpec) -> TernaryTensor:
    """``{x,y,z} = -1/2 [x,y].alpha(z)`` with the commutator bracket."""
    B, a = S.product, S.alpha.images
    C = skew_symmetrize(B)
    half = Scalar.const(Fraction(-1, 2), S.params)
    return TernaryTensor.from_function(S.dim, lambda i, j, k: product(B, C[i][j], a[k]) * half)


ternary_eq_3_5 = ternary_from_associators
ternary_eq_3_6 = ternary_from_product
ternary_eq_3_7 = ternary_from_bracket


def hom_akivis_from_algebra(S: AlgebraSpec) -> tuple[BinaryTensor, TernaryTensor]:
    """Commutator bracket and Hom-associator of any Hom-algebra."""
    B, A = S.product, S.alpha
    e = _basis(S)
    assoc = TernaryTensor.from_function(
        S.dim, lambda i, j, k: hom_associator(B, A, e[i], e[j], e[k]))
    return skew_symmetrize(B), assoc


def natural_hom_ly(S: AlgebraSpec, name: str | None = None) -> HomLYSpec:
    """Commutator bracket plus ``{x,y,z} = -(x.y).alpha(z)``, without checking hypotheses.

    Use :func:`hom_ly_from_hom_leibniz` unless the point is to inspect what
    happens when the hypotheses fail.
    """
    return HomLYSpec(name or S.name, S.dim, S.params, skew_symmetrize(S.product),
                     ternary_from_product(S), S.alpha)


def _require_multiplicative_leibniz(S: AlgebraSpec) -> None:
    report = check_multiplicative(S.product, S.alpha)
    if not report.holds:
        raise PreconditionError(f"{S.name!r} is not multiplicative", report)
    report = check_left_hom_leibniz(S.product, S.alpha)
    if not report.holds:
        raise PreconditionError(f"{S.name!r} is not left Hom-Leibniz", report)


def hom_ly_from_hom_leibniz(S: AlgebraSpec, name: str | None = None) -> HomLYSpec:
    """The Hom-Lie-Yamaguti structure of a multiplicative left Hom-Leibniz algebra.

    Both hypotheses are re-verified; a failure raises
    :class:`PreconditionError` carrying the failing report.
    """
    _require_multiplicative_leibniz(S)
    return natural_hom_ly(S, name)


def hom_ly_from_hom_lie(S: AlgebraSpec, name: str | None = None) -> HomLYSpec:
    """Hom-LY structure on an anticommutative multiplicative left Hom-Leibniz algebra.

    The product itself serves as the bracket (no commutator, so no factor 2).
    """
    report = check_anticommutative(S.product)
    if not report.holds:
        raise PreconditionError(f"{S.name!r} is not anticommutative", report)
    _require_multiplicative_leibniz(S)
    return HomLYSpec(name or S.name, S.dim, S.params, S.product,
                     ternary_from_product(S), S.alpha)
