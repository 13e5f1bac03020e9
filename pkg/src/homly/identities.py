"""Exhaustive checkers for the Hom-algebra identities.

Every identity handled here is multilinear, so it holds on all of L iff it
holds on all tuples of basis vectors.  Each checker walks those tuples in
lexicographic order, compares both sides with exact scalar equality, and
returns a :class:`CheckReport`.  Counterexample tuples are 1-based basis
labels, matching the ``e1 .. en`` notation used everywhere else.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .core import (
    BinaryTensor,
    HomLYSpec,
    LinearMap,
    TernaryTensor,
    Vector,
    apply_map,
    compose,
    product,
    skew_symmetrize,
    ternary,
)
from .errors import ConfigurationError, DimensionError, PreconditionError

__all__ = [
    "Counterexample",
    "CheckReport",
    "AxiomSuiteReport",
    "DEFAULT_MAX_COUNTEREXAMPLES",
    "check_multiplicative",
    "check_anticommutative",
    "check_left_hom_leibniz",
    "check_right_hom_leibniz",
    "check_hom_lie",
    "check_hom_akivis",
    "check_symmetric_annihilation",
    "check_translation_derivation",
    "check_cyclic_bracket_form",
    "check_hom_ly",
    "check_ly",
    "check_identity_3_1",
    "check_identity_3_2",
]

DEFAULT_MAX_COUNTEREXAMPLES = 10


@dataclass(frozen=True)
class Counterexample:
    tuple: tuple[int, ...]
    lhs: Vector
    rhs: Vector
    part: str | None = None


@dataclass(frozen=True)
class CheckReport:
    identity_name: str
    counterexamples: tuple[Counterexample, ...] = ()
    tuples_checked: int = 0

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    @property
    def first(self) -> Counterexample | None:
        return self.counterexamples[0] if self.counterexamples else None

    def failed_parts(self) -> list[str]:
        seen: list[str] = []
        for cx in self.counterexamples:
            if cx.part is not None and cx.part not in seen:
                seen.append(cx.part)
        return seen

    def __str__(self) -> str:
        if self.holds:
            return f"PASS {self.identity_name} ({self.tuples_checked} tuples)"
        cx = self.counterexamples[0]
        where = ",".join(map(str, cx.tuple))
        part = f" [{cx.part}]" if cx.part else ""
        return (f"FAIL {self.identity_name}{part} at ({where}): "
                f"lhs = {cx.lhs}, rhs = {cx.rhs}")


@dataclass(frozen=True)
class AxiomSuiteReport:
    suite_name: str
    reports: dict[str, CheckReport] = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(r.holds for r in self.reports.values())

    holds = overall

    def __getitem__(self, key: str) -> CheckReport:
        return self.reports[key]

    def __iter__(self) -> Iterator[CheckReport]:
        return iter(self.reports.values())

    def failing(self) -> list[str]:
        return [k for k, r in self.reports.items() if not r.holds]


class _Scan:
    """Collects counterexamples across one or more tuple sweeps."""

    def __init__(self, name: str, max_counterexamples: int):
        self.name = name
        self.limit = max_counterexamples
        self.found: list[Counterexample] = []
        self.checked = 0

    @property
    def full(self) -> bool:
        return self.limit is not None and len(self.found) >= self.limit

    def sweep(self, n: int, arity: int, lhs: Callable[..., Vector],
              rhs: Callable[..., Vector], part: str | None = None) -> None:
        for idx in itertools.product(range(n), repeat=arity):
            if self.full:
                return
            self.checked += 1
            left = lhs(*idx)
            right = rhs(*idx)
            if left != right:
                self.found.append(Counterexample(tuple(i + 1 for i in idx), left, right, part))

    def report(self) -> CheckReport:
        return CheckReport(self.name, tuple(self.found), self.checked)


def _basis(n: int, params) -> list[Vector]:
    return [Vector.basis(n, i, params) for i in range(n)]


def _agree(*objs) -> tuple[int, tuple[str, ...]]:
    n, params = objs[0].dim, objs[0].params
    for o in objs[1:]:
        if o.dim != n:
            raise DimensionError(f"dimension mismatch: {n} vs {o.dim}")
        if o.params != params:
            raise ConfigurationError(f"parameter list mismatch: {params} vs {o.params}")
    return n, params


def check_multiplicative(B: BinaryTensor, A: LinearMap,
                         max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    """``A(x.y) = A(x).A(y)`` on all basis pairs."""
    n, _ = _agree(B, A)
    a = A.images
    scan = _Scan("multiplicative", max_counterexamples)
    scan.sweep(n, 2,
               lambda i, j: apply_map(A, B[i][j]),
               lambda i, j: product(B, a[i], a[j]))
    return scan.report()


def check_anticommutative(B: BinaryTensor,
                          max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES,
                          name: str = "anticommutativity") -> CheckReport:
    scan = _Scan(name, max_counterexamples)
    scan.sweep(B.dim, 2, lambda i, j: B[i][j], lambda i, j: -B[j][i])
    return scan.report()


def check_left_hom_leibniz(B: BinaryTensor, A: LinearMap,
                           max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    """``A(x).(y.z) = (x.y).A(z) + A(y).(x.z)``."""
    n, _ = _agree(B, A)
    a = A.images
    scan = _Scan("hom-leibniz-left", max_counterexamples)
    scan.sweep(n, 3,
               lambda x, y, z: product(B, a[x], B[y][z]),
               lambda x, y, z: product(B, B[x][y], a[z]) + product(B, a[y], B[x][z]))
    return scan.report()


def check_right_hom_leibniz(B: BinaryTensor, A: LinearMap,
                            max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    """``(x.y).A(z) = (x.z).A(y) + A(x).(y.z)``."""
    n, _ = _agree(B, A)
    a = A.images
    scan = _Scan("hom-leibniz-right", max_counterexamples)
    scan.sweep(n, 3,
               lambda x, y, z: product(B, B[x][y], a[z]),
               lambda x, y, z: product(B, B[x][z], a[y]) + product(B, a[x], B[y][z]))
    return scan.report()


def _jacobian_basis(B: BinaryTensor, a) -> Callable[[int, int, int], Vector]:
    def J(x, y, z):
        return (product(B, B[x][y], a[z]) + product(B, B[y][z], a[x])
                + product(B, B[z][x], a[y]))
    return J


def check_hom_lie(B: BinaryTensor, A: LinearMap,
                  max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    """Anticommutativity on pairs, then the Hom-Jacobi identity on triples.

    Counterexamples are tagged ``anticommutativity`` or ``hom-jacobi``.
    """
    n, params = _agree(B, A)
    zero = Vector.zero(n, params)
    scan = _Scan("hom-lie", max_counterexamples)
    scan.sweep(n, 2, lambda i, j: B[i][j], lambda i, j: -B[j][i], part="anticommutativity")
    scan.sweep(n, 3, _jacobian_basis(B, A.images), lambda *_: zero, part="hom-jacobi")
    return scan.report()


def check_hom_akivis(B: BinaryTensor, T: TernaryTensor, A: LinearMap,
                     max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    """Hom-Jacobian of the bracket ``B`` against the cyclic ternary difference.

    ``B`` must be anticommutative; otherwise :class:`PreconditionError`.
    """
    n, _ = _agree(B, T, A)
    skew = check_anticommutative(B, max_counterexamples=1)
    if not skew.holds:
        raise PreconditionError("Hom-Akivis identity needs a skew-symmetric bracket", skew)

    def rhs(x, y, z):
        return (T[x][y][z] + T[y][z][x] + T[z][x][y]
                - T[y][x][z] - T[z][y][x] - T[x][z][y])

    scan = _Scan("hom-akivis", max_counterexamples)
    scan.sweep(n, 3, _jacobian_basis(B, A.images), rhs)
    return scan.report()


def check_symmetric_annihilation(B: BinaryTensor, A: LinearMap,
                                 max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES
                                 ) -> CheckReport:
    """``(x.y + y.x).A(z) = 0``; a consequence of the left Hom-Leibniz identity."""
    n, params = _agree(B, A)
    a = A.images
    zero = Vector.zero(n, params)
    scan = _Scan("id-3-1", max_counterexamples)
    scan.sweep(n, 3, lambda x, y, z: product(B, B[x][y] + B[y][x], a[z]), lambda *_: zero)
    return scan.report()


def check_translation_derivation(B: BinaryTensor, A: LinearMap,
                                 max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES
                                 ) -> CheckReport:
    """``A(x).[y,z] = [x.y, A(z)] + [A(y), x.z]`` with ``[,]`` the commutator of ``B``."""
    n, _ = _agree(B, A)
    a = A.images
    S = skew_symmetrize(B)
    scan = _Scan("id-3-2", max_counterexamples)
    scan.sweep(n, 3,
               lambda x, y, z: product(B, a[x], S[y][z]),
               lambda x, y, z: product(S, B[x][y], a[z]) + product(S, a[y], B[x][z]))
    return scan.report()


def check_cyclic_bracket_form(B: BinaryTensor, A: LinearMap,
                              max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES
                              ) -> CheckReport:
    """Cyclic sum of ``[[x,y], A(z)]`` equals the Hom-Jacobian of ``B``.

    This is the form the Hom-Akivis identity takes for left Hom-Leibniz
    algebras with the commutator bracket.
    """
    n, _ = _agree(B, A)
    a = A.images
    S = skew_symmetrize(B)
    scan = _Scan("cyclic-bracket", max_counterexamples)
    scan.sweep(n, 3, _jacobian_basis(S, a), _jacobian_basis(B, a))
    return scan.report()


check_identity_3_1 = check_symmetric_annihilation
check_identity_3_2 = check_translation_derivation


def check_hom_ly(H: HomLYSpec,
                 max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> AxiomSuiteReport:
    """Run HLY1..HLY8 on a binary-ternary Hom-algebra.

    Tuple layouts in the reports: HLY1/HLY3 ``(x,y)``; HLY2/HLY4/HLY5
    ``(x,y,z)``; HLY6 ``(x,y,z,u)``; HLY7 ``(x,y,u,v)``; HLY8
    ``(x,y,u,v,w)``.
    """
    n, params = _agree(H.bracket, H.triple, H.alpha)
    Br, T, A = H.bracket, H.triple, H.alpha
    a = A.images
    a2 = compose(A, A).images
    zero = Vector.zero(n, params)
    k = max_counterexamples

    def br(x, y):
        return product(Br, x, y)

    def tr(x, y, z):
        return ternary(T, x, y, z)

    reports: dict[str, CheckReport] = {}

    s = _Scan("HLY1", k)
    s.sweep(n, 2, lambda x, y: apply_map(A, Br[x][y]), lambda x, y: br(a[x], a[y]))
    reports["HLY1"] = s.report()

    s = _Scan("HLY2", k)
    s.sweep(n, 3, lambda x, y, z: apply_map(A, T[x][y][z]),
            lambda x, y, z: tr(a[x], a[y], a[z]))
    reports["HLY2"] = s.report()

    s = _Scan("HLY3", k)
    s.sweep(n, 2, lambda x, y: Br[x][y], lambda x, y: -Br[y][x])
    reports["HLY3"] = s.report()

    s = _Scan("HLY4", k)
    s.sweep(n, 3, lambda x, y, z: T[x][y][z], lambda x, y, z: -T[y][x][z])
    reports["HLY4"] = s.report()

    def hly5(x, y, z):
        total = zero
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            total = total + br(Br[p][q], a[r]) + T[p][q][r]
        return total

    s = _Scan("HLY5", k)
    s.sweep(n, 3, hly5, lambda *_: zero)
    reports["HLY5"] = s.report()

    def hly6(x, y, z, u):
        total = zero
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            total = total + tr(Br[p][q], a[r], a[u])
        return total

    s = _Scan("HLY6", k)
    s.sweep(n, 4, hly6, lambda *_: zero)
    reports["HLY6"] = s.report()

    s = _Scan("HLY7", k)
    s.sweep(n, 4,
            lambda x, y, u, v: tr(a[x], a[y], Br[u][v]),
            lambda x, y, u, v: br(T[x][y][u], a2[v]) + br(a2[u], T[x][y][v]))
    reports["HLY7"] = s.report()

    s = _Scan("HLY8", k)
    s.sweep(n, 5,
            lambda x, y, u, v, w: tr(a2[x], a2[y], T[u][v][w]),
            lambda x, y, u, v, w: (tr(T[x][y][u], a2[v], a2[w])
                                   + tr(a2[u], T[x][y][v], a2[w])
                                   + tr(a2[u], a2[v], T[x][y][w])))
    reports["HLY8"] = s.report()

    return AxiomSuiteReport("hom-ly", reports)


def check_ly(H: HomLYSpec,
             max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> AxiomSuiteReport:
    """Run LY1..LY6; ``H.alpha`` must be the identity map."""
    if not H.alpha.is_identity():
        raise PreconditionError("LY axioms need the identity twisting map")
    n, params = _agree(H.bracket, H.triple)
    Br, T = H.bracket, H.triple
    zero = Vector.zero(n, params)
    e = _basis(n, params)
    k = max_counterexamples

    def br(x, y):
        return product(Br, x, y)

    def tr(x, y, z):
        return ternary(T, x, y, z)

    reports: dict[str, CheckReport] = {}

    s = _Scan("LY1", k)
    s.sweep(n, 2, lambda x, y: Br[x][y], lambda x, y: -Br[y][x])
    reports["LY1"] = s.report()

    s = _Scan("LY2", k)
    s.sweep(n, 3, lambda x, y, z: T[x][y][z], lambda x, y, z: -T[y][x][z])
    reports["LY2"] = s.report()

    def ly3(x, y, z):
        total = zero
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            total = total + br(Br[p][q], e[r]) + T[p][q][r]
        return total

    s = _Scan("LY3", k)
    s.sweep(n, 3, ly3, lambda *_: zero)
    reports["LY3"] = s.report()

    def ly4(x, y, z, u):
        total = zero
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            total = total + tr(Br[p][q], e[r], e[u])
        return total

    s = _Scan("LY4", k)
    s.sweep(n, 4, ly4, lambda *_: zero)
    reports["LY4"] = s.report()

    s = _Scan("LY5", k)
    s.sweep(n, 4,
            lambda x, y, u, v: tr(e[x], e[y], Br[u][v]),
            lambda x, y, u, v: br(T[x][y][u], e[v]) + br(e[u], T[x][y][v]))
    reports["LY5"] = s.report()

    s = _Scan("LY6", k)
    s.sweep(n, 5,
            lambda x, y, u, v, w: tr(e[x], e[y], T[u][v][w]),
            lambda x, y, u, v, w: (tr(T[x][y][u], e[v], e[w])
                                   + tr(e[u], T[x][y][v], e[w])
                                   + tr(e[u], e[v], T[x][y][w])))
    reports["LY6"] = s.report()

    return AxiomSuiteReport("ly", reports)
