"""Structure-constant representation of binary and ternary Hom-algebras.

Everything is dense: a binary tensor of dimension ``n`` stores the ``n*n``
products ``e_i . e_j`` as vectors, a ternary tensor the ``n**3`` values
``{e_i, e_j, e_k}``.  Indices are 0-based internally; the DSL and all
reports use the 1-based labels ``e1 .. en``.

Evaluation skips zero coordinates, which keeps the exhaustive identity
checks cheap for the sparse multiplication tables we care about.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .coeff import Scalar
from .errors import ConfigurationError, DimensionError

__all__ = [
    "Vector",
    "LinearMap",
    "BinaryTensor",
    "TernaryTensor",
    "AlgebraSpec",
    "HomLYSpec",
    "product",
    "ternary",
    "apply_map",
    "compose",
    "left_translation",
    "skew_symmetrize",
    "hom_associator",
    "hom_jacobian",
    "check_param_names",
]

_RESERVED = re.compile(r"^(I|e\d+)$")
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


def check_param_names(params: Iterable[str]) -> tuple[str, ...]:
    params = tuple(params)
    for p in params:
        if not _IDENT.match(p):
            raise ConfigurationError(f"invalid parameter name {p!r}")
        if _RESERVED.match(p):
            raise ConfigurationError(f"parameter name {p!r} is reserved")
    if len(set(params)) != len(params):
        raise ConfigurationError(f"duplicate parameter names in {params}")
    return params


class Vector:
    """Coordinates of an element of L in the basis e1..en."""

    __slots__ = ("coords", "_nz")

    def __init__(self, coords: Sequence[Scalar]):
        coords = tuple(coords)
        if not coords:
            raise DimensionError("vectors must have positive dimension")
        params = coords[0].params
        for c in coords:
            if not isinstance(c, Scalar):
                raise TypeError(f"vector coordinates must be Scalars, got {type(c).__name__}")
            if c.params != params:
                raise ConfigurationError("vector coordinates over different parameter lists")
        self.coords = coords
        self._nz = None

    @classmethod
    def zero(cls, n: int, params: Sequence[str] = ()) -> "Vector":
        z = Scalar.zero(params)
        return cls((z,) * n)

    @classmethod
    def basis(cls, n: int, i: int, params: Sequence[str] = ()) -> "Vector":
        """The basis vector with 0-based index ``i``."""
        if not 0 <= i < n:
            raise DimensionError(f"basis index {i} out of range for dimension {n}")
        z = Scalar.zero(params)
        one = Scalar.one(params)
        return cls(tuple(one if k == i else z for k in range(n)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def params(self) -> tuple[str, ...]:
        return self.coords[0].params

    def nonzero(self) -> list[tuple[int, Scalar]]:
        if self._nz is None:
            self._nz = [(k, c) for k, c in enumerate(self.coords) if c]
        return self._nz

    def __bool__(self) -> bool:
        return bool(self.nonzero())

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k: int) -> Scalar:
        return self.coords[k]

    def __eq__(self, other) -> bool:
        if isinstance(other, Vector):
            return self.coords == other.coords
        if other == 0:
            return not self
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords)

    def _check(self, other: "Vector") -> None:
        if len(other.coords) != len(self.coords):
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        self._check(other)
        return Vector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        self._check(other)
        return Vector([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Vector":
        return Vector([-a for a in self.coords])

    def __mul__(self, s) -> "Vector":
        if isinstance(s, Vector):
            return NotImplemented
        return Vector([a * s for a in self.coords])

    __rmul__ = __mul__

    def subst(self, assignment: Mapping[str, object]) -> "Vector":
        return Vector([c.subst(assignment) for c in self.coords])

    def with_params(self, params: Sequence[str]) -> "Vector":
        return Vector([c.with_params(params) for c in self.coords])

    def __str__(self) -> str:
        return format_vector(self)

    def __repr__(self) -> str:
        return f"Vector({format_vector(self)!r})"


def _is_complex(c) -> bool:
    return bool(c.re and c.im)


def _vector_term(k: int, s: Scalar) -> str:
    name = f"e{k + 1}"
    if s == 1:
        return name
    if s == -1:
        return "-" + name
    if s.is_single_term and not (s.is_constant and _is_complex(s.constant_value())):
        return f"{s}*{name}"
    if s.leading_sign() < 0:
        return f"-({-s})*{name}"
    return f"({s})*{name}"


def format_vector(v: Vector) -> str:
    """Canonical text such as ``-e3 - e4`` or ``(a*l+1)*e1``."""
    out = ""
    for k, s in v.nonzero():
        t = _vector_term(k, s)
        if not out:
            out = t
        elif t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out or "0"


def _accumulate(acc: list, coef: Scalar, v: Vector) -> None:
    for k, s in v.nonzero():
        acc[k] = acc[k] + coef * s


class LinearMap:
    """Linear self-map of L, stored by the images of the basis vectors.

    ``matrix[i][j]`` is the i-th coordinate of the image of ``e_j``, i.e.
    column ``j`` is the image of ``e_j``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[Vector]):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise DimensionError("linear maps must have positive dimension")
        for v in images:
            if v.dim != n:
                raise DimensionError(f"linear map is not square: image of length {v.dim}, n={n}")
            if v.params != images[0].params:
                raise ConfigurationError("images over different parameter lists")
        self.images = images

    @classmethod
    def identity(cls, n: int, params: Sequence[str] = ()) -> "LinearMap":
        return cls([Vector.basis(n, j, params) for j in range(n)])

    @classmethod
    def zero(cls, n: int, params: Sequence[str] = ()) -> "LinearMap":
        return cls([Vector.zero(n, params)] * n)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[Scalar]]) -> "LinearMap":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionError("matrix must be square")
        return cls([Vector([rows[i][j] for i in range(n)]) for j in range(n)])

    @property
    def dim(self) -> int:
        return len(self.images)

    @property
    def params(self) -> tuple[str, ...]:
        return self.images[0].params

    @property
    def matrix(self) -> tuple[tuple[Scalar, ...], ...]:
        n = self.dim
        return tuple(tuple(self.images[j][i] for j in range(n)) for i in range(n))

    def is_identity(self) -> bool:
        return self == LinearMap.identity(self.dim, self.params)

    def __call__(self, x: Vector) -> Vector:
        return apply_map(self, x)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return compose(self, other)

    def power(self, k: int) -> "LinearMap":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = LinearMap.identity(self.dim, self.params)
        for _ in range(k):
            result = compose(self, result)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def subst(self, assignment) -> "LinearMap":
        return LinearMap([v.subst(assignment) for v in self.images])

    def with_params(self, params) -> "LinearMap":
        return LinearMap([v.with_params(params) for v in self.images])

    def __repr__(self) -> str:
        body = ", ".join(f"e{j + 1} -> {v}" for j, v in enumerate(self.images))
        return f"LinearMap({body})"


class BinaryTensor:
    """Structure constants of a bilinear operation.

    ``B[i][j]`` is the vector ``e_i . e_j`` and ``B[i][j][k]`` the scalar
    coefficient of ``e_k`` in it.
    """

    __slots__ = ("table",)

    def __init__(self, table: Sequence[Sequence[Vector]]):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0:
            raise DimensionError("tensors must have positive dimension")
        params = table[0][0].params if table[0] else ()
        for row in table:
            if len(row) != n:
                raise DimensionError("binary tensor rows must have length n")
            for v in row:
                if v.dim != n:
                    raise DimensionError("binary tensor entries must have dimension n")
                if v.params != params:
                    raise ConfigurationError("tensor entries over different parameter lists")
        self.table = table

    @classmethod
    def zero(cls, n: int, params: Sequence[str] = ()) -> "BinaryTensor":
        z = Vector.zero(n, params)
        return cls([[z] * n for _ in range(n)])

    @classmethod
    def from_products(cls, n: int, params: Sequence[str],
                      products: Mapping[tuple[int, int], Vector]) -> "BinaryTensor":
        """Build from a sparse map of 0-based index pairs; the rest is zero."""
        z = Vector.zero(n, params)
        table = [[z] * n for _ in range(n)]
        for (i, j), v in products.items():
            table[i][j] = v
        return cls(table)

    @classmethod
    def from_array(cls, c) -> "BinaryTensor":
        n = len(c)
        return cls([[Vector([c[i][j][k] for k in range(n)]) for j in range(n)]
                    for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.table)

    @property
    def params(self) -> tuple[str, ...]:
        return self.table[0][0].params

    def __getitem__(self, i: int) -> tuple[Vector, ...]:
        return self.table[i]

    def entries(self):
        """Yield ``(i, j, e_i . e_j)`` for the nonzero products."""
        for i, row in enumerate(self.table):
            for j, v in enumerate(row):
                if v:
                    yield i, j, v

    def with_entry(self, i: int, j: int, k: int, value: Scalar) -> "BinaryTensor":
        table = [list(row) for row in self.table]
        coords = list(table[i][j].coords)
        coords[k] = value
        table[i][j] = Vector(coords)
        return BinaryTensor(table)

    def is_anticommutative(self) -> bool:
        n = self.dim
        return all(self.table[i][j] == -self.table[j][i]
                   for i in range(n) for j in range(i, n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryTensor):
            return NotImplemented
        return self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def map_entries(self, f: Callable[[Vector], Vector]) -> "BinaryTensor":
        return BinaryTensor([[f(v) for v in row] for row in self.table])

    def __repr__(self) -> str:
        body = ", ".join(f"e{i + 1}.e{j + 1} = {v}" for i, j, v in self.entries())
        return f"BinaryTensor(dim={self.dim}, {body or 'zero'})"


class TernaryTensor:
    """Structure constants of a trilinear operation; ``T[i][j][k]`` is ``{e_i, e_j, e_k}``."""

    __slots__ = ("table",)

    def __init__(self, table: Sequence[Sequence[Sequence[Vector]]]):
        table = tuple(tuple(tuple(col) for col in row) for row in table)
        n = len(table)
        if n == 0:
            raise DimensionError("tensors must have positive dimension")
        params = table[0][0][0].params
        for row in table:
            if len(row) != n:
                raise DimensionError("ternary tensor has inconsistent dimensions")
            for col in row:
                if len(col) != n:
                    raise DimensionError("ternary tensor has inconsistent dimensions")
                for v in col:
                    if v.dim != n:
                        raise DimensionError("ternary tensor entries must have dimension n")
                    if v.params != params:
                        raise ConfigurationError("tensor entries over different parameter lists")
        self.table = table

    @classmethod
    def zero(cls, n: int, params: Sequence[str] = ()) -> "TernaryTensor":
        z = Vector.zero(n, params)
        return cls([[[z] * n for _ in range(n)] for _ in range(n)])

    @classmethod
    def from_function(cls, n: int, f: Callable[[int, int, int], Vector]) -> "TernaryTensor":
        return cls([[[f(i, j, k) for k in range(n)] for j in range(n)] for i in range(n)])

    @classmethod
    def from_products(cls, n: int, params: Sequence[str],
                      products: Mapping[tuple[int, int, int], Vector]) -> "TernaryTensor":
        z = Vector.zero(n, params)
        table = [[[z] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), v in products.items():
            table[i][j][k] = v
        return cls(table)

    @property
    def dim(self) -> int:
        return len(self.table)

    @property
    def params(self) -> tuple[str, ...]:
        return self.table[0][0][0].params

    def __getitem__(self, i: int):
        return self.table[i]

    def entries(self):
        for i, row in enumerate(self.table):
            for j, col in enumerate(row):
                for k, v in enumerate(col):
                    if v:
                        yield i, j, k, v

    def with_entry(self, i: int, j: int, k: int, l: int, value: Scalar) -> "TernaryTensor":
        table = [[list(col) for col in row] for row in self.table]
        coords = list(table[i][j][k].coords)
        coords[l] = value
        table[i][j][k] = Vector(coords)
        return TernaryTensor(table)

    def map_entries(self, f: Callable[[Vector], Vector]) -> "TernaryTensor":
        return TernaryTensor([[[f(v) for v in col] for col in row] for row in self.table])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TernaryTensor):
            return NotImplemented
        return self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        body = ", ".join(f"{{e{i + 1},e{j + 1},e{k + 1}}} = {v}"
                         for i, j, k, v in self.entries())
        return f"TernaryTensor(dim={self.dim}, {body or 'zero'})"


def _require_dim(n: int, *objs) -> None:
    for o in objs:
        if o.dim != n:
            raise DimensionError(f"dimension mismatch: expected {n}, got {o.dim}")


def product(B: BinaryTensor, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the multiplication table to arbitrary vectors."""
    n = B.dim
    _require_dim(n, x, y)
    acc = list(Vector.zero(n, B.params).coords)
    ynz = y.nonzero()
    for i, xi in x.nonzero():
        row = B.table[i]
        for j, yj in ynz:
            v = row[j]
            if v:
                _accumulate(acc, xi * yj, v)
    return Vector(acc)


def ternary(T: TernaryTensor, x: Vector, y: Vector, z: Vector) -> Vector:
    n = T.dim
    _require_dim(n, x, y, z)
    acc = list(Vector.zero(n, T.params).coords)
    ynz, znz = y.nonzero(), z.nonzero()
    for i, xi in x.nonzero():
        for j, yj in ynz:
            col = T.table[i][j]
            xy = None
            for k, zk in znz:
                v = col[k]
                if v:
                    if xy is None:
                        xy = xi * yj
                    _accumulate(acc, xy * zk, v)
    return Vector(acc)


def apply_map(A: LinearMap, x: Vector) -> Vector:
    n = A.dim
    _require_dim(n, x)
    acc = list(Vector.zero(n, A.params).coords)
    for j, xj in x.nonzero():
        _accumulate(acc, xj, A.images[j])
    return Vector(acc)


def compose(A: LinearMap, B: LinearMap) -> LinearMap:
    """The map ``A o B`` (apply ``B`` first)."""
    _require_dim(A.dim, B)
    return LinearMap([apply_map(A, v) for v in B.images])


def left_translation(B: BinaryTensor, a: Vector) -> LinearMap:
    """Matrix of ``b -> a . b``."""
    _require_dim(B.dim, a)
    n = B.dim
    return LinearMap([product(B, a, Vector.basis(n, j, B.params)) for j in range(n)])


def skew_symmetrize(B: BinaryTensor) -> BinaryTensor:
    """``[x, y] = x.y - y.x`` as a new structure tensor."""
    n = B.dim
    return BinaryTensor([[B.table[i][j] - B.table[j][i] for j in range(n)]
                         for i in range(n)])


def hom_associator(B: BinaryTensor, A: LinearMap, x: Vector, y: Vector, z: Vector) -> Vector:
    """``(x.y).A(z) - A(x).(y.z)``."""
    _require_dim(B.dim, A, x, y, z)
    return product(B, product(B, x, y), apply_map(A, z)) - \
        product(B, apply_map(A, x), product(B, y, z))


def hom_jacobian(B: BinaryTensor, A: LinearMap, x: Vector, y: Vector, z: Vector) -> Vector:
    """Cyclic sum of ``(x.y).A(z)`` over ``(x, y, z)``."""
    _require_dim(B.dim, A, x, y, z)
    return (product(B, product(B, x, y), apply_map(A, z))
            + product(B, product(B, y, z), apply_map(A, x))
            + product(B, product(B, z, x), apply_map(A, y)))


def _check_shared(dim: int, params: tuple[str, ...], *objs) -> None:
    for o in objs:
        if o.dim != dim:
            raise DimensionError(f"dimension mismatch: expected {dim}, got {o.dim}")
        if o.params != params:
            raise ConfigurationError(
                f"parameter list mismatch: expected {params}, got {o.params}")


@dataclass(frozen=True)
class AlgebraSpec:
    """A finite-dimensional Hom-algebra ``(L, ., alpha)``.

    ``alpha`` defaults to the identity map.
    """

    name: str
    dim: int
    params: tuple[str, ...]
    product: BinaryTensor
    alpha: LinearMap = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "params", check_param_names(self.params))
        if self.dim < 1:
            raise DimensionError("dimension must be positive")
        if self.alpha is None:
            object.__setattr__(self, "alpha", LinearMap.identity(self.dim, self.params))
        _check_shared(self.dim, self.params, self.product, self.alpha)

    @classmethod
    def zero(cls, name: str, dim: int, params: Sequence[str] = ()) -> "AlgebraSpec":
        params = tuple(params)
        return cls(name, dim, params, BinaryTensor.zero(dim, params))

    def with_alpha(self, alpha: LinearMap | None) -> "AlgebraSpec":
        """Same product, different twisting map (``None`` means identity)."""
        return AlgebraSpec(self.name, self.dim, self.params, self.product, alpha)

    def with_product(self, product: BinaryTensor) -> "AlgebraSpec":
        return AlgebraSpec(self.name, self.dim, self.params, product, self.alpha)

    def renamed(self, name: str) -> "AlgebraSpec":
        return AlgebraSpec(name, self.dim, self.params, self.product, self.alpha)

    def subst(self, assignment: Mapping[str, object]) -> "AlgebraSpec":
        """Substitute parameter values; unassigned parameters are kept."""
        params = tuple(p for p in self.params if p not in assignment)
        full = dict(assignment)
        product_ = self.product.map_entries(lambda v: _subst_vector(v, full, params))
        alpha = LinearMap([_subst_vector(v, full, params) for v in self.alpha.images])
        return AlgebraSpec(self.name, self.dim, params, product_, alpha)

    def mul(self, x: Vector, y: Vector) -> Vector:
        return product(self.product, x, y)

    def e(self, i: int) -> Vector:
        """Basis vector with 1-based label ``i``."""
        return Vector.basis(self.dim, i - 1, self.params)


def _subst_vector(v: Vector, assignment, params) -> Vector:
    # fixes the residual parameter list even when no coordinate mentions it
    out = []
    for c in v.coords:
        out.append(c.subst(assignment, partial=True).with_params(params))
    return Vector(out)


@dataclass(frozen=True)
class HomLYSpec:
    """A binary-ternary Hom-algebra ``(L, [,], {,,}, alpha)``."""

    name: str
    dim: int
    params: tuple[str, ...]
    bracket: BinaryTensor
    triple: TernaryTensor
    alpha: LinearMap = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "params", check_param_names(self.params))
        if self.dim < 1:
            raise DimensionError("dimension must be positive")
        if self.alpha is None:
            object.__setattr__(self, "alpha", LinearMap.identity(self.dim, self.params))
        _check_shared(self.dim, self.params, self.bracket, self.triple, self.alpha)

    def with_alpha(self, alpha: LinearMap | None) -> "HomLYSpec":
        return HomLYSpec(self.name, self.dim, self.params, self.bracket, self.triple, alpha)

    def subst(self, assignment: Mapping[str, object]) -> "HomLYSpec":
        params = tuple(p for p in self.params if p not in assignment)
        full = dict(assignment)
        f = lambda v: _subst_vector(v, full, params)  # noqa: E731
        return HomLYSpec(self.name, self.dim, params, self.bracket.map_entries(f),
                         self.triple.map_entries(f),
                         LinearMap([f(v) for v in self.alpha.images]))

    def e(self, i: int) -> Vector:
        return Vector.basis(self.dim, i - 1, self.params)
