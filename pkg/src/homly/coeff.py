"""Exact scalars: polynomials over the Gaussian rationals Q(i).

A :class:`Scalar` is a finite map from monomials (exponent vectors over a
fixed, ordered parameter list) to :class:`GaussRational` coefficients.
Terms with zero coefficient are never stored, so two scalars are equal
exactly when their term maps are equal.  This makes polynomial identity
testing decidable, which is what the identity checkers rely on.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping

from .errors import ConfigurationError, SubstitutionError

__all__ = [
    "GaussRational",
    "Scalar",
    "scalar_add",
    "scalar_mul",
    "scalar_eq",
    "scalar_subst",
    "format_fraction",
]

# Fraction already maintains gcd(|num|, den) = 1 with den > 0 and 0 == 0/1.
Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussRational:
    """An element ``re + im*I`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, (int, _RationalABC)):
            return cls(Fraction(value))
        if isinstance(value, complex):
            raise TypeError("floating-point complex numbers are not exact; use GaussRational")
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @property
    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, _RationalABC)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def __add__(self, other) -> "GaussRational":
        if not isinstance(other, GaussRational):
            try:
                other = GaussRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussRational":
        if not isinstance(other, GaussRational):
            try:
                other = GaussRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussRational":
        return (-self) + other

    def __mul__(self, other) -> "GaussRational":
        if not isinstance(other, GaussRational):
            try:
                other = GaussRational.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussRational(a * c, _ZERO)
        return GaussRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("Gaussian rational division by zero")
        return GaussRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other) -> "GaussRational":
        if not isinstance(other, GaussRational):
            try:
                other = GaussRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "GaussRational":
        return GaussRational.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "GaussRational":
        if k < 0:
            return self.inverse() ** (-k)
        result = GaussRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self) -> str:
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if not self.im:
            return format_fraction(self.re)
        imag = _imag_str(self.im)
        if not self.re:
            return imag
        sign = "-" if imag.startswith("-") else "+"
        return f"{format_fraction(self.re)}{sign}{imag.lstrip('-')}"


def _imag_str(q: Fraction) -> str:
    if q == 1:
        return "I"
    if q == -1:
        return "-I"
    return f"{format_fraction(q)}*I"


I = GaussRational(0, 1)


def _monomial_key(m: tuple[int, ...]):
    # graded lex; sorted in reverse so the largest monomial prints first
    return (sum(m), m)


class Scalar:
    """Polynomial in the declared parameters with Q(i) coefficients.

    Instances are immutable.  Build them with :meth:`const`, :meth:`var`
    or arithmetic; the constructor trusts ``terms`` to be free of zeros
    unless ``normalize=True``.
    """

    __slots__ = ("params", "terms", "_hash")

    def __init__(self, params: tuple[str, ...] = (), terms: Mapping | None = None,
                 normalize: bool = True):
        self.params = tuple(params)
        if terms is None:
            self.terms = {}
        elif normalize:
            n = len(self.params)
            clean = {}
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n:
                    raise ConfigurationError(
                        f"monomial {m} does not match parameter list {self.params}")
                c = GaussRational.coerce(c)
                if c:
                    clean[m] = clean.get(m, GaussRational()) + c
            self.terms = {m: c for m, c in clean.items() if c}
        else:
            self.terms = terms
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, params: Iterable[str] = ()) -> "Scalar":
        return cls(tuple(params), {}, normalize=False)

    @classmethod
    def one(cls, params: Iterable[str] = ()) -> "Scalar":
        return cls.const(1, params)

    @classmethod
    def const(cls, value, params: Iterable[str] = ()) -> "Scalar":
        params = tuple(params)
        c = GaussRational.coerce(value)
        if not c:
            return cls(params, {}, normalize=False)
        return cls(params, {(0,) * len(params): c}, normalize=False)

    @classmethod
    def var(cls, name: str, params: Iterable[str]) -> "Scalar":
        params = tuple(params)
        if name not in params:
            raise ConfigurationError(f"unknown parameter {name!r}; declared: {params}")
        m = tuple(1 if p == name else 0 for p in params)
        return cls(params, {m: GaussRational(1)}, normalize=False)

    @classmethod
    def unit(cls, params: Iterable[str] = ()) -> "Scalar":
        """The Gaussian unit ``I``."""
        return cls.const(I, params)

    # -- predicates -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_constant(self) -> bool:
        zero = (0,) * len(self.params)
        return all(m == zero for m in self.terms)

    def constant_value(self) -> GaussRational:
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return next(iter(self.terms.values()), GaussRational())

    def occurring_params(self) -> set[str]:
        return {p for m in self.terms for p, e in zip(self.params, m) if e}

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.params is not self.params and other.params != self.params:
                raise ConfigurationError(
                    f"parameter lists differ: {self.params} vs {other.params}")
            return other
        return Scalar.const(other, self.params)

    def __add__(self, other) -> "Scalar":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            if s is None:
                terms[m] = c
            else:
                s = s + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Scalar(self.params, terms, normalize=False)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(self.params, {m: -c for m, c in self.terms.items()}, normalize=False)

    def __sub__(self, other) -> "Scalar":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return (-self) + other

    def __mul__(self, other) -> "Scalar":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self.terms or not other.terms:
            return Scalar(self.params, {}, normalize=False)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2)) if m1 else m1
                c = c1 * c2
                s = terms.get(m)
                terms[m] = c if s is None else s + c
        return Scalar(self.params, {m: c for m, c in terms.items() if c}, normalize=False)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        """Division by a nonzero constant only."""
        if isinstance(other, Scalar):
            if not other.is_constant:
                raise ValueError("division by a non-constant polynomial is not supported")
            other = other.constant_value()
        inv = GaussRational.coerce(other).inverse()
        return self * inv

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Scalar.one(self.params)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- equality ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.params == other.params and self.terms == other.terms
        if isinstance(other, (int, _RationalABC, GaussRational)):
            return self.terms == Scalar.const(other, self.params).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.params, frozenset(self.terms.items())))
        return self._hash

    # -- substitution -----------------------------------------------------

    def subst(self, assignment: Mapping[str, object], partial: bool = False) -> "Scalar":
        """Substitute values for parameters.

        The parameter list is kept, so the result still combines with other
        scalars of the same algebra.  Every occurring parameter must be
        assigned unless ``partial`` is set.
        """
        if not partial:
            missing = self.occurring_params() - set(assignment)
            if missing:
                raise SubstitutionError(f"no value assigned to parameter(s) {sorted(missing)}")
        values = [GaussRational.coerce(assignment[p]) if p in assignment else None
                  for p in self.params]
        terms: dict = {}
        for m, c in self.terms.items():
            key = list(m)
            for i, (v, e) in enumerate(zip(values, m)):
                if v is not None and e:
                    c = c * v ** e
                    key[i] = 0
            if not c:
                continue
            key = tuple(key)
            s = terms.get(key)
            terms[key] = c if s is None else s + c
        return Scalar(self.params, {m: c for m, c in terms.items() if c}, normalize=False)

    def with_params(self, params: Iterable[str]) -> "Scalar":
        """Re-express over a larger (or reordered) parameter list."""
        params = tuple(params)
        if params == self.params:
            return self
        missing = self.occurring_params() - set(params)
        if missing:
            raise ConfigurationError(f"parameters {sorted(missing)} missing from {params}")
        index = {p: i for i, p in enumerate(self.params)}
        terms = {}
        for m, c in self.terms.items():
            terms[tuple(m[index[p]] if p in index else 0 for p in params)] = c
        return Scalar(params, terms, normalize=False)

    # -- printing ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], GaussRational]]:
        return sorted(self.terms.items(), key=lambda t: _monomial_key(t[0]), reverse=True)

    def _monomial_str(self, m: tuple[int, ...]) -> str:
        parts = []
        for p, e in zip(self.params, m):
            if e == 1:
                parts.append(p)
            elif e:
                parts.append(f"{p}^{e}")
        return "*".join(parts)

    def _term_str(self, m, c: GaussRational) -> str:
        mono = self._monomial_str(m)
        if not mono:
            return str(c)
        if c.re and c.im:
            return f"({c})*{mono}"
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        return f"{c}*{mono}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for m, c in self.sorted_terms():
            t = self._term_str(m, c)
            if out and not t.startswith("-"):
                out += "+"
            out += t
        return out

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r}, params={self.params})"

    @property
    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    def leading_sign(self) -> int:
        """-1 if the leading coefficient is a negative rational, else 1."""
        if not self.terms:
            return 1
        c = self.sorted_terms()[0][1]
        return -1 if (not c.im and c.re < 0) or (not c.re and c.im < 0) else 1


def scalar_add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def scalar_eq(x: Scalar, y: Scalar) -> bool:
    return x == y


def scalar_subst(x: Scalar, assignment: Mapping[str, object]) -> Scalar:
    return x.subst(assignment)
