"""The line-oriented ``.alg`` format.

Algebra files::

    algebra l4
    dim 3
    params a b l
    prod 2 3 -> e2
    prod 3 1 -> l*e1
    map 3 -> a*e1 + e2 + e3      # either all n images or none (identity)

Binary-ternary files use a ``hom-ly NAME`` header and ``bracket i j``
and ``triple i j k`` statements instead of ``prod``.  Unspecified
products are zero.  Right-hand sides are linear combinations of
``e1 .. en`` with polynomial coefficients over the declared parameters,
Gaussian-rational literals (``3/2``, ``I``), ``+ - * / ^`` and
parentheses.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..coeff import GaussRational, Scalar
from ..core import (
    AlgebraSpec,
    BinaryTensor,
    HomLYSpec,
    LinearMap,
    TernaryTensor,
    Vector,
    format_vector,
)
from ..errors import ParseError

__all__ = [
    "parse_algebra_file",
    "parse_hom_ly_file",
    "parse_file",
    "emit_algebra_file",
    "emit_hom_ly_file",
    "emit_file",
    "parse_expression",
    "parse_scalar",
    "parse_assignment",
]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
_BASIS = re.compile(r"^e(\d+)$")
_RESERVED = re.compile(r"^(I|e\d+)$")


@dataclass
class _Tok:
    kind: str  # "num", "name", "op", "end"
    text: str
    col: int  # 0-based offset within the expression


def _tokenize(text: str, line: int | None, offset: int) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            toks.append(_Tok("num", num, start))
        elif name is not None:
            toks.append(_Tok("name", name, start))
        elif op in "+-*/^()":
            toks.append(_Tok("op", op, start))
        else:
            raise ParseError(f"unexpected character {op!r}", line, offset + start + 1)
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _ExprParser:
    """Recursive descent over ``+ - * / ^``; values are Scalars or Vectors."""

    def __init__(self, text: str, params: tuple[str, ...], dim: int | None,
                 line: int | None = None, offset: int = 0):
        self.params = params
        self.dim = dim
        self.line = line
        self.offset = offset
        self.toks = _tokenize(text, line, offset)
        self.pos = 0

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.toks[self.pos]
        return ParseError(msg, self.line, self.offset + tok.col + 1)

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def take(self) -> _Tok:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        if self.peek().kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            tok = self.take()
            rhs = self.term()
            value = self.combine(value, rhs, tok)
        return value

    def combine(self, lhs, rhs, tok):
        if isinstance(lhs, Vector) != isinstance(rhs, Vector):
            # a literal 0 may stand next to vectors
            if isinstance(lhs, Scalar) and not lhs:
                lhs = Vector.zero(rhs.dim, self.params)
            elif isinstance(rhs, Scalar) and not rhs:
                rhs = Vector.zero(lhs.dim, self.params)
            else:
                raise self.error("cannot add a scalar to a vector", tok)
        return lhs + rhs if tok.text == "+" else lhs - rhs

    def term(self):
        value = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok.text == "*":
                if isinstance(value, Vector) and isinstance(rhs, Vector):
                    raise self.error("cannot multiply two vectors", tok)
                value = value * rhs
            else:
                if isinstance(rhs, Vector) or not rhs.is_constant:
                    raise self.error("division only by a nonzero constant", tok)
                if not rhs:
                    raise self.error("division by zero", tok)
                inv = Scalar.const(rhs.constant_value().inverse(), self.params)
                value = value * inv
        return value

    def unary(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            value = self.unary()
            return -value if tok.text == "-" else value
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            tok = self.take()
            exp = self.take()
            if exp.kind != "num":
                raise self.error("exponent must be a non-negative integer", exp)
            if isinstance(base, Vector):
                raise self.error("cannot raise a vector to a power", tok)
            base = base ** int(exp.text)
        return base

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return Scalar.const(int(tok.text), self.params)
        if tok.kind == "name":
            if tok.text == "I":
                return Scalar.unit(self.params)
            m = _BASIS.match(tok.text)
            if m:
                k = int(m.group(1))
                if self.dim is None:
                    raise self.error(f"basis vector {tok.text} not allowed here", tok)
                if not 1 <= k <= self.dim:
                    raise self.error(f"basis index {k} out of range 1..{self.dim}", tok)
                return Vector.basis(self.dim, k - 1, self.params)
            if tok.text in self.params:
                return Scalar.var(tok.text, self.params)
            raise self.error(f"unknown name {tok.text!r}", tok)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            close = self.take()
            if close.kind != "op" or close.text != ")":
                raise self.error("expected ')'", close)
            return value
        if tok.kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {tok.text!r}", tok)


def parse_expression(text: str, params=(), dim: int | None = None,
                     line: int | None = None, offset: int = 0):
    """Parse an expression to a :class:`Scalar` or (if it mentions ``eK``) a :class:`Vector`."""
    return _ExprParser(text, tuple(params), dim, line, offset).parse()


def parse_scalar(text: str, params=()) -> Scalar:
    value = parse_expression(text, params, None)
    return value


def parse_assignment(text: str) -> dict[str, GaussRational]:
    """Parse ``a=2,b=3/2,l=I`` into parameter values."""
    out: dict[str, GaussRational] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        if "=" not in item:
            raise ParseError(f"expected NAME=VALUE, got {item!r}")
        name, value = (s.strip() for s in item.split("=", 1))
        if name in out:
            raise ParseError(f"parameter {name!r} assigned twice")
        s = parse_scalar(value)
        if not s.is_constant:
            raise ParseError(f"value for {name!r} must be a constant")
        out[name] = s.constant_value()
    return out


def _index(word: str, n: int, line: int, col: int) -> int:
    if not word.isdigit():
        raise ParseError(f"expected a basis index, got {word!r}", line, col)
    k = int(word)
    if not 1 <= k <= n:
        raise ParseError(f"basis index {k} out of range 1..{n}", line, col)
    return k - 1


_ARITY = {"prod": 2, "bracket": 2, "triple": 3, "map": 1}


def _parse(text: str):
    kind = name = None
    dim = None
    params: tuple[str, ...] = ()
    tables: dict[str, dict] = {"prod": {}, "bracket": {}, "triple": {}, "map": {}}
    first_map_line = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        words = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        key, kcol = words[0]
        if key in ("algebra", "hom-ly"):
            if kind is not None:
                raise ParseError("duplicate header", lineno, kcol)
            if len(words) != 2:
                raise ParseError(f"expected '{key} NAME'", lineno, kcol)
            kind, name = key, words[1][0]
            continue
        if kind is None:
            raise ParseError("file must start with 'algebra NAME' or 'hom-ly NAME'", lineno, kcol)
        if key == "dim":
            if dim is not None:
                raise ParseError("duplicate 'dim' statement", lineno, kcol)
            if len(words) != 2 or not words[1][0].isdigit() or int(words[1][0]) < 1:
                raise ParseError("expected 'dim N' with N >= 1", lineno, kcol)
            dim = int(words[1][0])
            continue
        if key == "params":
            if params:
                raise ParseError("duplicate 'params' statement", lineno, kcol)
            if any(tables[t] for t in tables):
                raise ParseError("'params' must precede product and map statements", lineno, kcol)
            seen = []
            for p, pcol in words[1:]:
                if _RESERVED.match(p):
                    raise ParseError(f"parameter name {p!r} is reserved", lineno, pcol)
                if not re.match(r"^[A-Za-z_][A-Za-z_0-9]*$", p):
                    raise ParseError(f"invalid parameter name {p!r}", lineno, pcol)
                if p in seen:
                    raise ParseError(f"duplicate parameter {p!r}", lineno, pcol)
                seen.append(p)
            params = tuple(seen)
            continue
        if key not in _ARITY:
            raise ParseError(f"unknown statement {key!r}", lineno, kcol)
        allowed = ("prod", "map") if kind == "algebra" else ("bracket", "triple", "map")
        if key not in allowed:
            raise ParseError(f"'{key}' is not allowed in a '{kind}' file", lineno, kcol)
        if dim is None:
            raise ParseError("'dim' must precede product and map statements", lineno, kcol)
        arrow = line.find("->")
        if arrow < 0:
            raise ParseError("expected '->'", lineno, len(line.rstrip()) + 1)
        head = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line[:arrow])]
        arity = _ARITY[key]
        if len(head) != arity + 1:
            raise ParseError(f"'{key}' takes {arity} basis ind{'ex' if arity == 1 else 'ices'}",
                             lineno, kcol)
        idx = tuple(_index(w, dim, lineno, c) for w, c in head[1:])
        if idx in tables[key]:
            label = " ".join(str(i + 1) for i in idx)
            raise ParseError(f"duplicate statement '{key} {label}'", lineno, kcol)
        value = parse_expression(line[arrow + 2:], params, dim, lineno, arrow + 2)
        if isinstance(value, Scalar):
            if value:
                raise ParseError("right-hand side must be a vector (a combination of e1..en)",
                                 lineno, arrow + 3)
            value = Vector.zero(dim, params)
        if key == "map" and first_map_line is None:
            first_map_line = lineno
        tables[key][idx] = value

    if kind is None:
        raise ParseError("empty file: expected 'algebra NAME' or 'hom-ly NAME'", 1, 1)
    if dim is None:
        raise ParseError("missing 'dim' statement")
    maps = tables["map"]
    if maps and len(maps) != dim:
        missing = sorted(i + 1 for i in set(range(dim)) - {k[0] for k in maps})
        raise ParseError(f"partial map block: no image given for e{', e'.join(map(str, missing))}",
                         first_map_line, 1)
    alpha = None
    if maps:
        alpha = LinearMap([maps[(j,)] for j in range(dim)])
    if kind == "algebra":
        B = BinaryTensor.from_products(dim, params, tables["prod"])
        return AlgebraSpec(name, dim, params, B, alpha)
    B = BinaryTensor.from_products(dim, params, tables["bracket"])
    T = TernaryTensor.from_products(dim, params, tables["triple"])
    return HomLYSpec(name, dim, params, B, T, alpha)


def parse_file(text: str) -> AlgebraSpec | HomLYSpec:
    """Parse either kind of file, dispatching on the header."""
    return _parse(text)


def parse_algebra_file(text: str) -> AlgebraSpec:
    spec = _parse(text)
    if not isinstance(spec, AlgebraSpec):
        raise ParseError("expected an 'algebra' file, got 'hom-ly'")
    return spec


def parse_hom_ly_file(text: str) -> HomLYSpec:
    spec = _parse(text)
    if not isinstance(spec, HomLYSpec):
        raise ParseError("expected a 'hom-ly' file, got 'algebra'")
    return spec


def _header(keyword: str, spec) -> list[str]:
    lines = [f"{keyword} {spec.name}", f"dim {spec.dim}"]
    if spec.params:
        lines.append("params " + " ".join(spec.params))
    return lines


def _map_lines(alpha: LinearMap) -> list[str]:
    if alpha.is_identity():
        return []
    return [f"map {j + 1} -> {format_vector(v)}" for j, v in enumerate(alpha.images)]


def emit_algebra_file(S: AlgebraSpec) -> str:
    lines = _header("algebra", S)
    lines += [f"prod {i + 1} {j + 1} -> {format_vector(v)}" for i, j, v in S.product.entries()]
    lines += _map_lines(S.alpha)
    return "\n".join(lines) + "\n"


def emit_hom_ly_file(H: HomLYSpec) -> str:
    lines = _header("hom-ly", H)
    lines += [f"bracket {i + 1} {j + 1} -> {format_vector(v)}"
              for i, j, v in H.bracket.entries()]
    lines += [f"triple {i + 1} {j + 1} {k + 1} -> {format_vector(v)}"
              for i, j, k, v in H.triple.entries()]
    lines += _map_lines(H.alpha)
    return "\n".join(lines) + "\n"


def emit_file(spec: AlgebraSpec | HomLYSpec) -> str:
    if isinstance(spec, HomLYSpec):
        return emit_hom_ly_file(spec)
    return emit_algebra_file(spec)
