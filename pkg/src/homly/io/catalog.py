"""Builtin algebras.

``l4``, ``r7`` and ``r8`` are the 3- and 4-dimensional left Leibniz
algebras L4 (solvable, parameter ``l`` for lambda), R7 and R8 (nilpotent),
each carrying the endomorphism used to twist it.
``*-twist`` entries are the corresponding Yau twists, written out by
hand; the test suite re-derives them with :func:`homly.constructions.yau_twist`.
``heisenberg`` is the 3-dimensional Heisenberg Lie algebra with the
identity map, ``heisenberg-twist`` its twist along a unipotent endomorphism.
"""
from __future__ import annotations

from functools import lru_cache

from ..core import AlgebraSpec
from ..errors import UnknownAlgebraError
from .dsl import parse_algebra_file

__all__ = ["BUILTIN_SOURCES", "builtin", "builtin_names", "builtin_source"]

_L4_MAP = """\
map 1 -> (a*l+1)*e1
map 2 -> b*e2
map 3 -> a*e1 + e2 + e3
"""

_R7_MAP = """\
map 1 -> e1 + e2 + e3 + e4
map 2 -> e2 + e3 + e4
map 3 -> e3 + e4
map 4 -> e4
"""

_R8_MAP = """\
map 1 -> e1 + e3 + e4
map 2 -> e2 + e4
map 3 -> e3
map 4 -> e4
"""

_HEIS_MAP = """\
map 1 -> e1
map 2 -> e2 + e3
map 3 -> e3
"""

BUILTIN_SOURCES: dict[str, str] = {
    "l4": """\
algebra l4
dim 3
params a b l
prod 2 3 -> e2
prod 3 1 -> l*e1
prod 3 2 -> -e2
prod 3 3 -> e1
""" + _L4_MAP,
    "l4-twist": """\
algebra l4-twist
dim 3
params a b l
prod 2 3 -> b*e2
prod 3 1 -> l*(a*l+1)*e1
prod 3 2 -> -b*e2
prod 3 3 -> (a*l+1)*e1
""" + _L4_MAP,
    "r7": """\
algebra r7
dim 4
prod 1 1 -> e4
prod 1 2 -> e3
prod 1 3 -> e4
prod 2 1 -> -e3
prod 3 1 -> -e4
""" + _R7_MAP,
    "r7-twist": """\
algebra r7-twist
dim 4
prod 1 1 -> e4
prod 1 2 -> e3 + e4
prod 1 3 -> e4
prod 2 1 -> -e3 - e4
prod 3 1 -> -e4
""" + _R7_MAP,
    "r8": """\
algebra r8
dim 4
prod 1 1 -> e4
prod 1 2 -> e3
prod 1 3 -> e4
prod 2 1 -> -e3 + e4
prod 3 1 -> -e4
""" + _R8_MAP,
    "r8-twist": """\
algebra r8-twist
dim 4
prod 1 1 -> e4
prod 1 2 -> e3
prod 1 3 -> e4
prod 2 1 -> -e3 + e4
prod 3 1 -> -e4
""" + _R8_MAP,
    "heisenberg": """\
algebra heisenberg
dim 3
prod 1 2 -> e3
prod 2 1 -> -e3
""",
    "heisenberg-twist": """\
algebra heisenberg-twist
dim 3
prod 1 2 -> e3
prod 2 1 -> -e3
""" + _HEIS_MAP,
}

# twisted builtin -> (untwisted builtin, source of the twisting map)
TWIST_SOURCES: dict[str, tuple[str, str]] = {
    "l4-twist": ("l4", _L4_MAP),
    "r7-twist": ("r7", _R7_MAP),
    "r8-twist": ("r8", _R8_MAP),
    "heisenberg-twist": ("heisenberg", _HEIS_MAP),
}


def builtin_names() -> list[str]:
    return list(BUILTIN_SOURCES)


def builtin_source(name: str) -> str:
    try:
        return BUILTIN_SOURCES[name]
    except KeyError:
        raise UnknownAlgebraError(
            f"unknown builtin {name!r}; available: {', '.join(BUILTIN_SOURCES)}") from None


@lru_cache(maxsize=None)
def builtin(name: str) -> AlgebraSpec:
    """Return the builtin algebra ``name`` (see :func:`builtin_names`)."""
    return parse_algebra_file(builtin_source(name))


def twist_base(name: str) -> AlgebraSpec:
    """The untwisted algebra paired with the map that produces builtin ``name``."""
    if name not in TWIST_SOURCES:
        raise UnknownAlgebraError(
            f"{name!r} is not a twisted builtin; available: {', '.join(TWIST_SOURCES)}")
    base, map_src = TWIST_SOURCES[name]
    spec = builtin(base)
    if spec.alpha.is_identity():
        header = builtin_source(base)
        spec = parse_algebra_file(header + map_src)
    return spec
