"""
Three ways to write the ternary operation
=========================================

On a left Hom-Leibniz algebra, -(x.y).alpha(z), the associator difference
and -1/2 [x,y].alpha(z) coincide. On other algebras they drift apart.
"""
import itertools

from homly import builtin
from homly.constructions import (
    ternary_from_associators,
    ternary_from_bracket,
    ternary_from_product,
)
from homly.io.dsl import parse_algebra_file

S = builtin("r8-twist")
forms = [f(S) for f in (ternary_from_product, ternary_from_associators, ternary_from_bracket)]
print("agree on r8-twist:", forms[0] == forms[1] == forms[2])

for i, j, k in itertools.product(range(S.dim), repeat=3):
    v = forms[0][i][j][k]
    if v:
        print(f"{{e{i + 1},e{j + 1},e{k + 1}}} = {v}")

# a non-Leibniz algebra: the forms disagree
T = parse_algebra_file("algebra s\ndim 2\nprod 1 1 -> e1\nprod 1 2 -> e2\n")
p, q = ternary_from_product(T), ternary_from_associators(T)
for i, j, k in itertools.product(range(2), repeat=3):
    if p[i][j][k] != q[i][j][k]:
        print((i + 1, j + 1, k + 1), p[i][j][k], "vs", q[i][j][k])
