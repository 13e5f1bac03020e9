"""
Exact scalars over Q(i)[params]
===============================

Coefficients are polynomials in named parameters with Gaussian-rational
coefficients. Nothing is ever rounded.
"""
from homly.coeff import GaussRational, Scalar
from homly.io.dsl import parse_scalar

params = ("a", "b", "l")
a, l = Scalar.var("a", params), Scalar.var("l", params)

# products expand and print in graded-lex order
x = l * (a * l + 1)
print(x)                       # a*l^2+l

# the unit I squares to -1
I = Scalar.unit(params)
print(I * I)                   # -1

# printing and parsing are inverse to each other
y = parse_scalar("(1/2 + I)*b^2 - a", params)
print(y, parse_scalar(str(y), params) == y)

# substitution, full or partial
print(x.subst({"a": 2, "l": GaussRational(0, 1)}, partial=True))
print(x.subst({"a": 2}, partial=True))
