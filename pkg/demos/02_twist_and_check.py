"""
Yau twists and identity checks
==============================

A left Leibniz algebra with an endomorphism alpha becomes a multiplicative
left Hom-Leibniz algebra when the product is replaced by alpha(x.y).
"""
from homly import builtin
from homly.constructions import yau_twist
from homly.identities import (
    check_left_hom_leibniz,
    check_multiplicative,
    check_right_hom_leibniz,
)
from homly.io.dsl import emit_file

l4 = builtin("l4")
print(emit_file(l4))

# alpha really is an endomorphism, for every a, b, l
print(check_multiplicative(l4.product, l4.alpha))

twisted = yau_twist(l4, name="l4-twist")
print(emit_file(twisted))
print(twisted == builtin("l4-twist"))

for check in (check_multiplicative, check_left_hom_leibniz):
    print(check(twisted.product, twisted.alpha))

# the right-handed identity is a different condition, and fails
plain = l4.with_alpha(None)
report = check_right_hom_leibniz(plain.product, plain.alpha)
print(report)
for c in report.counterexamples:
    print("  ", c.tuple, c.lhs, "|", c.rhs)
