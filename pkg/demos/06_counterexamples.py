"""
Counterexamples and mutations
=============================

Checks sweep basis tuples in lexicographic order and report where the two
sides differ. Perturbing a structure constant usually breaks something.
"""
from homly import builtin
from homly.constructions import natural_hom_ly
from homly.core import TernaryTensor
from homly.identities import check_hom_akivis, check_hom_ly, check_left_hom_leibniz, check_multiplicative
from homly.io.dsl import parse_algebra_file

S = parse_algebra_file("algebra w\ndim 3\nprod 1 2 -> e3\nprod 2 1 -> -e3\n"
                       "prod 1 3 -> e1\nprod 3 1 -> -e1\n")
print(check_hom_akivis(S.product, TernaryTensor.zero(3), S.alpha))

r7 = builtin("r7-twist")
for i, j, v in r7.product.entries():
    for k in range(4):
        if not v[k]:
            continue
        M = r7.with_product(r7.product.with_entry(i, j, k, v[k] + 1))
        verdicts = [check_multiplicative(M.product, M.alpha).holds,
                    check_left_hom_leibniz(M.product, M.alpha).holds,
                    check_hom_ly(natural_hom_ly(M)).overall]
        print(f"c[{i + 1}][{j + 1}][{k + 1}] += 1 ->", verdicts)

# e1.e1 = 2e4 is still a multiplicative Hom-Leibniz algebra, so it slips through
