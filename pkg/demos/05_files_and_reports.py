"""
Definition files and JSON reports
=================================

Algebras live in a small line-oriented format. Reports are deterministic
JSON, the same bytes every run.
"""
from homly.identities import check_hom_lie, check_multiplicative
from homly.io.dsl import emit_file, parse_algebra_file
from homly.io.report import emit_report

text = """\
# a Hom-Lie algebra on the Heisenberg bracket
algebra heis
dim 3
prod 1 2 -> e3
prod 2 1 -> -e3
map 1 -> e1
map 2 -> e2 + e3
map 3 -> e3
"""
S = parse_algebra_file(text)
print(emit_file(S))
print(parse_algebra_file(emit_file(S)) == S)

reports = [check_multiplicative(S.product, S.alpha), check_hom_lie(S.product, S.alpha)]
print(emit_report(reports, input="heis.alg"))

# the same thing from the shell:
#   homly builtin heisenberg-twist --out heis.alg
#   homly check heis.alg --identity hom-lie --json
