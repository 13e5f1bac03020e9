import itertools
from fractions import Fraction

import pytest

from homly import builtin, builtin_names
from homly.constructions import (
    hom_akivis_from_algebra,
    hom_ly_from_hom_leibniz,
    hom_ly_from_hom_lie,
    natural_hom_ly,
    ternary_eq_3_5,
    ternary_eq_3_6,
    ternary_eq_3_7,
    ternary_from_associators,
    ternary_from_bracket,
    ternary_from_product,
    yau_twist,
)
from homly.core import AlgebraSpec, TernaryTensor, Vector, product, ternary
from homly.errors import PreconditionError
from homly.identities import (
    check_cyclic_bracket_form,
    check_hom_akivis,
    check_hom_ly,
    check_left_hom_leibniz,
    check_ly,
    check_multiplicative,
)
from homly.io.catalog import TWIST_SOURCES, twist_base
from homly.io.dsl import parse_algebra_file, parse_expression

import oracle

HEIS = builtin("heisenberg")
HEIS_TWIST = builtin("heisenberg-twist")
ZERO = parse_algebra_file("algebra zero\ndim 3\n")


def vec(text, spec):
    return parse_expression(text, spec.params, spec.dim)


class TestYauTwist:
    def test_l4(self):
        T = yau_twist(builtin("l4"))
        assert T.product[2][0] == vec("l*(a*l+1)*e1", T)

    def test_identity_is_noop(self):
        for name in builtin_names():
            S = builtin(name).with_alpha(None)
            assert yau_twist(S) == S

    def test_r8(self):
        T = yau_twist(builtin("r8"))
        assert T.product[1][0] == vec("-e3 + e4", T)

    @pytest.mark.parametrize("name", sorted(TWIST_SOURCES))
    def test_rederives_stored_twists(self, name):
        derived = yau_twist(twist_base(name), name=name)
        assert derived == builtin(name)

    def test_refuses_non_endomorphism(self):
        r7 = builtin("r7")
        images = list(r7.alpha.images[:3]) + [vec("2*e4", r7)]
        from homly.core import LinearMap
        with pytest.raises(PreconditionError) as info:
            yau_twist(r7.with_alpha(LinearMap(images)))
        assert info.value.report.identity_name == "multiplicative"
        assert info.value.report.first.tuple == (1, 1)

    def test_twist_of_leibniz_is_hom_leibniz(self):
        for name in ("l4", "r7", "r8"):
            T = yau_twist(builtin(name))
            assert check_multiplicative(T.product, T.alpha).holds
            assert check_left_hom_leibniz(T.product, T.alpha).holds


class TestTernaryForms:
    def test_l4_twist_value(self):
        S = builtin("l4-twist")
        assert ternary_eq_3_6(S)[2][1][2] == vec("b^2*e2", S)
        assert ternary_eq_3_7(S)[2][1][2] == vec("b^2*e2", S)

    def test_r7_twist_value(self):
        S = builtin("r7-twist")
        assert ternary_eq_3_6(S)[0][1][0] == vec("e4", S)

    def test_zero_algebra(self):
        for f in (ternary_from_product, ternary_from_associators, ternary_from_bracket):
            assert f(ZERO) == TernaryTensor.zero(3)

    def test_r8_twist_associator_form(self):
        S = builtin("r8-twist")
        assert ternary_eq_3_5(S) == ternary_eq_3_6(S)

    def test_l4_twist_numeric(self):
        S = builtin("l4-twist").subst({"a": 1, "b": 2, "l": 3})
        expected = vec("4*e2", S)
        assert ternary_eq_3_5(S)[2][1][2] == expected
        assert ternary_eq_3_6(S)[2][1][2] == expected

    def test_anticommutative_product_form_equals_bracket_form(self):
        for S in (HEIS, HEIS_TWIST):
            assert ternary_eq_3_7(S) == ternary_eq_3_6(S)

    def test_r7_twist_all_forms(self):
        S = builtin("r7-twist")
        a, b = ternary_eq_3_6(S), ternary_eq_3_7(S)
        for i, j, k in itertools.product(range(4), repeat=3):
            assert a[i][j][k] == b[i][j][k]

    def test_product_form_against_sympy(self):
        for name in builtin_names():
            S = builtin(name)
            expected = oracle.natural_triple(S.product, S.alpha)
            got = ternary_from_product(S)
            for i, j, k in itertools.product(range(S.dim), repeat=3):
                assert oracle.vector_to_sympy(got[i][j][k]) == expected[i][j][k]

    def test_forms_differ_without_leibniz(self):
        S = parse_algebra_file("algebra s\ndim 2\nprod 1 1 -> e1\nprod 1 2 -> e2\n")
        assert ternary_from_product(S) != ternary_from_associators(S)


class TestHomAkivisFromAlgebra:
    def test_l4(self):
        S = builtin("l4").with_alpha(None)
        B, T = hom_akivis_from_algebra(S)
        assert check_hom_akivis(B, T, S.alpha).holds

    def test_associative_input_has_zero_ternary(self):
        # polynomial-type associative algebra e1.e1 = e2
        S = parse_algebra_file("algebra assoc\ndim 2\nprod 1 1 -> e2\n")
        _, T = hom_akivis_from_algebra(S)
        assert T == TernaryTensor.zero(2)

    def test_twisted_r7(self):
        S = builtin("r7-twist")
        B, T = hom_akivis_from_algebra(S)
        assert check_hom_akivis(B, T, S.alpha).holds

    @pytest.mark.parametrize("name", builtin_names())
    def test_arbitrary_map(self, name):
        # holds for any self-map, endomorphism or not
        S = builtin(name)
        from homly.core import LinearMap
        from homly.coeff import Scalar
        A = LinearMap.from_matrix([[Scalar.const(Fraction(i - 2 * j + 1, 3), S.params)
                                    for j in range(S.dim)] for i in range(S.dim)])
        B, T = hom_akivis_from_algebra(S.with_alpha(A))
        assert check_hom_akivis(B, T, A).holds


class TestPipeline:
    def test_l4_twist_output(self):
        H = hom_ly_from_hom_leibniz(builtin("l4-twist"))
        assert H.bracket[0][2] == vec("-l*(a*l+1)*e1", H)
        assert H.bracket[1][2] == vec("2*b*e2", H)
        assert H.triple[2][1][2] == vec("b^2*e2", H)
        assert H.triple[1][2][2] == vec("-b^2*e2", H)

    def test_r7_twist_output(self):
        H = hom_ly_from_hom_leibniz(builtin("r7-twist"))
        assert H.bracket[0][1] == vec("2*(e3 + e4)", H)
        assert H.bracket[0][2] == vec("2*e4", H)
        assert H.triple[0][1][0] == vec("e4", H)

    def test_untwisted_l4_is_kinyon_weinstein(self):
        S = builtin("l4").with_alpha(None)
        H = hom_ly_from_hom_leibniz(S)
        assert check_ly(H).overall
        e = [S.e(i) for i in range(1, 4)]
        for i, j, k in itertools.product(range(3), repeat=3):
            assert H.triple[i][j][k] == -product(S.product, product(S.product, e[i], e[j]), e[k])

    def test_refuses_non_leibniz(self):
        S = parse_algebra_file("algebra s\ndim 2\nprod 1 1 -> e1\nprod 1 2 -> e2\n")
        with pytest.raises(PreconditionError) as info:
            hom_ly_from_hom_leibniz(S)
        assert info.value.report.identity_name == "hom-leibniz-left"

    def test_refuses_non_multiplicative(self):
        r7 = builtin("r7-twist")
        from homly.core import LinearMap
        bad = r7.with_alpha(LinearMap(list(r7.alpha.images[:3]) + [vec("2*e4", r7)]))
        with pytest.raises(PreconditionError) as info:
            hom_ly_from_hom_leibniz(bad)
        assert info.value.report.identity_name == "multiplicative"

    @pytest.mark.parametrize("name", builtin_names())
    def test_theorem_totality_and_linkage(self, name):
        S = builtin(name)
        if not (check_multiplicative(S.product, S.alpha).holds
                and check_left_hom_leibniz(S.product, S.alpha).holds):
            pytest.skip("hypotheses do not hold")
        H = hom_ly_from_hom_leibniz(S)
        report = check_hom_ly(H)
        assert report.overall
        assert all(not r.counterexamples for r in report)
        assert check_cyclic_bracket_form(S.product, S.alpha).holds
        assert ternary_eq_3_5(S) == ternary_eq_3_6(S) == ternary_eq_3_7(S)

    @pytest.mark.parametrize("name", ["l4", "r7", "r8", "heisenberg"])
    def test_identity_degeneration(self, name):
        H = hom_ly_from_hom_leibniz(builtin(name).with_alpha(None))
        assert check_ly(H).overall


class TestHomLieCase:
    def test_heisenberg_triples_vanish(self):
        H = hom_ly_from_hom_lie(HEIS)
        assert H.bracket == HEIS.product
        n = 3
        e = [HEIS.e(i) for i in range(1, 4)]
        for i, j, k in itertools.product(range(n), repeat=3):
            expected = -product(HEIS.product, product(HEIS.product, e[i], e[j]), e[k])
            assert H.triple[i][j][k] == expected == Vector.zero(3)
        assert check_hom_ly(H).overall

    def test_zero(self):
        H = hom_ly_from_hom_lie(ZERO)
        assert H.bracket == ZERO.product and H.triple == TernaryTensor.zero(3)

    def test_heisenberg_twist(self):
        assert check_multiplicative(HEIS_TWIST.product, HEIS_TWIST.alpha).holds
        H = hom_ly_from_hom_lie(HEIS_TWIST)
        assert check_hom_ly(H).overall

    def test_refuses_non_anticommutative(self):
        with pytest.raises(PreconditionError):
            hom_ly_from_hom_lie(builtin("r7-twist"))

    def test_product_bracket_not_doubled(self):
        H1 = hom_ly_from_hom_lie(HEIS)
        H2 = hom_ly_from_hom_leibniz(HEIS)
        assert H2.bracket[0][1] == H1.bracket[0][1] * 2
