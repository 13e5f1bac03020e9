import itertools
import random
from fractions import Fraction

import pytest

from homly import builtin, builtin_names
from homly.coeff import Scalar
from homly.constructions import hom_akivis_from_algebra, natural_hom_ly, ternary_from_product
from homly.core import (
    BinaryTensor,
    HomLYSpec,
    LinearMap,
    TernaryTensor,
    Vector,
    apply_map,
    product,
    skew_symmetrize,
    ternary,
)
from homly.errors import DimensionError, PreconditionError
from homly.identities import (
    check_anticommutative,
    check_cyclic_bracket_form,
    check_hom_akivis,
    check_hom_lie,
    check_hom_ly,
    check_identity_3_1,
    check_identity_3_2,
    check_left_hom_leibniz,
    check_ly,
    check_multiplicative,
    check_right_hom_leibniz,
)
from homly.io.dsl import parse_algebra_file, parse_expression

import oracle

WITNESS = parse_algebra_file(
    "algebra witness\ndim 3\nprod 1 2 -> e3\nprod 2 1 -> -e3\nprod 1 3 -> e1\nprod 3 1 -> -e1\n")
IDEMPOTENT = parse_algebra_file("algebra idem\ndim 1\nprod 1 1 -> e1\n")
ZERO = parse_algebra_file("algebra zero\ndim 3\n")


def vec(text, spec):
    return parse_expression(text, spec.params, spec.dim)


class TestMultiplicative:
    def test_r7_stored_map(self):
        r7 = builtin("r7")
        assert check_multiplicative(r7.product, r7.alpha).holds

    def test_identity_map(self):
        for name in builtin_names():
            S = builtin(name)
            assert check_multiplicative(S.product, LinearMap.identity(S.dim, S.params)).holds

    def test_perturbed_r7_map(self):
        r7 = builtin("r7")
        images = list(r7.alpha.images)
        images[3] = vec("2*e4", r7)
        report = check_multiplicative(r7.product, LinearMap(images))
        assert not report.holds
        cx = report.first
        assert cx.tuple == (1, 1)
        assert cx.lhs == vec("2*e4", r7) and cx.rhs == vec("e4", r7)
        # brute-force oracle agrees on every failing pair
        sym_bad = oracle.multiplicative_failures(r7.product, LinearMap(images))
        full = check_multiplicative(r7.product, LinearMap(images), max_counterexamples=None)
        assert [c.tuple for c in full.counterexamples] == sym_bad


class TestLeftHomLeibniz:
    def test_twisted_r7(self):
        S = builtin("r7-twist")
        assert check_left_hom_leibniz(S.product, S.alpha).holds

    def test_zero_algebra(self):
        A = LinearMap.from_matrix([[Scalar.const(i + 2 * j) for j in range(3)] for i in range(3)])
        assert check_left_hom_leibniz(ZERO.product, A).holds

    def test_idempotent_fails(self):
        report = check_left_hom_leibniz(IDEMPOTENT.product, IDEMPOTENT.alpha)
        assert report.first.tuple == (1, 1, 1)
        assert report.first.lhs == IDEMPOTENT.e(1)
        assert report.first.rhs == IDEMPOTENT.e(1) * 2

    @pytest.mark.parametrize("name", builtin_names())
    def test_agrees_with_sympy_oracle(self, name):
        S = builtin(name)
        for A in (S.alpha, LinearMap.identity(S.dim, S.params)):
            full = check_left_hom_leibniz(S.product, A, max_counterexamples=None)
            assert [c.tuple for c in full.counterexamples] == \
                oracle.left_leibniz_failures(S.product, A)


class TestRightHomLeibniz:
    def test_zero(self):
        assert check_right_hom_leibniz(ZERO.product, ZERO.alpha).holds

    def test_l4_fails_at_333(self):
        l4 = builtin("l4").with_alpha(None)
        report = check_right_hom_leibniz(l4.product, l4.alpha, max_counterexamples=None)
        assert (3, 3, 3) in [c.tuple for c in report.counterexamples]
        cx = next(c for c in report.counterexamples if c.tuple == (3, 3, 3))
        assert cx.lhs == Vector.zero(3, l4.params)
        assert cx.rhs == vec("l*e1", l4)

    @pytest.mark.parametrize("name", ["heisenberg", "heisenberg-twist"])
    def test_anticommutative_leibniz(self, name):
        S = builtin(name)
        assert check_left_hom_leibniz(S.product, S.alpha).holds
        assert check_right_hom_leibniz(S.product, S.alpha).holds


class TestHomLie:
    def test_heisenberg(self):
        S = builtin("heisenberg")
        assert check_hom_lie(S.product, S.alpha).holds

    def test_not_anticommutative(self):
        S = parse_algebra_file("algebra s\ndim 2\nprod 1 1 -> e2\n")
        report = check_hom_lie(S.product, S.alpha)
        assert report.first.tuple == (1, 1)
        assert report.failed_parts() == ["anticommutativity"]

    def test_jacobi_witness(self):
        report = check_hom_lie(WITNESS.product, WITNESS.alpha)
        assert report.failed_parts() == ["hom-jacobi"]
        cx = next(c for c in report.counterexamples if c.tuple == (1, 2, 3))
        assert cx.lhs == -WITNESS.e(3)

    def test_first_jacobi_failure_is_lexicographic(self):
        report = check_hom_lie(WITNESS.product, WITNESS.alpha, max_counterexamples=None)
        n = 3
        expected = []
        for x, y, z in itertools.product(range(n), repeat=3):
            e = [WITNESS.e(i + 1) for i in (x, y, z)]
            B = WITNESS.product
            J = product(B, product(B, e[0], e[1]), e[2]) + product(B, product(B, e[1], e[2]), e[0]) \
                + product(B, product(B, e[2], e[0]), e[1])
            if J:
                expected.append((x + 1, y + 1, z + 1))
        assert [c.tuple for c in report.counterexamples] == expected


class TestHomAkivis:
    def test_l4_commutator_associator(self):
        l4 = builtin("l4").with_alpha(None)
        B, T = hom_akivis_from_algebra(l4)
        assert check_hom_akivis(B, T, l4.alpha).holds

    def test_zero(self):
        assert check_hom_akivis(ZERO.product, TernaryTensor.zero(3), ZERO.alpha).holds

    def test_witness_with_zero_ternary(self):
        report = check_hom_akivis(WITNESS.product, TernaryTensor.zero(3), WITNESS.alpha)
        assert not report.holds
        assert (1, 2, 3) in [c.tuple for c in report.counterexamples]

    def test_precondition(self):
        l4 = builtin("l4")
        with pytest.raises(PreconditionError) as info:
            check_hom_akivis(l4.product, TernaryTensor.zero(3, l4.params), l4.alpha)
        assert not info.value.report.holds


class TestSymmetricAnnihilation:
    def test_twisted_l4(self):
        S = builtin("l4-twist")
        assert check_identity_3_1(S.product, S.alpha).holds

    def test_anticommutative(self):
        S = WITNESS
        assert check_identity_3_1(S.product, S.alpha).holds

    def test_idempotent(self):
        report = check_identity_3_1(IDEMPOTENT.product, IDEMPOTENT.alpha)
        assert report.first.lhs == IDEMPOTENT.e(1) * 2


class TestTranslationDerivation:
    def test_twisted_r8(self):
        S = builtin("r8-twist")
        assert check_identity_3_2(S.product, S.alpha).holds

    def test_zero(self):
        assert check_identity_3_2(ZERO.product, ZERO.alpha).holds

    def test_one_dimensional_idempotent_holds(self):
        # every commutator vanishes in dimension 1, so both sides are zero
        assert check_identity_3_2(IDEMPOTENT.product, IDEMPOTENT.alpha).holds

    def test_non_leibniz_fails(self):
        S = parse_algebra_file("algebra s\ndim 2\nprod 1 1 -> e1\nprod 1 2 -> e2\n")
        assert not check_left_hom_leibniz(S.product, S.alpha).holds
        report = check_identity_3_2(S.product, S.alpha, max_counterexamples=None)
        e = [S.e(1), S.e(2)]
        B = S.product
        C = skew_symmetrize(B)
        bad = []
        for x, y, z in itertools.product(range(2), repeat=3):
            lhs = product(B, e[x], product(C, e[y], e[z]))
            rhs = product(C, product(B, e[x], e[y]), e[z]) + product(C, e[y], product(B, e[x], e[z]))
            if lhs != rhs:
                bad.append((x + 1, y + 1, z + 1))
        assert bad
        assert [c.tuple for c in report.counterexamples] == bad


class TestHomLY:
    def test_twisted_r7_structure(self):
        H = natural_hom_ly(builtin("r7-twist"))
        assert check_hom_ly(H).overall

    def test_bracket_not_skew(self):
        H = natural_hom_ly(builtin("r7-twist"))
        broken = H.bracket.with_entry(0, 0, 0, Scalar.one())
        report = check_hom_ly(HomLYSpec(H.name, 4, (), broken, H.triple, H.alpha))
        assert not report["HLY3"].holds
        assert report["HLY3"].first.tuple == (1, 1)

    def test_mutated_triple_l4(self):
        H = natural_hom_ly(builtin("l4-twist"))
        t = H.triple[2][1][2][1]
        assert str(t) == "b^2"
        mutated = HomLYSpec(H.name, 3, H.params, H.bracket,
                            H.triple.with_entry(2, 1, 2, 1, t + 1), H.alpha)
        report = check_hom_ly(mutated)
        assert not report.overall
        assert not report["HLY2"].holds or not report["HLY8"].holds
        for name in report.failing():
            assert report[name].counterexamples[0].tuple

    def test_tuple_counts(self):
        report = check_hom_ly(natural_hom_ly(builtin("r7-twist")))
        counts = {k: r.tuples_checked for k, r in report.reports.items()}
        assert counts == {"HLY1": 16, "HLY2": 64, "HLY3": 16, "HLY4": 64, "HLY5": 64,
                          "HLY6": 256, "HLY7": 256, "HLY8": 1024}


class TestLY:
    @pytest.mark.parametrize("name", ["l4", "r7", "r8"])
    def test_untwisted(self, name):
        H = natural_hom_ly(builtin(name).with_alpha(None))
        assert check_ly(H).overall

    def test_zero(self):
        H = HomLYSpec("z", 2, (), BinaryTensor.zero(2), TernaryTensor.zero(2))
        assert check_ly(H).overall

    def test_requires_identity(self):
        with pytest.raises(PreconditionError):
            check_ly(natural_hom_ly(builtin("r7-twist")))


# -- cross-cutting properties -------------------------------------------------

def classical_left_leibniz_holds(B):
    n = B.dim
    e = [Vector.basis(n, i, B.params) for i in range(n)]
    for x, y, z in itertools.product(e, repeat=3):
        if product(B, x, product(B, y, z)) != \
                product(B, product(B, x, y), z) + product(B, y, product(B, x, z)):
            return False
    return True


EXTRA = [WITNESS, IDEMPOTENT, ZERO,
         parse_algebra_file("algebra s\ndim 2\nprod 1 1 -> e1\nprod 1 2 -> e2\n")]


@pytest.mark.parametrize("S", [builtin(n) for n in builtin_names()] + EXTRA,
                         ids=lambda S: S.name)
def test_reduction_to_untwisted(S):
    ident = LinearMap.identity(S.dim, S.params)
    assert check_left_hom_leibniz(S.product, ident).holds == classical_left_leibniz_holds(S.product)
    H = natural_hom_ly(S.with_alpha(None))
    suite = check_hom_ly(H)
    ly = check_ly(H)
    assert suite["HLY1"].holds and suite["HLY2"].holds
    for k in range(3, 9):
        assert suite[f"HLY{k}"].holds == ly[f"LY{k - 2}"].holds


@pytest.mark.parametrize("name", builtin_names())
def test_consequence_chain(name):
    S = builtin(name)
    for A in (S.alpha, LinearMap.identity(S.dim, S.params)):
        if check_multiplicative(S.product, A).holds and check_left_hom_leibniz(S.product, A).holds:
            assert check_identity_3_1(S.product, A).holds
            assert check_identity_3_2(S.product, A).holds
            assert check_cyclic_bracket_form(S.product, A).holds


@pytest.mark.parametrize("name", ["heisenberg", "heisenberg-twist"])
def test_anticommutative_leibniz_is_hom_lie(name):
    S = builtin(name)
    assert check_anticommutative(S.product).holds
    assert check_left_hom_leibniz(S.product, S.alpha).holds
    assert check_hom_lie(S.product, S.alpha).holds


def _failing_reports():
    l4 = builtin("l4").with_alpha(None)
    r7 = builtin("r7")
    bad_alpha = LinearMap(list(r7.alpha.images[:3]) + [vec("2*e4", r7)])
    return [
        ("multiplicative", check_multiplicative(r7.product, bad_alpha), r7.product, bad_alpha),
        ("right", check_right_hom_leibniz(l4.product, l4.alpha), l4.product, l4.alpha),
        ("left", check_left_hom_leibniz(IDEMPOTENT.product, IDEMPOTENT.alpha),
         IDEMPOTENT.product, IDEMPOTENT.alpha),
        ("hom-lie", check_hom_lie(WITNESS.product, WITNESS.alpha), WITNESS.product, WITNESS.alpha),
    ]


def test_counterexample_fidelity():
    for kind, report, B, A in _failing_reports():
        assert report.counterexamples
        for cx in report.counterexamples:
            e = [Vector.basis(B.dim, i - 1, B.params) for i in cx.tuple]
            if kind == "multiplicative":
                lhs, rhs = apply_map(A, product(B, *e)), product(B, *(apply_map(A, v) for v in e))
            elif kind == "right":
                x, y, z = e
                lhs = product(B, product(B, x, y), apply_map(A, z))
                rhs = product(B, product(B, x, z), apply_map(A, y)) + \
                    product(B, apply_map(A, x), product(B, y, z))
            elif kind == "left":
                x, y, z = e
                lhs = product(B, apply_map(A, x), product(B, y, z))
                rhs = product(B, product(B, x, y), apply_map(A, z)) + \
                    product(B, apply_map(A, y), product(B, x, z))
            elif cx.part == "anticommutativity":
                lhs, rhs = product(B, *e), -product(B, e[1], e[0])
            else:
                x, y, z = e
                lhs = product(B, product(B, x, y), z) + product(B, product(B, y, z), x) \
                    + product(B, product(B, z, x), y)
                rhs = Vector.zero(B.dim, B.params)
            assert (lhs, rhs) == (cx.lhs, cx.rhs)
            assert any(a != b for a, b in zip(cx.lhs, cx.rhs))


def test_numeric_spot_check_of_symbolic_failure():
    l4 = builtin("l4").with_alpha(None)
    report = check_right_hom_leibniz(l4.product, l4.alpha)
    rng = random.Random(7)
    for cx in report.counterexamples:
        for _ in range(5):
            env = {p: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for p in l4.params}
            if cx.lhs.subst(env) != cx.rhs.subst(env):
                break
        else:
            pytest.fail(f"no separating assignment for {cx.tuple}")


def test_max_counterexamples_and_order():
    l4 = builtin("l4").with_alpha(None)
    everything = check_right_hom_leibniz(l4.product, l4.alpha, max_counterexamples=None)
    capped = check_right_hom_leibniz(l4.product, l4.alpha, max_counterexamples=2)
    assert len(capped.counterexamples) == 2
    assert capped.counterexamples == everything.counterexamples[:2]
    default = check_right_hom_leibniz(l4.product, l4.alpha)
    assert len(default.counterexamples) == min(10, len(everything.counterexamples))
    assert everything.tuples_checked == 27


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        check_multiplicative(builtin("r7").product, builtin("l4").with_alpha(None).alpha)


def test_hom_ly_against_sympy_on_random_vectors():
    """Secondary layer: evaluate HLY7/HLY8 on random rational vectors through sympy."""
    S = builtin("r8-twist")
    H = natural_hom_ly(S)
    c = oracle.skew(oracle.tensor2(S.product))
    t = oracle.natural_triple(S.product, S.alpha)
    m = oracle.matrix(S.alpha)
    rng = random.Random(3)

    def rv():
        return [oracle.sp.Rational(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]

    def a2(x):
        return oracle.apply(m, oracle.apply(m, x))

    for _ in range(5):
        x, y, u, v, w = (rv() for _ in range(5))
        lhs = oracle.tri(t, a2(x), a2(y), oracle.tri(t, u, v, w))
        rhs = oracle.add(oracle.tri(t, oracle.tri(t, x, y, u), a2(v), a2(w)),
                         oracle.tri(t, a2(u), oracle.tri(t, x, y, v), a2(w)),
                         oracle.tri(t, a2(u), a2(v), oracle.tri(t, x, y, w)))
        assert oracle.is_zero(oracle.add(lhs, oracle.scale(-1, rhs)))
        ax, ay = oracle.apply(m, x), oracle.apply(m, y)
        lhs7 = oracle.tri(t, ax, ay, oracle.mul(c, u, v))
        rhs7 = oracle.add(oracle.mul(c, oracle.tri(t, x, y, u), a2(v)),
                          oracle.mul(c, a2(u), oracle.tri(t, x, y, v)))
        assert oracle.is_zero(oracle.add(lhs7, oracle.scale(-1, rhs7)))
    assert check_hom_ly(H).overall
