import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dilcalc.errors import OutOfNotation, UnsupportedLimit
from dilcalc.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    AffineStep,
    ConstantIncrement,
    LimitPattern,
    Ord,
    TermEscalation,
    Unsupported,
    detect_limit_pattern,
    from_int,
    fund_seq,
    ord_add,
    ord_cmp,
    ord_is_principal,
    ord_left_sub,
    ord_mul_nat,
    ord_mul_omega,
    ord_omega_pow,
    ord_str,
    ord_sup_of_sequence,
    ord_sup_solve,
    parse_ord,
)

w = OMEGA


def o(s):
    return parse_ord(s)


def _mk_cnf(pairs):
    import functools

    pairs = sorted(pairs, key=functools.cmp_to_key(lambda a, b: ord_cmp(a[0], b[0])), reverse=True)
    terms = []
    for exp, coeff in pairs:
        if terms and terms[-1][0] == exp:
            terms[-1] = (exp, terms[-1][1] + coeff)
        else:
            terms.append((exp, coeff))
    return Ord(tuple(terms))


def ords(depth=2):
    if depth == 0:
        return st.integers(0, 6).map(from_int)
    sub = ords(depth - 1)
    return st.lists(st.tuples(sub, st.integers(1, 3)), max_size=3).map(_mk_cnf)


class TestComparison:
    def test_reflexive(self):
        assert ord_cmp(w, w) == 0

    def test_forced_examples(self):
        assert ord_cmp(o("w+1"), o("w*2")) == -1
        assert ord_cmp(o("w^w"), o("w^3*5+w")) == 1

    @settings(max_examples=150)
    @given(ords(), ords(), ords())
    def test_total_order(self, a, b, c):
        assert ord_cmp(a, b) == -ord_cmp(b, a)
        if a < b and b < c:
            assert a < c
        if ord_cmp(a, b) == 0:
            assert a == b


class TestArithmetic:
    def test_absorption(self):
        assert ord_add(ONE, w) == w

    def test_successor(self):
        assert ord_str(ord_add(w, ONE)) == "w+1"

    def test_cnf_merge(self):
        assert ord_str(ord_add(o("w^2+w"), o("w^2"))) == "w^2*2"

    @settings(max_examples=120)
    @given(ords(), ords(), ords())
    def test_associative(self, a, b, c):
        assert ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c))

    @given(ords())
    def test_zero_identity(self, a):
        assert ord_add(a, ZERO) == a
        assert ord_add(ZERO, a) == a

    @settings(max_examples=120)
    @given(ords(), ords())
    def test_left_absorption(self, a, p):
        p = ord_omega_pow(ord_add(p, ONE))  # a principal limit
        if a < p:
            assert ord_add(a, p) == p

    @settings(max_examples=120)
    @given(ords(), ords())
    def test_left_sub_inverse(self, a, b):
        if a <= b:
            assert ord_add(a, ord_left_sub(a, b)) == b

    def test_mul_nat(self):
        assert ord_mul_nat(o("w+1"), 3) == o("w*3+1")

    def test_mul_omega(self):
        assert ord_mul_omega(from_int(3)) == w
        assert ord_mul_omega(o("w*2+5")) == o("w^2")


class TestOmegaPower:
    def test_zero(self):
        assert ord_omega_pow(ZERO) == ONE

    def test_one(self):
        assert ord_omega_pow(ONE) == w

    def test_compound(self):
        assert ord_str(ord_omega_pow(o("w+1"))) == "w^(w+1)"


class TestPrincipal:
    def test_examples(self):
        assert ord_is_principal(o("w^w"))
        assert not ord_is_principal(o("w*2"))
        assert ord_is_principal(ONE)


class TestFundSeq:
    def test_omega(self):
        assert [fund_seq(w, k) for k in (0, 1, 3)] == [ZERO, ONE, from_int(3)]

    def test_nested(self):
        assert ord_str(fund_seq(o("w^w"), 2)) == "w^2"
        assert ord_str(fund_seq(o("w*2"), 3)) == "w+3"

    @settings(max_examples=80)
    @given(ords(), st.integers(0, 5))
    def test_below_and_cofinal(self, a, k):
        a = ord_add(a, ord_omega_pow(ord_add(a, ONE)))  # force a limit
        v = fund_seq(a, k)
        assert v < a
        assert fund_seq(a, k + 1) >= v


class TestSupSolve:
    def test_constant_increment_one(self):
        assert ord_sup_solve(LimitPattern(ConstantIncrement(ONE), w)) == o("w*2")

    def test_constant_increment_omega_oracle(self):
        # oracle: iterate the step 50 times, confirm strict bounding and
        # that the canonical approximants of the solution are overtaken
        pattern = LimitPattern(ConstantIncrement(w), w)
        solution = ord_sup_solve(pattern)
        assert solution == o("w^2")
        iterates, current = [], w
        for _ in range(50):
            iterates.append(current)
            current = ord_add(current, w)
        assert all(it < solution for it in iterates)
        for j in range(1, 20):
            below = fund_seq(solution, j)
            assert any(it > below for it in iterates)

    def test_outside_family(self):
        values = [w]
        for _ in range(5):
            values.append(ord_omega_pow(values[-1]))
        with pytest.raises(OutOfNotation):
            ord_sup_of_sequence(values)

    def test_unsupported_kind(self):
        with pytest.raises(UnsupportedLimit):
            ord_sup_solve(LimitPattern(Unsupported("declared outside fragment"), w))

    def test_affine(self):
        coeffs = [1, 5, 17, 53, 161]
        values = [ord_mul_nat(w, c) for c in coeffs]
        pattern = detect_limit_pattern(values)
        assert isinstance(pattern.kind, AffineStep)
        assert ord_sup_solve(pattern) == o("w^2")

    def test_escalation(self):
        values = [ord_add(o("w^w"), ord_omega_pow(from_int(k))) for k in range(1, 7)]
        pattern = detect_limit_pattern(values)
        assert isinstance(pattern.kind, TermEscalation)
        assert ord_sup_of_sequence(values) == o("w^w*2")

    def test_iterates_strictly_bounded(self):
        # the solved supremum strictly bounds 100 iterates and is least in
        # the finite-witness sense: every canonical approximant is overtaken
        values, current = [], o("w")
        for _ in range(100):
            values.append(current)
            current = ord_add(current, o("w*2"))
        sup = ord_sup_of_sequence(values[:8])
        assert all(v < sup for v in values)
        for j in range(1, 30):
            below = fund_seq(sup, j)
            assert any(v > below for v in values)


class TestGrammar:
    @pytest.mark.parametrize(
        "text",
        ["0", "7", "w", "w*4", "w+1", "w^2+1", "w^w*3", "w^(w+1)", "w^(w^2+w)+w*2+5", "w^w^w"],
    )
    def test_round_trip(self, text):
        assert ord_str(parse_ord(text)) == text

    def test_parse_normalizes(self):
        assert ord_str(parse_ord("1+w")) == "w"
        assert ord_str(parse_ord("w^0")) == "1"

    def test_parse_error_position(self):
        from dilcalc.errors import ParseError

        with pytest.raises(ParseError) as err:
            parse_ord("w^")
        assert err.value.position is not None

    @settings(max_examples=100)
    @given(ords())
    def test_print_parse_identity(self, a):
        assert parse_ord(ord_str(a)) == a
