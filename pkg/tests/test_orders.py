import random
from fractions import Fraction

import pytest

from closedpoly.orders import (
    GREVLEX,
    GRLEX,
    WEIGHTED,
    MonomialCapExceeded,
    OrderError,
    OrderSpec,
    compare,
    leading_term,
    monomials_below,
    sort_key,
)
from closedpoly.poly import MultiPoly, PolyError, mono_mul, monomials_of_degree_at_most

from conftest import P, random_poly

GL = OrderSpec()
GR = OrderSpec(kind=GREVLEX)


class TestCompare:
    def test_same_degree_lex(self):
        assert compare((2, 0), (1, 1), GL) == 1

    def test_degree_dominates(self):
        assert compare((0, 3), (2, 0), GL) == 1

    def test_weighted_with_tiebreak(self):
        w = OrderSpec(kind=WEIGHTED, weights=(1, 2))
        # weight 1*1 + 2*2 = 5 beats 2*1 + 1*2 = 4
        assert compare((1, 2), (2, 1), w) == 1

    def test_equal(self):
        assert compare((1, 2), (1, 2), GL) == 0

    def test_weighted_requires_weights(self):
        with pytest.raises(OrderError):
            OrderSpec(kind=WEIGHTED)

    def test_grevlex_same_degree(self):
        # x1 x2 vs x1^2: grevlex prefers the power of the earlier variable
        assert compare((2, 0), (1, 1), GR) == 1
        assert compare((1, 1, 0), (1, 0, 1), GR) == 1


class TestLeadingTerm:
    def test_quartic(self, ex1):
        assert leading_term(ex1, GL) == ((4, 0), 1)

    def test_single_term(self):
        assert leading_term(P("5*x2", 2), GL) == ((0, 1), 5)

    def test_degree_six(self, deg6):
        assert leading_term(deg6, GL) == ((2, 4), 1)

    def test_zero_rejected(self):
        with pytest.raises(PolyError):
            leading_term(MultiPoly.zero(2), GL)


class TestMonomialsBelow:
    def test_quadratic_ansatz(self):
        # the candidate support below x1^2 in two variables
        assert monomials_below((2, 0), GL, 2) == [(1, 1), (0, 2), (1, 0), (0, 1)]

    def test_univariate_empty(self):
        assert monomials_below((1,), GL, 1) == []

    def test_linear_two_vars(self):
        assert monomials_below((1, 0), GL, 2) == [(0, 1)]

    def test_cap(self):
        with pytest.raises(MonomialCapExceeded):
            monomials_below((50, 0, 0, 0), GL, 4, cap=1000)

    def test_weighted_rejected(self):
        w = OrderSpec(kind=WEIGHTED, weights=(1, 2))
        with pytest.raises(OrderError):
            monomials_below((2, 0), w, 2)

    @pytest.mark.parametrize("order", [GL, GR])
    def test_against_brute_force(self, order):
        rng = random.Random(3)
        for _ in range(20):
            nvars = rng.randint(1, 3)
            m1 = tuple(rng.randint(0, 3) for _ in range(nvars))
            if not any(m1):
                m1 = (1,) * nvars
            got = monomials_below(m1, order, nvars)
            expected = {
                m
                for m in monomials_of_degree_at_most(nvars, sum(m1))
                if any(m) and sort_key(m, order) < sort_key(m1, order)
            }
            assert set(got) == expected
            for a, b in zip(got, got[1:]):
                assert compare(a, b, order) == 1


def random_orders(rng, nvars):
    yield GL
    yield GR
    for _ in range(3):
        yield OrderSpec(
            kind=WEIGHTED,
            weights=tuple(
                Fraction(rng.randint(1, 9), rng.randint(1, 5)) for _ in range(nvars)
            ),
        )


class TestOrderLaws:
    def test_total_order_properties(self):
        rng = random.Random(5)
        for _ in range(50):
            nvars = rng.randint(1, 4)
            for order in random_orders(rng, nvars):
                ms = [
                    tuple(rng.randint(0, 4) for _ in range(nvars)) for _ in range(3)
                ]
                a, b, c = ms
                # antisymmetry
                assert compare(a, b, order) == -compare(b, a, order)
                # transitivity
                if compare(a, b, order) >= 0 and compare(b, c, order) >= 0:
                    assert compare(a, c, order) >= 0
                # multiplicativity
                m = tuple(rng.randint(0, 3) for _ in range(nvars))
                assert compare(mono_mul(m, a), mono_mul(m, b), order) == compare(
                    a, b, order
                )

    def test_units_are_minimal(self):
        rng = random.Random(6)
        for _ in range(20):
            nvars = rng.randint(1, 4)
            for order in random_orders(rng, nvars):
                m = tuple(rng.randint(0, 4) for _ in range(nvars))
                if any(m):
                    assert compare(m, (0,) * nvars, order) == 1

    @pytest.mark.parametrize("order", [GL, GR])
    def test_leading_term_multiplicative(self, order):
        rng = random.Random(8)
        for _ in range(30):
            nvars = rng.randint(1, 3)
            p = random_poly(rng, nvars, 4, 6)
            q = random_poly(rng, nvars, 4, 6)
            mp, _ = leading_term(p, order)
            mq, _ = leading_term(q, order)
            mpq, _ = leading_term(p * q, order)
            assert mpq == mono_mul(mp, mq)
