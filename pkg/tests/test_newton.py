import random
from fractions import Fraction

import pytest

from closedpoly.linprog import feasible_point
from closedpoly.newton import (
    d1_multiplicity,
    divisor_sequence,
    multiplicity,
    newton_summary,
    realizing_weights,
    v0_combinatorial,
    v0_lp,
    v0_set,
)
from closedpoly.orders import GREVLEX, WEIGHTED, OrderSpec, leading_term
from closedpoly.poly import MultiPoly, PolyError

from conftest import P, random_poly

GL = OrderSpec()


class TestLinprog:
    def test_feasible_equalities(self):
        # x + y = 3, x - y = 1 has the nonnegative solution (2, 1)
        x = feasible_point(2, A_eq=[[1, 1], [1, -1]], b_eq=[3, 1])
        assert x == [2, 1]

    def test_infeasible(self):
        assert feasible_point(1, A_eq=[[1]], b_eq=[-2]) is None

    def test_inequalities(self):
        x = feasible_point(2, A_ge=[[1, 1]], b_ge=[5])
        assert x is not None and x[0] + x[1] >= 5

    def test_mixed(self):
        x = feasible_point(
            2, A_eq=[[1, 1]], b_eq=[1], A_ge=[[1, -1]], b_ge=[Fraction(1, 2)]
        )
        assert x is not None
        assert x[0] + x[1] == 1 and x[0] - x[1] >= Fraction(1, 2)

    def test_infeasible_inequalities(self):
        # x <= 1 and x >= 2 cannot both hold
        assert feasible_point(1, A_ge=[[-1], [1]], b_ge=[-1, 2]) is None


class TestMultiplicity:
    def test_pure_power(self):
        assert multiplicity((4, 0)) == 4

    def test_gcd(self):
        assert multiplicity((2, 4)) == 2

    def test_coprime(self):
        assert multiplicity((1, 1)) == 1

    def test_unit_rejected(self):
        with pytest.raises(PolyError):
            multiplicity((0, 0))


class TestV0:
    def test_quartic(self, ex1):
        assert v0_set(ex1) == {(4, 0), (0, 2)}

    def test_single_monomial(self):
        assert v0_set(P("x1^2*x2", 2)) == {(2, 1)}

    def test_origin_dominated(self):
        assert v0_set(P("x1 + x2 + 1")) == {(1, 0), (0, 1)}

    def test_degree_six(self, deg6):
        assert v0_set(deg6) == {(2, 4)}


class TestDivisorSequence:
    def test_plain(self, ex1):
        assert divisor_sequence(ex1, GL, pruned=False) == (4, 2)

    def test_pruned(self, ex1):
        assert divisor_sequence(ex1, GL, pruned=True) == (2,)

    def test_multiplicity_one_fast_path(self):
        assert divisor_sequence(P("x1*x2 + x1"), GL) == ()


class TestRealizingWeights:
    def test_leading_vertex(self, ex1):
        wv = realizing_weights(ex1, (4, 0))
        assert wv is not None
        top = wv.functional((4, 0))
        for u in ex1.support() - {(4, 0)}:
            assert wv.functional(u) < top

    def test_midpoint_infeasible(self, ex1):
        assert realizing_weights(ex1, (2, 1)) is None

    def test_singleton_support(self):
        wv = realizing_weights(P("x1*x2", 2), (1, 1))
        assert wv.weights == (1, 1)

    def test_not_in_support(self, ex1):
        with pytest.raises(PolyError):
            realizing_weights(ex1, (3, 3))

    def test_makes_v_leading_under_weighted_order(self, ex1):
        for v in v0_set(ex1):
            wv = realizing_weights(ex1, v)
            order = OrderSpec(kind=WEIGHTED, weights=wv.weights)
            assert leading_term(ex1, order)[0] == v


class TestNewtonSummary:
    def test_quartic(self, ex1):
        s = newton_summary(ex1, GL)
        assert s.support == frozenset({(4, 0), (2, 1), (0, 2)})
        assert s.v0 == frozenset({(4, 0), (0, 2)})
        assert s.d_leading == 4
        assert s.d1 == 2
        assert s.divisors_plain == (4, 2)
        assert s.divisors_pruned == (2,)

    def test_invariants(self):
        rng = random.Random(21)
        for _ in range(20):
            f = random_poly(rng, rng.randint(2, 3), 6, 6)
            s = newton_summary(f, GL)
            assert s.v0 <= s.support
            assert s.d_leading % s.d1 == 0
            assert set(s.divisors_pruned) <= set(s.divisors_plain)
            for seq in (s.divisors_plain, s.divisors_pruned):
                assert all(k > 1 for k in seq)
                assert list(seq) == sorted(seq, reverse=True)


def random_support_poly(rng, nvars, max_points=12, max_deg=8):
    terms = {}
    for _ in range(rng.randint(1, max_points)):
        m = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        terms[m] = Fraction(rng.randint(1, 5))
    p = MultiPoly(nvars, terms)
    if p.is_constant():
        p = p + MultiPoly.from_term(nvars, (1,) + (0,) * (nvars - 1), 1)
    return p


class TestDualCharacterization:
    def test_lp_equals_combinatorial(self):
        rng = random.Random(33)
        for _ in range(60):
            f = random_support_poly(rng, rng.randint(1, 4))
            assert v0_lp(f) == v0_combinatorial(f)

    def test_sampled_argmax_lands_in_v0(self):
        rng = random.Random(34)
        for _ in range(20):
            f = random_support_poly(rng, rng.randint(2, 4))
            v0 = v0_set(f)
            support = sorted(f.support())
            for _ in range(100):
                w = [rng.randint(1, 1000) for _ in range(f.nvars)]
                vals = [sum(wi * e for wi, e in zip(w, m)) for m in support]
                top = max(vals)
                if vals.count(top) > 1:
                    continue  # ties are skipped
                assert support[vals.index(top)] in v0

    def test_d1_divides_leading_multiplicity_for_all_orders(self):
        rng = random.Random(35)
        for _ in range(10):
            f = random_support_poly(rng, rng.randint(2, 3))
            d1 = d1_multiplicity(f)
            orders = [GL, OrderSpec(kind=GREVLEX)]
            orders += [
                OrderSpec(
                    kind=WEIGHTED,
                    weights=tuple(
                        Fraction(rng.randint(1, 50), rng.randint(1, 7))
                        for _ in range(f.nvars)
                    ),
                )
                for _ in range(20)
            ]
            for order in orders:
                lm, _ = leading_term(f, order)
                if not any(lm):
                    continue
                assert multiplicity(lm) % d1 == 0
