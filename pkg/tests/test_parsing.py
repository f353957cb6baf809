import random
from fractions import Fraction

import pytest

from closedpoly.orders import GREVLEX, OrderSpec
from closedpoly.parsing import ParseError, parse_poly, render_poly
from closedpoly.poly import MultiPoly

from conftest import P, random_poly


class TestParse:
    def test_quartic(self, ex1):
        parsed = parse_poly("x1^4 + 2*x1^2*x2 + x2^2")
        assert parsed.poly == ex1
        assert parsed.nvars == 2

    def test_rational_coefficients(self):
        p = parse_poly("3/2*x1 - x2").poly
        assert p.coefficient((1, 0)) == Fraction(3, 2)
        assert p.coefficient((0, 1)) == -1

    def test_repeated_factors_multiply(self):
        assert parse_poly("x1*x1").poly == P("x1^2")
        assert parse_poly("x1^2*x1^3").poly == P("x1^5")

    def test_like_terms_combine(self):
        assert parse_poly("x1 + x1").poly == P("2*x1")
        assert parse_poly("x1 - x1").poly.is_zero()

    def test_leading_sign(self):
        assert parse_poly("-x1 + 2").poly == P("2") - P("x1")
        assert parse_poly("+x1").poly == P("x1")

    def test_whitespace_insensitive(self):
        assert parse_poly("  x1^2+ 2 * x1 ^ 2 * x2\n+ x2 ^ 2 ").poly == P(
            "x1^2 + 2*x1^2*x2 + x2^2"
        )

    def test_constant(self):
        assert parse_poly("7/3").poly == MultiPoly.constant(1, Fraction(7, 3))

    def test_min_nvars(self):
        assert parse_poly("x1", min_nvars=3).poly.nvars == 3


class TestParseErrors:
    @pytest.mark.parametrize(
        "text",
        [
            "",
            "x0",
            "x1 +",
            "* x1",
            "x1 ^",
            "x1 ^ x2",
            "1/0",
            "x1 @ x2",
            "2 ** x1",
            "x1 x2",
            "3/",
            "^2",
        ],
    )
    def test_rejected_with_position(self, text):
        with pytest.raises(ParseError) as exc:
            parse_poly(text)
        assert exc.value.line >= 1
        assert exc.value.column >= 1

    def test_exponent_overflow(self):
        with pytest.raises(ParseError):
            parse_poly(f"x1^{2**31}")

    def test_position_points_at_offender(self):
        with pytest.raises(ParseError) as exc:
            parse_poly("x1 +\n x0")
        assert exc.value.line == 2


class TestRender:
    def test_zero(self):
        assert render_poly(MultiPoly.zero(2)) == "0"

    def test_canonical_form(self):
        assert render_poly(P("x2 + x1^2")) == "x1^2 + x2"

    def test_signs_and_fractions(self):
        assert render_poly(P("-1/2*x1 + x2 - 3")) == "-1/2*x1 + x2 - 3"

    def test_respects_order(self):
        f = P("x1^2*x2 + x1*x2^2", 2)
        assert render_poly(f, OrderSpec()) == "x1^2*x2 + x1*x2^2"
        assert render_poly(f, OrderSpec(kind=GREVLEX)) == "x1^2*x2 + x1*x2^2"

    def test_unit_coefficient_suppressed(self):
        assert render_poly(P("1*x1")) == "x1"
        assert render_poly(P("-1*x1")) == "-x1"


class TestRoundTrip:
    def test_random_round_trips(self):
        rng = random.Random(70)
        for _ in range(200):
            nvars = rng.randint(1, 4)
            f = random_poly(rng, nvars, 6, 8, allow_constant=True)
            text = render_poly(f)
            reparsed = parse_poly(text, min_nvars=f.nvars).poly
            assert reparsed == f
            # render∘parse∘render is a fixed point
            assert render_poly(reparsed) == text

    def test_mutations_never_crash(self):
        rng = random.Random(71)
        alphabet = "x123456789+-*/^ ()abc.\n"
        for _ in range(300):
            f = random_poly(rng, rng.randint(1, 3), 5, 5, allow_constant=True)
            chars = list(render_poly(f))
            for _ in range(rng.randint(1, 4)):
                op = rng.randrange(3)
                pos = rng.randrange(len(chars) + 1) if chars else 0
                if op == 0 and chars:
                    chars[min(pos, len(chars) - 1)] = rng.choice(alphabet)
                elif op == 1:
                    chars.insert(pos, rng.choice(alphabet))
                elif op == 2 and chars:
                    del chars[min(pos, len(chars) - 1)]
            text = "".join(chars)
            try:
                parse_poly(text)
            except ParseError:
                pass
