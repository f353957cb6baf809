import random
from fractions import Fraction

import pytest

from closedpoly.orders import OrderSpec, normalize
from closedpoly.parsing import parse_poly
from closedpoly.poly import MultiPoly, UniPoly, compose_uni


def P(text, min_nvars=1):
    """Shorthand: parse a polynomial expression."""
    return parse_poly(text, min_nvars=min_nvars).poly


@pytest.fixture
def ex1():
    """x1^4 + 2 x1^2 x2 + x2^2 = (x1^2 + x2)^2."""
    return P("x1^4 + 2*x1^2*x2 + x2^2")


@pytest.fixture
def deg6():
    """The degree-6 polynomial with h = x1 x2 (x2 - 1) + x2 and F = t^2 + 1."""
    return P(
        "x1^2*x2^4 - 2*x1^2*x2^3 + x1^2*x2^2 + 2*x1*x2^3 - 2*x1*x2^2 + x2^2 + 1"
    )


def random_poly(rng, nvars, max_deg, max_terms, allow_constant=False):
    """A random sparse polynomial with small rational coefficients."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        for _ in range(20):
            m = tuple(rng.randint(0, max_deg) for _ in range(nvars))
            if sum(m) <= max_deg:
                break
        else:
            m = (0,) * nvars
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if c:
            terms[m] = terms.get(m, Fraction(0)) + c
    p = MultiPoly(nvars, terms)
    if not allow_constant and (p.is_zero() or p.is_constant()):
        v = [0] * nvars
        v[rng.randrange(nvars)] = 1
        p = p + MultiPoly.from_term(nvars, tuple(v), 1)
    return p


def random_closed_normalized(rng, nvars, max_deg, max_terms, order=OrderSpec()):
    """Rejection-sample a closed, leading-monic, constant-free polynomial."""
    from closedpoly.decompose import is_closed

    while True:
        p = random_poly(rng, nvars, max_deg, max_terms)
        core = normalize(p, order).core
        if core.is_constant():
            continue
        if is_closed(core, order):
            return core


def random_outer(rng, max_deg):
    """A random monic univariate F with F(0) = 0 and 1 <= deg <= max_deg."""
    deg = rng.randint(1, max_deg)
    coeffs = [Fraction(0)]
    coeffs += [
        Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(deg - 1)
    ]
    coeffs.append(Fraction(1))
    return UniPoly(coeffs)
