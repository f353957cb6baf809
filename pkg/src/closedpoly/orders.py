"""Homogeneous monomial orders, leading terms, and bounded descending
enumeration of monomials.

Supported kinds: graded-lex (default, x1 ≻ x2 ≻ ...), graded-revlex, and
weighted orders given by a positive rational weight vector with graded-lex
as tie-break.  A weight functional that is injective on a finite support
behaves exactly like a generic irrational-weight order there, which is all
the decomposition machinery ever compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .poly import (
    Monomial,
    MultiPoly,
    NormalizedForm,
    PolyError,
    mono_deg,
    mono_unit,
    monomials_of_degree_at_most,
)

GRLEX = "grlex"
GREVLEX = "grevlex"
WEIGHTED = "weighted"

# monomials_below refuses to enumerate more than this many monomials.
DEFAULT_MONOMIAL_CAP = 200_000


class OrderError(ValueError):
    pass


class MonomialCapExceeded(OrderError):
    """The requested enumeration would produce too many monomials."""


@dataclass(frozen=True)
class OrderSpec:
    kind: str = GRLEX
    weights: Optional[tuple] = None

    def __post_init__(self):
        if self.kind not in (GRLEX, GREVLEX, WEIGHTED):
            raise OrderError(f"unknown order kind {self.kind!r}")
        if self.kind == WEIGHTED:
            if not self.weights:
                raise OrderError("weighted order requires a weight vector")
            ws = tuple(Fraction(w) for w in self.weights)
            if any(w <= 0 for w in ws):
                raise OrderError("weights must be positive")
            object.__setattr__(self, "weights", ws)
        elif self.weights is not None:
            raise OrderError(f"{self.kind} order takes no weights")

    @property
    def is_graded(self) -> bool:
        """True when higher total degree always wins (degree-compatible)."""
        return self.kind in (GRLEX, GREVLEX)


def sort_key(m: Monomial, order: OrderSpec):
    """A key tuple whose natural comparison realizes the order."""
    if order.kind == GRLEX:
        return (mono_deg(m), m)
    if order.kind == GREVLEX:
        return (mono_deg(m), tuple(-e for e in reversed(m)))
    weights = order.weights
    if len(weights) != len(m):
        raise OrderError("weight vector length does not match monomial")
    w = sum(wi * e for wi, e in zip(weights, m))
    return (w, mono_deg(m), m)


def compare(m1: Monomial, m2: Monomial, order: OrderSpec) -> int:
    """-1, 0 or 1 as m1 ≺, =, ≻ m2."""
    if len(m1) != len(m2):
        raise PolyError("monomial length mismatch")
    k1, k2 = sort_key(m1, order), sort_key(m2, order)
    return (k1 > k2) - (k1 < k2)


def leading_term(f: MultiPoly, order: OrderSpec) -> tuple:
    """The ≻-maximal monomial of the support and its coefficient."""
    if f.is_zero():
        raise PolyError("the zero polynomial has no leading term")
    m = max(f.terms, key=lambda mono: sort_key(mono, order))
    return m, f.terms[m]


def monomials_below(
    m1: Monomial,
    order: OrderSpec,
    nvars: int,
    cap: int = DEFAULT_MONOMIAL_CAP,
) -> list:
    """All monomials m with m1 ≻ m ≻ 1, strictly descending under the order.

    Only degree-compatible (graded) kinds are allowed: they bound the search
    space by deg(m1).
    """
    if not order.is_graded:
        raise OrderError("monomials_below requires a graded (degree-compatible) order")
    if len(m1) != nvars:
        raise PolyError("monomial length mismatch")
    bound = mono_deg(m1)
    estimate = comb(bound + nvars, nvars)
    if estimate > cap:
        raise MonomialCapExceeded(
            f"enumeration of ~{estimate} monomials exceeds the cap of {cap}"
        )
    unit = mono_unit(nvars)
    top = sort_key(m1, order)
    below = [
        m
        for m in monomials_of_degree_at_most(nvars, bound)
        if m != unit and sort_key(m, order) < top
    ]
    below.sort(key=lambda m: sort_key(m, order), reverse=True)
    return below


def normalize(f: MultiPoly, order: OrderSpec) -> NormalizedForm:
    """Split f as leading_scalar * core + constant_term with core
    leading-monic and constant-free."""
    if f.is_zero() or f.is_constant():
        raise PolyError("cannot normalize a constant polynomial")
    c = f.constant_term()
    _, a = leading_term(f, order)
    core = (f - c) * (1 / a)
    return NormalizedForm(core=core, leading_scalar=a, constant_term=c)
