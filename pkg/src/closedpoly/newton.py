"""Newton-polytope support analysis: monomial multiplicities, the set of
potential leading terms V0, divisor sequences, and realizing weight vectors.

V0 is computed along two independent routes that must agree:

* LP route: v is in V0 iff positive weights exist that make v the strict
  argmax of the weight functional over the support.
* combinatorial route: v is in V0 iff v is a vertex of the Newton polytope
  and no other vertex dominates it coordinatewise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .linprog import feasible_point
from .orders import OrderSpec, leading_term
from .poly import Monomial, MultiPoly, PolyError, mono_deg, mono_unit


class NotPotentialLeadingTerm(Exception):
    """The requested support point is never a leading term (v not in V0)."""


@dataclass(frozen=True)
class WeightVector:
    weights: tuple  # positive Fractions, one per variable

    def functional(self, m: Monomial) -> Fraction:
        return sum(w * e for w, e in zip(self.weights, m))


@dataclass(frozen=True)
class NewtonSummary:
    support: frozenset
    v0: frozenset
    d_leading: int
    d1: int
    divisors_plain: tuple
    divisors_pruned: tuple


def multiplicity(m: Monomial) -> int:
    """d(m): the GCD of the exponents."""
    if not any(m):
        raise PolyError("multiplicity is undefined for the unit monomial")
    return gcd(*m) if len(m) > 1 else m[0]


def realizing_weights(f: MultiPoly, v: Monomial) -> Optional[WeightVector]:
    """Positive weights making v the strict weight-argmax over the support.

    Returns None when no such weights exist, i.e. v is not in V0.  Strictness
    is encoded as a >= 1 margin; any feasible solution scales.
    """
    v = tuple(v)
    support = f.support()
    if v not in support:
        raise PolyError("v is not in the support of f")
    others = [u for u in support if u != v]
    n = f.nvars
    if not others:
        return WeightVector(weights=(Fraction(1),) * n)
    # substitute w = 1 + y with y >= 0 so the LP variables are nonnegative:
    # <w, v-u> >= 1  becomes  <y, v-u> >= 1 - <1, v-u>.
    A_ge = []
    b_ge = []
    for u in others:
        diff = [Fraction(a - b) for a, b in zip(v, u)]
        A_ge.append(diff)
        b_ge.append(Fraction(1) - sum(diff))
    y = feasible_point(n, A_ge=A_ge, b_ge=b_ge)
    if y is None:
        return None
    return WeightVector(weights=tuple(Fraction(1) + yi for yi in y))


def _is_hull_vertex(p: Monomial, points: list) -> bool:
    """p is a vertex of conv(points) iff it is not a convex combination of
    the others (decided by exact LP feasibility)."""
    others = [q for q in points if q != p]
    if not others:
        return True
    dim = len(p)
    A_eq = []
    b_eq = []
    for s in range(dim):
        A_eq.append([Fraction(q[s]) for q in others])
        b_eq.append(Fraction(p[s]))
    A_eq.append([Fraction(1)] * len(others))
    b_eq.append(Fraction(1))
    return feasible_point(len(others), A_eq=A_eq, b_eq=b_eq) is None


def _dominated(v: Monomial, by: Monomial) -> bool:
    return all(b >= a for a, b in zip(v, by))


def v0_lp(f: MultiPoly) -> set:
    return {v for v in f.support() if realizing_weights(f, v) is not None}


def _dominating_combination_exists(v: Monomial, others: list) -> bool:
    """Is there a convex combination of the other support points that is
    coordinatewise >= v?  Equivalent to the shifted Newton polytope meeting
    the nonnegative orthant away from the origin."""
    if not others:
        return False
    A_eq = [[Fraction(1)] * len(others)]
    b_eq = [Fraction(1)]
    A_ge = [[Fraction(q[s]) for q in others] for s in range(len(v))]
    b_ge = [Fraction(e) for e in v]
    return feasible_point(len(others), A_eq=A_eq, b_eq=b_eq, A_ge=A_ge, b_ge=b_ge) is not None


def v0_combinatorial(f: MultiPoly) -> set:
    """Hull vertices filtered by coordinate dominance.

    Pairwise dominance between vertices is only a necessary filter: in three
    or more variables a vertex can be dominated by a point in the interior
    of a face without any single vertex dominating it.  The decisive test is
    dominance against the whole polytope.
    """
    points = sorted(f.support())
    vertices = [p for p in points if _is_hull_vertex(p, points)]
    out = set()
    for v in vertices:
        if any(u != v and _dominated(v, by=u) for u in vertices):
            continue
        if not _dominating_combination_exists(v, [q for q in points if q != v]):
            out.add(v)
    return out


def v0_set(f: MultiPoly) -> set:
    """Support points that are the leading monomial for some monomial order."""
    if f.is_zero() or f.is_constant():
        raise PolyError("V0 requires a non-constant polynomial")
    via_lp = v0_lp(f)
    via_hull = v0_combinatorial(f)
    if via_lp != via_hull:  # pragma: no cover - dual-route consistency guard
        raise RuntimeError(
            f"V0 routes disagree: LP {sorted(via_lp)} vs hull {sorted(via_hull)}"
        )
    return via_lp


def _descending_divisors(d: int) -> tuple:
    return tuple(k for k in range(d, 1, -1) if d % k == 0)


def d1_multiplicity(f: MultiPoly) -> int:
    """GCD of d(m_v) over all potential leading terms v in V0."""
    mults = [multiplicity(v) for v in v0_set(f) if any(v)]
    if not mults:
        raise PolyError("no non-unit potential leading terms")
    return gcd(*mults) if len(mults) > 1 else mults[0]


def divisor_sequence(f: MultiPoly, order: OrderSpec, pruned: bool = False) -> tuple:
    """Descending divisors (> 1) of d(leading monomial), or of d1 when pruned.

    An empty sequence means f is immediately closed.
    """
    if f.is_zero() or f.is_constant():
        raise PolyError("divisor sequence requires a non-constant polynomial")
    lm, _ = leading_term(f, order)
    d = multiplicity(lm)
    if d == 1:
        return ()
    if pruned:
        d = d1_multiplicity(f)
    return _descending_divisors(d)


def newton_summary(f: MultiPoly, order: OrderSpec) -> NewtonSummary:
    lm, _ = leading_term(f, order)
    if lm == mono_unit(f.nvars):
        raise PolyError("newton summary requires a non-constant polynomial")
    v0 = v0_set(f)
    d_leading = multiplicity(lm)
    d1 = d1_multiplicity(f)
    return NewtonSummary(
        support=frozenset(f.support()),
        v0=frozenset(v0),
        d_leading=d_leading,
        d1=d1,
        divisors_plain=_descending_divisors(d_leading),
        divisors_pruned=_descending_divisors(d1),
    )
