"""Sparse multivariate and dense univariate polynomials over exact rationals.

Coefficients are `fractions.Fraction` throughout; no floating point enters
the core.  Monomials are plain tuples of nonnegative ints (one entry per
variable), so they can key dicts directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Monomial = tuple  # exponent vector; length == nvars

# Desk-scale tool: exponents beyond 2^31 are rejected outright.
MAX_EXPONENT = 2**31 - 1

Scalar = Union[int, Fraction]


class PolyError(ValueError):
    """Domain error in polynomial construction or arithmetic."""


def mono_unit(nvars: int) -> Monomial:
    return (0,) * nvars


def mono_deg(m: Monomial) -> int:
    return sum(m)


def _check_exponent(e: int) -> int:
    if e > MAX_EXPONENT:
        raise PolyError(f"exponent {e} exceeds the supported bound {MAX_EXPONENT}")
    return e


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) != len(b):
        raise PolyError("monomial length mismatch")
    return tuple(_check_exponent(x + y) for x, y in zip(a, b))


def mono_pow(m: Monomial, k: int) -> Monomial:
    if k < 0:
        raise PolyError("negative monomial power")
    return tuple(_check_exponent(e * k) for e in m)


def _canonical_key(m: Monomial):
    # degree, then reverse-colex: a deterministic order for iteration/repr,
    # independent of the per-call monomial order.
    return (mono_deg(m), tuple(reversed(m)))


class MultiPoly:
    """Immutable sparse polynomial in ``nvars`` variables over ℚ."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Scalar] | None = None):
        if nvars < 1:
            raise PolyError("nvars must be positive")
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise PolyError(
                        f"monomial {m} has length {len(m)}, expected {nvars}"
                    )
                if any(e < 0 for e in m):
                    raise PolyError(f"negative exponent in monomial {m}")
                for e in m:
                    _check_exponent(e)
                c = Fraction(c)
                if c:
                    clean[tuple(m)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "MultiPoly":
        return cls(nvars, {mono_unit(nvars): Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        """The variable x_i (1-based)."""
        if not 1 <= i <= nvars:
            raise PolyError(f"variable index {i} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def from_term(cls, nvars: int, m: Monomial, c: Scalar = 1) -> "MultiPoly":
        return cls(nvars, {m: Fraction(c)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == mono_unit(self.nvars) for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(mono_unit(self.nvars), Fraction(0))

    def coefficient(self, m: Monomial) -> Fraction:
        if len(m) != self.nvars:
            raise PolyError("monomial length mismatch")
        return self.terms.get(tuple(m), Fraction(0))

    def support(self) -> set:
        return set(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            raise PolyError("the zero polynomial has no degree")
        return max(mono_deg(m) for m in self.terms)

    def sorted_terms(self) -> list:
        """Terms in canonical descending (degree, reverse-colex) order."""
        return sorted(self.terms.items(), key=lambda t: _canonical_key(t[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------

    def _require_same_ring(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise PolyError(
                f"variable-count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._require_same_ring(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self.nvars, {m: a * c for m, a in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._require_same_ring(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative polynomial power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise PolyError("evaluation point has wrong dimension")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            val = c
            for x, e in zip(pt, m):
                if e:
                    val *= x**e
            total += val
        return total

    def partial(self, i: int) -> "MultiPoly":
        """Formal partial derivative with respect to x_i (1-based)."""
        if not 1 <= i <= self.nvars:
            raise PolyError(f"variable index {i} out of range 1..{self.nvars}")
        terms: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            e = m[i - 1]
            if e:
                dm = list(m)
                dm[i - 1] = e - 1
                dm = tuple(dm)
                terms[dm] = terms.get(dm, Fraction(0)) + c * e
        return MultiPoly(self.nvars, terms)

    def __repr__(self):
        from .parsing import render_poly

        return f"MultiPoly({render_poly(self)!r})"


class UniPoly:
    """Dense univariate polynomial F(t) over ℚ; coeffs[i] is the t^i coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls([])

    @classmethod
    def identity(cls) -> "UniPoly":
        return cls([0, 1])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise PolyError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise PolyError("zero polynomial")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return UniPoly([a * c for a in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def deflate(self, root: Scalar) -> "UniPoly":
        """Exact synthetic division by (t - root); raises if root is not a root."""
        root = Fraction(root)
        if self.is_zero():
            raise PolyError("cannot deflate the zero polynomial")
        out: list[Fraction] = []
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        rem = out.pop()
        if rem:
            raise PolyError(f"{root} is not a root")
        out.reverse()
        return UniPoly(out)

    def __repr__(self):
        if not self.coeffs:
            return "UniPoly('0')"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return "UniPoly({!r})".format(" + ".join(parts).replace("+ -", "- "))


def compose_uni(F: UniPoly, h: MultiPoly) -> MultiPoly:
    """Exact F(h) via Horner's scheme."""
    acc = MultiPoly.zero(h.nvars)
    for c in reversed(F.coeffs):
        acc = acc * h + c
    return acc


def monomials_of_degree_at_most(nvars: int, bound: int) -> Iterator[Monomial]:
    """All exponent vectors in nvars variables with coordinate sum ≤ bound."""
    if nvars == 1:
        for d in range(bound + 1):
            yield (d,)
        return
    for first in range(bound + 1):
        for rest in monomials_of_degree_at_most(nvars - 1, bound - first):
            yield (first,) + rest


@dataclass(frozen=True)
class NormalizedForm:
    """f = leading_scalar * core + constant_term, with core leading-monic
    (w.r.t. the active order) and core(0,...,0) = 0."""

    core: MultiPoly
    leading_scalar: Fraction
    constant_term: Fraction

    def reconstruct(self) -> MultiPoly:
        return self.leading_scalar * self.core + self.constant_term
