"""Shifted factorization families f + mu and the Stein–Lorenzini–Najib check.

Given a decomposition f = F(h), the splitting of F(t) + mu over ℚ turns
into a factorization of f + mu through shifts of h; roots outside ℚ stay
bundled in a rootless monic residual.  The exceptional set of f is the
image of the (user-supplied) exceptional set of h.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .decompose import DecompositionResult
from .poly import MultiPoly, PolyError, UniPoly, compose_uni


class DataFormatError(ValueError):
    """Malformed decomposition-data input."""


@dataclass(frozen=True)
class FamilyFactorization:
    mu: Fraction
    alpha: Fraction  # leading scalar
    shifts: tuple  # ((lambda, multiplicity), ...), lambda descending
    residual: UniPoly  # monic, no rational roots; UniPoly([1]) when fully split
    verified: bool

    def shift_count(self) -> int:
        return sum(mult for _, mult in self.shifts)


def _divisors(n: int) -> list:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def rational_roots(G: UniPoly) -> list:
    """All rational roots of G with multiplicities, sorted descending."""
    if G.is_zero():
        raise PolyError("the zero polynomial has every root")
    if G.degree() == 0:
        return []
    denominator_lcm = lcm(*(c.denominator for c in G.coeffs))
    ints = [int(c * denominator_lcm) for c in G.coeffs]
    # factor out t^m first: the root 0 with multiplicity m
    zero_mult = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        zero_mult += 1
    roots = []
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if len(ints) > 1:
        a0, an = ints[0], ints[-1]
        candidates = set()
        for p in _divisors(a0):
            for q in _divisors(an):
                if gcd(p, q) == 1:
                    candidates.add(Fraction(p, q))
                    candidates.add(Fraction(-p, q))
        reduced = UniPoly(ints)
        for cand in candidates:
            mult = 0
            while not reduced.is_zero() and reduced.degree() >= 1 and reduced.evaluate(cand) == 0:
                reduced = reduced.deflate(cand)
                mult += 1
            if mult:
                roots.append((cand, mult))
    roots.sort(key=lambda rm: rm[0], reverse=True)
    return roots


def factor_shift(result: DecompositionResult, mu) -> FamilyFactorization:
    """Split f + mu through the pair (h, F): f + mu = alpha * prod (h + lambda_i)^e_i * residual(h)."""
    mu = Fraction(mu)
    h = result.h
    f = result.reconstruct()
    G = result.F + mu
    if G.is_zero() or G.degree() == 0:
        raise PolyError("F + mu must be non-constant")
    alpha = G.leading_coefficient()
    monic = (1 / alpha) * G
    residual = monic
    shifts = []
    for root, mult in rational_roots(monic):
        for _ in range(mult):
            residual = residual.deflate(root)
        shifts.append((-root, mult))
    shifts.sort(key=lambda sm: sm[0], reverse=True)
    product = MultiPoly.constant(h.nvars, alpha)
    for lam, mult in shifts:
        product = product * (h + lam) ** mult
    product = product * compose_uni(residual, h)
    verified = product == f + mu
    return FamilyFactorization(
        mu=mu,
        alpha=alpha,
        shifts=tuple(shifts),
        residual=residual,
        verified=verified,
    )


def exceptional_image(F: UniPoly, E_h) -> set:
    """E(f) from E(h): the elementwise image lambda -> -F(-lambda)."""
    return {-F.evaluate(-Fraction(lam)) for lam in E_h}


# -- Stein–Lorenzini–Najib checker on supplied decomposition data ----------

GENERIC = None  # shift marker for the generic (non-exceptional) line

H_FORM = "h"
F_FORM = "f"


@dataclass(frozen=True)
class ShiftEntry:
    shift: Optional[Fraction]  # None marks the generic entry
    factors: tuple  # ((degree, multiplicity), ...)


@dataclass(frozen=True)
class DecompositionData:
    entries: tuple
    d: Optional[int] = None  # generic factor degree (f-form only)


@dataclass(frozen=True)
class SteinReport:
    mode: str
    lhs: int
    rhs: int
    holds: bool


def _validate_entries(entries: Sequence[ShiftEntry]):
    if not entries:
        raise DataFormatError("no decomposition entries supplied")
    for entry in entries:
        if not entry.factors:
            raise DataFormatError("entry with no factors")
        for deg, mult in entry.factors:
            if deg <= 0 or mult <= 0:
                raise DataFormatError(
                    f"degrees and multiplicities must be positive, got {deg}^{mult}"
                )


def stein_check(data: DecompositionData, mode: str) -> SteinReport:
    """Evaluate the strict inequality on the supplied decomposition data.

    h-form: sum over entries of (n - 1)  <  min over entries of sum of degrees.
    f-form: sum over entries of (n - deg(f)/d)  <  the same minimum; requires
    d, every listed degree <= d, and consistent total degrees.
    """
    if mode not in (H_FORM, F_FORM):
        raise DataFormatError(f"mode must be 'h' or 'f', got {mode!r}")
    _validate_entries(data.entries)
    totals = {sum(deg * mult for deg, mult in e.factors) for e in data.entries}
    if len(totals) > 1:
        raise DataFormatError(
            f"entries disagree on the total degree: {sorted(totals)}"
        )
    total_degree = totals.pop()
    if mode == F_FORM:
        if data.d is None:
            raise DataFormatError("f-form requires the generic factor degree d")
        if data.d <= 0:
            raise DataFormatError("d must be positive")
        for e in data.entries:
            for deg, _ in e.factors:
                if deg > data.d:
                    raise DataFormatError(
                        f"factor degree {deg} exceeds the generic degree d={data.d}"
                    )
        if total_degree % data.d:
            raise DataFormatError(
                f"total degree {total_degree} is not a multiple of d={data.d}"
            )
        base = total_degree // data.d
    else:
        base = 1
    lhs = sum(len(e.factors) - base for e in data.entries)
    rhs = min(sum(deg for deg, _ in e.factors) for e in data.entries)
    return SteinReport(mode=mode, lhs=lhs, rhs=rhs, holds=lhs < rhs)


def parse_decomposition_data(text: str, d: Optional[int] = None) -> DecompositionData:
    """Parse the line format ``shift: deg^mult, deg^mult, ...``.

    A shift of ``*`` marks the generic entry; ``^mult`` defaults to 1.
    Blank lines and ``#`` comments are skipped.
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise DataFormatError(f"line {lineno}: expected 'shift: factors'")
        shift_text, factors_text = line.split(":", 1)
        shift_text = shift_text.strip()
        if shift_text == "*":
            shift = GENERIC
        else:
            try:
                shift = Fraction(shift_text)
            except (ValueError, ZeroDivisionError):
                raise DataFormatError(
                    f"line {lineno}: bad shift value {shift_text!r}"
                ) from None
        factors = []
        for piece in factors_text.split(","):
            piece = piece.strip()
            if not piece:
                raise DataFormatError(f"line {lineno}: empty factor")
            if "^" in piece:
                deg_text, mult_text = piece.split("^", 1)
            else:
                deg_text, mult_text = piece, "1"
            try:
                deg, mult = int(deg_text), int(mult_text)
            except ValueError:
                raise DataFormatError(
                    f"line {lineno}: bad factor {piece!r}"
                ) from None
            factors.append((deg, mult))
        entries.append(ShiftEntry(shift=shift, factors=tuple(factors)))
    return DecompositionData(entries=tuple(entries), d=d)
