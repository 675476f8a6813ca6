"""Real-root counting and isolation for univariate rational polynomials.

Three cooperating tools:

* Sturm counts (signed primitive remainder sequences over the integers),
  exact on any interval with non-root rational endpoints;
* the Descartes rule on the interval-normalized polynomial
  N_a^b(P)(x) = (x+1)^deg(P) P((b x + a)/(x + 1)), whose positive roots are
  in bijection with the roots of P in (a, b);
* a Descartes-driven bisection that splits an interval until every piece
  carries a sign-change count of 0 or 1 (then the count is exact), with an
  explicit depth budget for the huge inputs where full certainty may need
  refinement in a second pass.

Polynomials are reduced to their square-free part on entry (multiplicities
are reported separately by the callers that need them), so all counts below
are counts of distinct real roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _zpoly
from ._zpoly import EndpointRootError
from .exactpoly import PolyError, Rat, UniPoly

__all__ = [
    "IsolatingInterval",
    "IsolationResult",
    "EndpointRootError",
    "sturm_count",
    "count_real_roots",
    "descartes_changes",
    "normalize_to_interval",
    "isolate_roots",
    "refine_root",
    "cauchy_bound",
    "dyadic_in_middle_third",
]


@dataclass(frozen=True)
class IsolatingInterval:
    """Open interval with a certified number of distinct real roots inside."""

    lo: Rat
    hi: Rat
    count: int
    certified_by: str  # sturm | descartes_c0 | descartes_c1 | bolzano_refined

    def width(self) -> Rat:
        return self.hi - self.lo

    def midpoint(self) -> Rat:
        return (self.lo + self.hi) / 2


@dataclass
class IsolationResult:
    intervals: list[IsolatingInterval]
    status: str  # "complete" or "budget_exhausted"
    undecided: list[tuple[Rat, Rat]]


def cauchy_bound(p: UniPoly) -> Rat:
    """1 + max |a_i / a_n|; all real roots of p lie strictly inside (-B, B)."""
    _, ints = p.primitive_int()
    return _zpoly.cauchy_bound(ints)


def _sf_ints(p: UniPoly) -> list:
    if p.is_zero():
        raise PolyError("zero polynomial")
    _, ints = p.primitive_int()
    return _zpoly.squarefree_part(ints)


def sturm_count(p: UniPoly, lo: Rat, hi: Rat) -> int:
    """Exact number of distinct real roots of p in (lo, hi).

    p is replaced by its square-free part internally.  Raises
    EndpointRootError when lo or hi is a root (perturb the endpoint).
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise PolyError(f"empty interval ({lo}, {hi})")
    return _zpoly.sturm_count(_sf_ints(p), lo, hi)


def count_real_roots(p: UniPoly) -> int:
    """Number of distinct real roots over the whole line (Cauchy bound)."""
    sf = _sf_ints(p)
    if len(sf) - 1 < 1:
        return 0
    b = _zpoly.cauchy_bound(sf)
    return _zpoly.sturm_count(sf, -b, b)


def descartes_changes(coeffs: Sequence[Rat]) -> int:
    """Sign-change count of a coefficient list after dropping zeros."""
    coeffs = list(coeffs)
    if not coeffs or all(c == 0 for c in coeffs):
        raise PolyError("all-zero coefficient list")
    return _zpoly.sign_changes(
        [(c > 0) - (c < 0) for c in (Fraction(x) for x in coeffs)])


def normalize_to_interval(p: UniPoly, alpha: Rat, beta: Rat) -> UniPoly:
    """N_alpha^beta(P)(x) = (x+1)^deg(P) P((beta x + alpha)/(x+1)) exactly.

    Roots of p in (alpha, beta) correspond to positive roots of the result,
    multiplicities preserved.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not alpha < beta:
        raise PolyError(f"malformed interval ({alpha}, {beta})")
    if p.is_zero():
        raise PolyError("zero polynomial")
    cont, ints = p.primitive_int()
    s = (alpha.denominator * beta.denominator
         // __import__("math").gcd(alpha.denominator, beta.denominator))
    scaled = _zpoly.mobius_numerator(ints, alpha, beta)
    # mobius_numerator returns s^deg * N; undo the scale to match the definition
    factor = cont / Fraction(s) ** p.degree()
    return UniPoly(p.var, [Fraction(c) * factor for c in scaled])


def dyadic_in_middle_third(lo: Rat, hi: Rat) -> Rat:
    """Shortest binary fraction inside the middle third of (lo, hi).

    Keeps bisection endpoints short, which keeps the Moebius-transformed
    coefficients from blowing up.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    third = (hi - lo) / 3
    a, b = lo + third, hi - third
    k = 0
    while True:
        scale = 1 << k
        low_int = -((-a.numerator * scale) // a.denominator)  # ceil(a * 2^k)
        high_int = (b.numerator * scale) // b.denominator     # floor(b * 2^k)
        if low_int <= high_int:
            pick = low_int + (high_int - low_int) // 2
            return Fraction(pick, scale)
        k += 1


def isolate_roots(p: UniPoly, lo: Rat, hi: Rat, max_depth: int = 64) -> IsolationResult:
    """Disjoint isolating intervals covering all roots of p in (lo, hi).

    p is replaced by its square-free part.  Each returned interval carries a
    Descartes count of exactly 0 (discarded) or 1.  Exact rational roots hit
    by a bisection point are returned as width-controlled intervals around
    the root.  Deterministic left-to-right processing.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise PolyError(f"empty interval ({lo}, {hi})")
    sf = _sf_ints(p)
    if _zpoly.eval_frac_scaled(sf, lo.numerator, lo.denominator) == 0 \
            or _zpoly.eval_frac_scaled(sf, hi.numerator, hi.denominator) == 0:
        raise EndpointRootError("interval endpoint is a root")
    intervals: list[IsolatingInterval] = []
    undecided: list[tuple[Rat, Rat]] = []
    stack: list[tuple[Fraction, Fraction, int]] = [(lo, hi, 0)]
    while stack:
        a, b, depth = stack.pop()
        c = _zpoly.descartes_count_interval(sf, a, b)
        if c == 0:
            continue
        if c == 1:
            intervals.append(IsolatingInterval(a, b, 1, "descartes_c1"))
            continue
        if depth >= max_depth:
            undecided.append((a, b))
            continue
        m = dyadic_in_middle_third(a, b)
        if _zpoly.eval_frac_scaled(sf, m.numerator, m.denominator) == 0:
            eps = (b - a) / 8
            while True:
                lo_m, hi_m = m - eps, m + eps
                if lo_m > a and hi_m < b \
                        and _zpoly.eval_frac_scaled(sf, lo_m.numerator, lo_m.denominator) != 0 \
                        and _zpoly.eval_frac_scaled(sf, hi_m.numerator, hi_m.denominator) != 0 \
                        and _zpoly.descartes_count_interval(sf, lo_m, hi_m) == 1:
                    break
                eps /= 2
            intervals.append(IsolatingInterval(lo_m, hi_m, 1, "descartes_c1"))
            stack.append((hi_m, b, depth + 1))
            stack.append((a, lo_m, depth + 1))
            continue
        # push right first so the left half is processed first (determinism)
        stack.append((m, b, depth + 1))
        stack.append((a, m, depth + 1))
    intervals.sort(key=lambda iv: iv.lo)
    status = "complete" if not undecided else "budget_exhausted"
    undecided.sort()
    return IsolationResult(intervals, status, undecided)


def refine_root(p: UniPoly, iv: IsolatingInterval, width: Rat) -> IsolatingInterval:
    """Shrink a count-1 interval by sign-change bisection to the given width."""
    if iv.count != 1:
        raise PolyError("refine_root requires an interval certified to hold one root")
    width = Fraction(width)
    _, ints = p.primitive_int()
    sf = _zpoly.squarefree_part(ints)
    lo, hi = Fraction(iv.lo), Fraction(iv.hi)
    s_lo = _zpoly.sign(_zpoly.eval_frac_scaled(sf, lo.numerator, lo.denominator))
    s_hi = _zpoly.sign(_zpoly.eval_frac_scaled(sf, hi.numerator, hi.denominator))
    if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
        raise PolyError("no sign change at the interval endpoints")
    while hi - lo > width:
        m = dyadic_in_middle_third(lo, hi)
        s_m = _zpoly.sign(_zpoly.eval_frac_scaled(sf, m.numerator, m.denominator))
        if s_m == 0:
            # exact root: return a tight straddling interval
            delta = width / 4
            while True:
                a, b = m - delta, m + delta
                sa = _zpoly.sign(_zpoly.eval_frac_scaled(sf, a.numerator, a.denominator))
                sb = _zpoly.sign(_zpoly.eval_frac_scaled(sf, b.numerator, b.denominator))
                if sa != 0 and sb != 0 and sa != sb:
                    return IsolatingInterval(a, b, 1, "bolzano_refined")
                delta /= 2
        if s_m == s_lo:
            lo = m
        else:
            hi = m
    return IsolatingInterval(lo, hi, 1, "bolzano_refined")
