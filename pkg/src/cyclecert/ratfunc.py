"""Exact rational functions: quotients of sparse multivariate polynomials.

Stored reduced (numerator and denominator share no polynomial factor) with
the denominator integer-primitive and positive leading grlex coefficient,
so equality is plain field equality and printing is canonical.  Used for
Dulac functions, transversality functions N_psi, and as the coefficient
field Q(b) of the separatrix jets.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .exactpoly import MPoly, PolyError, Rat, mpoly_gcd

__all__ = ["RationalFunction"]


class RationalFunction:
    """num / den with MPoly entries; immutable, always in reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None, *, _reduced: bool = False):
        if den is None:
            den = MPoly.const(num.vars, 1)
        if isinstance(num, (int, Fraction)):
            num = MPoly.const(den.vars, num)
        if isinstance(den, (int, Fraction)):
            den = MPoly.const(num.vars, den)
        if den.is_zero():
            raise PolyError("rational function with zero denominator")
        num, den = MPoly._align(num, den)
        if not _reduced and not num.is_zero():
            g = mpoly_gcd(num, den)
            if not g.is_constant():
                num = num.exact_div(g)
                den = den.exact_div(g)
        # normalize: den integer-primitive with positive leading coefficient
        cden, pden = den.content_int()
        if not num.is_zero():
            num = num * (1 / cden)
        den = pden
        if den.leading_coefficient_grlex() < 0:
            den = -den
            num = -num
        if num.is_zero():
            den = MPoly.const(num.vars, 1)
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------------

    @classmethod
    def const(cls, variables: Sequence[str], value) -> "RationalFunction":
        return cls(MPoly.const(variables, value), _reduced=True)

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "RationalFunction":
        return cls(MPoly.var(variables, name), _reduced=True)

    @classmethod
    def from_poly(cls, p: MPoly) -> "RationalFunction":
        return cls(p, _reduced=True)

    @property
    def vars(self) -> tuple[str, ...]:
        return self.num.vars

    def one(self) -> "RationalFunction":
        return RationalFunction.const(self.vars, 1)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> MPoly:
        if not self.is_polynomial():
            raise PolyError("rational function has a nonconstant denominator")
        return self.num.exact_div(self.den)

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MPoly):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.const(self.vars, other)
        raise TypeError(type(other).__name__)

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        out = RationalFunction.__new__(RationalFunction)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, Fraction) or isinstance(other, int):
            if other == 0:
                return RationalFunction.const(self.vars, 0)
            out = RationalFunction.__new__(RationalFunction)
            out.num, out.den = self.num * other, self.den
            return out
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        out = RationalFunction.__new__(RationalFunction)
        out.num, out.den = self.num ** n, self.den ** n
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, MPoly)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    # -- calculus / evaluation -----------------------------------------------------

    def derivative(self, var: str) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative(var) * self.den - self.num * self.den.derivative(var),
            self.den * self.den)

    def eval(self, assignment: Mapping[str, Rat]) -> Rat:
        d = self.den.eval(assignment)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.eval(assignment) / d

    def subs(self, assignment: Mapping[str, Rat]) -> "RationalFunction":
        den = self.den.subs(assignment)
        if den.is_zero():
            raise ZeroDivisionError("denominator vanishes identically after substitution")
        return RationalFunction(self.num.subs(assignment), den)

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.as_poly())
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


def compose_mpoly(p: MPoly, assignment: Mapping[str, RationalFunction]) -> RationalFunction:
    """Evaluate a polynomial with rational functions substituted for variables."""
    variables = None
    for rf in assignment.values():
        variables = rf.vars
        break
    if variables is None:
        raise PolyError("empty assignment")
    full = dict(assignment)
    for v in p.vars:
        if v not in full:
            if v not in variables:
                raise PolyError(f"variable {v!r} missing from the target function field")
            full[v] = RationalFunction.var(variables, v)
    one = RationalFunction.const(variables, 1)
    return p.eval_ring(full, one)
