"""Exact sparse multivariate polynomial arithmetic over the rationals.

The scalar everywhere is ``fractions.Fraction`` (arbitrary-precision, always
reduced, positive denominator), aliased ``Rat`` below.  A multivariate
polynomial is an :class:`MPoly`: an ordered tuple of variable names plus a
dict mapping exponent tuples to nonzero coefficients.  The zero polynomial
has an empty dict.  Univariate polynomials used by the elimination and root
isolation layers are :class:`UniPoly`: dense coefficient lists from degree 0
upward with the trailing zeros trimmed.

Text format (the only one used across the package and the CLI)::

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nonneg-int)?
    base   := identifier | integer | integer '/' positive-integer | '(' expr ')'

with unary minus allowed before a term and whitespace insignificant.  The
canonical printer emits terms in graded-lexicographic order (total degree
descending, ties broken by the exponent tuple, largest first) with explicit
``*`` and ``^``, so ``parse(print(p)) == p`` for every polynomial.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Rat = Fraction

__all__ = [
    "Rat",
    "MPoly",
    "UniPoly",
    "PolyError",
    "ParseError",
    "parse_poly",
    "eval_poly",
    "squarefree_part",
    "squarefree_decomposition",
    "leading_form",
    "newton_weights",
    "is_perfect_square",
    "mpoly_gcd",
    "unipoly_gcd",
]


class PolyError(ValueError):
    """Raised on contract violations (zero input, inexact division, ...)."""


class ParseError(PolyError):
    """Syntax or variable error while parsing an expression string."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _as_rat(value) -> Rat:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {type(value).__name__}")


# ---------------------------------------------------------------------------
# MPoly
# ---------------------------------------------------------------------------

class MPoly:
    """Sparse polynomial in a fixed, ordered tuple of named variables.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    Fractions.  Instances are treated as immutable; all operations return
    new objects.  Equality is representation independent: two polynomials
    over different variable tuples are equal iff they agree after aligning
    on the union of their variables.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Rat] | None = None):
        self.vars = tuple(variables)
        clean: dict[tuple, Rat] = {}
        if terms:
            nv = len(self.vars)
            for exps, coeff in terms.items():
                coeff = _as_rat(coeff)
                if coeff == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != nv:
                    raise PolyError(f"exponent tuple {exps} has arity {len(exps)}, expected {nv}")
                if any(e < 0 or not isinstance(e, int) for e in exps):
                    raise PolyError(f"exponents must be nonnegative integers, got {exps}")
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MPoly":
        return cls(variables, {})

    @classmethod
    def const(cls, variables: Sequence[str], value) -> "MPoly":
        value = _as_rat(value)
        if value == 0:
            return cls.zero(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MPoly":
        variables = tuple(variables)
        if name not in variables:
            raise PolyError(f"unknown variable {name!r}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: Fraction(1)})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> Rat:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise PolyError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree(self, var: str) -> int:
        """Degree in one variable (0 for the zero polynomial)."""
        i = self._index(var)
        if not self.terms:
            return 0
        return max(e[i] for e in self.terms)

    def _index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise PolyError(f"unknown variable {var!r}") from None

    def uses(self, var: str) -> bool:
        return var in self.vars and self.degree(var) > 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- variable bookkeeping ------------------------------------------------

    def with_vars(self, variables: Sequence[str]) -> "MPoly":
        """Re-express this polynomial over a superset of its variables."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        pos = []
        for i, v in enumerate(self.vars):
            if v not in variables:
                if self.degree(v) > 0:
                    raise PolyError(f"cannot drop variable {v!r} still in use")
                pos.append(None)
            else:
                pos.append(variables.index(v))
        terms: dict[tuple, Rat] = {}
        for exps, coeff in self.terms.items():
            new = [0] * len(variables)
            for i, e in enumerate(exps):
                if pos[i] is not None:
                    new[pos[i]] = e
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return MPoly(variables, terms)

    @staticmethod
    def _align(a: "MPoly", b: "MPoly") -> tuple["MPoly", "MPoly"]:
        if a.vars == b.vars:
            return a, b
        merged = list(a.vars) + [v for v in b.vars if v not in a.vars]
        return a.with_vars(merged), b.with_vars(merged)

    # -- ring operations ------------------------------------------------------

    def __add__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = MPoly._align(self, other)
        terms = dict(a.terms)
        for exps, coeff in b.terms.items():
            s = terms.get(exps, Fraction(0)) + coeff
            if s == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        out = MPoly.__new__(MPoly)
        out.vars, out.terms = a.vars, terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        out = MPoly.__new__(MPoly)
        out.vars = self.vars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = _as_rat(other)
            if other == 0:
                return MPoly.zero(self.vars)
            out = MPoly.__new__(MPoly)
            out.vars = self.vars
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = MPoly._align(self, other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        terms: dict[tuple, Rat] = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = terms.get(key, Fraction(0)) + ca * cb
                if s == 0:
                    terms.pop(key, None)
                else:
                    terms[key] = s
        out = MPoly.__new__(MPoly)
        out.vars, out.terms = a.vars, terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise PolyError("negative power of a polynomial")
        result = MPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = MPoly._align(self, other)
        return a.terms == b.terms

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None  # mutable dict inside; not hashable

    # -- calculus and evaluation ----------------------------------------------

    def derivative(self, var: str) -> "MPoly":
        i = self._index(var)
        terms: dict[tuple, Rat] = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            new = exps[:i] + (e - 1,) + exps[i + 1:]
            terms[new] = terms.get(new, Fraction(0)) + coeff * e
        return MPoly(self.vars, terms)

    def eval(self, assignment: Mapping[str, Rat]) -> Rat:
        """Exact value; every variable must be assigned."""
        missing = [v for v in self.vars if v not in assignment and self.degree(v) > 0]
        if missing:
            raise PolyError(f"missing assignment for {missing}")
        vals = [(_as_rat(assignment[v]) if v in assignment else Fraction(0)) for v in self.vars]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for e, v in zip(exps, vals):
                if e:
                    term *= v ** e
            total += term
        return total

    def subs(self, assignment: Mapping[str, Rat]) -> "MPoly":
        """Substitute rational values for a subset of the variables."""
        assignment = {k: _as_rat(v) for k, v in assignment.items()}
        keep = [v for v in self.vars if v not in assignment]
        idx = [i for i, v in enumerate(self.vars) if v not in assignment]
        terms: dict[tuple, Rat] = {}
        for exps, coeff in self.terms.items():
            c = coeff
            for i, v in enumerate(self.vars):
                if v in assignment and exps[i]:
                    c *= assignment[v] ** exps[i]
            key = tuple(exps[i] for i in idx)
            s = terms.get(key, Fraction(0)) + c
            if s == 0:
                terms.pop(key, None)
            else:
                terms[key] = s
        return MPoly(keep, terms)

    def subs_poly(self, assignment: Mapping[str, "MPoly"]) -> "MPoly":
        """Substitute polynomials for variables (used by chart changes)."""
        out = None
        allvars = list(self.vars)
        for p in assignment.values():
            for v in p.vars:
                if v not in allvars:
                    allvars.append(v)
        for exps, coeff in self.terms.items():
            term = MPoly.const(allvars, coeff)
            for e, v in zip(exps, self.vars):
                if not e:
                    continue
                base = assignment.get(v)
                if base is None:
                    base = MPoly.var(allvars, v)
                term = term * base ** e
            out = term if out is None else out + term
        return out if out is not None else MPoly.zero(allvars)

    def eval_ring(self, assignment: Mapping[str, object], one) -> object:
        """Evaluate with values in any commutative ring (e.g. rational functions).

        ``one`` is the ring's multiplicative identity; coefficients multiply
        it via ``one * Fraction``.
        """
        total = None
        for exps, coeff in self.terms.items():
            term = one * coeff
            for e, v in zip(exps, self.vars):
                if e:
                    val = assignment[v]
                    for _ in range(e):
                        term = term * val
            total = term if total is None else total + term
        return total if total is not None else one * Fraction(0)

    # -- structure ------------------------------------------------------------

    def coeff_of(self, var: str, power: int) -> "MPoly":
        """Coefficient of ``var**power`` as a polynomial in the other variables."""
        i = self._index(var)
        keep = self.vars[:i] + self.vars[i + 1:]
        terms: dict[tuple, Rat] = {}
        for exps, coeff in self.terms.items():
            if exps[i] != power:
                continue
            key = exps[:i] + exps[i + 1:]
            terms[key] = coeff
        return MPoly(keep, terms)

    def dense_in(self, var: str) -> list["MPoly"]:
        """Dense coefficient list [c0, c1, ...] with respect to ``var``."""
        d = self.degree(var)
        return [self.coeff_of(var, k) for k in range(d + 1)]

    def monomials_grlex(self) -> list[tuple]:
        return sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)

    def leading_coefficient_grlex(self) -> Rat:
        if self.is_zero():
            return Fraction(0)
        return self.terms[self.monomials_grlex()[0]]

    def content_int(self) -> tuple[Rat, "MPoly"]:
        """Write self = c * P with c > 0 rational and P primitive over the integers.

        The sign convention leaves P's grlex-leading coefficient's sign equal
        to self's.  Returns (Fraction(0), zero) for the zero polynomial.
        """
        if self.is_zero():
            return Fraction(0), self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = math.gcd(num, abs(c.numerator * (den // c.denominator)))
        content = Fraction(num, den)
        out = MPoly.__new__(MPoly)
        out.vars = self.vars
        out.terms = {e: c / content for e, c in self.terms.items()}
        return content, out

    def primitive(self) -> "MPoly":
        """Integer-primitive multiple with positive grlex-leading coefficient."""
        if self.is_zero():
            return self
        _, p = self.content_int()
        if p.leading_coefficient_grlex() < 0:
            p = -p
        return p

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        """Exact polynomial division; raises PolyError when the division fails."""
        if isinstance(divisor, (int, Fraction)):
            divisor = MPoly.const(self.vars, divisor)
        if divisor.is_zero():
            raise PolyError("division by the zero polynomial")
        a, b = MPoly._align(self, divisor)
        if b.is_constant():
            c = b.constant_value()
            out = MPoly.__new__(MPoly)
            out.vars = a.vars
            out.terms = {e: cf / c for e, cf in a.terms.items()}
            return out
        lead_b = max(b.terms, key=lambda e: (sum(e), e))
        cb = b.terms[lead_b]
        rem = dict(a.terms)
        quo: dict[tuple, Rat] = {}
        while rem:
            lead_r = max(rem, key=lambda e: (sum(e), e))
            qexp = tuple(er - eb for er, eb in zip(lead_r, lead_b))
            if any(e < 0 for e in qexp):
                raise PolyError("inexact polynomial division")
            qc = rem[lead_r] / cb
            quo[qexp] = quo.get(qexp, Fraction(0)) + qc
            for eb, c in b.terms.items():
                key = tuple(x + y for x, y in zip(qexp, eb))
                s = rem.get(key, Fraction(0)) - qc * c
                if s == 0:
                    rem.pop(key, None)
                else:
                    rem[key] = s
        return MPoly(a.vars, quo)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except PolyError:
            return False

    def homogenize(self, newvar: str, within: Sequence[str] | None = None,
                   degree: int | None = None) -> "MPoly":
        """Homogenize in the designated variables (all by default) via newvar."""
        if newvar in self.vars:
            raise PolyError(f"variable {newvar!r} already present")
        idx = (range(len(self.vars)) if within is None
               else [self._index(v) for v in within])
        if degree is None:
            degree = max((sum(e[i] for i in idx) for e in self.terms), default=0)
        variables = self.vars + (newvar,)
        terms: dict[tuple, Rat] = {}
        for exps, coeff in self.terms.items():
            pad = degree - sum(exps[i] for i in idx)
            if pad < 0:
                raise PolyError("degree smaller than the designated-variable degree")
            terms[exps + (pad,)] = coeff
        return MPoly(variables, terms)

    def deflate(self, var: str, k: int) -> "MPoly":
        """Substitute var**k -> var; every exponent of var must be divisible by k."""
        i = self._index(var)
        terms: dict[tuple, Rat] = {}
        for exps, coeff in self.terms.items():
            if exps[i] % k:
                raise PolyError(f"exponent {exps[i]} of {var!r} not divisible by {k}")
            terms[exps[:i] + (exps[i] // k,) + exps[i + 1:]] = coeff
        return MPoly(self.vars, terms)

    def as_unipoly(self, var: str | None = None) -> "UniPoly":
        """Convert to UniPoly; all other variables must be absent."""
        candidates = [v for v in self.vars if self.degree(v) > 0]
        if var is None:
            if len(candidates) > 1:
                raise PolyError(f"polynomial is not univariate: uses {candidates}")
            var = candidates[0] if candidates else (self.vars[0] if self.vars else "x")
        i = self._index(var)
        for v in candidates:
            if v != var:
                raise PolyError(f"polynomial also uses {v!r}")
        coeffs = [Fraction(0)] * (self.degree(var) + 1)
        for exps, coeff in self.terms.items():
            coeffs[exps[i]] += coeff
        return UniPoly(var, coeffs)

    # -- printing ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exps in self.monomials_grlex():
            coeff = self.terms[exps]
            factors = []
            for e, v in zip(exps, self.vars):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mag = abs(coeff)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({self.vars!r}, {str(self)!r})"


# ---------------------------------------------------------------------------
# UniPoly
# ---------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial over the rationals.

    Coefficients run from degree 0 upward; trailing zeros are trimmed so the
    leading coefficient is nonzero unless the polynomial is zero (empty list).
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[Rat]):
        self.var = var
        cs = [_as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def zero(cls, var: str) -> "UniPoly":
        return cls(var, [])

    @classmethod
    def from_int_coeffs(cls, var: str, coeffs: Iterable[int]) -> "UniPoly":
        return cls(var, [Fraction(c) for c in coeffs])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self) -> Rat:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly(self.var, [other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly(self.var, [other])
        if isinstance(other, UniPoly):
            if other.var != self.var and other.degree() > 0 and self.degree() > 0:
                raise PolyError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        raise TypeError(type(other).__name__)

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [Fraction(0)] * (n - len(self.coeffs))
        b = other.coeffs + [Fraction(0)] * (n - len(other.coeffs))
        return UniPoly(self.var, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly(self.var, [c * other for c in self.coeffs])
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise PolyError("negative power")
        result = UniPoly(self.var, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        other = self._coerce(other)
        if other.is_zero():
            raise PolyError("division by zero polynomial")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dlc = other.lc()
        dd = other.degree()
        while len(rem) - 1 >= dd and rem:
            k = len(rem) - 1 - dd
            c = rem[-1] / dlc
            q[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(self.var, q), UniPoly(self.var, rem)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise PolyError("inexact univariate division")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly(self.var, [c * k for k, c in enumerate(self.coeffs)][1:])

    def eval(self, x) -> Rat:
        x = _as_rat(x)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def compose_linear(self, a: Rat, b: Rat) -> "UniPoly":
        """Return p(a*x + b)."""
        a, b = _as_rat(a), _as_rat(b)
        result = UniPoly(self.var, [])
        lin = UniPoly(self.var, [b, a])
        for c in reversed(self.coeffs):
            result = result * lin + c
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by var**k."""
        if self.is_zero():
            return self
        return UniPoly(self.var, [Fraction(0)] * k + self.coeffs)

    def strip_zero_root(self) -> tuple[int, "UniPoly"]:
        """Write p = var**k * q with q(0) != 0; returns (k, q)."""
        if self.is_zero():
            raise PolyError("zero polynomial")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k, UniPoly(self.var, self.coeffs[k:])

    def primitive_int(self) -> tuple[Rat, list[int]]:
        """Write p = c * P with c > 0 and P a primitive integer coefficient list."""
        if self.is_zero():
            return Fraction(0), []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        return Fraction(g, den), [c // g for c in ints]

    def primitive(self) -> "UniPoly":
        """Primitive integer multiple with positive leading coefficient."""
        if self.is_zero():
            return self
        _, ints = self.primitive_int()
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return UniPoly.from_int_coeffs(self.var, ints)

    def to_mpoly(self, variables: Sequence[str] | None = None) -> MPoly:
        variables = tuple(variables) if variables is not None else (self.var,)
        i = variables.index(self.var)
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                exps = [0] * len(variables)
                exps[i] = k
                terms[tuple(exps)] = c
        return MPoly(variables, terms)

    def __str__(self) -> str:
        return str(self.to_mpoly())

    def __repr__(self) -> str:
        return f"UniPoly({self.var!r}, {str(self)!r})"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_IDENT_START = set(string.ascii_letters)
_IDENT_CONT = set(string.ascii_letters + string.digits + "_")


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.pos = 0
        self.vars = tuple(variables)

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> MPoly:
        result = self.parse_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return result

    def parse_expr(self) -> MPoly:
        sign = 1
        if self.peek() == "+":
            self.pos += 1
        elif self.peek() == "-":
            sign = -1
            self.pos += 1
        result = self.parse_term() * sign
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                result = result + self.parse_term()
            elif ch == "-":
                self.pos += 1
                result = result - self.parse_term()
            else:
                return result

    def parse_term(self) -> MPoly:
        result = self.parse_factor()
        while self.peek() == "*":
            self.pos += 1
            result = result * self.parse_factor()
        return result

    def parse_factor(self) -> MPoly:
        base = self.parse_base()
        if self.peek() == "^":
            self.pos += 1
            if self.peek() == "-":
                self.error("non-integer exponent: negative exponents are not allowed")
            exp = self.parse_integer("exponent")
            return base ** exp
        return base

    def parse_integer(self, what: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error(f"expected {what}")
        return int(self.text[start:self.pos])

    def parse_base(self) -> MPoly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if ch in _IDENT_START:
            start = self.pos
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos] in _IDENT_CONT:
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in self.vars:
                self.pos = start
                self.error(f"unknown variable {name!r}")
            return MPoly.var(self.vars, name)
        if ch.isdigit():
            num = self.parse_integer("integer")
            if self.peek() == "/":
                self.pos += 1
                if not self.peek().isdigit():
                    self.error("division is only allowed by a positive integer literal")
                den = self.parse_integer("positive integer")
                if den == 0:
                    self.error("division by zero")
                return MPoly.const(self.vars, Fraction(num, den))
            return MPoly.const(self.vars, num)
        self.error("expected a variable, number or parenthesized expression")


def parse_poly(text: str, variables: Sequence[str]) -> MPoly:
    """Parse an expression string into the expanded canonical polynomial."""
    return _Parser(text, variables).parse()


def eval_poly(p: MPoly, at: Mapping[str, Rat]) -> Rat:
    """Exact evaluation of ``p`` at a full rational assignment."""
    return p.eval(at)


# ---------------------------------------------------------------------------
# gcd, square-free machinery
# ---------------------------------------------------------------------------

def unipoly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Primitive gcd with positive leading coefficient (UniPoly over Q).

    Uses the modular algorithm from the dense integer layer; the result is
    certified by exact division into both inputs.
    """
    from . import _zpoly

    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    _, fa = f.primitive_int()
    _, gb = g.primitive_int()
    h = _zpoly.gcd(fa, gb)
    return UniPoly.from_int_coeffs(f.var if f.var != "" else g.var, h)


def squarefree_part(p: UniPoly) -> UniPoly:
    """p / gcd(p, p'), primitive with positive leading coefficient."""
    if p.is_zero():
        raise PolyError("zero polynomial has no square-free part")
    if p.degree() == 0:
        return UniPoly(p.var, [1])
    g = unipoly_gcd(p, p.derivative())
    return p.exact_div(g).primitive()


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: return [(f_i, m_i)] with p = c * prod f_i**m_i.

    Each f_i is primitive, square-free, positive leading coefficient and
    nonconstant; multiplicities m_i are strictly increasing.
    """
    if p.is_zero():
        raise PolyError("zero polynomial")
    p = p.primitive()
    if p.degree() == 0:
        return []
    out: list[tuple[UniPoly, int]] = []
    g = unipoly_gcd(p, p.derivative())
    w = p.exact_div(g)
    y = p.derivative().exact_div(g)
    i = 1
    while w.degree() > 0:
        z = y - w.derivative()
        f = unipoly_gcd(w, z)
        if f.degree() > 0:
            out.append((f.primitive(), i))
        w = w.exact_div(f)
        y = z.exact_div(f)
        i += 1
    return out


def is_perfect_square(p: UniPoly | MPoly) -> tuple[bool, UniPoly | None]:
    """Decide whether p = c * r**2 with c a positive rational constant.

    Uses square-free decomposition parity (all multiplicities even), not
    factorization.  When true, the second component is the primitive r with
    positive leading coefficient.
    """
    if isinstance(p, MPoly):
        p = p.as_unipoly()
    if p.is_zero():
        raise PolyError("zero polynomial")
    if p.lc() < 0:
        return False, None
    if p.degree() == 0:
        return True, UniPoly(p.var, [1])
    if p.degree() % 2:
        return False, None
    root = UniPoly(p.var, [1])
    for f, m in squarefree_decomposition(p):
        if m % 2:
            return False, None
        root = root * f ** (m // 2)
    return True, root.primitive()


def mpoly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Multivariate gcd by primitive-PRS recursion, primitive output.

    Small-case plumbing for reducing rational functions; the heavy univariate
    gcds go through the modular integer routine.
    """
    a, b = MPoly._align(a, b)
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    used = [v for v in a.vars if a.uses(v) or b.uses(v)]
    if not used:
        return MPoly.const(a.vars, 1)
    if len(used) == 1:
        v = used[0]
        g = unipoly_gcd(a.as_unipoly(v), b.as_unipoly(v))
        return g.to_mpoly(a.vars)
    # recurse on the variable of least degree to keep the PRS short
    v = min(used, key=lambda w: max(a.degree(w), b.degree(w)))
    ca, pa = _content_wrt(a, v)
    cb, pb = _content_wrt(b, v)
    cont = mpoly_gcd(ca, cb)
    f, g = pa, pb
    if f.degree(v) < g.degree(v):
        f, g = g, f
    while not g.is_zero() and g.degree(v) > 0:
        r = _prem_mpoly(f, g, v)
        f, g = g, (_content_wrt(r, v)[1] if not r.is_zero() else r)
    if g.is_zero():
        return (cont * f).primitive()
    return cont.primitive()


def _content_wrt(p: MPoly, var: str) -> tuple[MPoly, MPoly]:
    """Content and primitive part of p with respect to one variable."""
    coeffs = [c for c in p.dense_in(var) if not c.is_zero()]
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = mpoly_gcd(cont, c)
        if cont.is_constant():
            break
    cont = cont.with_vars(p.vars)
    return cont, p.exact_div(cont)


def _prem_mpoly(f: MPoly, g: MPoly, var: str) -> MPoly:
    """Pseudo-remainder of f by g in ``var``: lc(g)^(df-dg+1) f mod g."""
    df, dg = f.degree(var), g.degree(var)
    if df < dg:
        return f
    lc_g = g.coeff_of(var, dg).with_vars(f.vars)
    x = MPoly.var(f.vars, var)
    r = f
    steps = df - dg + 1
    while not r.is_zero() and r.degree(var) >= dg:
        dr = r.degree(var)
        lead = r.coeff_of(var, dr).with_vars(f.vars)
        r = r * lc_g - g * lead * x ** (dr - dg)
        steps -= 1
    if steps > 0:
        r = r * lc_g ** steps
    return r


# ---------------------------------------------------------------------------
# Leading forms and Newton polygon weights
# ---------------------------------------------------------------------------

def leading_form(p: MPoly, variables: tuple[str, str]) -> MPoly:
    """Homogeneous part of maximal total degree in two designated variables.

    Other variables are treated as coefficients.  A polynomial constant in
    the designated pair is returned unchanged.
    """
    if p.is_zero():
        raise PolyError("zero polynomial has no leading form")
    ix, iy = p._index(variables[0]), p._index(variables[1])
    n = max(e[ix] + e[iy] for e in p.terms)
    terms = {e: c for e, c in p.terms.items() if e[ix] + e[iy] == n}
    return MPoly(p.vars, terms)


def newton_weights(p: MPoly, variables: tuple[str, str]) -> list[tuple[int, int, int, MPoly]]:
    """Lower-hull Newton polygon data of ``p`` at the origin.

    For each edge of the lower-left hull of the exponent set in the two
    designated variables, returns coprime weights (w1, w2), the weighted
    order m, and the quasi-homogeneous lowest form G0 (the sum of terms with
    w1*e1 + w2*e2 == m).  G0 satisfies G0(t^w1 X, t^w2 Y) = t^m G0(X, Y).

    Requires p(0,0) = 0 in the designated variables (no constant term).
    """
    if p.is_zero():
        raise PolyError("zero polynomial")
    ix, iy = p._index(variables[0]), p._index(variables[1])
    points = sorted({(e[ix], e[iy]) for e in p.terms})
    if (0, 0) in points:
        raise PolyError("origin is not on the curve (constant term present)")

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    hull: list[tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2 and cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    out = []
    for (a1, b1), (a2, b2) in zip(hull, hull[1:]):
        if b2 >= b1:
            break  # only the descending edges face the origin
        da, db = a2 - a1, b1 - b2
        g = math.gcd(da, db)
        w1, w2 = db // g, da // g
        m = w1 * a1 + w2 * b1
        terms = {e: c for e, c in p.terms.items() if w1 * e[ix] + w2 * e[iy] == m}
        out.append((w1, w2, m, MPoly(p.vars, terms)))
    return out
