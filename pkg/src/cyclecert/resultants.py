"""Resultants, discriminants and the double discriminant.

The discriminant convention follows the classical normalization

    disc_x(P) = (-1)**(n(n-1)/2) * Res(P, P') / lc(P),   n = deg P,

with Res the Sylvester-determinant resultant (rows of coefficients of the
first polynomial on top).  Two computation routes sit behind one interface:

* a subresultant-style PRS with an explicit unit accumulator, run directly
  on sparse multivariate coefficients (the generic small case, and the
  inner eliminations);
* an evaluation/interpolation scheme for the heavy outer eliminations where
  exactly one variable remains: the inputs are specialized at integer nodes,
  integer resultants are computed per node, and the exact polynomial is
  recovered by integer Lagrange interpolation (with automatic x**k -> x
  deflation when the inputs are even in the parameter).

The two routes agree; the Sylvester determinant (fraction-free Bareiss) is
kept as a small-case oracle for the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _zpoly
from .exactpoly import MPoly, PolyError, Rat, UniPoly, _prem_mpoly, unipoly_gcd

__all__ = [
    "SylvesterMatrix",
    "sylvester_matrix",
    "resultant",
    "discriminant",
    "double_discriminant_ordered",
    "double_discriminant",
]

# above this predicted output degree, one-parameter resultants go through
# evaluation/interpolation instead of the direct PRS
_INTERP_THRESHOLD = 48


# ---------------------------------------------------------------------------
# Sylvester matrix oracle
# ---------------------------------------------------------------------------

@dataclass
class SylvesterMatrix:
    """Classical Sylvester matrix of two polynomials in one variable."""

    dimension: int
    entries: list  # rows of MPoly values

    def det(self) -> MPoly:
        """Fraction-free Bareiss determinant (exact divisions only)."""
        n = self.dimension
        if n == 0:
            return MPoly((), {(): Fraction(1)})
        m = [row[:] for row in self.entries]
        vars_ = m[0][0].vars
        one = MPoly.const(vars_, 1)
        prev = one
        sign = 1
        for k in range(n - 1):
            if m[k][k].is_zero():
                for i in range(k + 1, n):
                    if not m[i][k].is_zero():
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return MPoly.zero(vars_)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                    m[i][j] = num.exact_div(prev)
            prev = m[k][k]
        out = m[n - 1][n - 1]
        return -out if sign < 0 else out


def sylvester_matrix(p: MPoly, q: MPoly, var: str) -> SylvesterMatrix:
    m, n = p.degree(var), q.degree(var)
    if m == 0 and n == 0:
        raise PolyError("both polynomials are constant in the elimination variable")
    pc = [c.with_vars([v for v in p.vars if v != var] or ("_",)) for c in p.dense_in(var)]
    qc = [c.with_vars([v for v in q.vars if v != var] or ("_",)) for c in q.dense_in(var)]
    vars_ = tuple(dict.fromkeys(tuple(pc[0].vars) + tuple(qc[0].vars)))
    pc = [c.with_vars(vars_) for c in pc]
    qc = [c.with_vars(vars_) for c in qc]
    zero = MPoly.zero(vars_)
    dim = m + n
    rows = []
    for i in range(n):  # n rows of p's coefficients, descending degree
        row = [zero] * dim
        for k, c in enumerate(reversed(pc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):  # m rows of q's coefficients
        row = [zero] * dim
        for k, c in enumerate(reversed(qc)):
            row[i + k] = c
        rows.append(row)
    return SylvesterMatrix(dim, rows)


# ---------------------------------------------------------------------------
# resultant
# ---------------------------------------------------------------------------

def resultant(p: MPoly, q: MPoly, var: str) -> MPoly:
    """Res_var(p, q), a polynomial in the remaining variables.

    Sign convention: equals the Sylvester determinant with p's coefficient
    rows on top.
    """
    if p.is_zero() or q.is_zero():
        raise PolyError("resultant of the zero polynomial")
    p, q = MPoly._align(p, q)
    m, n = p.degree(var), q.degree(var)
    if m == 0 and n == 0:
        raise PolyError("both polynomials are constant in the elimination variable")
    residual = [v for v in p.vars if v != var and (p.uses(v) or q.uses(v))]
    if len(residual) == 1:
        cdeg_p = max(c.total_degree() for c in p.dense_in(var))
        cdeg_q = max(c.total_degree() for c in q.dense_in(var))
        bound = n * cdeg_p + m * cdeg_q
        if bound > _INTERP_THRESHOLD and m > 0 and n > 0:
            return _resultant_interpolate(p, q, var, residual[0], bound)
    return _resultant_prs(p, q, var)


def _drop_var(p: MPoly, var: str) -> MPoly:
    keep = [v for v in p.vars if v != var]
    return p.with_vars(keep or ("_",))


def _resultant_prs(p: MPoly, q: MPoly, var: str) -> MPoly:
    m, n = p.degree(var), q.degree(var)
    if m == 0:
        return _drop_var(p, var) ** n
    if n == 0:
        return _drop_var(q, var) ** m
    sgn = 1
    a, b = p, q
    if m < n:
        a, b = b, a
        if (m * n) % 2:
            sgn = -sgn
    num = MPoly.const(a.vars, 1)
    den = MPoly.const(a.vars, 1)
    rat = Fraction(1)
    while True:
        da, db = a.degree(var), b.degree(var)
        r = _prem_mpoly(a, b, var)
        if r.is_zero():
            return MPoly.zero([v for v in p.vars if v != var] or ("_",))
        k, r = r.content_int()
        dr = r.degree(var)
        if (da * db) % 2:
            sgn = -sgn
        c = b.coeff_of(var, db).with_vars(a.vars)
        e = da - dr - db * (da - db + 1)
        if e >= 0:
            num = num * c ** e
        else:
            den = den * c ** (-e)
        rat *= k ** db
        a, b = b, r
        if b.degree(var) == 0:
            break
    base = _drop_var(b, var) ** a.degree(var)
    total = num * base * rat
    if sgn < 0:
        total = -total
    out = total.exact_div(den)
    return _drop_var(out, var)


def _resultant_interpolate(p: MPoly, q: MPoly, var: str, cvar: str, bound: int) -> MPoly:
    m, n = p.degree(var), q.degree(var)
    pc = [c.as_unipoly(cvar) for c in p.dense_in(var)]
    qc = [c.as_unipoly(cvar) for c in q.dense_in(var)]

    def to_int_rows(rows: list[UniPoly]) -> tuple[Fraction, list[list]]:
        den = 1
        gnum = 0
        for r in rows:
            for c in r.coeffs:
                den = den * c.denominator // math.gcd(den, c.denominator)
        ints = []
        for r in rows:
            ints.append([c.numerator * (den // c.denominator) for c in r.coeffs])
        for r in ints:
            for c in r:
                gnum = math.gcd(gnum, c)
        if gnum == 0:
            raise PolyError("zero polynomial")
        return Fraction(gnum, den), [[c // gnum for c in r] for r in ints]

    cont_p, ip = to_int_rows(pc)
    cont_q, iq = to_int_rows(qc)
    factor = cont_p ** n * cont_q ** m

    # deflate in cvar when every exponent is a multiple of k (e.g. even in b)
    k = 0
    for rows in (ip, iq):
        for r in rows:
            for i, c in enumerate(r):
                if c and i:
                    k = math.gcd(k, i)
    k = k or 1
    if k > 1:
        ip = [_zpoly.deflate(r, k) for r in ip]
        iq = [_zpoly.deflate(r, k) for r in iq]
    npoints = bound // k + 1

    nodes: list[int] = []
    values: list[int] = []
    t = 0
    while len(nodes) < npoints:
        node = t // 2 + 1 if t % 2 else -(t // 2)  # 0, 1, -1, 2, -2, ...
        t += 1
        if _zpoly.eval_int(ip[-1], node) == 0 or _zpoly.eval_int(iq[-1], node) == 0:
            continue
        fa = _zpoly.trim([_zpoly.eval_int(r, node) for r in ip])
        fb = _zpoly.trim([_zpoly.eval_int(r, node) for r in iq])
        nodes.append(node)
        values.append(_zpoly.resultant(fa, fb))
    coeffs = _zpoly.interpolate_at_ints(nodes, values)
    if k > 1:
        coeffs = _zpoly.inflate(coeffs, k)
    out = UniPoly.from_int_coeffs(cvar, coeffs) * factor
    return out.to_mpoly((cvar,))


# ---------------------------------------------------------------------------
# discriminants
# ---------------------------------------------------------------------------

def discriminant(p: MPoly, var: str) -> MPoly:
    """disc_var(p) with exact division by the leading coefficient."""
    if p.is_zero():
        raise PolyError("discriminant of the zero polynomial")
    n = p.degree(var)
    if n < 1:
        raise PolyError(f"degree in {var!r} must be at least 1")
    res = resultant(p, p.derivative(var), var)
    lead = _drop_var(p.coeff_of(var, n), var)
    sgn = -1 if (n * (n - 1) // 2) % 2 else 1
    res, lead = MPoly._align(res, lead)
    try:
        out = res.exact_div(lead)
    except PolyError as exc:
        raise PolyError("internal error: discriminant division is not exact") from exc
    return -out if sgn < 0 else out


def double_discriminant_ordered(F: MPoly, first: str, second: str) -> UniPoly:
    """Iterated discriminant disc_second(disc_first(F)) as a UniPoly.

    The subscript convention matches the inner-then-outer order: the pair
    (first=y, second=x) computes disc_x(disc_y(F)).  An identically zero
    intermediate short-circuits to the zero polynomial.
    """
    if F.degree(first) < 1 or F.degree(second) < 1:
        raise PolyError("F must have positive degree in both elimination variables")
    param = [v for v in F.vars if v not in (first, second) and F.uses(v)]
    if len(param) > 1:
        raise PolyError(f"more than one parameter left: {param}")
    pname = param[0] if param else "b"
    inner = discriminant(F, first)
    if inner.is_zero():
        return UniPoly.zero(pname)
    if inner.degree(second) < 1:
        # a constant-in-second discriminant carries no outer information
        return UniPoly.zero(pname) if inner.is_zero() else _const_disc_error(inner, second)
    outer = discriminant(inner, second)
    if outer.is_zero():
        return UniPoly.zero(pname)
    return outer.as_unipoly(pname) if outer.uses(pname) else UniPoly(pname, [outer.constant_value()])


def _const_disc_error(inner: MPoly, second: str):
    raise PolyError(
        f"intermediate discriminant is a nonzero constant in {second!r}; "
        "the outer discriminant is undefined")


def double_discriminant(F: MPoly, x: str = "x", y: str = "y") -> UniPoly:
    """gcd of the two ordered double discriminants, primitive and positive.

    Zeros of this polynomial are the only parameter values at which the curve
    family F_b = 0 can acquire a singular point.  Returns the zero polynomial
    when both orders vanish identically (no information).
    """
    d_xy = double_discriminant_ordered(F, x, y)
    d_yx = double_discriminant_ordered(F, y, x)
    if d_xy.is_zero() and d_yx.is_zero():
        return UniPoly.zero(d_xy.var)
    if d_xy.is_zero():
        return d_yx.primitive()
    if d_yx.is_zero():
        return d_xy.primitive()
    return unipoly_gcd(d_xy, d_yx)
