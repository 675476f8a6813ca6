"""Dense integer polynomial engine.

Internal workhorse for the elimination and root counting layers.  A
polynomial is a plain list of Python ints, ascending degree, trailing zeros
trimmed (the zero polynomial is the empty list).  Everything here is exact:

* pseudo-division and a PRS resultant with an explicit unit accumulator,
  so the returned value is the true Sylvester resultant including sign;
* modular gcd (CRT over 62-bit primes, certified by exact trial division),
  which is what makes square-free parts of the degree-1000+ discriminants
  affordable;
* Sturm chains built as signed primitive remainder sequences;
* the interval-to-positive-axis Moebius transform behind the Descartes
  bisection, done with a single integer Horner pass;
* exact Lagrange interpolation at integer nodes, used by the resultant
  evaluation/interpolation fast path.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

IntPoly = list  # list[int], ascending degree, no trailing zeros


class EndpointRootError(ValueError):
    """An interval endpoint is a root of the polynomial being counted."""


# ---------------------------------------------------------------------------
# basics
# ---------------------------------------------------------------------------

def trim(f: IntPoly) -> IntPoly:
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: IntPoly) -> int:
    return len(f) - 1


def neg(f: IntPoly) -> IntPoly:
    return [-c for c in f]


def add(f: IntPoly, g: IntPoly) -> IntPoly:
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)]
    return trim(out)


def sub(f: IntPoly, g: IntPoly) -> IntPoly:
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)]
    return trim(out)


def mul(f: IntPoly, g: IntPoly) -> IntPoly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def scale(f: IntPoly, c: int) -> IntPoly:
    if c == 0:
        return []
    return [a * c for a in f]


def content(f: IntPoly) -> int:
    g = 0
    for c in f:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def primitive(f: IntPoly) -> IntPoly:
    """Divide out the content, keeping the sign of the leading coefficient."""
    if not f:
        return []
    g = content(f)
    if g == 1:
        return list(f)
    return [c // g for c in f]


def deriv(f: IntPoly) -> IntPoly:
    return [k * c for k, c in enumerate(f)][1:]


def eval_int(f: IntPoly, x: int) -> int:
    v = 0
    for c in reversed(f):
        v = v * x + c
    return v


def eval_frac_scaled(f: IntPoly, num: int, den: int) -> int:
    """den**deg(f) * f(num/den); the sign equals the sign of f(num/den)."""
    if not f:
        return 0
    v = 0
    dpow = 1
    for k in range(degree(f), -1, -1):
        v = v * num + f[k] * dpow
        dpow *= den
    return v


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def shift_pow(f: IntPoly, k: int) -> IntPoly:
    if not f:
        return []
    return [0] * k + list(f)


def strip_zero_roots(f: IntPoly) -> tuple[int, IntPoly]:
    """f = x**k * g with g(0) != 0; returns (k, g)."""
    if not f:
        raise ValueError("zero polynomial")
    k = 0
    while f[k] == 0:
        k += 1
    return k, f[k:]


def deflate(f: IntPoly, k: int) -> IntPoly:
    """Substitute x**k -> x; exponents must all be divisible by k."""
    if any(c != 0 for i, c in enumerate(f) if i % k):
        raise ValueError("polynomial is not a polynomial in x**%d" % k)
    return f[::k]


def inflate(f: IntPoly, k: int) -> IntPoly:
    out = [0] * (len(f) * k)
    for i, c in enumerate(f):
        out[i * k] = c
    return trim(out)


def deflation_order(f: IntPoly) -> int:
    """Largest k with f in Z[x**k] (1 for constants and generic f)."""
    k = 0
    for i, c in enumerate(f):
        if c and i:
            k = math.gcd(k, i)
            if k == 1:
                return 1
    return k if k else 1


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def prem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(g)**(deg f - deg g + 1) * f  mod  g."""
    if not g:
        raise ZeroDivisionError("pseudo-division by zero")
    df, dg = degree(f), degree(g)
    if df < dg:
        return list(f)
    c = g[-1]
    r = list(f)
    steps = df - dg + 1
    while r and degree(r) >= dg:
        dr = degree(r)
        lead = r[-1]
        r = [a * c for a in r]
        for j, b in enumerate(g):
            r[dr - dg + j] -= lead * b
        trim(r)
        steps -= 1
    if steps > 0:
        m = c ** steps
        r = [a * m for a in r]
    return r


def div_exact(f: IntPoly, g: IntPoly) -> IntPoly:
    """Exact division in Z[x]; raises ValueError if not exact."""
    if not g:
        raise ZeroDivisionError
    if not f:
        return []
    df, dg = degree(f), degree(g)
    if df < dg:
        raise ValueError("inexact division")
    r = list(f)
    q = [0] * (df - dg + 1)
    glc = g[-1]
    while r and degree(r) >= dg:
        dr = degree(r)
        c, rem = divmod(r[-1], glc)
        if rem:
            raise ValueError("inexact division")
        q[dr - dg] = c
        for j, b in enumerate(g):
            r[dr - dg + j] -= c * b
        trim(r)
    if r:
        raise ValueError("inexact division")
    return trim(q)


# ---------------------------------------------------------------------------
# resultant by PRS with a unit accumulator
# ---------------------------------------------------------------------------

def resultant(f: IntPoly, g: IntPoly) -> int:
    """Sylvester resultant of f and g over Z, exact including sign."""
    f, g = trim(list(f)), trim(list(g))
    if not f or not g:
        return 0
    df, dg = degree(f), degree(g)
    if df == 0 and dg == 0:
        return 1
    if df == 0:
        return f[0] ** dg
    if dg == 0:
        return g[0] ** df
    sgn = 1
    if df < dg:
        f, g = g, f
        if (df * dg) % 2:
            sgn = -sgn
        df, dg = dg, df
    num, den = 1, 1
    a, b = f, g
    while True:
        da, db = degree(a), degree(b)
        r = prem(a, b)
        if not r:
            return 0
        k = content(r)
        r = [c // k for c in r]
        dr = degree(r)
        if (da * db) % 2:
            sgn = -sgn
        c = b[-1]
        e = da - dr - db * (da - db + 1)
        if e >= 0:
            num *= c ** e
        else:
            den *= c ** (-e)
        num *= k ** db
        a, b = b, r
        if degree(b) == 0:
            break
    total = sgn * num * b[0] ** degree(a)
    q, rem = divmod(total, den)
    if rem:
        raise ArithmeticError("internal error: non-integral resultant")
    return q


# ---------------------------------------------------------------------------
# modular gcd
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_CACHE: list = []


def _prime_stream():
    for p in _PRIME_CACHE:
        yield p
    n = (_PRIME_CACHE[-1] + 2) if _PRIME_CACHE else ((1 << 62) + 1)
    while True:
        if _is_prime(n):
            _PRIME_CACHE.append(n)
            yield n
        n += 2


def _gcd_small(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive-PRS Euclid; fine for small degrees, no modular machinery."""
    a, b = list(f), list(g)
    if degree(a) < degree(b):
        a, b = b, a
    while b and degree(b) > 0:
        r = primitive(prem(a, b))
        a, b = b, r
    if b:  # nonzero constant remainder: coprime
        return [1]
    return a if a[-1] > 0 else neg(a)


def _gcd_mod_p(f: Sequence[int], g: Sequence[int], p: int) -> list:
    a = [c % p for c in f]
    b = [c % p for c in g]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        # a mod b over GF(p)
        inv = pow(b[-1], p - 2, p)
        while a and len(a) >= len(b):
            c = a[-1] * inv % p
            off = len(a) - len(b)
            for j, bc in enumerate(b):
                a[off + j] = (a[off + j] - c * bc) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd in Z[x], positive leading coefficient, certified.

    Modular images are CRT-combined until stable, then the candidate is
    verified by exact division into both (primitive parts of the) inputs;
    a minimal-degree good image pins the degree, so success is a proof.
    """
    f = primitive(trim(list(f)))
    g = primitive(trim(list(g)))
    if not f:
        return g if g and g[-1] > 0 else neg(g) if g else []
    if not g:
        return f if f[-1] > 0 else neg(f)
    if degree(f) == 0 or degree(g) == 0:
        return [1]
    if min(degree(f), degree(g)) <= 24:
        return _gcd_small(f, g)
    if degree(f) < degree(g):
        f, g = g, f
    lc_gamma = math.gcd(f[-1], g[-1])
    best_deg = None
    combined: list[int] | None = None
    modulus = 1
    stable = 0
    for p in _prime_stream():
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        gp = _gcd_mod_p(f, g, p)
        d = len(gp) - 1
        if d == 0:
            return [1]
        if best_deg is None or d < best_deg:
            best_deg = d
            scaled = [c * lc_gamma % p for c in gp]
            combined = [c if c <= p // 2 else c - p for c in scaled]
            modulus = p
            stable = 0
        elif d > best_deg:
            continue  # unlucky prime
        else:
            # CRT combine with the existing residue
            scaled = [c * lc_gamma % p for c in gp]
            inv = pow(modulus % p, p - 2, p)
            new = []
            changed = False
            for old, rp in zip(combined, scaled + [0] * (len(combined) - len(scaled))):
                t = (rp - old) % p
                t = t * inv % p
                if t > p // 2:
                    t -= p
                val = old + modulus * t
                if val != old:
                    changed = True
                new.append(val)
            combined = new
            modulus *= p
            stable = 0 if changed else stable + 1
        if combined is not None and stable >= 1:
            cand = primitive(trim(list(combined)))
            if cand and cand[-1] < 0:
                cand = neg(cand)
            if _divides(cand, f) and _divides(cand, g):
                return cand
            stable = 0


def _divides(d: IntPoly, f: IntPoly) -> bool:
    try:
        div_exact(f, d)
        return True
    except ValueError:
        return False


def squarefree_part(f: IntPoly) -> IntPoly:
    """f / gcd(f, f'), primitive with positive leading coefficient."""
    f = primitive(trim(list(f)))
    if not f:
        raise ValueError("zero polynomial")
    if degree(f) <= 1:
        return f if f[-1] > 0 else neg(f)
    g = gcd(f, deriv(f))
    q = primitive(div_exact(f, g))
    return q if q[-1] > 0 else neg(q)


# ---------------------------------------------------------------------------
# Sturm chains
# ---------------------------------------------------------------------------

def sturm_chain(f: IntPoly) -> list[IntPoly]:
    """Signed primitive Sturm chain of f (content-stripped each step).

    Each element is a positive multiple of the classical Sturm chain entry,
    so sign variation counts agree with the textbook chain.
    """
    f = primitive(trim(list(f)))
    if not f:
        raise ValueError("zero polynomial")
    chain = [f]
    if degree(f) == 0:
        return chain
    chain.append(primitive(deriv(f)))
    while degree(chain[-1]) >= 0:
        a, b = chain[-2], chain[-1]
        if degree(b) == 0:
            break
        r = prem(a, b)
        if not r:
            break
        # prem multiplied by lc(b)**(da-db+1); fix the sign so that the
        # entry is a positive multiple of -(a mod b)
        mult_sign = sign(b[-1]) if (degree(a) - degree(b) + 1) % 2 else 1
        r = primitive(r)
        chain.append(neg(r) if mult_sign > 0 else r)
    return chain


def _sign_at(f: IntPoly, point: Fraction) -> int:
    return sign(eval_frac_scaled(f, point.numerator, point.denominator))


def _sign_at_inf(f: IntPoly, positive: bool) -> int:
    s = sign(f[-1])
    if not positive and degree(f) % 2:
        s = -s
    return s


def _variations(signs: Iterable[int]) -> int:
    out = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            out += 1
        prev = s
    return out


def sturm_count(f: IntPoly, lo: Fraction | None, hi: Fraction | None,
                chain: list[IntPoly] | None = None) -> int:
    """Number of distinct real roots of f in (lo, hi); None means +/-infinity.

    Raises EndpointRootError when an endpoint is a root.
    """
    if chain is None:
        chain = sturm_chain(f)
    f0 = chain[0]
    if lo is not None and _sign_at(f0, lo) == 0:
        raise EndpointRootError(f"lower endpoint {lo} is a root")
    if hi is not None and _sign_at(f0, hi) == 0:
        raise EndpointRootError(f"upper endpoint {hi} is a root")
    va = _variations(
        _sign_at(g, lo) if lo is not None else _sign_at_inf(g, False) for g in chain)
    vb = _variations(
        _sign_at(g, hi) if hi is not None else _sign_at_inf(g, True) for g in chain)
    return va - vb


# ---------------------------------------------------------------------------
# Descartes tools
# ---------------------------------------------------------------------------

def sign_changes(coeffs: Iterable[int]) -> int:
    return _variations(sign(c) for c in coeffs)


def mobius_numerator(f: IntPoly, alpha: Fraction, beta: Fraction) -> IntPoly:
    """s**n * (x+1)**n * f((beta*x+alpha)/(x+1)) with s the common denominator.

    A positive integer multiple of the Definition-style normalized
    polynomial, which is all the Descartes counting needs.  Computed by one
    Horner pass: sum_k c_k s**(n-k) (p x + a)**k (x+1)**(n-k), where
    alpha = a/s and beta = p/s.
    """
    f = trim(list(f))
    if not f:
        return []
    n = degree(f)
    s = alpha.denominator * beta.denominator // math.gcd(alpha.denominator, beta.denominator)
    a = alpha.numerator * (s // alpha.denominator)
    p = beta.numerator * (s // beta.denominator)
    h = [f[n]]
    binom = [1]
    spow = 1
    for k in range(n - 1, -1, -1):
        # h <- h * (p x + a)
        nh = [0] * (len(h) + 1)
        for i, c in enumerate(h):
            nh[i] += c * a
            nh[i + 1] += c * p
        h = nh
        # binom <- binom * (x + 1)
        nb = [0] * (len(binom) + 1)
        for i, c in enumerate(binom):
            nb[i] += c
            nb[i + 1] += c
        binom = nb
        spow *= s
        ck = f[k] * spow
        if ck:
            for i, c in enumerate(binom):
                h[i] += ck * c
    return trim(h)


def descartes_count_interval(f: IntPoly, alpha: Fraction, beta: Fraction) -> int:
    """Descartes sign-change count bounding the roots of f in (alpha, beta)."""
    return sign_changes(mobius_numerator(f, alpha, beta))


def cauchy_bound(f: IntPoly) -> Fraction:
    """1 + max |a_i / a_n|: every real root lies in (-bound, bound)."""
    f = trim(list(f))
    if degree(f) < 1:
        raise ValueError("constant polynomial")
    lc = abs(f[-1])
    m = max(abs(c) for c in f[:-1]) if len(f) > 1 else 0
    return 1 + Fraction(m, lc)


# ---------------------------------------------------------------------------
# exact interpolation at integer nodes
# ---------------------------------------------------------------------------

def interpolate_at_ints(nodes: Sequence[int], values: Sequence[int]) -> IntPoly:
    """The unique integer polynomial of degree < len(nodes) through the data.

    Exact Lagrange over a common denominator; raises if the interpolant is
    not integral (which would mean the data does not come from Z[x]).
    """
    n = len(nodes)
    if n == 0:
        return []
    if len(set(nodes)) != n:
        raise ValueError("nodes must be distinct")
    master = [1]
    for x in nodes:
        master = mul(master, [-x, 1])
    denoms = []
    for i, xi in enumerate(nodes):
        d = 1
        for j, xj in enumerate(nodes):
            if i != j:
                d *= xi - xj
        denoms.append(d)
    big_d = 1
    for d in denoms:
        big_d = big_d * abs(d) // math.gcd(big_d, abs(d))
    acc = [0] * n
    for xi, vi, di in zip(nodes, values, denoms):
        if vi == 0:
            continue
        # q = master / (x - xi) by synthetic division
        q = [0] * n
        carry = master[n]
        for k in range(n - 1, -1, -1):
            q[k] = carry
            carry = master[k] + carry * xi
        w = vi * (big_d // di)
        for k in range(n):
            if q[k]:
                acc[k] += w * q[k]
    out = []
    for c in acc:
        qc, rem = divmod(c, big_d)
        if rem:
            raise ArithmeticError("interpolation data is not integral")
        out.append(qc)
    return trim(out)
