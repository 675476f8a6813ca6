"""Power-series expansions of invariant curves and their chart transfers.

A :class:`SeriesJet` is a truncated expansion of a graph curve
w1 = g(w2) about a base point, with coefficients either rational numbers or
rational functions of the family parameter, so one symbolic run serves every
parameter value.  Jets are produced by solving the invariance identity

    <grad(w1 - g(w2)), X> = 0   along   w1 = g(w2)

order by order: each new coefficient enters the residual linearly at its
first responding order, is solved for, and the full residual is re-checked
to the jet's order at the end (so a resonance or a nonlinear first response
is detected, not silently absorbed).

Chart transfers are the registered coordinate changes used to pass between
the blown-up infinity charts and graph form y = phi(x); Pade approximants
turn jets into rational approximations with matching order n + m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .dulac import PlanarSystem
from .exactpoly import MPoly, PolyError, Rat
from .ratfunc import RationalFunction

__all__ = [
    "SeriesJet",
    "invariant_graph_series",
    "invariance_residual",
    "jet_transfer",
    "pade",
    "rational_series",
    "phi_approx",
]


# ---------------------------------------------------------------------------
# coefficient field plumbing
# ---------------------------------------------------------------------------

class _Field:
    """Arithmetic context: plain rationals or rational functions of params."""

    def __init__(self, params: tuple[str, ...]):
        self.params = params

    @property
    def rational(self) -> bool:
        return not self.params

    def one(self):
        if self.rational:
            return Fraction(1)
        return RationalFunction.const(self.params, 1)

    def zero(self):
        if self.rational:
            return Fraction(0)
        return RationalFunction.const(self.params, 0)

    def lift(self, value):
        if isinstance(value, RationalFunction):
            if self.rational:
                raise PolyError("rational-function value in a parameter-free jet")
            return value
        value = Fraction(value) if isinstance(value, int) else value
        if self.rational:
            return Fraction(value)
        return RationalFunction.const(self.params, value)

    def var(self, name: str):
        return RationalFunction.var(self.params, name)

    def is_zero(self, value) -> bool:
        if isinstance(value, RationalFunction):
            return value.is_zero()
        return value == 0


def _ser_trunc(a: list, n: int, fld: _Field) -> list:
    out = list(a[: n + 1])
    while len(out) < n + 1:
        out.append(fld.zero())
    return out


def _ser_add(a: list, b: list, fld: _Field) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else fld.zero()) + (b[i] if i < len(b) else fld.zero())
            for i in range(n)]


def _ser_mul(a: list, b: list, n: int, fld: _Field) -> list:
    out = [fld.zero() for _ in range(n + 1)]
    for i, ai in enumerate(a):
        if i > n or fld.is_zero(ai):
            continue
        for j, bj in enumerate(b):
            if i + j > n:
                break
            if not fld.is_zero(bj):
                out[i + j] = out[i + j] + ai * bj
    return out


def _ser_scale(a: list, c, fld: _Field) -> list:
    return [ai * c for ai in a]


def _ser_inv(a: list, n: int, fld: _Field) -> list:
    """Multiplicative inverse of a series with nonzero constant term."""
    if not a or fld.is_zero(a[0]):
        raise PolyError("inversion of a series with zero constant term")
    inv0 = fld.one() / a[0]
    out = [inv0]
    for k in range(1, n + 1):
        s = fld.zero()
        for i in range(1, min(k, len(a) - 1) + 1):
            s = s + a[i] * out[k - i]
        out.append(-inv0 * s)
    return out


def _ser_compose(outer: list, inner: list, n: int, fld: _Field) -> list:
    """outer(inner(T)) with inner(0) = 0, truncated at order n."""
    if inner and not fld.is_zero(inner[0]):
        raise PolyError("composition requires a zero constant term")
    out = [fld.zero() for _ in range(n + 1)]
    power = [fld.one()] + [fld.zero()] * n  # inner^0
    for k, ck in enumerate(outer):
        if k > n:
            break
        if not fld.is_zero(ck):
            out = _ser_add(out, _ser_scale(power, ck, fld), fld)[: n + 1]
        power = _ser_mul(power, inner, n, fld)
    return _ser_trunc(out, n, fld)


@dataclass
class SeriesJet:
    """Truncated expansion sum_k coeffs[k] * (var - base)^k of stated order."""

    var: str
    base: object
    coeffs: list
    params: tuple[str, ...] = ()

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def field(self) -> _Field:
        return _Field(self.params)

    def coefficient(self, k: int):
        return self.coeffs[k] if k <= self.order else self.field().zero()

    def truncate(self, order: int) -> "SeriesJet":
        fld = self.field()
        return SeriesJet(self.var, self.base, _ser_trunc(self.coeffs, order, fld),
                         self.params)

    def at_param(self, assignment: Mapping[str, Rat]) -> "SeriesJet":
        """Specialize the parameter(s) to rational values."""
        if not self.params:
            return self
        base = self.base.eval(assignment) if isinstance(self.base, RationalFunction) \
            else Fraction(self.base)
        coeffs = [c.eval(assignment) if isinstance(c, RationalFunction) else Fraction(c)
                  for c in self.coeffs]
        return SeriesJet(self.var, base, coeffs, ())

    def __str__(self) -> str:
        fld = self.field()
        shift = f"({self.var} - ({self.base}))" if not fld.is_zero(
            fld.lift(self.base) - fld.lift(0) if not isinstance(self.base, RationalFunction)
            else self.base) else self.var
        parts = []
        for k, c in enumerate(self.coeffs):
            if fld.is_zero(c):
                continue
            head = f"({c})"
            if k == 1:
                parts.append(f"{head}*{shift}")
            elif k > 1:
                parts.append(f"{head}*{shift}^{k}")
            else:
                parts.append(head)
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({shift}^{self.order + 1})"


# ---------------------------------------------------------------------------
# the invariance solver
# ---------------------------------------------------------------------------

def _poly_on_series(P: MPoly, series: Mapping[str, list], n: int, fld: _Field) -> list:
    """Evaluate a polynomial on truncated series arguments."""
    powers: dict[str, list[list]] = {}

    def var_power(v: str, e: int) -> list:
        cache = powers.setdefault(v, [[fld.one()] + [fld.zero()] * n])
        while len(cache) <= e:
            cache.append(_ser_mul(cache[-1], series[v], n, fld))
        return cache[e]

    out = [fld.zero() for _ in range(n + 1)]
    for exps, coeff in P.terms.items():
        term = [fld.lift(coeff)] + [fld.zero()] * n
        for e, v in zip(exps, P.vars):
            if e:
                term = _ser_mul(term, var_power(v, e), n, fld)
        out = _ser_add(out, term, fld)[: n + 1]
    return _ser_trunc(out, n, fld)


def _residual(sys: PlanarSystem, dependent: str, independent: str,
              base_dep, base_ind, coeffs: list, n: int, fld: _Field) -> list:
    """Series of F_dep(g, w) - g' * F_ind(g, w) in T = independent - base."""
    g = _ser_trunc(coeffs, n, fld)
    w = [fld.lift(base_ind), fld.one()] + [fld.zero()] * max(0, n - 1)
    series = {dependent: g, independent: _ser_trunc(w, n, fld)}
    for p in sys.params:
        series[p] = [fld.var(p)] + [fld.zero()] * n
    F = {sys.state[0]: sys.P, sys.state[1]: sys.Q}
    e_dep = _poly_on_series(F[dependent], series, n, fld)
    e_ind = _poly_on_series(F[independent], series, n, fld)
    gprime = [g[k] * Fraction(k) for k in range(1, len(g))] + [fld.zero()]
    prod = _ser_mul(gprime, e_ind, n, fld)
    return [a - b for a, b in zip(e_dep, prod)]


def invariant_graph_series(sys: PlanarSystem, base: tuple, dependent: str,
                           seed: Mapping[int, object] | None = None,
                           order: int = 16) -> SeriesJet:
    """Jet of the invariant graph dependent = g(independent) through a point.

    ``base`` is (dependent value, independent value) at the expansion point;
    ``seed`` prescribes low-order coefficients (e.g. {1: 0} for a flat start).
    Every remaining coefficient up to ``order`` is determined by the linear
    recurrence coming from the invariance identity; an unsolvable (resonant)
    order raises PolyError naming the order.  The finished jet's residual is
    verified to vanish through the observable order.
    """
    if dependent not in sys.state:
        raise PolyError(f"{dependent!r} is not a state variable")
    independent = sys.state[1] if dependent == sys.state[0] else sys.state[0]
    fld = _Field(sys.params)
    seed = {int(k): fld.lift(v) for k, v in (seed or {}).items()}
    coeffs = [fld.lift(base[0])] + [fld.zero()] * order
    for k, v in seed.items():
        if not 1 <= k <= order:
            raise PolyError(f"seed order {k} out of range")
        coeffs[k] = v
    base_ind = fld.lift(base[1])
    scan = order + 6
    solved_upto = -1
    for k in range(1, order + 1):
        if k in seed:
            continue
        r0 = _residual(sys, dependent, independent, coeffs[0], base_ind,
                       coeffs, scan, fld)
        trial = list(coeffs)
        trial[k] = fld.one()
        r1 = _residual(sys, dependent, independent, coeffs[0], base_ind,
                       trial, scan, fld)
        j = next((i for i in range(scan + 1)
                  if not fld.is_zero(r1[i] - r0[i])), None)
        if j is None:
            raise PolyError(f"order {k}: coefficient does not enter the residual "
                            f"(resonant or over-truncated)")
        for i in range(j):
            if not fld.is_zero(r0[i]):
                raise PolyError(f"order {k}: residual order {i} is nonzero but does "
                                f"not involve the new coefficient (unsolvable)")
        slope = r1[j] - r0[j]
        coeffs[k] = -r0[j] / slope
        solved_upto = max(solved_upto, j)
    jet = SeriesJet(independent, base_ind if not fld.rational else Fraction(base[1]),
                    coeffs, sys.params)
    check = invariance_residual(jet, sys, dependent)
    bad = [i for i, c in enumerate(check) if not fld.is_zero(c)]
    if bad:
        raise PolyError(f"invariance residual is nonzero at order {bad[0]}")
    return jet


def invariance_residual(jet: SeriesJet, sys: PlanarSystem, dependent: str) -> list:
    """Residual coefficients of the invariance identity through the jet's
    reliably determined order (used by the property tests)."""
    independent = sys.state[1] if dependent == sys.state[0] else sys.state[0]
    fld = jet.field()
    # residual orders above jet.order may be polluted by the truncation of g
    n = jet.order
    r = _residual(sys, dependent, independent, jet.coeffs[0], fld.lift(jet.base),
                  jet.coeffs, n, fld)
    return r[: n - 1] if n >= 1 else r


# ---------------------------------------------------------------------------
# chart transfers
# ---------------------------------------------------------------------------

def _require_param_field(jet: SeriesJet) -> _Field:
    return jet.field()


def jet_transfer(jet: SeriesJet, transform: str) -> SeriesJet:
    """Transfer a graph jet through a registered chart map.

    Registered names:

    * ``identity``;
    * ``vs_to_phi``: a jet v = g(s) about s0 = 1/b in the blown-up vertical
      chart (v, s) = (x/y, 1/x) becomes the jet phi_tilde about 0 in the
      convention y = phi(x) = phi_tilde(x - b) / (x - b)^2;
    * ``phi_to_vs``: its inverse;
    * ``uz_to_phi``: a jet u = psi(z) about 0 in the horizontal chart
      (u, z) = (y/x, 1/x) becomes phi_tilde with y = phi(x) = phi_tilde(1/x);
    * ``phi_to_uz``: its inverse.

    Output orders drop by the valuation of the inverted series (two for the
    vs maps).  Inverting a jet whose leading coefficient vanishes is an error.
    """
    fld = jet.field()
    n = jet.order
    if transform == "identity":
        return SeriesJet(jet.var, jet.base, list(jet.coeffs), jet.params)
    if transform == "vs_to_phi":
        binv = fld.lift(jet.base)
        if fld.is_zero(binv):
            raise PolyError("vs_to_phi needs a nonzero base 1/b")
        b = fld.one() / binv
        # U(w) = 1/(b+w) - 1/b = -w / (b^2 (1 + w/b))
        geom = _ser_inv([fld.one(), fld.one() / b], n, fld)
        U = _ser_mul([fld.zero(), -(fld.one() / (b * b))], geom, n, fld)
        G = _ser_compose(jet.coeffs, U, n, fld)
        if not (fld.is_zero(G[0]) and fld.is_zero(G[1])):
            raise PolyError("vs jet does not vanish to second order at the base")
        if fld.is_zero(G[2]):
            raise PolyError("inversion of a jet with zero leading coefficient")
        m = n - 2
        G2 = G[2:]
        xw = [b, fld.one()] + [fld.zero()] * max(0, m - 1)  # x = b + w
        phit = _ser_mul(_ser_trunc(xw, m, fld), _ser_inv(G2, m, fld), m, fld)
        return SeriesJet("x", b if not fld.rational else Fraction(b), phit, jet.params)
    if transform == "phi_to_vs":
        b = fld.lift(jet.base)
        if fld.is_zero(jet.coeffs[0]):
            raise PolyError("inversion of a jet with zero leading coefficient")
        m = n - 2 if n >= 2 else 0
        # v(w) = w^2 (b + w) / phi_tilde(w), then w(U) = -U b^2 / (1 + U b)
        xw = [b, fld.one()] + [fld.zero()] * max(0, n - 1)
        vw = _ser_mul(xw, _ser_inv(jet.coeffs, n, fld), n, fld)
        vw = [fld.zero(), fld.zero()] + vw[: max(0, n - 1)]
        geom = _ser_inv([fld.one(), b], n, fld)
        wU = _ser_mul([fld.zero(), -(b * b)], geom, n, fld)
        g = _ser_compose(vw, wU, n, fld)
        return SeriesJet("s", fld.one() / b if not fld.rational else 1 / Fraction(jet.base),
                         _ser_trunc(g, n, fld), jet.params)
    if transform == "uz_to_phi":
        if not fld.is_zero(jet.coeffs[0]):
            raise PolyError("uz jet must vanish at the origin")
        return SeriesJet("u", Fraction(0) if fld.rational else fld.zero(),
                         list(jet.coeffs[1:]), jet.params)
    if transform == "phi_to_uz":
        return SeriesJet("z", Fraction(0) if fld.rational else fld.zero(),
                         [fld.zero()] + list(jet.coeffs), jet.params)
    raise PolyError(f"unknown transform {transform!r}")


# ---------------------------------------------------------------------------
# Pade approximants
# ---------------------------------------------------------------------------

def pade(jet: SeriesJet, n: int, m: int) -> RationalFunction:
    """Pade approximant F_n/G_m of the jet about its base, G_m(base) = 1.

    Requires jet.order >= n + m; a singular Pade system (degenerate table
    entry) raises PolyError.
    """
    if jet.order < n + m:
        raise PolyError(f"jet order {jet.order} < n + m = {n + m}")
    fld = jet.field()
    c = [jet.coefficient(k) for k in range(n + m + 1)]
    # solve sum_{j=0..m} g_j c_{k-j} = 0 for k = n+1..n+m, g_0 = 1
    rows = []
    rhs = []
    for i in range(m):
        k = n + 1 + i
        rows.append([c[k - j] if k - j >= 0 else fld.zero() for j in range(1, m + 1)])
        rhs.append(-c[k])
    g = _solve_linear(rows, rhs, fld)
    if g is None:
        raise PolyError("degenerate Pade table entry (singular linear system)")
    gcoeffs = [fld.one()] + g
    fcoeffs = []
    for k in range(n + 1):
        s = fld.zero()
        for j in range(0, min(k, m) + 1):
            s = s + gcoeffs[j] * c[k - j]
        fcoeffs.append(s)
    variables = (jet.var,) + jet.params
    xv = RationalFunction.var(variables, jet.var)
    shift = xv - (RationalFunction.const(variables, jet.base) if fld.rational
                  else RationalFunction(jet.base.num.with_vars(variables),
                                        jet.base.den.with_vars(variables)))

    def build(coeffs):
        acc = RationalFunction.const(variables, 0)
        power = RationalFunction.const(variables, 1)
        for k, ck in enumerate(coeffs):
            term = (RationalFunction.const(variables, ck) if fld.rational
                    else RationalFunction(ck.num.with_vars(variables),
                                          ck.den.with_vars(variables)))
            acc = acc + term * power
            power = power * shift
        return acc

    return build(fcoeffs) / build(gcoeffs)


def _solve_linear(rows: list[list], rhs: list, fld: _Field) -> list | None:
    """Dense Gaussian elimination over the coefficient field."""
    m = len(rows)
    a = [list(r) + [v] for r, v in zip(rows, rhs)]
    for col in range(m):
        piv = next((r for r in range(col, m) if not fld.is_zero(a[r][col])), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = fld.one() / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(m):
            if r != col and not fld.is_zero(a[r][col]):
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][m] for r in range(m)]


# ---------------------------------------------------------------------------
# rational-function expansion and the curve approximations
# ---------------------------------------------------------------------------

def rational_series(rf: RationalFunction, var: str, x0: Rat, order: int) -> SeriesJet:
    """Taylor jet of a one-variable rational function about a regular point."""
    x0 = Fraction(x0)
    others = [v for v in rf.vars if v != var and (rf.num.uses(v) or rf.den.uses(v))]
    if others:
        raise PolyError(f"rational_series needs a one-variable function; saw {others}")
    fld = _Field(())
    num = rf.num.as_unipoly(var).compose_linear(Fraction(1), x0)
    den = rf.den.as_unipoly(var).compose_linear(Fraction(1), x0)
    if den.eval(0) == 0:
        raise PolyError("expansion point is a pole")
    nser = _ser_trunc(list(num.coeffs), order, fld)
    dser = _ser_trunc(list(den.coeffs), order, fld)
    return SeriesJet(var, x0, _ser_mul(nser, _ser_inv(dser, order, fld), order, fld))


def phi_approx(phitilde: SeriesJet, terms: int,
               at_param: Mapping[str, Rat] | None = None) -> RationalFunction:
    """The order-``terms`` curve approximation phi(x) = phi_tilde(x-b)/(x-b)^2
    built from the first ``terms`` jet coefficients, optionally specialized."""
    jet = phitilde if at_param is None else phitilde.at_param(at_param)
    fld = jet.field()
    variables = ("x",) + jet.params
    xv = RationalFunction.var(variables, "x")
    bshift = (RationalFunction.const(variables, jet.base) if fld.rational
              else RationalFunction(jet.base.num.with_vars(variables),
                                    jet.base.den.with_vars(variables)))
    w = xv - bshift
    acc = RationalFunction.const(variables, 0)
    power = RationalFunction.const(variables, 1)
    for k in range(min(terms, jet.order + 1)):
        ck = jet.coeffs[k]
        term = (RationalFunction.const(variables, ck) if fld.rational
                else RationalFunction(ck.num.with_vars(variables),
                                      ck.den.with_vars(variables)))
        acc = acc + term * power
        power = power * w
    return acc / (w * w)
