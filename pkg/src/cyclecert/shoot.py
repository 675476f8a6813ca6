"""High-order Taylor integration and the shooting method for the bifurcation values.

The integrator generates Taylor coefficients of the solution through the
standard polynomial-ODE recurrence (series arithmetic on the right-hand
side, one order at a time), picks steps from the size of the top
coefficients, and locates section crossings by solving the dense-output
series on the accepted step.  Arithmetic uses mpmath floats at a
configurable precision (default 128 bits, Taylor order 20).

The shooting function for the connection value b*: start at the regular
chart point (v, s) = (0, 1/b) that the pair of vertical separatrices passes
through, move off it by fixed chart times t+ > 0 and t- < 0, transfer both
endpoints to the plane, follow the flow to the x-axis and return
Pi(b) = x+(b) + x-(b); a zero of Pi is a symmetric connection.  The
analogous function seeded on the horizontal separatrix (truncated series
manifold, Lemma-style seed) detects the other bifurcation value; its
trajectory may pass near vertical infinity, so the integration hands off to
the (v, s) chart for the deep part of the dive and comes back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import mpmath as mp

from .exactpoly import MPoly, PolyError, parse_poly

__all__ = [
    "FloatConfig",
    "ChartPoint",
    "chart_to_affine",
    "affine_to_chart",
    "taylor_integrate",
    "shoot_pi",
    "shoot_pi_hat",
    "bisect_parameter",
    "BlowupError",
]


class BlowupError(RuntimeError):
    """Trajectory left the guarded coordinate range or ran out of steps."""


@dataclass(frozen=True)
class FloatConfig:
    precision_bits: int = 128
    taylor_order: int = 20
    initial_step: float = 0.03125
    step_tolerance: float = 1e-30
    max_steps: int = 40000
    coordinate_guard: float = 1e12

    def __post_init__(self):
        if self.precision_bits < 53:
            raise ValueError("precision must be at least 53 bits")
        if self.taylor_order < 4:
            raise ValueError("taylor order must be at least 4")


@dataclass(frozen=True)
class ChartPoint:
    chart: str  # affine | u_chart | v_chart | vs_chart
    coords: tuple

    def __iter__(self):
        return iter(self.coords)


def affine_to_chart(point: ChartPoint, chart: str) -> ChartPoint:
    """Transition from the affine plane into one of the infinity charts."""
    if point.chart != "affine":
        raise PolyError("affine_to_chart expects an affine point")
    x, y = point.coords
    if chart == "u_chart":      # (u, z) = (y/x, 1/x)
        if x == 0:
            raise ZeroDivisionError("u-chart undefined at x = 0")
        return ChartPoint("u_chart", (y / x, 1 / x))
    if chart == "v_chart":      # (v, z) = (x/y, 1/y)
        if y == 0:
            raise ZeroDivisionError("v-chart undefined at y = 0")
        return ChartPoint("v_chart", (x / y, 1 / y))
    if chart == "vs_chart":     # (v, s) = (x/y, 1/x)
        if x == 0 or y == 0:
            raise ZeroDivisionError("vs-chart undefined on the axes")
        return ChartPoint("vs_chart", (x / y, 1 / x))
    raise PolyError(f"unknown chart {chart!r}")


def chart_to_affine(point: ChartPoint) -> ChartPoint:
    if point.chart == "affine":
        return point
    a, b = point.coords
    if point.chart == "u_chart":
        if b == 0:
            raise ZeroDivisionError("point at infinity")
        return ChartPoint("affine", (1 / b, a / b))
    if point.chart == "v_chart":
        if b == 0:
            raise ZeroDivisionError("point at infinity")
        return ChartPoint("affine", (a / b, 1 / b))
    if point.chart == "vs_chart":
        v, s = a, b
        if s == 0 or v == 0:
            raise ZeroDivisionError("point at infinity")
        return ChartPoint("affine", (1 / s, 1 / (s * v)))
    raise PolyError(f"unknown chart {point.chart!r}")


# ---------------------------------------------------------------------------
# compiled right-hand sides
# ---------------------------------------------------------------------------

def _exact_fraction(v) -> Fraction:
    """Exact rational value of an int / Fraction / mpf / numeric string."""
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, mp.mpf):
        sign, man, exp, _ = mp.mpf(v)._mpf_
        f = Fraction(-man if sign else man)
        return f * Fraction(2) ** exp
    if isinstance(v, float):
        return Fraction(v)
    raise TypeError(type(v).__name__)


def _compile(polys: Sequence[MPoly], state: Sequence[str],
             params: dict | None = None) -> list[list[tuple]]:
    """Each polynomial becomes [(mpf coefficient, exponent pair), ...]."""
    params = params or {}
    out = []
    for p in polys:
        if params:
            p = p.subs({k: _exact_fraction(v) for k, v in params.items()
                        if k in p.vars})
        terms = []
        ix = [p.vars.index(v) if v in p.vars else None for v in state]
        for exps, coeff in p.terms.items():
            for i, v in enumerate(p.vars):
                if v not in state and exps[i]:
                    raise PolyError(f"RHS still contains {v!r}")
            e = tuple(exps[j] if j is not None else 0 for j in ix)
            terms.append((mp.mpf(coeff.numerator) / coeff.denominator, e))
        out.append(terms)
    return out


class _Series:
    """Per-step Taylor series of the two state variables with power caches."""

    def __init__(self, x0, y0, maxdeg: tuple[int, int]):
        self.X = [x0]
        self.Y = [y0]
        self.px = [[mp.mpf(1)], [x0]]
        self.py = [[mp.mpf(1)], [y0]]
        self.maxdeg = maxdeg

    def _extend_powers(self, cache, base, k, top):
        # ensure power lists exist through exponent `top` and order k
        while len(cache) <= top:
            cache.append([])
        for e in range(2, top + 1):
            row = cache[e]
            prev = cache[e - 1]
            while len(row) <= k:
                kk = len(row)
                s = mp.mpf(0)
                for a in range(0, kk + 1):
                    if a < len(prev) and kk - a < len(base):
                        s += prev[a] * base[kk - a]
                row.append(s)

    def coeff_of_terms(self, terms, k: int):
        dx, dy = self.maxdeg
        self.px[0] = [mp.mpf(1)] + [mp.mpf(0)] * k
        self.py[0] = [mp.mpf(1)] + [mp.mpf(0)] * k
        self.px[1] = self.X
        self.py[1] = self.Y
        self._extend_powers(self.px, self.X, k, dx)
        self._extend_powers(self.py, self.Y, k, dy)
        s = mp.mpf(0)
        for c, (i, j) in terms:
            a = self.px[i]
            b = self.py[j]
            conv = mp.mpf(0)
            for t in range(0, k + 1):
                if t < len(a) and k - t < len(b):
                    conv += a[t] * b[k - t]
            s += c * conv
        return s


def _taylor_series(rhs, x0, y0, order, maxdeg):
    ser = _Series(x0, y0, maxdeg)
    for k in range(order):
        fx = ser.coeff_of_terms(rhs[0], k)
        fy = ser.coeff_of_terms(rhs[1], k)
        ser.X.append(fx / (k + 1))
        ser.Y.append(fy / (k + 1))
    return ser.X, ser.Y


def _horner(series, t):
    v = mp.mpf(0)
    for c in reversed(series):
        v = v * t + c
    return v


def _pick_step(X, Y, tol, order, fallback):
    best = None
    for k in (order - 1, order):
        m = max(abs(X[k]), abs(Y[k]))
        if m > 0:
            h = (mp.mpf(tol) / m) ** (mp.mpf(1) / k)
            best = h if best is None else min(best, h)
    if best is None or best <= 0 or not mp.isfinite(best):
        return mp.mpf(fallback)
    return mp.mpf("0.9") * best


def _event_series(terms, X, Y, order, maxdeg):
    ser = _Series(X[0], Y[0], maxdeg)
    ser.X = X
    ser.Y = Y
    return [ser.coeff_of_terms(terms, k) for k in range(order + 1)]


def _integrate(rhs, maxdeg, state0, cfg: FloatConfig,
               events: Sequence[tuple[str, list]] = (),
               t_stop=None, direction: int = 1):
    """Advance until an event fires or t_stop is reached.

    Returns (name_or_None, point, t, err); name None means t_stop reached.
    Events are compiled scalar polynomials; a sign change over a step is
    refined by bisection on the dense-output series.
    """
    x, y = mp.mpf(state0[0]), mp.mpf(state0[1])
    t = mp.mpf(0)
    err = mp.mpf(0)
    for _ in range(cfg.max_steps):
        X, Y = _taylor_series(rhs, x, y, cfg.taylor_order, maxdeg)
        h = _pick_step(X, Y, cfg.step_tolerance, cfg.taylor_order, cfg.initial_step)
        h = h * direction
        if t_stop is not None:
            remaining = t_stop - t
            if abs(remaining) <= abs(h):
                h = remaining
        hit, hit_t = None, None
        for name, tm, md in events:
            g = _event_series(tm, X, Y, cfg.taylor_order, md)
            g0 = g[0] if g[0] != 0 else _horner(g, h * mp.mpf("1e-9"))
            if g0 == 0:
                continue
            s0 = mp.sign(g0)
            bracket = None
            for frac in (mp.mpf(1) / 4, mp.mpf(1) / 2, mp.mpf(3) / 4, mp.mpf(1)):
                tau = h * frac
                if mp.sign(_horner(g, tau)) != s0:
                    bracket = tau
                    break
            if bracket is None:
                continue
            lo, hi = mp.mpf(0), bracket
            for _ in range(cfg.precision_bits + 16):
                mid = (lo + hi) / 2
                if mp.sign(_horner(g, mid)) == s0:
                    lo = mid
                else:
                    hi = mid
            cand = (lo + hi) / 2
            if hit_t is None or abs(cand) < abs(hit_t):
                hit, hit_t = name, cand
        if hit is not None:
            return hit, (_horner(X, hit_t), _horner(Y, hit_t)), t + hit_t, err
        x = _horner(X, h)
        y = _horner(Y, h)
        t += h
        err += abs(X[-1] * h ** cfg.taylor_order) + abs(Y[-1] * h ** cfg.taylor_order)
        if abs(x) > cfg.coordinate_guard or abs(y) > cfg.coordinate_guard:
            raise BlowupError(f"coordinate guard exceeded at t = {t}")
        if t_stop is not None and t == t_stop:
            return None, (x, y), t, err
    raise BlowupError("step budget exhausted")


def _maxdeg(polys: Sequence[MPoly], state: Sequence[str]) -> tuple[int, int]:
    return (max((p.degree(state[0]) if state[0] in p.vars else 0) for p in polys),
            max((p.degree(state[1]) if state[1] in p.vars else 0) for p in polys))


def taylor_integrate(rhs_polys: Sequence[MPoly], state: Sequence[str],
                     init: Sequence, t_target, cfg: FloatConfig | None = None,
                     params: dict | None = None):
    """Integrate a polynomial ODE to a fixed time; returns (point, error_estimate)."""
    cfg = cfg or FloatConfig()
    with mp.workprec(cfg.precision_bits):
        rhs = _compile(rhs_polys, state, params)
        md = _maxdeg(rhs_polys, state)
        direction = 1 if mp.mpf(t_target) >= 0 else -1
        _, pt, _, err = _integrate(rhs, md, init, cfg, (),
                                   t_stop=mp.mpf(t_target), direction=direction)
        return pt, err


# ---------------------------------------------------------------------------
# the quintic family's shooting functions
# ---------------------------------------------------------------------------

_XY = ("x", "y")
_VS = ("v", "s")


def _plane_rhs(b: str | float, reverse: bool = False):
    P = parse_poly("y", ("x", "y", "b"))
    Q = parse_poly("-x + (b^2 - x^2)*(y + y^3)", ("x", "y", "b"))
    if reverse:
        P, Q = -P, -Q
    return [P, Q], _XY


def _vs_rhs(reverse: bool = False):
    V = parse_poly("-(1 + v^2*s^2)*(1 - b^2*s^2) - v*s^4*(1 + v^2)", ("v", "s", "b"))
    S = parse_poly("s^5", ("v", "s", "b"))
    if reverse:
        V, S = -V, -S
    return [V, S], _VS


def _event(name: str, text: str, state, params) -> tuple[str, list, tuple]:
    p = parse_poly(text, tuple(state) + ("b",))
    compiled = _compile([p], state, params)[0]
    return name, compiled, _maxdeg([p], state)


def _axis_crossing(b, start, cfg, reverse: bool, allow_escape: bool = False):
    """Follow the plane flow from `start` to the first x-axis crossing; returns x.

    With allow_escape the coordinate-guard blowup (trajectory leaving to
    infinity without meeting the axis) returns None instead of raising.
    """
    polys, state = _plane_rhs(b, reverse)
    rhs = _compile(polys, state, {"b": b})
    md = _maxdeg(polys, state)
    ev = [_event("axis", "y", state, {"b": b})]
    try:
        name, pt, _, _ = _integrate(rhs, md, start, cfg, ev)
    except BlowupError:
        if allow_escape:
            return None
        raise
    if name != "axis":
        raise BlowupError("no x-axis crossing found")
    return pt[0]


def _vs_seed(b, t_chart, cfg):
    """Integrate the blown-up chart from (0, 1/b) for a fixed chart time."""
    polys, state = _vs_rhs()
    rhs = _compile(polys, state, {"b": b})
    md = _maxdeg(polys, state)
    direction = 1 if t_chart >= 0 else -1
    _, pt, _, _ = _integrate(rhs, md, (mp.mpf(0), 1 / mp.mpf(b)), cfg,
                             t_stop=mp.mpf(t_chart), direction=direction)
    return pt


def shoot_pi(b, t_plus=0.05, t_minus=-0.5, cfg: FloatConfig | None = None):
    """Pi(b) = x+(b) + x-(b): signed mismatch of the two vertical-separatrix
    crossings with the x-axis; zero exactly at the symmetric connection.

    Below the heteroclinic range the backward branch escapes toward
    horizontal infinity without meeting the axis; the mismatch is then below
    every finite value and -inf is returned, which keeps bisection brackets
    sign-correct on wide intervals like (0.79, 0.817).
    """
    cfg = cfg or FloatConfig()
    with mp.workprec(cfg.precision_bits):
        b = mp.mpf(b) if not isinstance(b, str) else mp.mpf(b)
        v_p, s_p = _vs_seed(b, mp.mpf(t_plus), cfg)
        v_m, s_m = _vs_seed(b, mp.mpf(t_minus), cfg)
        a_plus = chart_to_affine(ChartPoint("vs_chart", (v_p, s_p)))
        a_minus = chart_to_affine(ChartPoint("vs_chart", (v_m, s_m)))
        # the branch toward x < b reaches the axis in its past, the branch
        # toward x > b in its future
        x_plus = _axis_crossing(b, a_plus.coords, cfg, reverse=True,
                                allow_escape=True)
        x_minus = _axis_crossing(b, a_minus.coords, cfg, reverse=False)
        if x_plus is None:
            return mp.mpf("-inf")
        return x_plus + x_minus


def separatrix_crossing_s3(b, t_minus=-0.5, cfg: FloatConfig | None = None):
    """First x-axis crossing x-(b) > 0 of the forward vertical separatrix."""
    cfg = cfg or FloatConfig()
    with mp.workprec(cfg.precision_bits):
        b = mp.mpf(b)
        v_m, s_m = _vs_seed(b, mp.mpf(t_minus), cfg)
        a_minus = chart_to_affine(ChartPoint("vs_chart", (v_m, s_m)))
        return _axis_crossing(b, a_minus.coords, cfg, reverse=False)


_PSI_JET_CACHE: dict = {}


def _psi_seed(b: Fraction, z0: Fraction, order: int) -> tuple[Fraction, Fraction]:
    """Exact plane seed (1/z0, psi(z0)/z0) on the truncated horizontal manifold.

    The manifold series is solved once symbolically in b and cached; the
    orbit is strongly attracting, so the truncation offset only shifts the
    seed onto an exponentially nearby orbit.
    """
    from .dulac import quintic_u_chart
    from .separatrix import invariant_graph_series

    jet = _PSI_JET_CACHE.get(order)
    if jet is None:
        jet = invariant_graph_series(quintic_u_chart(), (0, 0), "u",
                                     seed={1: 0}, order=order)
        _PSI_JET_CACHE[order] = jet
    num = jet.at_param({"b": b})
    psi = sum((c * z0 ** k for k, c in enumerate(num.coeffs)), Fraction(0))
    return 1 / z0, psi / z0


def shoot_pi_hat(b, z0=Fraction(1, 5), seed_order: int = 16, depth=8,
                 cfg: FloatConfig | None = None):
    """Mismatch for the horizontal separatrix: its first x-axis crossing plus
    the forward vertical separatrix crossing.

    The seed sits on the truncated invariant-manifold series u = psi(z) at
    z = z0 (solved to ``seed_order``; the attracting manifold crushes the
    truncation offset exponentially, so the crossing is insensitive to it).
    When the trajectory dives toward vertical infinity the integration
    switches to the blown-up (v, s) chart through the deep part and returns
    to the plane afterwards, so the passage near the infinite critical point
    costs no precision blowup.
    """
    cfg = cfg or FloatConfig()
    with mp.workprec(cfg.precision_bits):
        b = mp.mpf(b)
        z0 = Fraction(z0)
        fx, fy = _psi_seed(_exact_fraction(b), z0, seed_order)
        x0 = mp.mpf(fx.numerator) / fx.denominator
        y0 = mp.mpf(fy.numerator) / fy.denominator
        plane_polys, plane_state = _plane_rhs(b)
        plane_rhs = _compile(plane_polys, plane_state, {"b": b})
        plane_md = _maxdeg(plane_polys, plane_state)
        ev_axis = _event("axis", "y", plane_state, {"b": b})
        ev_dive = _event("dive", f"y + {depth}", plane_state, {"b": b})
        state = (mp.mpf(x0), mp.mpf(y0))
        for _ in range(8):  # plane/chart handoffs
            name, pt, _, _ = _integrate(plane_rhs, plane_md, state, cfg,
                                        [ev_axis, ev_dive])
            if name == "axis":
                x_hat = pt[0]
                break
            # dive: hand off to the blown-up chart, reversed time
            cp = affine_to_chart(ChartPoint("affine", pt), "vs_chart")
            chart_polys, chart_state = _vs_rhs(reverse=True)
            chart_rhs = _compile(chart_polys, chart_state, {"b": b})
            chart_md = _maxdeg(chart_polys, chart_state)
            ev_exit = _event("exit", f"v*s + 1/{int(depth) - 1}",
                             chart_state, {"b": b})
            name, cpt, _, _ = _integrate(chart_rhs, chart_md, cp.coords, cfg,
                                         [ev_exit])
            if name != "exit":
                raise BlowupError("chart passage did not exit")
            state = chart_to_affine(ChartPoint("vs_chart", cpt)).coords
        else:
            raise BlowupError("too many plane/chart handoffs")
        return x_hat + separatrix_crossing_s3(b, cfg=cfg)


def bisect_parameter(f: Callable, lo, hi, tol) -> mp.mpf:
    """Plain bisection for a sign change of f on [lo, hi]."""
    lo, hi = mp.mpf(lo), mp.mpf(hi)
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if mp.sign(flo) == mp.sign(fhi):
        raise ValueError("no sign change on the bracket")
    while hi - lo > mp.mpf(tol):
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid
        if mp.sign(fm) == mp.sign(flo):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return (lo + hi) / 2
