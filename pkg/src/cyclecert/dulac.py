"""Bendixson-Dulac machinery for planar polynomial systems.

Given a system xdot = P(x,y), ydot = Q(x,y) and a rational candidate V, the
central object is

    M := V_x P + V_y Q - V (P_x + Q_y),

whose fixed sign on a region forces uniqueness and hyperbolicity of the
limit cycle there.  This module computes M exactly, builds the
transversality functions N_psi(x) = <grad(y - psi(x)), (P,Q)>|_{y=psi(x)}
for rational curve candidates, checks invariance/cofactor identities, and
counts line intersections with the candidate level sets.  Sign analysis of
the results is delegated to :mod:`cyclecert.signcontrol`.

The quintic family under study and its Dulac candidates are provided as
ready-made constructors; b is kept symbolic throughout and specialized only
when a caller asks for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exactpoly import MPoly, PolyError, Rat, parse_poly
from .ratfunc import RationalFunction, compose_mpoly
from . import rootiso

__all__ = [
    "PlanarSystem",
    "quintic_system",
    "vanderpol_system",
    "quintic_u_chart",
    "quintic_vs_chart",
    "vdp_dulac_candidate",
    "dulac_candidate_low",
    "dulac_candidate_high_numerator",
    "dulac_candidate_high",
    "bendixson_m",
    "without_contact",
    "invariance_cofactor",
    "line_intersection_count",
    "divergence_decomposition_check",
]


@dataclass(frozen=True)
class PlanarSystem:
    """Right-hand sides xdot = P, ydot = Q over the plane variables.

    ``state`` names the two plane variables; everything else in ``params``
    is carried along symbolically.
    """

    P: MPoly
    Q: MPoly
    state: tuple[str, str] = ("x", "y")
    params: tuple[str, ...] = ("b",)

    def divergence(self) -> MPoly:
        return self.P.derivative(self.state[0]) + self.Q.derivative(self.state[1])

    def subs_params(self, assignment: Mapping[str, Rat]) -> "PlanarSystem":
        keep = tuple(p for p in self.params if p not in assignment)
        return PlanarSystem(
            self.P.subs(assignment).with_vars(self.state + keep),
            self.Q.subs(assignment).with_vars(self.state + keep),
            self.state, keep)


_XYB = ("x", "y", "b")


def quintic_system() -> PlanarSystem:
    """The degree-five family: xdot = y, ydot = -x + (b^2 - x^2)(y + y^3)."""
    return PlanarSystem(
        parse_poly("y", _XYB),
        parse_poly("-x + (b^2 - x^2)*(y + y^3)", _XYB))


def vanderpol_system() -> PlanarSystem:
    """xdot = y, ydot = -x + (b^2 - x^2) y."""
    return PlanarSystem(
        parse_poly("y", _XYB),
        parse_poly("-x + (b^2 - x^2)*y", _XYB))


def quintic_u_chart() -> PlanarSystem:
    """The quintic family near horizontal infinity: chart (u, z) = (y/x, 1/x),
    time rescaled so the right-hand side is polynomial."""
    uzb = ("u", "z", "b")
    return PlanarSystem(
        parse_poly("-(1 + u^2)*z^4 - u*(1 - b^2*z^2)*(u^2 + z^2)", uzb),
        parse_poly("-u*z^5", uzb),
        state=("u", "z"))


def quintic_vs_chart() -> PlanarSystem:
    """The quintic family in the blown-up vertical chart (v, s) = (x/y, 1/x),
    time rescaled; the pair of separatrices tangent to the vertical direction
    passes through the regular points (0, 1/b) and (0, -1/b)."""
    vsb = ("v", "s", "b")
    return PlanarSystem(
        parse_poly("-(1 + v^2*s^2)*(1 - b^2*s^2) - v*s^4*(1 + v^2)", vsb),
        parse_poly("s^5", vsb),
        state=("v", "s"))


def vdp_dulac_candidate() -> MPoly:
    """Quadratic-in-y Dulac candidate for the van der Pol family."""
    return parse_poly("6*y^2 + 2*(x^2 - 3*b^2)*x*y + 6*x^2 + b^2*(3*b^2 - 4)", _XYB)


def dulac_candidate_low() -> MPoly:
    """Cubic-in-y candidate: covers the parameter range up to 0.651."""
    return parse_poly(
        "(2*x^3 + 6*b^2*(1 - b^2)*x)*y^3 + 6*(1 - b^2)*y^2"
        " + 2*(x^2 - 3*b^2)*x*y + 6*(1 - b^2)*x^2 + b^2*(3*b^2 - 4)", _XYB)


def dulac_candidate_high_numerator() -> MPoly:
    """Numerator of the rational candidate that reaches the 0.817 range."""
    return parse_poly(
        "1/2*b^18*x^6 + 1/2*b^18*x^4*y^2 + (1 + 1/2*b^12)*x^3*y^3"
        " + (1 + 3/2*b^2)*x^3*y"
        " - (3/5*b^10 + 5/3*b^14 + 2*b^16)*x^2*y^2"
        " + (3*b^2 - 3*b^4 + 21/10*b^6)*x*y^3"
        " + (3 - 3*b^2 + 2*b^4)*x^2 - b^2*(3 - 1/10*b^4)*x*y"
        " + (3 - 3*b^2 + 2*b^4)*y^2 + 3/2*b^4 - 2*b^2", _XYB)


def dulac_candidate_high() -> RationalFunction:
    """The rational candidate: numerator over the positive factor 5 + 6 b^18 x^2."""
    return RationalFunction(dulac_candidate_high_numerator(),
                            parse_poly("5 + 6*b^18*x^2", _XYB))


def _as_ratfunc(V, variables) -> RationalFunction:
    if isinstance(V, RationalFunction):
        return V
    if isinstance(V, MPoly):
        return RationalFunction.from_poly(V.with_vars(variables))
    raise TypeError("V must be an MPoly or RationalFunction")


def bendixson_m(V, sys: PlanarSystem) -> RationalFunction:
    """M = V_x P + V_y Q - V div(P, Q), exact; polynomial V gives polynomial M."""
    x, y = sys.state
    variables = tuple(dict.fromkeys(sys.state + sys.params + tuple(sys.P.vars)))
    V = _as_ratfunc(V, variables)
    P = RationalFunction.from_poly(sys.P.with_vars(variables))
    Q = RationalFunction.from_poly(sys.Q.with_vars(variables))
    div = RationalFunction.from_poly(sys.divergence().with_vars(variables))
    return V.derivative(x) * P + V.derivative(y) * Q - V * div


def without_contact(psi: RationalFunction, sys: PlanarSystem) -> RationalFunction:
    """N_psi(x) = Q(x, psi(x)) - psi'(x) P(x, psi(x)): the flow-curve pairing
    along the graph y = psi(x); a fixed sign means the graph is crossed one way."""
    x, y = sys.state
    variables = tuple(dict.fromkeys(psi.vars + sys.P.vars))
    xrf = RationalFunction.var(variables, x)
    assign = {x: xrf, y: RationalFunction(psi.num.with_vars(variables),
                                          psi.den.with_vars(variables))}
    Pc = compose_mpoly(sys.P, assign)
    Qc = compose_mpoly(sys.Q, assign)
    return Qc - assign[y].derivative(x) * Pc


def invariance_cofactor(F: MPoly, sys: PlanarSystem,
                        restrict: Mapping[str, RationalFunction] | None = None,
                        ) -> tuple[RationalFunction | None, MPoly | None]:
    """Evaluate F_x P + F_y Q against the curve F = 0.

    Returns (residue, cofactor).  When F divides the derivative along the
    flow the exact cofactor K with F_x P + F_y Q = K F is returned (residue
    None).  Otherwise, if ``restrict`` supplies a rational parametrization
    of the curve, the restriction of the derivative to it is returned as the
    residue (cofactor None).
    """
    if F.is_zero():
        raise PolyError("zero curve polynomial")
    x, y = sys.state
    D = F.derivative(x) * sys.P + F.derivative(y) * sys.Q
    if F.divides(D):
        return None, D.exact_div(F)
    if restrict is not None:
        return compose_mpoly(D, dict(restrict)), None
    return RationalFunction.from_poly(D), None


def line_intersection_count(V: MPoly, line_var: str, value: Rat,
                            at_params: Mapping[str, Rat] | None = None) -> int:
    """Distinct real intersections of {V = 0} with the line line_var = value."""
    restricted = V.subs({line_var: Fraction(value), **(at_params or {})})
    if restricted.is_zero():
        raise PolyError("V vanishes identically on the line")
    free = [v for v in restricted.vars if restricted.uses(v)]
    if not free:
        return 0
    if len(free) > 1:
        raise PolyError(f"restriction still depends on {free}")
    return rootiso.count_real_roots(restricted.as_unipoly(free[0]))


def divergence_decomposition_check(b_value: Rat | None = Fraction(1)) -> tuple[bool, MPoly]:
    """Check div(X) = 3K + 2x^2 + 1 - 3xy against the hyperbola cofactor.

    With b fixed at 1 the identity holds exactly and the first component is
    True; with b symbolic (b_value=None) the nonzero residue is returned.
    """
    sys = quintic_system()
    F = parse_poly("x*y + 1", _XYB)
    if b_value is not None:
        sys = sys.subs_params({"b": Fraction(b_value)})
        F = F.subs({"b": Fraction(b_value)}).with_vars(sys.P.vars)
    _, K = invariance_cofactor(F, sys)
    if K is None:
        # not invariant at this parameter: residue is the whole derivative
        D = F.derivative("x") * sys.P + F.derivative("y") * sys.Q
        return False, D
    decomposition = (3 * K + parse_poly("2*x^2 + 1 - 3*x*y", K.vars))
    residue = sys.divergence() - decomposition
    return residue.is_zero(), residue
