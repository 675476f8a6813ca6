"""Parametric sign-control certificates.

The positivity engine behind the Dulac arguments.  Everything rests on one
continuity principle: as the parameter moves over an interval, real roots of
a polynomial family can only appear through a real double root (detected by
the discriminant), escape through infinity (leading coefficient), or cross
the region boundary (boundary restriction).  Certifying all three away and
checking one sample pins the sign on the whole interval.

Three layers:

* one-variable families G_b(x) on the line or a halfline (the classical
  one-parameter lemma);
* fixed two-variable polynomials F(x,y) on the plane or the hyperbola
  region {xy + 1 > 0}, analyzed as x-families with y as the parameter,
  splitting the y-range at the roots of disc_x and excluding roots from the
  region slice by Sturm counts (this is the per-sample engine);
* parametric two-variable families F_b(x,y): the full pipeline combining
  the double discriminant in b, the per-sample engine at one sample per
  subinterval, the points at infinity with their quasi-homogeneous
  isolated-zero certificates, and the boundary restriction.

Certificates carry their witnesses (sample values, root intervals, the
polynomials checked) and serialize to plain dicts for the JSON reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import _zpoly, rootiso
from .exactpoly import MPoly, PolyError, Rat, UniPoly, leading_form, newton_weights
from .ratfunc import RationalFunction, compose_mpoly
from .resultants import discriminant, double_discriminant_ordered
from .rootiso import IsolatingInterval

__all__ = [
    "RegionSpec",
    "SignCertificate",
    "CertificateFailure",
    "lemma56_positive",
    "family_rootfree",
    "slice_positive_2d",
    "infinity_points",
    "uniformly_isolated",
    "certify_positive_2d",
]


class CertificateFailure(Exception):
    """A certificate hypothesis failed; carries the reason and a witness."""

    def __init__(self, reason: str, witness=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


@dataclass(frozen=True)
class RegionSpec:
    """Open region for a positivity claim.

    kind is one of ``whole_plane`` (or the whole line for one-variable
    families), ``halfline`` (c(b), infinity) with a rational-function lower
    end, or ``semialgebraic`` {g(x,y) > 0} for a single polynomial
    inequality.  The two-variable pipeline supports the plane and the
    hyperbola region {xy + 1 > 0}.
    """

    kind: str
    boundary: MPoly | None = None
    halfline_c: RationalFunction | None = None

    @classmethod
    def whole_plane(cls) -> "RegionSpec":
        return cls("whole_plane")

    @classmethod
    def halfline(cls, c: RationalFunction) -> "RegionSpec":
        return cls("halfline", halfline_c=c)

    @classmethod
    def semialgebraic(cls, g: MPoly) -> "RegionSpec":
        if g.is_zero():
            raise PolyError("empty boundary polynomial")
        return cls("semialgebraic", boundary=g)

    def is_hyperbola(self) -> bool:
        """True when the region is a positive multiple of {xy + 1 > 0}."""
        if self.kind != "semialgebraic":
            return False
        g = self.boundary
        from .exactpoly import parse_poly
        h = parse_poly("x*y + 1", ("x", "y"))
        g, h = MPoly._align(g, h)
        try:
            q = g.exact_div(h)
        except PolyError:
            return False
        return q.is_constant() and q.constant_value() > 0


@dataclass
class SignCertificate:
    """Structured record of a positivity verification."""

    family: str
    interval: tuple[str, str]
    verdict: str  # positive_on_region | nonnegative_isolated_zeros | failed
    failure_reason: str | None = None
    witnesses: list = field(default_factory=list)
    disc_check: dict | None = None
    infinity_check: list = field(default_factory=list)
    boundary_check: dict | None = None

    def passed(self) -> bool:
        return self.verdict in ("positive_on_region", "nonnegative_isolated_zeros")

    def to_jsonable(self) -> dict:
        return {
            "family": self.family,
            "interval": list(self.interval),
            "verdict": self.verdict,
            "failure_reason": self.failure_reason,
            "witnesses": self.witnesses,
            "disc_check": self.disc_check,
            "infinity_check": self.infinity_check,
            "boundary_check": self.boundary_check,
        }


# ---------------------------------------------------------------------------
# small exact helpers
# ---------------------------------------------------------------------------

def _strip_linear_roots(u: UniPoly, points: Sequence[Fraction]) -> UniPoly:
    for p in points:
        lin = UniPoly(u.var, [-Fraction(p), Fraction(1)])
        while not u.is_zero() and u.eval(p) == 0:
            u = u.exact_div(lin)
    return u


def count_open(u: UniPoly, lo: Rat, hi: Rat) -> int:
    """Distinct roots in the open interval, endpoint roots allowed and ignored."""
    lo, hi = Fraction(lo), Fraction(hi)
    u = _strip_linear_roots(u, (lo, hi))
    if u.degree() < 1:
        return 0
    return rootiso.sturm_count(u, lo, hi)


def _rootfree_or_witness(u: UniPoly, lo: Rat, hi: Rat, what: str) -> dict:
    n = count_open(u, lo, hi)
    if n == 0:
        return {"check": what, "interval_roots": 0, "degree": u.degree()}
    iso = rootiso.isolate_roots(_strip_linear_roots(u, (Fraction(lo), Fraction(hi))),
                                lo, hi)
    w = iso.intervals[0] if iso.intervals else None
    raise CertificateFailure(
        what, witness={"roots_in_interval": n,
                       "first_root": [str(w.lo), str(w.hi)] if w else None})


def _positive_on_line(u: UniPoly, tag: str) -> dict:
    """u > 0 on the whole real line: no real roots, even degree, one sample."""
    if u.degree() % 2 or u.lc() <= 0:
        raise CertificateFailure(tag, witness={"reason": "sign at infinity not positive"})
    if rootiso.count_real_roots(u) != 0:
        raise CertificateFailure(tag, witness={"reason": "real roots exist"})
    v = u.eval(0)
    if v <= 0:
        raise CertificateFailure(tag, witness={"sample_value": str(v)})
    return {"check": tag, "real_roots": 0, "sample_at": "0", "sample_value": str(v)}


def refine_splits(u: UniPoly, intervals: list[IsolatingInterval],
                  lo: Fraction, hi: Fraction,
                  width: Fraction = Fraction(1, 1024)) -> list[IsolatingInterval]:
    """Shrink isolating intervals until they are strictly separated from each
    other and from the enclosing interval's endpoints."""
    while True:
        refined = [rootiso.refine_root(u, iv, width) for iv in intervals]
        bounds = [lo] + [b for iv in refined for b in (iv.lo, iv.hi)] + [hi]
        if all(a < b for a, b in zip(bounds, bounds[1:])):
            return refined
        width /= 16
        if width < Fraction(1, 2 ** 512):
            raise CertificateFailure("split_refinement_failed")


def subinterval_samples(splits: list[IsolatingInterval],
                        lo: Fraction, hi: Fraction) -> list[Fraction]:
    """One rational sample inside each gap of (lo, hi) minus the split intervals.

    Keeps the sample magnitudes small (the upper range end may be a huge
    Cauchy-type bound).
    """
    if not splits:
        return [lo + min(Fraction(1), (hi - lo) / 2)]
    samples = [(lo + splits[0].lo) / 2]
    for a, b in zip(splits, splits[1:]):
        samples.append((a.hi + b.lo) / 2)
    samples.append(splits[-1].hi + min(Fraction(1), (hi - splits[-1].hi) / 2))
    return samples


def _positive_on_halfline(u: UniPoly, c: Rat, tag: str) -> dict:
    """u > 0 on (c, infinity): no roots there, positive leading coefficient."""
    c = Fraction(c)
    if u.lc() <= 0:
        raise CertificateFailure(tag, witness={"reason": "negative at +infinity"})
    if u.eval(c) == 0:
        raise CertificateFailure(tag, witness={"reason": "vanishes at the halfline end"})
    bound = max(rootiso.cauchy_bound(u), c + 1)
    n = count_open(u, c, bound + 1)
    if n != 0:
        raise CertificateFailure(tag, witness={"roots_in_halfline": n})
    v = u.eval(c + 1)
    if v <= 0:
        raise CertificateFailure(tag, witness={"sample_value": str(v)})
    return {"check": tag, "halfline_roots": 0, "sample_at": str(c + 1),
            "sample_value": str(v)}


# ---------------------------------------------------------------------------
# one-parameter families
# ---------------------------------------------------------------------------

def family_rootfree(G: MPoly, var: str, param: str, interval: tuple[Rat, Rat],
                    sample: Rat | None = None, what: str = "family_rootfree") -> dict:
    """Certify G_b(var) has no real roots for every b in the open interval.

    Hypotheses: the leading coefficient and disc_var(G) are root-free in b on
    the interval, and one sample value of b gives a root-free specialization.
    Raises CertificateFailure with the failing piece otherwise.
    """
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    evidence: dict = {"check": what, "interval": [str(lo), str(hi)]}
    n = G.degree(var)
    if n == 0:
        u = G.as_unipoly(param) if G.uses(param) else UniPoly(param, [G.constant_value()])
        evidence["constant_in_var"] = True
        evidence["nonvanishing"] = _rootfree_or_witness(u, lo, hi, what + ":constant")
        return evidence
    lead = G.coeff_of(var, n)
    lead_u = lead.as_unipoly(param) if lead.uses(param) else UniPoly(param, [lead.constant_value()])
    evidence["leading_coeff"] = _rootfree_or_witness(lead_u, lo, hi, what + ":leading_coeff")
    disc = discriminant(G, var)
    if disc.is_zero():
        raise CertificateFailure(what + ":discriminant_zero")
    if disc.uses(param):
        disc_u = disc.as_unipoly(param)
        evidence["discriminant"] = _rootfree_or_witness(disc_u, lo, hi, what + ":discriminant")
    else:
        if disc.constant_value() == 0:
            raise CertificateFailure(what + ":discriminant_zero")
        evidence["discriminant"] = {"constant": str(disc.constant_value())}
    if sample is None:
        sample = (lo + hi) / 2
    sample = Fraction(sample)
    if not lo < sample < hi:
        raise PolyError("sample parameter outside the interval")
    spec = G.subs({param: sample})
    u = spec.as_unipoly(var)
    roots = rootiso.count_real_roots(u)
    if roots != 0:
        raise CertificateFailure(what + ":sample_has_roots",
                                 witness={"sample": str(sample), "roots": roots})
    evidence["sample"] = {"param": str(sample), "real_roots": 0}
    return evidence


def lemma56_positive(G: MPoly, I: tuple[Rat, Rat], b0: Rat,
                     region: RegionSpec, var: str = "x", param: str = "b",
                     ) -> SignCertificate:
    """One-parameter positivity: G_b(var) > 0 on the region for all b in I.

    Checks (i) positivity at the sample b0, (ii) the discriminant in var is
    root-free in b on I, (iii) the leading coefficient is root-free on I,
    and for halfline regions (iv) the boundary value G_b(c(b)) is root-free.
    """
    lo, hi = Fraction(I[0]), Fraction(I[1])
    b0 = Fraction(b0)
    cert = SignCertificate(family=str(G), interval=(str(lo), str(hi)), verdict="pending")
    if not lo < b0 < hi:
        raise PolyError("b0 outside the interval")
    try:
        n = G.degree(var)
        if n == 0:
            raise CertificateFailure("constant_in_main_variable")
        lead = G.coeff_of(var, n)
        lead_u = (lead.as_unipoly(param) if lead.uses(param)
                  else UniPoly(param, [lead.constant_value()]))
        ev_iii = _rootfree_or_witness(lead_u, lo, hi, "hypothesis_iii:leading_coeff")
        disc = discriminant(G, var)
        if disc.is_zero() or (disc.is_constant() and disc.constant_value() == 0):
            raise CertificateFailure("hypothesis_ii:discriminant_identically_zero")
        if disc.uses(param):
            ev_ii = _rootfree_or_witness(disc.as_unipoly(param), lo, hi,
                                         "hypothesis_ii:discriminant")
        else:
            ev_ii = {"check": "hypothesis_ii:discriminant",
                     "constant": str(disc.constant_value())}
        cert.disc_check = ev_ii
        spec = G.subs({param: b0}).as_unipoly(var)
        if region.kind == "whole_plane":
            ev_i = _positive_on_line(spec, "hypothesis_i:sample_positive")
            ev_iv = None
        elif region.kind == "halfline":
            c = region.halfline_c
            c0 = c.eval({param: b0})
            ev_i = _positive_on_halfline(spec, c0, "hypothesis_i:sample_positive")
            comp = compose_mpoly(G, {var: c})
            ev_iv = _rootfree_or_witness(
                comp.num.as_unipoly(param), lo, hi, "hypothesis_iv:boundary_value")
        else:
            raise CertificateFailure("unsupported_region_for_one_parameter_family")
        cert.witnesses = [{"b0": str(b0), **ev_i}, ev_iii] + ([ev_iv] if ev_iv else [])
        cert.boundary_check = ev_iv
        cert.verdict = "positive_on_region"
    except CertificateFailure as fail:
        cert.verdict = "failed"
        cert.failure_reason = fail.reason
        cert.witnesses.append({"failure": fail.reason, "witness": fail.witness})
    return cert


# ---------------------------------------------------------------------------
# fixed F(x, y): the per-sample two-variable engine
# ---------------------------------------------------------------------------

def slice_positive_2d(F: MPoly, region: RegionSpec,
                      x: str = "x", y: str = "y") -> dict:
    """Certify F(x,y) > 0 on the region for a polynomial with fixed coefficients.

    Views F as a family in x parametrized by y.  The plane case requires the
    x-discriminant to be root-free in y; the hyperbola region additionally
    tolerates parameter ranges where roots exist but are excluded from the
    slice (-1/y, infinity) by Sturm counts, which is sound because they can
    neither cross the checked boundary nor escape past the checked leading
    coefficient.  Raises CertificateFailure on any failed hypothesis.
    """
    free = [v for v in F.vars if F.uses(v) and v not in (x, y)]
    if free:
        raise PolyError(f"slice certificate needs fixed coefficients; saw {free}")
    hyperbola = region.is_hyperbola()
    if not (region.kind == "whole_plane" or hyperbola):
        raise CertificateFailure("unsupported_region")
    evidence: dict = {"region": "plane" if not hyperbola else "xy+1>0"}

    symmetric = F.subs_poly({x: -MPoly.var(F.vars, x), y: -MPoly.var(F.vars, y)}) == F
    evidence["symmetric_under_point_reflection"] = symmetric
    if hyperbola and not symmetric:
        raise CertificateFailure("hyperbola_region_requires_symmetry")

    n = F.degree(x)
    lead = F.coeff_of(x, n)
    lead_u = lead.as_unipoly(y) if lead.uses(y) else UniPoly(y, [lead.constant_value()])
    if symmetric:
        if lead_u.degree() >= 1:
            evidence["leading_coeff"] = _rootfree_or_witness(
                lead_u, 0, rootiso.cauchy_bound(lead_u) + 1, "leading_coeff_positive_y")
        if lead_u.eval(1) <= 0:
            raise CertificateFailure("leading_coeff_not_positive")
    else:
        evidence["leading_coeff"] = _positive_on_line(lead_u, "leading_coeff_positive")
    if region.kind == "whole_plane" and n % 2:
        raise CertificateFailure("odd_degree_in_x")

    # y = 0 slice is a whole-line slice in both supported regions
    s0 = F.subs({y: Fraction(0)}).as_unipoly(x)
    evidence["axis_slice"] = _positive_on_line(s0, "axis_slice_positive")

    if hyperbola:
        # boundary restriction: x^{deg_y F} * F(x, -1/x) never vanishes (x != 0)
        xv = RationalFunction.var((x,), x)
        comp = compose_mpoly(F, {x: xv, y: RationalFunction.const((x,), -1) / xv})
        bnum = comp.num.as_unipoly(x)
        k, b0 = bnum.strip_zero_root()
        bound = rootiso.cauchy_bound(b0) + 1
        evidence["boundary_restriction"] = _rootfree_or_witness(
            b0, -bound, bound, "boundary_restriction_rootfree")

    disc = discriminant(F, x)
    disc_u = disc.as_unipoly(y) if disc.uses(y) else UniPoly(y, [disc.constant_value()])
    if disc_u.is_zero():
        raise CertificateFailure("x_discriminant_identically_zero")
    ybound = rootiso.cauchy_bound(disc_u) + 1 if disc_u.degree() >= 1 else Fraction(2)
    splits: list[IsolatingInterval] = []
    if disc_u.degree() >= 1:
        stripped = _strip_linear_roots(disc_u, (Fraction(0),))
        iso = rootiso.isolate_roots(stripped, 0, ybound, max_depth=512)
        if iso.status != "complete":
            raise CertificateFailure("discriminant_isolation_budget")
        if iso.intervals:
            splits = refine_splits(stripped, iso.intervals, Fraction(0), ybound)
    if splits and not hyperbola:
        raise CertificateFailure(
            "x_discriminant_has_positive_roots",
            witness={"count": len(splits),
                     "first": [str(splits[0].lo), str(splits[0].hi)]})
    # sample one y per maximal subinterval between discriminant roots
    slice_records = []
    for ys in subinterval_samples(splits, Fraction(0), ybound):
        sy = F.subs({y: ys}).as_unipoly(x)
        if hyperbola:
            c = -1 / ys
            if sy.eval(c) == 0:
                raise CertificateFailure("slice_touches_boundary", witness={"y": str(ys)})
            nroots = count_open(sy, c, rootiso.cauchy_bound(sy) + 1)
            val = sy.eval(c + 1)
            if nroots != 0 or val <= 0:
                raise CertificateFailure(
                    "slice_not_positive",
                    witness={"y": str(ys), "roots_in_slice": nroots, "sample": str(val)})
            slice_records.append({"y": str(ys), "slice": f"({c}, inf)",
                                  "roots_in_slice": 0})
        else:
            rec = _positive_on_line(sy, "slice_positive")
            slice_records.append({"y": str(ys), **rec})
    evidence["slices"] = slice_records
    if splits:
        evidence["split_points"] = [[str(iv.lo), str(iv.hi)] for iv in splits]
        evidence["split_note"] = (
            "at split values the x-roots are limits of roots lying in the closed "
            "complement of the slice and the boundary value never vanishes, so "
            "they stay outside the open region")
    return evidence


# ---------------------------------------------------------------------------
# infinity analysis
# ---------------------------------------------------------------------------

def _chart_polys(F: MPoly, x: str, y: str) -> tuple[MPoly, MPoly]:
    """Homogenize in (x, y) and read off the two infinity charts (x,z), (y,z)."""
    zvar = "z_"
    Ft = F.homogenize(zvar, within=(x, y))
    chart1 = Ft.subs({y: Fraction(1)})   # directions [x* : 1 : 0]
    chart2 = Ft.subs({x: Fraction(1)})   # directions [1 : y* : 0]
    return chart1, chart2


def infinity_points(F: MPoly, region: RegionSpec,
                    param: str | None = "b", interval: tuple[Rat, Rat] | None = None,
                    x: str = "x", y: str = "y") -> list[dict]:
    """Real directions at infinity of {F = 0} with region membership flags.

    For parametric families (param and interval given) the directions are
    certified not to move with the parameter: the non-axis factor of the
    leading form must be root-free over the interval, else
    CertificateFailure("moving_directions").  Membership in the region
    closure follows the sign of the region polynomial's leading form along
    the direction, ties counting as inside.
    """
    if F.is_zero():
        raise PolyError("zero polynomial")
    H = leading_form(F, (x, y))
    hx = H.subs({y: Fraction(1)})  # roots t of hx give directions [t : 1]
    total = max(e[F._index(x)] + e[F._index(y)] for e in F.terms)
    pure_x = H.coeff_of(x, total)  # coefficient of x^total (direction [1:0])
    out: list[dict] = []

    def in_region(px: Rat, py: Rat) -> bool:
        if region.kind == "whole_plane":
            return True
        if region.kind == "semialgebraic":
            gl = leading_form(region.boundary, (x, y))
            v = gl.subs({x: Fraction(px), y: Fraction(py)})
            if not v.is_constant():
                return True  # parameter-dependent tie: treated as inside
            return v.constant_value() >= 0
        return True

    # direction [0 : 1]: present iff x divides hx
    u = hx
    k = 0
    while u.degree(x) > 0 and u.coeff_of(x, 0).is_zero():
        u = u.exact_div(MPoly.var(u.vars, x))
        k += 1
    if k > 0:
        out.append({"direction": [0, 1], "chart": "x_over_y",
                    "in_region": in_region(0, 1)})
    # direction [1 : 0]: present iff the pure-x coefficient vanishes identically
    if pure_x.is_zero():
        out.append({"direction": [1, 0], "chart": "y_over_x",
                    "in_region": in_region(1, 0)})
    # other directions: roots of the residual factor u(t) in t
    if u.degree(x) > 0:
        if param is not None and u.uses(param):
            if interval is None:
                raise PolyError("parametric leading form needs an interval")
            try:
                family_rootfree(u, x, param, interval, what="infinity_directions")
            except CertificateFailure as fail:
                raise CertificateFailure("moving_directions", witness=fail.witness)
        else:
            uu = u.as_unipoly(x)
            iso = rootiso.isolate_roots(uu, -rootiso.cauchy_bound(uu) - 1,
                                        rootiso.cauchy_bound(uu) + 1)
            for iv in iso.intervals:
                out.append({"direction": ["root", [str(iv.lo), str(iv.hi)], 1],
                            "chart": "x_over_y",
                            "in_region": in_region(iv.midpoint(), 1)})
    return out


def uniformly_isolated(G: MPoly, I: tuple[Rat, Rat],
                       vars2: tuple[str, str] | None = None,
                       param: str = "b") -> dict:
    """Certify that the origin is a uniformly isolated point of G_b = 0, b in I.

    Scans the Newton polygon edges of G in its two chart variables; an edge
    qualifies when its quasi-homogeneous form G0 has only the trivial real
    zero for every b in I: both specializations G0(X, 1) and G0(X, -1) are
    root-free families over I, and the pure monomials on each axis have
    root-free coefficients.  Returns the first qualifying edge's evidence;
    raises CertificateFailure("no_qualifying_edge") when none works.
    """
    if vars2 is None:
        used = [v for v in G.vars if G.uses(v) and v != param]
        if len(used) != 2:
            raise PolyError(f"cannot infer the two chart variables from {used}")
        vars2 = (used[0], used[1])
    w1, w2 = vars2
    lo, hi = Fraction(I[0]), Fraction(I[1])
    edges = newton_weights(G, vars2)
    failures = []
    for (p, q, m, G0) in edges:
        try:
            ev = {"weights": [p, q], "order": m, "form": str(G0)}
            for axis_var, other in ((w1, w2), (w2, w1)):
                axis = G0.subs({other: Fraction(0)})
                if axis.is_zero():
                    raise CertificateFailure("axis_contained_in_form",
                                             witness={"axis": axis_var})
                adeg = axis.degree(axis_var)
                if adeg == 0:
                    raise CertificateFailure("form_has_constant_term")
                coeff = axis.coeff_of(axis_var, adeg)
                cu = (coeff.as_unipoly(param) if coeff.uses(param)
                      else UniPoly(param, [coeff.constant_value()]))
                ev[f"axis_{axis_var}"] = _rootfree_or_witness(
                    cu, lo, hi, f"axis_coefficient_{axis_var}")
            for val, tag in ((Fraction(1), "plus"), (Fraction(-1), "minus")):
                spec = G0.subs({w2: val})
                if spec.degree(w1) == 0:
                    cu = (spec.as_unipoly(param) if spec.uses(param)
                          else UniPoly(param, [spec.constant_value()]))
                    ev[f"section_{tag}"] = _rootfree_or_witness(
                        cu, lo, hi, f"section_{tag}_nonvanishing")
                else:
                    ev[f"section_{tag}"] = family_rootfree(
                        spec, w1, param, (lo, hi), what=f"section_{tag}_rootfree")
            ev["verdict"] = "uniformly_isolated"
            return ev
        except CertificateFailure as fail:
            failures.append({"weights": [p, q], "reason": fail.reason,
                             "witness": fail.witness})
    raise CertificateFailure("no_qualifying_edge", witness=failures)


# ---------------------------------------------------------------------------
# the full two-variable family pipeline
# ---------------------------------------------------------------------------

def certify_positive_2d(F: MPoly, region: RegionSpec, I: tuple[Rat, Rat],
                        b0_list: Sequence[Rat], param: str = "b",
                        dd_order: tuple[str, str] = ("y", "x"),
                        dd: UniPoly | None = None,
                        x: str = "x", y: str = "y") -> SignCertificate:
    """Full positivity pipeline for a one-parameter family F_b(x,y) on a region.

    (ii) the ordered double discriminant (inner dd_order[0], then
    dd_order[1]) is computed (or taken precomputed via ``dd``), its roots in
    I isolated and used to split I; (i) each subinterval gets one sample from
    b0_list certified by the per-sample engine; (iii) every direction at
    infinity inside the region closure is certified uniformly isolated on I;
    (iv) the boundary restriction is root-free for all b in I.  Verdict is
    positive_on_region without splits, nonnegative_isolated_zeros with them
    (the sign extends to the split values by continuity, where zeros can
    only be isolated points).
    """
    lo, hi = Fraction(I[0]), Fraction(I[1])
    cert = SignCertificate(family=str(F), interval=(str(lo), str(hi)), verdict="pending")
    try:
        # hypothesis (ii): double discriminant and interval splitting
        if dd is None:
            dd = double_discriminant_ordered(F, dd_order[0], dd_order[1])
            if dd.is_zero():
                other = (dd_order[1], dd_order[0])
                dd = double_discriminant_ordered(F, other[0], other[1])
        if dd.is_zero():
            raise CertificateFailure("double_discriminant_identically_zero")
        stripped = _strip_linear_roots(dd, (lo, hi))
        sf = UniPoly.from_int_coeffs(
            dd.var, _zpoly.squarefree_part(stripped.primitive_int()[1]))
        iso = rootiso.isolate_roots(sf, lo, hi, max_depth=512)
        if iso.status != "complete":
            raise CertificateFailure("double_discriminant_isolation_budget",
                                     witness={"undecided": [
                                         [str(a), str(b)] for a, b in iso.undecided]})
        splits = (refine_splits(sf, iso.intervals, lo, hi, Fraction(1, 100000))
                  if iso.intervals else [])
        cert.disc_check = {
            "polynomial_degree": dd.degree(),
            "order": list(dd_order),
            "roots_in_interval": [[str(iv.lo), str(iv.hi)] for iv in splits],
        }
        # subintervals and their samples
        cuts = [(lo, lo)] + [(iv.lo, iv.hi) for iv in splits] + [(hi, hi)]
        subintervals = [(a[1], b[0]) for a, b in zip(cuts, cuts[1:])]
        if len(b0_list) != len(subintervals):
            raise PolyError(
                f"need {len(subintervals)} samples (one per subinterval), "
                f"got {len(b0_list)}")
        # hypothesis (i): per-sample slice certificates
        for (a, b), b0 in zip(subintervals, b0_list):
            b0 = Fraction(b0)
            if not a < b0 < b:
                raise PolyError(f"sample {b0} not inside subinterval ({a}, {b})")
            ev = slice_positive_2d(F.subs({param: b0}), region, x, y)
            cert.witnesses.append({"subinterval": [str(a), str(b)],
                                   "b0": str(b0), **ev})
        # hypothesis (iii): points at infinity
        directions = infinity_points(F, region, param, (lo, hi), x, y)
        chart1, chart2 = _chart_polys(F, x, y)
        for d in directions:
            if not d["in_region"]:
                cert.infinity_check.append({**d, "skipped": "outside region closure"})
                continue
            if d["direction"] not in ([0, 1], [1, 0]):
                raise CertificateFailure("nonaxis_direction_unsupported", witness=d)
            chart_poly = chart1 if d["direction"] == [0, 1] else chart2
            cvars = (x, "z_") if d["direction"] == [0, 1] else (y, "z_")
            ev = uniformly_isolated(chart_poly, (lo, hi), cvars, param)
            cert.infinity_check.append({**d, **ev})
        # hypothesis (iv): boundary restriction
        if region.kind == "whole_plane":
            cert.boundary_check = {"check": "empty_boundary"}
        elif region.is_hyperbola():
            xv = RationalFunction.var((x, param), x)
            comp = compose_mpoly(F, {x: xv,
                                     y: RationalFunction.const((x, param), -1) / xv})
            B = comp.num
            k = 0
            while B.degree(x) > 0 and B.coeff_of(x, 0).is_zero():
                B = B.exact_div(MPoly.var(B.vars, x))
                k += 1
            cert.boundary_check = family_rootfree(
                B, x, param, (lo, hi), what="boundary_restriction")
            cert.boundary_check["stripped_x_power"] = k
            cert.boundary_check["note"] = "x = 0 carries no boundary point"
        else:
            raise CertificateFailure("unsupported_region")
        cert.verdict = ("positive_on_region" if not splits
                        else "nonnegative_isolated_zeros")
    except CertificateFailure as fail:
        cert.verdict = "failed"
        cert.failure_reason = fail.reason
        cert.witnesses.append({"failure": fail.reason, "witness": fail.witness})
    return cert
