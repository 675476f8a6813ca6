import random
from fractions import Fraction as F

import pytest

from cyclecert.exactpoly import MPoly, PolyError, parse_poly, unipoly_gcd
from cyclecert.resultants import (discriminant, double_discriminant,
                                  double_discriminant_ordered, resultant,
                                  sylvester_matrix)

XYB = ("x", "y", "b")


def test_resultant_linear_convention():
    # documented sign convention: first polynomial's rows on top
    r = resultant(parse_poly("x - a", ("x", "a", "c")),
                  parse_poly("x - c", ("x", "a", "c")), "x")
    assert r == parse_poly("a - c", ("a", "c"))


def test_resultant_quadratic_hand_determinant():
    # 3x3 Sylvester determinant of (x^2+bx+c, 2x+b) computed by hand: 4c - b^2
    r = resultant(parse_poly("x^2 + b*x + c", ("x", "b", "c")),
                  parse_poly("2*x + b", ("x", "b", "c")), "x")
    assert r == parse_poly("4*c - b^2", ("b", "c"))


def test_resultant_cusp_family_hand_determinant():
    Fq = parse_poly("y^2 + x^3 + b*x^2 + b*x", XYB)
    r = resultant(Fq, Fq.derivative("y"), "y")
    assert r == parse_poly("4*(x^3 + b*x^2 + b*x)", ("x", "b"))


def test_resultant_agrees_with_sylvester_oracle():
    rng = random.Random(7)
    for _ in range(40):
        p = _random_poly(rng)
        q = _random_poly(rng)
        if p.degree("x") == 0 and q.degree("x") == 0:
            continue
        det = sylvester_matrix(p, q, "x").det()
        assert resultant(p, q, "x") == det


def _random_poly(rng, vars_=("x", "y")):
    terms = {}
    for _ in range(rng.randint(1, 6)):
        e = (rng.randint(0, 4), rng.randint(0, 4))
        terms[e] = F(rng.randint(-5, 5))
    p = MPoly(vars_, terms)
    return p if not p.is_zero() else parse_poly("x+1", vars_)


def test_resultant_multiplicative():
    rng = random.Random(11)
    for _ in range(15):
        p, q, r = (_random_poly(rng) for _ in range(3))
        if p.degree("x") == 0 or q.degree("x") == 0 or r.degree("x") == 0:
            continue
        assert resultant(p, q * r, "x") == resultant(p, q, "x") * resultant(p, r, "x")


def test_resultant_detects_common_roots_at_parameters():
    rng = random.Random(3)
    for _ in range(10):
        p = _random_poly(rng, ("x", "b"))
        q = _random_poly(rng, ("x", "b"))
        if p.degree("x") == 0 or q.degree("x") == 0:
            continue
        res = resultant(p, q, "x")
        for k in range(10):
            b0 = F(rng.randint(-8, 8), rng.randint(1, 5))
            ps, qs = p.subs({"b": b0}), q.subs({"b": b0})
            if ps.degree("x") != p.degree("x") or qs.degree("x") != q.degree("x"):
                continue  # specialization property needs stable degrees
            g = unipoly_gcd(ps.as_unipoly("x"), qs.as_unipoly("x"))
            val = res.eval({"b": b0}) if res.uses("b") else res.constant_value()
            assert (g.degree() > 0) == (val == 0)


def test_discriminant_quadratic():
    d = discriminant(parse_poly("x^2 + b*x + c", ("x", "b", "c")), "x")
    assert d == parse_poly("b^2 - 4*c", ("b", "c"))


def test_discriminant_exact_division_guard():
    with pytest.raises(PolyError):
        discriminant(parse_poly("b", ("x", "b")), "x")


def test_double_discriminant_cusp_family_exact():
    Fq = parse_poly("y^2 + x^3 + b*x^2 + b*x", XYB)
    dxy = double_discriminant_ordered(Fq, "x", "y")
    dyx = double_discriminant_ordered(Fq, "y", "x")
    assert dxy == parse_poly("-110592*b^9*(b-4)*(b-3)^6", ("b",)).as_unipoly()
    assert dyx == parse_poly("256*b^3*(b-4)", ("b",)).as_unipoly()
    g = double_discriminant(Fq)
    assert g == parse_poly("b^3*(b-4)", ("b",)).as_unipoly()
    # the gcd divides both orders
    assert dxy.divmod(g)[1].is_zero() and dyx.divmod(g)[1].is_zero()


def test_double_discriminant_zero_family():
    Fq = parse_poly("x^3*y^3 + x + 1", ("x", "y"))
    assert double_discriminant_ordered(Fq, "x", "y").is_zero()
    assert double_discriminant_ordered(Fq, "y", "x").is_zero()
    assert double_discriminant(Fq).is_zero()


def test_double_discriminant_coprime_constant():
    # no parameter and no singular point anywhere: both orders are nonzero
    # constants, so the normalized gcd is the constant 1
    Fq = parse_poly("x^2 + y^2 + 1", ("x", "y", "b"))
    g = double_discriminant(Fq)
    assert g.degree() == 0 and not g.is_zero()
    assert g == parse_poly("1", ("b",)).as_unipoly()


def test_planted_singularity_is_flagged():
    # F has a singular point at (c0, c1) when b = b0: both orders must vanish there
    rng = random.Random(23)
    for _ in range(8):
        c0 = F(rng.randint(-3, 3))
        c1 = F(rng.randint(-3, 3))
        b0 = F(rng.randint(-3, 3))
        x, y, b = (MPoly.var(XYB, v) for v in XYB)
        u = x ** 2 + 1 + y ** 2
        v = y ** 2 + 2
        w = x * y + x + 1
        Fq = (y - c1) ** 2 * u + (x - c0) ** 2 * v + (b - b0) * w
        for first, second in (("x", "y"), ("y", "x")):
            dd = double_discriminant_ordered(Fq, first, second)
            assert dd.eval(b0) == 0
