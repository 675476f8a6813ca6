from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cyclecert.exactpoly import (MPoly, ParseError, PolyError, UniPoly,
                                 eval_poly, is_perfect_square, leading_form,
                                 newton_weights, parse_poly, squarefree_part)

XYB = ("x", "y", "b")


# -- parsing ----------------------------------------------------------------

def test_parse_quadratic():
    p = parse_poly("x^2 - 3*x + 2", ["x"])
    assert p.as_unipoly().coeffs == [F(2), F(-3), F(1)]


def test_parse_dulac_candidate_matches_construction():
    p = parse_poly("6*y^2 + 2*(x^2 - 3*b^2)*x*y + 6*x^2 + b^2*(3*b^2-4)", XYB)
    x, y, b = (MPoly.var(XYB, v) for v in XYB)
    q = 6 * y ** 2 + 2 * (x ** 2 - 3 * b ** 2) * x * y + 6 * x ** 2 \
        + b ** 2 * (3 * b ** 2 - 4)
    assert p == q


def test_parse_cancellation_gives_zero():
    assert parse_poly("(x+1)^2 - (x^2+2*x+1)", ["x"]).is_zero()


def test_parse_rational_literal():
    p = parse_poly("1/2*x + 3/4", ["x"])
    assert p.as_unipoly().coeffs == [F(3, 4), F(1, 2)]


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_poly("x^2 + ", ["x"])
    assert err.value.position > 0
    with pytest.raises(ParseError, match="unknown variable"):
        parse_poly("x + z", ["x"])
    with pytest.raises(ParseError):
        parse_poly("x^-2", ["x"])
    with pytest.raises(ParseError):
        parse_poly("3/x", ["x"])
    with pytest.raises(ParseError):
        parse_poly("1/0", ["x"])


def test_print_parse_round_trip():
    p = parse_poly("(x - 2*y + b)^3 - 7/5*x*y*b + 1", XYB)
    assert parse_poly(str(p), XYB) == p


# -- evaluation -------------------------------------------------------------

M19_TEXT = ("6*((2-3*b^2)*x^4*y^2 - 2*b^2*(2-b^2)*x^3*y^3 + (2-b^2)*x^2*y^4)"
            "+ 2*(2-3*b^2)*x^4 - 3*b^2*(14-15*b^2)*x^2*y^2 + 12*b^4*(2-b^2)*x*y^3"
            "- b^2*(4-9*b^2)*x^2 + 3*b^4*(2-3*b^2)*y^2 + b^4*(4-3*b^2)")

M12_TEXT = ("15/2*x^4*y^2 - 21/4*x^3*y^3 + 21/2*x^2*y^4 - 123/16*x^2*y^2"
            " + 21/16*x*y^3 + 5/2*x^4 - 7/16*x^2 + 15/64*y^2 + 13/64")


def test_eval_root():
    assert eval_poly(parse_poly("x^2-3*x+2", ["x"]), {"x": F(1)}) == 0


def test_eval_specialized_family_matches_displayed_slice():
    m = parse_poly(M19_TEXT, XYB)
    m12 = parse_poly(M12_TEXT, ("x", "y"))
    at = {"x": F(1), "y": F(1)}
    assert m.eval({**at, "b": F(1, 2)}) == m12.eval(at)
    # and the full specialization agrees symbolically
    assert m.subs({"b": F(1, 2)}) == m12


def test_eval_all_zero_gives_constant_term():
    p = parse_poly("x*y + 7/3", ("x", "y"))
    assert p.eval({"x": F(0), "y": F(0)}) == F(7, 3)


def test_eval_missing_assignment():
    with pytest.raises(PolyError, match="missing"):
        parse_poly("x*y", ("x", "y")).eval({"x": F(1)})


# -- square-free parts and squares -------------------------------------------

def test_squarefree_examples():
    p = parse_poly("(x-1)^2*(x+2)", ["x"]).as_unipoly()
    assert squarefree_part(p) == parse_poly("(x-1)*(x+2)", ["x"]).as_unipoly()
    q = parse_poly("x^2+x+1", ["x"]).as_unipoly()
    assert squarefree_part(q) == q  # idempotent on square-free input
    assert squarefree_part(parse_poly("x^4", ["x"]).as_unipoly()) == \
        parse_poly("x", ["x"]).as_unipoly()


def test_squarefree_divides_and_is_squarefree():
    p = parse_poly("(x-1)^3*(x+1)^2*(x-5)", ["x"]).as_unipoly()
    s = squarefree_part(p)
    assert p.divmod(s)[1].is_zero()
    assert squarefree_part(s) == s


def test_perfect_square():
    ok, r = is_perfect_square(parse_poly("(x^2+1)^2", ["x"]).as_unipoly())
    assert ok and r == parse_poly("x^2+1", ["x"]).as_unipoly()
    ok, _ = is_perfect_square(parse_poly("x^2-1", ["x"]).as_unipoly())
    assert not ok
    ok, r = is_perfect_square(parse_poly("4*(x-3)^2*(x^2+x+1)^4", ["x"]).as_unipoly())
    assert ok and r == parse_poly("(x-3)*(x^2+x+1)^2", ["x"]).as_unipoly()


# -- leading forms ------------------------------------------------------------

def test_leading_form_examples():
    m = parse_poly(M19_TEXT, XYB)
    h6 = leading_form(m, ("x", "y"))
    target = parse_poly(
        "6*x^2*y^2*((2-3*b^2)*x^2 - 2*b^2*(2-b^2)*x*y + (2-b^2)*y^2)", XYB)
    assert h6 == target
    assert leading_form(parse_poly("x+y+1", ("x", "y")), ("x", "y")) == \
        parse_poly("x+y", ("x", "y"))
    # constant in the designated pair: returned unchanged
    c = parse_poly("b^2+1", XYB)
    assert leading_form(c, ("x", "y")) == c


def test_leading_form_multiplicative():
    p = parse_poly("x^2*y - 3*x + 1", XYB)
    q = parse_poly("x*y^2 + y - 4", XYB)
    assert leading_form(p * q, ("x", "y")) == \
        leading_form(p, ("x", "y")) * leading_form(q, ("x", "y"))


# -- Newton polygon -----------------------------------------------------------

def test_newton_weights_trivial():
    edges = newton_weights(parse_poly("x^2+y^2", ("x", "y")), ("x", "y"))
    assert len(edges) == 1
    p, q, m, g0 = edges[0]
    assert (p, q, m) == (1, 1, 2)
    assert g0 == parse_poly("x^2+y^2", ("x", "y"))


def test_newton_weights_quasi_homogeneous_property():
    p = parse_poly("x^3 + x*y + y^4 + x^2*y^2", ("x", "y"))
    ext = ("x", "y", "e")
    e = MPoly.var(ext, "e")
    for w1, w2, m, g0 in newton_weights(p, ("x", "y")):
        g = g0.with_vars(ext)
        scaled = g.subs_poly({"x": e ** w1 * MPoly.var(ext, "x"),
                              "y": e ** w2 * MPoly.var(ext, "y")})
        assert scaled == g * e ** m
        # the remainder has strictly larger weighted order
        rest = p.with_vars(ext) - g
        if not rest.is_zero():
            ix, iy = rest.vars.index("x"), rest.vars.index("y")
            assert min(w1 * t[ix] + w2 * t[iy] for t in rest.terms) >= m + 1


def test_newton_weights_errors():
    with pytest.raises(PolyError):
        newton_weights(parse_poly("x^2 + 1", ("x", "y")), ("x", "y"))


# -- ring axiom properties ------------------------------------------------------

small_rats = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def mpolys(draw):
    terms = {}
    for _ in range(draw(st.integers(0, 5))):
        e = (draw(st.integers(0, 3)), draw(st.integers(0, 3)))
        terms[e] = draw(small_rats)
    return MPoly(("x", "y"), terms)


@settings(max_examples=60, deadline=None)
@given(mpolys(), mpolys(), mpolys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=20, deadline=None)
@given(mpolys(), mpolys(), st.lists(st.tuples(small_rats, small_rats),
                                    min_size=4, max_size=4))
def test_product_evaluation_homomorphism(p, q, points):
    for x0, y0 in points:
        at = {"x": x0, "y": y0}
        assert (p * q).eval(at) == p.eval(at) * q.eval(at)


def test_exact_div_and_failure():
    p = parse_poly("(x+y)^3*(x-2)", ("x", "y"))
    q = parse_poly("(x+y)^2", ("x", "y"))
    assert p.exact_div(q) == parse_poly("(x+y)*(x-2)", ("x", "y"))
    with pytest.raises(PolyError):
        parse_poly("x^2+1", ("x", "y")).exact_div(parse_poly("x+y", ("x", "y")))


def test_unipoly_arithmetic_basics():
    u = UniPoly("t", [F(1), F(2), F(1)])
    v = UniPoly("t", [F(-1), F(1)])
    assert (u * v).coeffs == [F(-1), F(-1), F(1), F(1)]
    q, r = u.divmod(v)
    assert q * v + r == u
    assert u.eval(F(1, 2)) == F(9, 4)
