import random
from fractions import Fraction as F

import pytest

from cyclecert.exactpoly import UniPoly, parse_poly
from cyclecert.rootiso import (EndpointRootError, cauchy_bound,
                               count_real_roots, descartes_changes,
                               isolate_roots, normalize_to_interval,
                               refine_root, sturm_count)


def _u(text):
    return parse_poly(text, ["x"]).as_unipoly()


def test_sturm_basic():
    assert sturm_count(_u("x^2 - 3*x + 2"), 0, 3) == 2
    assert sturm_count(_u("x^2 - 3*x + 2"), F(3, 2), 3) == 1
    assert sturm_count(_u("x^2 + 1"), -10, 10) == 0


def test_sturm_counts_distinct_roots():
    assert sturm_count(_u("(x-1)^2*(x-2)"), 0, 3) == 2
    assert count_real_roots(_u("(x-1)^4")) == 1


def test_sturm_endpoint_root_raises():
    with pytest.raises(EndpointRootError):
        sturm_count(_u("x^2 - 1"), 1, 2)


def test_descartes_changes():
    assert descartes_changes([2, -3, 1]) == 2
    assert descartes_changes([1, 0, 1]) == 0
    assert descartes_changes([-1, 0, 0, 1]) == 1


def test_normalize_examples():
    n = normalize_to_interval(_u("x - 1/2"), 0, 1)
    assert n.coeffs == [F(-1, 2), F(1, 2)]
    n2 = normalize_to_interval(_u("(x-1/4)*(x-3/4)"), 0, 1)
    assert n2.coeffs == [F(3, 16), F(-5, 8), F(3, 16)]
    assert descartes_changes(n2.coeffs) == 2


def test_normalize_preserves_counts():
    rng = random.Random(5)
    for _ in range(25):
        coeffs = [F(rng.randint(-6, 6)) for _ in range(rng.randint(2, 9))]
        p = UniPoly("x", coeffs)
        if p.degree() < 1:
            continue
        a = F(rng.randint(-4, 3))
        b = a + F(rng.randint(1, 5))
        if p.eval(a) == 0 or p.eval(b) == 0:
            continue
        inside = sturm_count(p, a, b)
        n = normalize_to_interval(p, a, b)
        if n.degree() < 1:
            assert inside == 0
            continue
        bound = cauchy_bound(n) + 1
        positive = sturm_count(n, 0, bound) if n.eval(0) != 0 else \
            sturm_count(n, F(1, 10 ** 9), bound)
        assert positive == inside
        changes = descartes_changes(n.coeffs)
        assert changes >= inside and (changes - inside) % 2 == 0


def test_isolate_sqrt2():
    res = isolate_roots(_u("x^2 - 2"), 0, 2, max_depth=10)
    assert res.status == "complete"
    assert len(res.intervals) == 1 and res.intervals[0].count == 1


def test_isolate_exact_root_hit():
    res = isolate_roots(_u("x^2 - 1/4"), -1, 1)
    assert res.status == "complete" and len(res.intervals) == 2


def test_isolate_matches_sturm_randomly():
    rng = random.Random(17)
    for _ in range(30):
        coeffs = [F(rng.randint(-9, 9)) for _ in range(rng.randint(3, 12))]
        p = UniPoly("x", coeffs)
        if p.degree() < 1:
            continue
        lo, hi = F(-6), F(6)
        if p.eval(lo) == 0 or p.eval(hi) == 0:
            continue
        res = isolate_roots(p, lo, hi, max_depth=80)
        assert res.status == "complete"
        assert len(res.intervals) == sturm_count(p, lo, hi)


def test_refine_root():
    res = isolate_roots(_u("x^2 - 2"), 0, 2)
    iv = refine_root(_u("x^2 - 2"), res.intervals[0], F(1, 1000))
    assert iv.hi - iv.lo <= F(1, 1000)
    assert iv.lo < F(141422, 100000) and iv.hi > F(141421, 100000)
    # the refined interval still brackets a sign change
    p = _u("x^2 - 2")
    assert p.eval(iv.lo) * p.eval(iv.hi) < 0


def test_refine_requires_sign_change():
    from cyclecert.rootiso import IsolatingInterval
    with pytest.raises(Exception):
        refine_root(_u("x^2 + 1"), IsolatingInterval(F(0), F(1), 1, "sturm"), F(1, 10))


def test_budget_exhaustion_reported():
    p = _u("(x - 1/3)*(x - 333333/1000000)")  # two very close roots
    res = isolate_roots(p, 0, 1, max_depth=2)
    assert res.status == "budget_exhausted"
    assert res.undecided
