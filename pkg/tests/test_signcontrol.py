import random
from fractions import Fraction as F

import pytest

from cyclecert.dulac import (bendixson_m, dulac_candidate_low, quintic_system)
from cyclecert.exactpoly import newton_weights, parse_poly
from cyclecert.resultants import discriminant
from cyclecert.scenarios import computed_numerator_high
from cyclecert.signcontrol import (CertificateFailure, RegionSpec,
                                   certify_positive_2d, family_rootfree,
                                   infinity_points, lemma56_positive,
                                   slice_positive_2d, uniformly_isolated)

XYB = ("x", "y", "b")


@pytest.fixture(scope="module")
def m_low():
    return bendixson_m(dulac_candidate_low(), quintic_system()).as_poly()


@pytest.fixture(scope="module")
def n_high():
    return computed_numerator_high()


def test_lemma56_trivial_positive():
    G = parse_poly("x^2 + b^2 + 1", ("x", "b"))
    cert = lemma56_positive(G, (F(-1), F(1)), F(0), RegionSpec.whole_plane())
    assert cert.verdict == "positive_on_region"


def test_lemma56_detects_root_crossing():
    G = parse_poly("x^2 - (b - 1/2)", ("x", "b"))
    cert = lemma56_positive(G, (F(0), F(1)), F(1, 4), RegionSpec.whole_plane())
    assert cert.verdict == "failed"
    assert "hypothesis_ii" in cert.failure_reason


def test_lemma56_halfline_region():
    # G = (x - b)^2 + 1 + b^2 on (c(b), inf) with c(b) = b
    G = parse_poly("(x - b)^2 + 1 + b^2", ("x", "b"))
    from cyclecert.ratfunc import RationalFunction
    c = RationalFunction.from_poly(parse_poly("b", ("b",)))
    cert = lemma56_positive(G, (F(0), F(1)), F(1, 2), RegionSpec.halfline(c))
    assert cert.verdict == "positive_on_region"


def test_family_rootfree_witness_on_failure():
    G = parse_poly("x^2 - b", ("x", "b"))
    with pytest.raises(CertificateFailure) as err:
        family_rootfree(G, "x", "b", (F(-1), F(1)))
    assert err.value.witness or err.value.reason


def test_slice_positive_plane(m_low):
    ev = slice_positive_2d(m_low.subs({"b": F(1, 2)}), RegionSpec.whole_plane())
    assert ev["symmetric_under_point_reflection"]
    assert "split_points" not in ev  # the x-discriminant has no positive roots


def test_slice_positive_hyperbola_splits(n_high):
    region = RegionSpec.semialgebraic(parse_poly("x*y+1", ("x", "y")))
    ev = slice_positive_2d(n_high.subs({"b": F(1, 2)}), region)
    splits = [[F(a), F(b)] for a, b in ev["split_points"]]
    # the two tangency heights reported in the analysis: ~0.588423 and ~6065.2946
    assert splits[0][0] < F(588424, 1000000) < splits[0][1] or \
        abs(splits[0][0] - F(588423, 1000000)) < F(1, 100)
    assert splits[1][0] > F(6000)


def test_slice_rejects_asymmetric_on_hyperbola():
    region = RegionSpec.semialgebraic(parse_poly("x*y+1", ("x", "y")))
    with pytest.raises(CertificateFailure, match="symmetry"):
        slice_positive_2d(parse_poly("x^2 + y^2 + x + 1", ("x", "y")), region)


def test_infinity_points_examples(m_low, n_high):
    I = (F(0), F(6512, 10000))
    pts = infinity_points(m_low, RegionSpec.whole_plane(), "b", I)
    assert sorted(d["direction"] for d in pts) == [[0, 1], [1, 0]]
    region = RegionSpec.semialgebraic(parse_poly("x*y+1", ("x", "y")))
    pts2 = infinity_points(n_high, region, "b", (F(0), F(8171, 10000)))
    assert sorted(d["direction"] for d in pts2) == [[0, 1], [1, 0]]
    assert all(d["in_region"] for d in pts2)
    pts3 = infinity_points(parse_poly("x*y", ("x", "y")),
                           RegionSpec.whole_plane(), None)
    assert sorted(d["direction"] for d in pts3) == [[0, 1], [1, 0]]


def test_infinity_scaling_invariance(m_low):
    I = (F(0), F(1, 2))
    base = infinity_points(m_low, RegionSpec.whole_plane(), "b", I)
    scaled = infinity_points(m_low * 7, RegionSpec.whole_plane(), "b", I)
    lower = m_low + parse_poly("x^2*y - 5*x + 1", XYB)  # lower total degree
    shifted = infinity_points(lower, RegionSpec.whole_plane(), "b", I)
    dirs = lambda pts: sorted(d["direction"] for d in pts)
    assert dirs(base) == dirs(scaled) == dirs(shifted)


def test_uniformly_isolated_charts(m_low):
    I = (F(0), F(6512, 10000))
    chart1 = m_low.homogenize("z_", within=("x", "y")).subs({"y": F(1)})
    ev = uniformly_isolated(chart1, I, ("x", "z_"))
    assert ev["weights"] == [2, 1] and ev["order"] == 4
    # the displayed edge-form discriminant, with W = Z^2
    T = None
    for p, q, m, g0 in newton_weights(chart1, ("x", "z_")):
        if (p, q) == (2, 1):
            T = g0.deflate("z_", 2).subs_poly({
                "x": parse_poly("X", ("X", "W", "b")),
                "z_": parse_poly("W", ("X", "W", "b"))})
    dT = discriminant(T, "X")
    assert dT == parse_poly("72*W^2*b^4*(b^2-2)*(2*b^6-4*b^4-3*b^2+2)",
                            ("X", "W", "b"))
    # its nontrivial factor has no roots below 0.673
    cubic = parse_poly("2*b^6-4*b^4-3*b^2+2", ("b",)).as_unipoly()
    from cyclecert.rootiso import sturm_count
    assert sturm_count(cubic, F(0), F(673, 1000)) == 0
    chart2 = m_low.homogenize("z_", within=("x", "y")).subs({"x": F(1)})
    ev2 = uniformly_isolated(chart2, I, ("y", "z_"))
    assert ev2["weights"] == [1, 1] and ev2["order"] == 2


def test_uniformly_isolated_counterexample():
    G = parse_poly("(x^2+y^2)*(x^2+y^2-b^2)*(x-1)", XYB)
    with pytest.raises(CertificateFailure):
        uniformly_isolated(G, (F(-1, 2), F(1, 2)), ("x", "y"))
    ev = uniformly_isolated(G, (F(1, 4), F(1, 2)), ("x", "y"))
    assert ev["verdict"] == "uniformly_isolated"


def test_uniformly_isolated_monotone_subinterval(m_low):
    chart1 = m_low.homogenize("z_", within=("x", "y")).subs({"y": F(1)})
    uniformly_isolated(chart1, (F(0), F(6512, 10000)), ("x", "z_"))
    uniformly_isolated(chart1, (F(1, 10), F(1, 2)), ("x", "z_"))  # no raise


def test_certify_trivial_family():
    Fq = parse_poly("x^2 + y^2 + 1", XYB)
    cert = certify_positive_2d(Fq, RegionSpec.whole_plane(), (F(0), F(1)),
                               [F(1, 2)])
    assert cert.verdict == "positive_on_region"


def test_certify_failure_carries_hypothesis():
    Fq = parse_poly("x^2 + y^2 - b", XYB)
    cert = certify_positive_2d(Fq, RegionSpec.whole_plane(), (F(0), F(1)),
                               [F(1, 2)])
    assert cert.verdict == "failed"


def test_certify_soundness_sampling(m_low):
    I = (F(0), F(1, 2))
    cert = certify_positive_2d(m_low, RegionSpec.whole_plane(), I, [F(1, 4)],
                               dd_order=("x", "y"))
    assert cert.verdict == "positive_on_region"
    rng = random.Random(41)
    for _ in range(300):
        at = {"x": F(rng.randint(-400, 400), rng.randint(1, 40)),
              "y": F(rng.randint(-400, 400), rng.randint(1, 40)),
              "b": F(rng.randint(1, 499), 1000)}
        assert m_low.eval(at) > 0
