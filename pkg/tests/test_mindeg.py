import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dyndeg import mindeg as md
from dyndeg.closedform import FourCosSq, LEHMER_SQ, PISOT_CUBE, TwoCos
from dyndeg.errors import DimensionOutOfRange, NotPrime
from dyndeg.exactpoly import parse_poly as P

# Frozen from mpmath.polyroots at 30 digits, independent of the certified root code.
ORACLE = {
    "septic": Fraction("4.033341438292158032"),
    "lehmer_sq": Fraction("1.383636563406221078"),
    "pisot": Fraction("1.324717957244746026"),
    "golden": Fraction("1.618033988749894848"),
    "A5_sq": Fraction("1.722083805739042245"),
    "g3": Fraction("3.246979603717467061"),
    "g5": Fraction("3.682507065662362338"),
}


def _contains(enc, v, slack=Fraction(1, 10**15)):
    return enc[0] - slack <= v <= enc[1] + slack


def test_sophie_germain():
    assert md.sophie_germain(5) and md.sophie_germain(2)
    assert not md.sophie_germain(7)


def test_type1_examples():
    t2 = md.type1_min(2)
    assert t2.N == t2.candidates == (5, 10) and t2.witness == P("x^2 + x - 1") and t2.closed_form == FourCosSq(5)
    t3 = md.type1_min(3)
    assert t3.candidates == (7, 9, 14, 18) and t3.N == (7, 14) and _contains(t3.value, ORACLE["g3"])
    assert md.type1_min(7).value is None


@pytest.mark.parametrize("g,key,closed", [
    (4, "golden", TwoCos(5)),
    (8, "golden", TwoCos(5)),
    (9, "pisot", PISOT_CUBE),
    (10, "lehmer_sq", LEHMER_SQ),
])
def test_theoremB_small_values(g, key, closed):
    r = md.theoremB(g)
    assert _contains(r.value, ORACLE[key])
    assert r.width < Fraction(1, 10**9)
    assert r.closed_form == closed and r.closed_form_ok()


def test_theoremB_attribution():
    r4 = md.theoremB(4)
    assert r4.branch.startswith("Type 2/3") and r4.witness == P("x^4 + x^2 - 1")
    r9 = md.theoremB(9)
    assert r9.branch.startswith("Type 4: d = 3") and r9.witness == P("x^3 - x^2 + 1")
    assert md.theoremB(10).branch.startswith("Type 2/3")


def test_theoremB_g6_and_conjugate_branch():
    r = md.theoremB(6)
    assert r.truncated() == "1.8019"
    a5 = next(b for b in md.theoremB(4).branches if b.source.startswith("conjugate products"))
    assert _contains(a5.value, ORACLE["A5_sq"], Fraction(1, 10**9))


def test_dimension_range():
    for g in (1, 11):
        with pytest.raises(DimensionOutOfRange):
            md.theoremB(g)


def test_theoremA_dispatch():
    assert _contains(md.theoremA(3).value, ORACLE["g3"])
    assert _contains(md.theoremA(5).value, ORACLE["g5"])
    r13 = md.theoremA(13)
    assert r13.bounds_only and r13.value == (4 + Fraction(1, 4**29), Fraction(52, 25) ** 2)
    assert "Q_27" in r13.branch and r13.witness.degree == 13
    with pytest.raises(NotPrime):
        md.theoremA(12)


def test_theoremA_septic():
    r = md.theoremA(7)
    assert _contains(r.value, ORACLE["septic"], Fraction(1, 10**10))
    assert r.truncated() == "4.0333" and not r.bounds_only


def test_select_prefers_attained_and_rejects_bare_bounds():
    a = md.Branch("Type 1", "a", "attained", (Fraction(3), Fraction(3)))
    b = md.Branch("Type 4", "b", "lower_bound", (Fraction(3), Fraction(3)))
    c = md.Branch("Type 4", "c", "lower_bound", (Fraction(2), Fraction(2)))
    assert md.select([b, a]) is a
    with pytest.raises(ArithmeticError):
        md.select([a, c])


def test_lemma55_ok_examples():
    assert md.lemma55_ok((Fraction(1618, 1000), Fraction(1619, 1000)))
    assert not md.lemma55_ok((Fraction(399, 100), Fraction(401, 100)))
    assert md.lemma55_ok((4 + Fraction(1, 10**9), Fraction(43264, 10000)))


@given(st.fractions(min_value=0, max_value=200), st.fractions(min_value=0, max_value=3))
def test_lemma55_ok_matches_scan(lo, w):
    hi = lo + w
    hits = [n for n in range(2, 20) if lo <= n * n <= hi]
    assert md.lemma55_ok((lo, hi)) == (not hits)


def test_report_dict():
    d = md.theoremB(2).as_dict()
    assert d["g"] == 2 and d["truncated"] == "2.6180" and not d["bounds_only"]
    assert math.isclose(d["value_float"], 2.6180339887, rel_tol=1e-9)
