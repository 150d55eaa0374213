from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from dyndeg import rootcert as rc
from dyndeg.cyclo import cyclotomic
from dyndeg.errors import BoundaryRoot
from dyndeg.exactpoly import IntPoly, QuadRingElem, QuadRingPoly, parse_poly as P


def _from_roots(roots) -> IntPoly:
    p = IntPoly((1,))
    for r in roots:
        p = p * IntPoly((-r, 1))
    return p


def test_disc_examples():
    assert rc.count_roots_in_disc(P("x^4 - 1"), 2) == 4
    assert rc.count_roots_in_disc(P("x^8 - 3*x^4 + 1"), Fraction(32, 25)) == 8
    assert rc.count_roots_in_disc(P("x^2 - x - 1"), Fraction(13, 10)) == 1
    with pytest.raises(BoundaryRoot):
        rc.count_roots_in_disc(P("x^4 - 1"), 1)


def test_real_root_count_examples():
    assert rc.real_root_count(P("x^3 - 4*x - 1")) == 3
    assert rc.real_root_count(P("x^3 - x - 1")) == 1
    assert rc.real_root_count(P("x^2 + 1")) == 0


def test_total_reality_examples():
    assert rc.is_totally_real(P("x^5 + x^4 - 5*x^3 - 5*x^2 + 4*x + 3"))
    assert rc.is_totally_positive(P("x^7 - 14*x^6 + 77*x^5 - 211*x^4 + 301*x^3 - 210*x^2 + 56*x - 1"))
    assert not rc.is_totally_real(P("x^2 + x + 1"))


@given(st.sets(st.integers(-12, 12), min_size=1, max_size=7), st.integers(-13, 12), st.integers(1, 10))
def test_real_root_count_against_known_roots(roots, a, w):
    p = _from_roots(sorted(roots))
    lo, hi = Fraction(2 * a + 1, 2), Fraction(2 * a + 1, 2) + w
    assert rc.real_root_count(p, (lo, hi)) == sum(lo < r < hi for r in roots)
    assert rc.real_root_count(p) == len(roots)


quad_factors = st.tuples(st.integers(-4, 4), st.integers(1, 9)).filter(lambda t: t[0] ** 2 < 4 * t[1])


@given(st.lists(quad_factors, min_size=1, max_size=4), st.lists(st.integers(-6, 6), max_size=3),
       st.integers(1, 40))
def test_disc_count_against_known_moduli(quads, lins, r10):
    p = _from_roots(lins)
    moduli_sq = [Fraction(r * r) for r in lins]
    for b, c in quads:
        p = p * IntPoly((c, b, 1))
        moduli_sq += [Fraction(c), Fraction(c)]
    radius = Fraction(2 * r10 + 1, 20)
    assume(all(m != radius**2 for m in moduli_sq))
    assert rc.count_roots_in_disc(p, radius) == sum(m < radius**2 for m in moduli_sq)


def test_unit_circle_counts():
    assert rc.unit_circle_root_count(P("x^2 - x - 1")) == 0
    assert rc.unit_circle_root_count(cyclotomic(12)) == 4
    # x^4 = (3 +- sqrt 5)/2 puts every root at modulus phi^(+-1/2)
    assert rc.unit_circle_root_count(P("x^8 - 3*x^4 + 1")) == 0


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=8).filter(lambda c: c[-1] != 0 and c[0] != 0))
def test_house_enclosure_contains_numeric_house(c):
    p = IntPoly(c)
    lo, hi = rc.house_enclosure(p, Fraction(1, 10**9))
    assert hi - lo < Fraction(1, 10**9)
    with mpmath.workdps(40):
        h = max(abs(z) for z in mpmath.polyroots(list(p.high()), maxsteps=400, extraprec=400))
    assert float(lo) - 1e-12 <= float(h) <= float(hi) + 1e-12


def test_house_examples():
    lo, hi = rc.house_enclosure(P("x^3 - x^2 + 1"), Fraction(1, 10**6))
    assert lo < Fraction(115096, 100000) + Fraction(1, 10**5) and hi > Fraction(115096, 100000)
    lo, hi = rc.house_enclosure(P("x^4 - 1"), Fraction(1, 10**6))
    assert lo <= 1 <= hi
    lo, hi = rc.house_enclosure(P("x^2 - x - 1"), Fraction(1, 10**9))
    assert lo < Fraction(16180339888, 10**10) and hi > Fraction(16180339887, 10**10)


def test_ring_polynomial_house():
    i = QuadRingElem.of(1, 0, 1)
    q = QuadRingPoly(1, [-1 - 2 * i, 0, 1])  # z^2 - 1 - 2i
    lo, hi = rc.house_enclosure(q, Fraction(1, 10**9))
    assert abs(float(lo) - abs(complex(1 + 2j) ** 0.5)) < 1e-8


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=9).filter(lambda c: c[-1] != 0 and c[0] != 0))
def test_outside_count_against_numeric(c):
    p = IntPoly(c)
    with mpmath.workdps(40):
        zs = mpmath.polyroots(list(p.high()), maxsteps=400, extraprec=400)
    mods = [abs(z) for z in zs]
    assume(all(abs(m - 1) > 1e-8 for m in mods))
    assert rc.roots_outside_unit_circle(p) == sum(m > 1 for m in mods)


def test_reciprocal_counts_for_salem():
    s = P("x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1")  # Lehmer
    c = rc.reciprocal_circle_counts(s)
    assert (c.inside, c.on_circle, c.outside) == (1, 8, 1)
