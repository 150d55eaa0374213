from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dyndeg.errors import DegreeTooLow, DivisionByZero, NonIntegralResult, NotDivisible
from dyndeg.exactpoly import (
    IntPoly,
    QuadRingElem,
    QuadRingPoly,
    discriminant,
    divides,
    exact_divide,
    format_poly,
    from_trace_form,
    gcd,
    is_trace_form_of,
    multiply,
    parse_poly,
    resultant,
    squarefree_decomposition,
    trace_form,
)
from dyndeg.salemfam import family_member, strip_cyclotomic
from dyndeg.cyclo import cyclotomic

P = parse_poly

coeff_lists = st.lists(st.integers(-20, 20), min_size=1, max_size=7)
polys = coeff_lists.map(IntPoly)
nonzero = polys.filter(lambda p: not p.is_zero())


def test_multiply_examples():
    assert multiply(P("x - 1"), P("x + 1")) == P("x^2 - 1")
    p = P("x^3 - x - 1")
    assert multiply(p, IntPoly((1,))) == p


def test_salem_factor_times_cyclotomics_rebuilds_member():
    dec = strip_cyclotomic(family_member("P", 13))
    assert sorted(N for N, _ in dec.cyclo_factors) == [2, 8]
    assert cyclotomic(2) * cyclotomic(8) * dec.salem_factor == family_member("P", 13).poly


def test_exact_divide_examples():
    assert exact_divide(P("x^2 - 1"), P("x - 1")) == P("x + 1")
    q = exact_divide(family_member("P", 12).poly, cyclotomic(3))
    assert q.degree == 10
    with pytest.raises(NotDivisible):
        exact_divide(P("x^2 + 1"), P("x - 1"))
    with pytest.raises(DivisionByZero):
        exact_divide(P("x"), IntPoly(()))


@given(nonzero, nonzero)
def test_divide_roundtrip(p, q):
    assert exact_divide(p * q, q) == p
    assert divides(q, p * q)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(nonzero, nonzero)
def test_degree_additive(p, q):
    assert (p * q).degree == p.degree + q.degree


@given(nonzero, nonzero, nonzero)
def test_gcd_contains_common_factor(a, b, c):
    g = gcd(a * c, b * c)
    assert divides(c.primitive(), g) or c.degree == 0


def _sylvester_det(p: IntPoly, q: IntPoly) -> Fraction:
    """Resultant as a Sylvester determinant by fraction Gaussian elimination."""
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(p.high()) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(q.high()) + [0] * (size - n - 1 - i))
    a = [[Fraction(v) for v in r] for r in rows]
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


@settings(max_examples=60)
@given(coeff_lists.filter(lambda c: len(c) >= 2 and c[-1] != 0),
       coeff_lists.filter(lambda c: len(c) >= 2 and c[-1] != 0))
def test_resultant_matches_sylvester(a, b):
    p, q = IntPoly(a), IntPoly(b)
    assert resultant(p, q) == _sylvester_det(p, q)


def test_discriminant_examples():
    assert discriminant(P("x^3 - x^2 + 1")) == -23
    assert discriminant(P("x^2 + 1")) == -4
    assert discriminant(P("x^3 - x - 1")) == -23
    with pytest.raises(DegreeTooLow):
        discriminant(P("x + 1"))


@given(st.lists(st.integers(-9, 9), min_size=3, max_size=6).filter(lambda c: c[-1] != 0))
def test_discriminant_matches_resultant_oracle(c):
    p = IntPoly(c)
    n = p.degree
    res = _sylvester_det(p, p.derivative())
    expected = (-1) ** (n * (n - 1) // 2) * res / p.lc
    assert discriminant(p) == expected


def test_reverse_and_reciprocal():
    assert P("x^8 - 3*x^4 + 1").is_reciprocal()
    assert not P("x^3 - x - 1").is_reciprocal()
    assert P("x").reverse() == IntPoly((1,))


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5).filter(lambda c: c[-1] != 0))
def test_trace_form_roundtrip(c):
    t = IntPoly(c)
    s = from_trace_form(t)
    assert s.is_self_reciprocal() and s.degree == 2 * t.degree
    assert trace_form(s) == t
    assert is_trace_form_of(t, s)


def test_squarefree_decomposition():
    p = P("(x - 1)^3 * (x + 2)^2 * (x^2 + 1)")
    dec = dict((m, f) for f, m in squarefree_decomposition(p))
    assert dec[3] == P("x - 1") and dec[2] == P("x + 2") and dec[1] == P("x^2 + 1")


gauss = st.tuples(st.integers(-8, 8), st.integers(-8, 8), st.integers(0, 1))


def _elem(D, t):
    k = t[2] if (-D) % 4 == 1 else 0
    return QuadRingElem(D, 2 * t[0] + k, 2 * t[1] + k)


@given(st.sampled_from([1, 2, 3, 7, 11, 15]), gauss, gauss)
def test_quadring_matches_complex(D, u, v):
    a, b = _elem(D, u), _elem(D, v)
    za, zb = complex(a), complex(b)
    assert abs(complex(a * b) - za * zb) < 1e-6
    assert abs(complex(a + b) - (za + zb)) < 1e-9
    assert a.norm() == round(abs(za) ** 2)
    assert (a * a.conj()).is_rational()


def test_quadring_integrality():
    with pytest.raises(NonIntegralResult):
        QuadRingElem(2, 1, 1)
    assert QuadRingElem(3, 1, 1) == QuadRingElem.omega(3)


def test_conjugate_product_examples():
    w7 = QuadRingElem.omega(7)
    s = QuadRingElem.of(7, -1) + w7
    p = QuadRingPoly(7, [1, s, 1])
    assert p.conjugate_product() == P("x^4 - x^3 + 4*x^2 - x + 1")
    w3 = QuadRingElem.omega(3)
    q = QuadRingPoly(3, [w3, 1 + w3, 1])
    assert q.conjugate_product() == P("x^4 + 3*x^3 + 4*x^2 + 3*x + 1")


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=8))
def test_format_parse_roundtrip(c):
    p = IntPoly(c)
    assert parse_poly(format_poly(p)) == p


def test_parser_ring_syntax():
    p = parse_poly("x^2 + (1 + sqrt(-3))/2*x + 1")
    assert isinstance(p, QuadRingPoly) and p.coeffs[1] == QuadRingElem.omega(3)
    q = parse_poly("z^2 - 1 - 2*i", "z")
    assert q.coeffs[0] == QuadRingElem.of(1, -1, -2)
