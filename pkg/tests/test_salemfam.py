from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dyndeg import rootcert, salemfam as sf
from dyndeg.cyclo import cyclotomic
from dyndeg.errors import IndexTooSmall, InadmissibleN, NotPrime, NotReciprocal
from dyndeg.exactpoly import IntPoly, divides, parse_poly as P


def test_family_members():
    assert sf.family_member("Q", 4).poly == P("x^4 - x^3 - 2*x^2 - x + 1")
    p12 = sf.family_member("P", 12).poly
    assert p12.degree == 12 and divides(cyclotomic(3), p12)
    q10 = sf.family_member("Q", 10).poly
    assert q10.degree == 10 and divides(cyclotomic(8), q10)
    with pytest.raises(IndexTooSmall):
        sf.family_member("P", 2)
    with pytest.raises(IndexTooSmall):
        sf.family_member("Q", 3)


@pytest.mark.parametrize("family,index,factors,degree", [
    ("P", 13, [2, 8], 8),
    ("Q", 24, [30], 16),
    ("P", 10, [], 10),
])
def test_strip_examples(family, index, factors, degree):
    dec = sf.decompose(family, index)
    assert sorted(N for N, m in dec.cyclo_factors for _ in range(m)) == factors
    assert dec.salem_degree == degree


@settings(max_examples=40)
@given(st.sampled_from(sf.FAMILIES), st.integers(10, 140))
def test_decomposition_rebuilds_and_certifies(family, index):
    dec = sf.decompose(family, index)
    assert dec.reconstruct() == dec.member.poly
    c = dec.certificate
    assert (c.inside, c.outside) == (1, 1)
    assert c.on_circle == dec.salem_degree - 2
    assert all(N in sf.FACTOR_INDICES[family] for N, _ in dec.cyclo_factors)


@pytest.mark.parametrize("family,N,residue", [("Q", 18, 17), ("P", 30, 8), ("P", 2, 1)])
def test_congruence_examples(family, N, residue):
    law = sf.divisibility_congruence(family, N, upto=200)
    assert law.modulus == N and law.residues == frozenset({residue})


def test_congruence_inadmissible():
    with pytest.raises(InadmissibleN):
        sf.divisibility_congruence("Q", 3)


def test_trace_polynomial_examples():
    assert sf.trace_polynomial(P("x^2 + 1")) == P("x")
    assert sf.trace_polynomial(P("x^4 - 3*x^2 + 1")) == P("x^2 - 5")
    t = sf.trace_polynomial(P("x^8 - 3*x^4 + 1"))
    assert t.degree == 4 and abs(t[0]) == 1
    with pytest.raises(NotReciprocal):
        sf.trace_polynomial(P("x^3 - x - 1"))


def test_trace_constant_unit_examples():
    assert sf.trace_constant_is_unit(sf.family_member("P", 20).poly)
    assert not sf.trace_constant_is_unit(cyclotomic(12))
    assert not sf.trace_constant_is_unit(P("x^2 + 1"))


@given(st.sampled_from(sf.FAMILIES), st.integers(10, 400))
def test_value_at_i_closed_form(family, index):
    assert sf._member_at_i_sq(family, index) == sf.abs_sq_at_i(sf.family_member(family, index).poly)


def test_residue_sets_contain_printed_samples():
    assert {0, 3, 4, 5} <= sf.unit_residues("P")
    assert {1, 2, 3, 7} <= sf.unit_residues("Q")


def test_salem_numbers():
    lo, hi = sf.salem_number_of(sf.family_member("Q", 27))
    assert hi - lo <= Fraction(1, 10**9)
    assert Fraction(13255, 10000) < lo < hi < Fraction(13256, 10000)
    lo, hi = sf.salem_number_of(sf.family_member("P", 10))
    assert 1 < lo and hi < Fraction(13247, 10000)


@settings(max_examples=20)
@given(st.integers(10, 80), st.integers(10, 80))
def test_compare_salem_antisymmetric(a, b):
    sa = sf.decompose("P", a).salem_factor
    sb = sf.decompose("P", b).salem_factor
    assert sf.compare_salem(sa, sb) == -sf.compare_salem(sb, sa)
    assert sf.compare_salem(sa, sb) == (a > b) - (a < b)


@pytest.mark.parametrize("p,family,index", [(5, "P", 11), (7, "P", 19), (13, "Q", 27)])
def test_witness_examples(p, family, index):
    w = sf.prop59_witness(p)
    assert (w.family, w.index) == (family, index)
    t = w.trace_poly
    assert t.degree == p and abs(t[0]) == 1
    r = sf.WITNESS_RADIUS
    assert rootcert.real_root_count(t, (-r, r)) == p


def test_witness_errors():
    with pytest.raises(NotPrime):
        sf.prop59_witness(9)
    with pytest.raises(ValueError):
        sf.prop59_witness(3)


def test_periodicity_sample():
    assert sf.periodicity_mismatches("P", [10, 11, 13]) == []
    assert sf.periodicity_mismatches("Q", [7, 10]) == []


@pytest.mark.parametrize("t", [Fraction(1, 2), Fraction(1, 100), Fraction(1)])
def test_appendixB_examples(t):
    assert sf.appendixB_check(t) <= 1


def test_appendixB_domain():
    with pytest.raises(ValueError):
        sf.appendixB_check(2)


def test_admissible():
    assert not sf.admissible("P", 9)
    assert sf.admissible("P", 12) and not sf.admissible("P", 14)
    assert sf.admissible("Q", 27)
