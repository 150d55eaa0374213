import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dyndeg.arith import divisors, factorize, is_prime, mobius, primes_between
from dyndeg.cyclo import (
    constant_term_class,
    cyclotomic,
    indices_with_totient,
    kronecker_classify,
    psi,
    psi_constant_abs,
    totient,
)
from dyndeg.errors import NotKroneckerSmall, UnsupportedIndex
from dyndeg.exactpoly import IntPoly, parse_poly as P


def _sympy_cyclotomic(n: int) -> IntPoly:
    x = sympy.Symbol("x")
    return IntPoly.from_high([int(c) for c in sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()])


@given(st.integers(1, 3000))
def test_totient_and_factorize(n):
    assert totient(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
    assert math.prod(p**e for p, e in factorize(n)) == n
    assert divisors(n) == sorted(d for d in range(1, n + 1) if n % d == 0)


def test_totient_examples():
    assert totient(1) == 1 and totient(12) == 4
    assert totient(23) == 22


@given(st.integers(1, 5000))
def test_is_prime_and_mobius(n):
    assert is_prime(n) == sympy.isprime(n)
    assert mobius(n) == int(sympy.mobius(n))


def test_primes_between():
    assert primes_between(5, 30) == [5, 7, 11, 13, 17, 19, 23, 29]


def test_cyclotomic_examples():
    assert cyclotomic(12) == P("x^4 - x^2 + 1")
    assert cyclotomic(30) == P("x^8 + x^7 - x^5 - x^4 - x^3 + x + 1")
    assert cyclotomic(1) == P("x - 1")


@given(st.integers(1, 400))
def test_cyclotomic_matches_sympy(n):
    phi = cyclotomic(n)
    assert phi == _sympy_cyclotomic(n)
    assert phi.degree == totient(n)


def test_psi_examples():
    r = psi(12)
    assert r.psi == P("x^2 - 3") and r.constant_abs == 3
    assert psi(4).psi == P("x") and psi(4).constant_abs == 0
    assert psi(5).psi == P("x^2 + x - 1") and psi(5).constant_abs == 1
    for n in (1, 2):
        with pytest.raises(UnsupportedIndex):
            psi(n)


def test_constant_term_class_examples():
    assert str(constant_term_class(8)) == "Two"
    c = constant_term_class(44)
    assert c.kind == "OddPrime" and c.prime == 11
    assert str(constant_term_class(15)) == "One"
    assert constant_term_class(4).value == 0


@given(st.integers(3, 300))
def test_constant_law_against_expanded_psi(n):
    """The closed law and the Moebius product both agree with the expanded trace form."""
    direct = psi(n).constant_abs
    assert constant_term_class(n).value == direct
    assert psi_constant_abs(n) == direct


@given(st.integers(3, 10000))
def test_constant_law_large(n):
    assert constant_term_class(n).value == psi_constant_abs(n)


def test_kronecker_classify_examples():
    m = kronecker_classify(P("x^2 + x - 1"))
    assert m.N == 5 and str(m.house) == "2cos(pi/5)"
    assert kronecker_classify(P("x^2 - 3")).N == 12
    assert kronecker_classify(P("x^2 - 2")).N == 8
    with pytest.raises(NotKroneckerSmall):
        kronecker_classify(P("x^2 - 1"))


@settings(max_examples=25)
@given(st.integers(3, 40))
def test_kronecker_roundtrip(N):
    p = psi(N).psi
    if p.degree >= 1 and N != 4:
        m = kronecker_classify(p)
        assert m.N == N
        roots = [abs(complex(r)) for r in sympy.Poly(list(p.high()), sympy.Symbol("x")).nroots()]
        assert abs(float(m.house.value()) - max(roots)) < 1e-9


def test_indices_with_totient():
    assert indices_with_totient(4) == [5, 8, 10, 12]
