"""Cyclotomic polynomials, their trace forms, and Kronecker's small units."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from . import rootcert
from .arith import divisors, factorize, mobius, radical
from .closedform import TwoCos
from .errors import NotKroneckerSmall, UnsupportedIndex
from .exactpoly import IntPoly, is_trace_form_of, trace_form


def totient(n: int) -> int:
    if n < 1:
        raise ValueError("totient needs n >= 1")
    out = n
    for p, _ in factorize(n):
        out -= out // p
    return out


_memo: dict[int, IntPoly] = {1: IntPoly((-1, 1))}
_memo_lock = threading.Lock()


def _times_binomial(c: list[int], d: int) -> list[int]:
    """c * (x^d - 1)."""
    out = [0] * d + c
    for i, a in enumerate(c):
        out[i] -= a
    return out


def _over_binomial(c: list[int], d: int) -> list[int]:
    """c / (x^d - 1), which must be exact."""
    m = len(c) - d
    q = [0] * m
    for k in range(m):
        # c_k = q_{k-d} - q_k
        q[k] = (q[k - d] if k >= d else 0) - c[k]
    for k in range(m, len(c)):
        if c[k] != (q[k - d] if 0 <= k - d < m else 0) - (q[k] if k < m else 0):
            raise ArithmeticError("inexact division by x^d - 1")
    return q


def _squarefree_cyclotomic(m: int) -> list[int]:
    if m == 1:
        return [-1, 1]
    if m % 2 == 0 and m > 2:
        half = cyclotomic(m // 2).coeffs
        return [a if k % 2 == 0 else -a for k, a in enumerate(half)]
    ups = [d for d in divisors(m) if mobius(m // d) == 1]
    downs = [d for d in divisors(m) if mobius(m // d) == -1]
    c = [1]
    for d in ups:
        c = _times_binomial(c, d)
    for d in downs:
        c = _over_binomial(c, d)
    return c


def cyclotomic(n: int) -> IntPoly:
    """Phi_n, the minimal polynomial of a primitive n-th root of unity."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    hit = _memo.get(n)
    if hit is not None:
        return hit
    r = radical(n)
    base = _squarefree_cyclotomic(r)
    k = n // r
    coeffs = [0] * ((len(base) - 1) * k + 1)
    for i, a in enumerate(base):
        coeffs[i * k] = a
    poly = IntPoly(coeffs)
    with _memo_lock:
        _memo.setdefault(n, poly)
    return _memo[n]


@dataclass(frozen=True)
class PsiRecord:
    n: int
    psi: IntPoly
    constant_abs: int


def psi(n: int) -> PsiRecord:
    """Minimal polynomial of 2cos(2 pi / n), with Phi_n(x) = x^d Psi_n(x + 1/x)."""
    if n < 3:
        raise UnsupportedIndex(f"the trace form is defined for n >= 3, got {n}")
    phi = cyclotomic(n)
    t = trace_form(phi)
    if not is_trace_form_of(t, phi):
        raise ArithmeticError(f"trace form of Phi_{n} failed to re-expand")
    return PsiRecord(n, t, abs(t[0]))


def psi_constant_abs(n: int) -> int:
    """|Psi_n(0)| = |Phi_n(i)|, evaluated through the Moebius product.

    Factors x^d - 1 with 4 | d vanish at i. For n != 4 these zeros cancel
    and each such factor contributes |d| instead.
    """
    if n < 3:
        raise UnsupportedIndex(f"the trace form is defined for n >= 3, got {n}")
    if n == 4:
        return 0
    num = (1, 0)  # Gaussian integers as (re, im)
    den = (1, 0)
    i_pow = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 0:
            continue
        if d % 4 == 0:
            f = (d, 0)
        else:
            re, im = i_pow[d % 4]
            f = (re - 1, im)
        if mu == 1:
            num = (num[0] * f[0] - num[1] * f[1], num[0] * f[1] + num[1] * f[0])
        else:
            den = (den[0] * f[0] - den[1] * f[1], den[0] * f[1] + den[1] * f[0])
    sq = Fraction(num[0] ** 2 + num[1] ** 2, den[0] ** 2 + den[1] ** 2)
    if sq.denominator != 1:
        raise ArithmeticError(f"|Phi_{n}(i)|^2 = {sq} is not an integer")
    root = _isqrt_exact(sq.numerator)
    if root is None:
        raise ArithmeticError(f"|Phi_{n}(i)|^2 = {sq} is not a square")
    return root


def _isqrt_exact(v: int) -> int | None:
    from math import isqrt

    r = isqrt(v)
    return r if r * r == v else None


@dataclass(frozen=True)
class ConstantClass:
    """Which case of the constant-term law applies to Psi_n."""

    kind: str  # "Zero", "Two", "OddPrime" or "One"
    prime: int | None = None

    @property
    def value(self) -> int:
        return {"Zero": 0, "Two": 2, "One": 1}.get(self.kind, self.prime or 0)

    def __str__(self):
        return f"OddPrime({self.prime})" if self.kind == "OddPrime" else self.kind


def constant_term_class(n: int) -> ConstantClass:
    if n < 3:
        raise UnsupportedIndex(f"the trace form is defined for n >= 3, got {n}")
    if n == 4:
        return ConstantClass("Zero")
    f = factorize(n)
    if len(f) == 1 and f[0][0] == 2:
        return ConstantClass("Two")
    if n % 4 == 0:
        rest = factorize(n // 4)
        if len(rest) == 1 and rest[0][0] != 2:
            return ConstantClass("OddPrime", rest[0][0])
    return ConstantClass("One")


@dataclass(frozen=True)
class KroneckerMatch:
    N: int
    house: TwoCos


def kronecker_house(N: int) -> TwoCos:
    """House of Psi_N: 2cos(pi/N) for odd N, 2cos(2 pi/N) for even N."""
    return TwoCos(N) if N % 2 else TwoCos(N // 2)


def indices_with_totient(m: int) -> list[int]:
    """All N with phi(N) = m, scanning N <= m^2 + m."""
    return [N for N in range(1, m * m + m + 1) if totient(N) == m]


def kronecker_classify(p: IntPoly) -> KroneckerMatch:
    d = p.degree
    if d < 1 or not p.is_monic():
        raise NotKroneckerSmall(f"{p} is not a monic nonconstant polynomial")
    if rootcert.real_root_count(p, (Fraction(-2), Fraction(2))) != d:
        raise NotKroneckerSmall(f"{p} does not have {d} distinct real roots in (-2, 2)")
    matches = [N for N in indices_with_totient(2 * d) if N >= 3 and psi(N).psi == p]
    if not matches:
        raise NotKroneckerSmall(f"{p} is not Psi_N for any N")
    assert len(matches) == 1, matches
    N = matches[0]
    return KroneckerMatch(N, kronecker_house(N))
