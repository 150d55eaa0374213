"""Exact arithmetic on integer polynomials and on polynomials over imaginary
quadratic rings of integers.

Coefficients are stored low degree first. Nothing in this module touches
floating point; every result is an exact integer or rational.
"""
from __future__ import annotations

import math
import re
from itertools import zip_longest
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NotReciprocal, DegreeTooLow, DivisionByZero, NonIntegralResult, NotDivisible

Rat = Fraction
Number = Union[int, Fraction]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Immutable polynomial with integer coefficients (constant term first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"integer coefficient expected, got {a!r}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def from_high(cls, coeffs: Sequence[int]) -> "IntPoly":
        """Build from coefficients listed highest degree first."""
        return cls(tuple(reversed(tuple(coeffs))))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        poly = parse_poly(text)
        if isinstance(poly, IntPoly):
            return poly
        raise ValueError(f"{text!r} does not have integer coefficients")

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def high(self) -> tuple[int, ...]:
        return tuple(reversed(self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring operations -------------------------------------------------
    def __add__(self, other) -> "IntPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other) -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(a * other for a in self.coeffs)
        if isinstance(other, IntPoly):
            return multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __floordiv__(self, other) -> "IntPoly":
        return exact_divide(self, _coerce(other))

    def __mod__(self, other) -> "IntPoly":
        _, r = divmod_monic(self, _coerce(other))
        return r

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, complex, QuadRingElem."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    # -- derived polynomials ---------------------------------------------
    def derivative(self) -> "IntPoly":
        return IntPoly(k * a for k, a in enumerate(self.coeffs) if k)

    def reverse(self, degree: int | None = None) -> "IntPoly":
        """x^d p(1/x); `degree` defaults to deg p."""
        d = self.degree if degree is None else degree
        padded = self.coeffs + (0,) * (d + 1 - len(self.coeffs))
        return IntPoly(reversed(padded))

    def is_reciprocal(self) -> bool:
        """True when p = reverse(p) or p = -reverse(p)."""
        return self.is_self_reciprocal() or self.is_antireciprocal()

    def is_self_reciprocal(self) -> bool:
        return bool(self.coeffs) and self.coeffs == self.coeffs[::-1]

    def is_antireciprocal(self) -> bool:
        return bool(self.coeffs) and self.coeffs == tuple(-a for a in self.coeffs[::-1])

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = math.gcd(g, a)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(a // g for a in self.coeffs)

    def shift_degree(self, k: int) -> "IntPoly":
        return IntPoly((0,) * k + self.coeffs) if self.coeffs else self

    def compose_neg(self) -> "IntPoly":
        """p(-x)."""
        return IntPoly(a if k % 2 == 0 else -a for k, a in enumerate(self.coeffs))

    def scale_roots(self, num: int, den: int = 1) -> "IntPoly":
        """den^d p(num/den x): the roots of p divided by num/den."""
        d = self.degree
        return IntPoly(a * num**k * den ** (d - k) for k, a in enumerate(self.coeffs))

    def eval_sign(self, x: Number) -> int:
        """Sign of p(x) for rational x, computed with integer Horner."""
        if isinstance(x, int):
            v = self(x)
        else:
            x = Fraction(x)
            n, m = x.numerator, x.denominator
            v = 0
            mp = 1
            for a in reversed(self.coeffs):
                v = v * n + a * mp
                mp *= m
        return (v > 0) - (v < 0)


def _coerce(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly((p,))
    raise TypeError(f"cannot use {p!r} as an integer polynomial")


X = IntPoly.x()
ONE = IntPoly((1,))
ZERO = IntPoly(())


def multiply(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return IntPoly(out)


def divmod_monic(p: IntPoly, q: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Quotient and remainder when q has leading coefficient +1 or -1,
    or more generally when every division step happens to be exact."""
    if q.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    r = list(p.coeffs)
    dq, lq = q.degree, q.lc
    qc = q.coeffs
    if len(r) - 1 < dq:
        return ZERO, p
    quot = [0] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if c == 0:
            continue
        t, rem = divmod(c, lq)
        if rem:
            raise NotDivisible(f"{p} is not divisible by {q} over the integers")
        quot[k - dq] = t
        base = k - dq
        for i in range(dq + 1):
            r[base + i] -= t * qc[i]
    return IntPoly(quot), IntPoly(r[:dq])


def exact_divide(p: IntPoly, q: IntPoly) -> IntPoly:
    """p / q, raising NotDivisible unless the remainder is zero in Z[x]."""
    quot, rem = divmod_monic(p, q)
    if not rem.is_zero():
        raise NotDivisible(f"{p} is not divisible by {q}")
    return quot


def divides(q: IntPoly, p: IntPoly) -> bool:
    try:
        exact_divide(p, q)
    except NotDivisible:
        return False
    return True


def pseudo_remainder(p: IntPoly, q: IntPoly) -> IntPoly:
    """prem(p, q) = lc(q)^(deg p - deg q + 1) p mod q, computed in Z[x]."""
    if q.is_zero():
        raise DivisionByZero("pseudo-division by zero")
    dq = q.degree
    r = list(p.coeffs)
    if len(r) - 1 < dq:
        return p
    lq, qc = q.lc, q.coeffs
    for k in range(len(r) - 1, dq - 1, -1):
        c = r.pop()
        r = [a * lq for a in r]
        if c:
            base = k - dq
            for i in range(dq):
                r[base + i] -= c * qc[i]
    return IntPoly(r)


def gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Greatest common divisor over Q[x], returned primitive with positive
    leading coefficient (the constant 1 when p and q are coprime)."""
    if p.is_zero():
        return q.primitive()
    if q.is_zero():
        return p.primitive()
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, pseudo_remainder(a, b).primitive()
    return a.primitive() if a.degree > 0 else ONE


def squarefree_part(p: IntPoly) -> IntPoly:
    if p.degree <= 0:
        return p.primitive()
    g = gcd(p, p.derivative())
    return exact_divide(p.primitive(), g) if g.degree > 0 else p.primitive()


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Pairs (factor, multiplicity) with squarefree, pairwise coprime,
    primitive factors whose product (with multiplicities) is p up to a
    constant."""
    out: list[tuple[IntPoly, int]] = []
    rest, i = p.primitive(), 1
    while rest.degree > 0:
        g = gcd(rest, rest.derivative())
        # roots of multiplicity >= i in p, each once
        free = exact_divide(rest, g) if g.degree > 0 else rest
        if g.degree > 0:
            common = gcd(free, g)
            exact = exact_divide(free, common) if common.degree > 0 else free
        else:
            exact = free
        if exact.degree > 0:
            out.append((exact.primitive(), i))
        rest, i = g, i + 1
    return out


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Res(p, q) by the subresultant pseudo-remainder sequence."""
    if p.is_zero() or q.is_zero():
        return 0
    a_cont, b_cont = p.content(), q.content()
    if p.lc < 0:
        a_cont = -a_cont
    if q.lc < 0:
        b_cont = -b_cont
    A = IntPoly(c // a_cont for c in p.coeffs)
    B = IntPoly(c // b_cont for c in q.coeffs)
    t = a_cont ** q.degree * b_cont ** p.degree
    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = -s
    if B.degree == 0:
        return s * t * B.lc ** A.degree
    g = h = 1
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = -s
        R = pseudo_remainder(A, B)
        A = B
        if R.is_zero():
            return 0
        div = g * h**delta
        B = IntPoly(c // div for c in R.coeffs)
        g = A.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if B.degree == 0:
            dA = A.degree
            if dA == 1:
                h = B.lc
            else:
                h = B.lc**dA // h ** (dA - 1)
            return s * t * h


def discriminant(p: IntPoly) -> int:
    n = p.degree
    if n < 2:
        raise DegreeTooLow(f"discriminant needs degree >= 2, got {n}")
    r = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, p.lc)
    assert rem == 0
    return q


def trace_form(p: IntPoly) -> IntPoly:
    """T with p(x) = x^d T(x + 1/x) for a self-reciprocal p of even degree 2d."""
    n = p.degree
    if n % 2 or not p.is_self_reciprocal():
        raise NotReciprocal("trace form needs a self-reciprocal polynomial of even degree")
    d = n // 2
    c = p.coeffs[d:]  # c[k] multiplies x^k + x^-k
    # Clenshaw for sum_{k>=1} c_k V_k(y), V_{k+1} = y V_k - V_{k-1}, V_0 = 2
    b1: list[int] = []
    b2: list[int] = []
    for k in range(d, 0, -1):
        # b_k = c_k + y b_{k+1} - b_{k+2}
        nb = [s - t for s, t in zip_longest([0] + b1, b2, fillvalue=0)]
        nb[0] += c[k]
        b2, b1 = b1, nb
    # T = c_0 + y b_1 - 2 b_2
    out = [s - 2 * t for s, t in zip_longest([0] + b1, b2, fillvalue=0)]
    out[0] += c[0]
    return IntPoly(out)


def from_trace_form(t: IntPoly) -> IntPoly:
    """x^d t(x + 1/x) expanded, d = deg t."""
    d = t.degree
    out = [0] * (2 * d + 1)
    binom_row = [1]  # coefficients of (x^2 + 1)^j in powers of x^2
    for j in range(d + 1):
        a = t[j]
        if a:
            for k, b in enumerate(binom_row):
                out[d - j + 2 * k] += a * b
        binom_row = [1] + [binom_row[k] + binom_row[k + 1] for k in range(len(binom_row) - 1)] + [1]
    return IntPoly(out)


def is_trace_form_of(t: IntPoly, p: IntPoly) -> bool:
    """Decide p(x) = x^d t(x + 1/x) with one exact evaluation at x = 2^B.

    B exceeds the bit size of every coefficient on either side, so equal
    values at 2^B force equal coefficients.
    """
    d = t.degree
    if p.degree != 2 * d:
        return False
    bound = sum(abs(a) << j for j, a in enumerate(t.coeffs)) + sum(abs(a) for a in p.coeffs)
    B = bound.bit_length() + 2
    # Horner in y = x + 1/x after clearing x^d: A <- A (x^2 + 1) + t_j x^(d - j)
    acc = 0
    for j in range(d, -1, -1):
        acc = (acc << (2 * B)) + acc + (t[j] << (B * (d - j)))
    val = 0
    for a in reversed(p.coeffs):
        val = (val << B) + a
    return acc == val


def trace_constant(p: IntPoly) -> int:
    """T(0) for the trace form T of reciprocal p, in linear time.

    Uses V_k(0) = 2cos(k pi / 2).
    """
    n = p.degree
    if n % 2 or not p.is_self_reciprocal():
        raise NotReciprocal("trace form needs a self-reciprocal polynomial of even degree")
    d = n // 2
    c = p.coeffs[d:]
    total = c[0]
    for k in range(2, d + 1, 2):
        total += 2 * c[k] if k % 4 == 0 else -2 * c[k]
    return total


# ---------------------------------------------------------------------------
# Imaginary quadratic rings
# ---------------------------------------------------------------------------


def is_squarefree(n: int) -> bool:
    if n <= 0:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


class QuadRingElem:
    """Element (x2a + x2b sqrt(-D)) / 2 of the ring of integers of Q(sqrt(-D)).

    For -D = 1 mod 4 half-integers are allowed provided both halves have the
    same parity; otherwise both doubled coordinates must be even.
    """

    __slots__ = ("D", "x2a", "x2b")

    def __init__(self, D: int, x2a: int, x2b: int):
        if not is_squarefree(D):
            raise ValueError(f"D = {D} must be a positive squarefree integer")
        half_ok = (-D) % 4 == 1
        if half_ok:
            if (x2a - x2b) % 2:
                raise NonIntegralResult(f"({x2a} + {x2b} sqrt(-{D}))/2 is not integral")
        elif x2a % 2 or x2b % 2:
            raise NonIntegralResult(f"({x2a} + {x2b} sqrt(-{D}))/2 is not integral")
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "x2a", x2a)
        object.__setattr__(self, "x2b", x2b)

    def __setattr__(self, name, value):
        raise AttributeError("QuadRingElem is immutable")

    @classmethod
    def of(cls, D: int, a: Number, b: Number = 0) -> "QuadRingElem":
        """a + b sqrt(-D) with a, b integers or half-integers."""
        a2, b2 = Fraction(a) * 2, Fraction(b) * 2
        if a2.denominator != 1 or b2.denominator != 1:
            raise NonIntegralResult(f"{a} + {b} sqrt(-{D}) is not integral")
        return cls(D, int(a2), int(b2))

    @classmethod
    def omega(cls, D: int) -> "QuadRingElem":
        """The standard generator: (1 + sqrt(-D))/2 or sqrt(-D)."""
        return cls(D, 1, 1) if (-D) % 4 == 1 else cls(D, 0, 2)

    @property
    def re(self) -> Fraction:
        return Fraction(self.x2a, 2)

    @property
    def im(self) -> Fraction:
        """Coefficient of sqrt(-D)."""
        return Fraction(self.x2b, 2)

    def _lift(self, other) -> "QuadRingElem":
        if isinstance(other, QuadRingElem):
            if other.D != self.D:
                raise ValueError("elements of different quadratic rings")
            return other
        if isinstance(other, int):
            return QuadRingElem(self.D, 2 * other, 0)
        raise TypeError(f"cannot combine {other!r} with a quadratic integer")

    def __add__(self, other):
        o = self._lift(other)
        return QuadRingElem(self.D, self.x2a + o.x2a, self.x2b + o.x2b)

    __radd__ = __add__

    def __neg__(self):
        return QuadRingElem(self.D, -self.x2a, -self.x2b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        # (a + b s)(c + d s) with s^2 = -D, all doubled
        a2 = self.x2a * o.x2a - self.D * self.x2b * o.x2b
        b2 = self.x2a * o.x2b + self.x2b * o.x2a
        return QuadRingElem(self.D, a2 // 2, b2 // 2)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = QuadRingElem(self.D, 2, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "QuadRingElem":
        return QuadRingElem(self.D, self.x2a, -self.x2b)

    def norm(self) -> int:
        n4 = self.x2a**2 + self.D * self.x2b**2
        return n4 // 4

    def trace(self) -> int:
        return self.x2a

    def is_zero(self) -> bool:
        return self.x2a == 0 and self.x2b == 0

    def is_rational(self) -> bool:
        return self.x2b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def to_int(self) -> int:
        if self.x2b or self.x2a % 2:
            raise NonIntegralResult(f"{self} is not a rational integer")
        return self.x2a // 2

    def __complex__(self) -> complex:
        return complex(self.x2a / 2, self.x2b * math.sqrt(self.D) / 2)

    def sqrt(self) -> "QuadRingElem | None":
        """A square root inside the ring, or None."""
        # (u + v s)/2 squared = (u^2 - D v^2)/4 + (u v / 2) s
        # so u^2 - D v^2 = 2 x2a and u v = x2b.
        n = self.norm()
        r = math.isqrt(n)
        if r * r != n:
            return None
        # |root|^2 = r, and u^2 + D v^2 = 4r
        target = 2 * self.x2a
        # u^2 - D v^2 = target, u^2 + D v^2 = 4r
        u2, rem = divmod(4 * r + target, 2)
        if rem:
            return None
        dv2 = 4 * r - u2
        u = math.isqrt(u2)
        if u * u != u2 or dv2 % self.D:
            return None
        v2 = dv2 // self.D
        v = math.isqrt(v2)
        if v * v != v2:
            return None
        for su in (1, -1):
            for sv in (1, -1):
                try:
                    cand = QuadRingElem(self.D, su * u, sv * v)
                except NonIntegralResult:
                    continue
                if cand * cand == self:
                    return cand
        return None

    def __eq__(self, other):
        if isinstance(other, int):
            return self.x2b == 0 and self.x2a == 2 * other
        if isinstance(other, QuadRingElem):
            return (self.D, self.x2a, self.x2b) == (other.D, other.x2a, other.x2b)
        return NotImplemented

    def __hash__(self):
        return hash((self.D, self.x2a, self.x2b))

    def __repr__(self):
        return f"QuadRingElem({self.D}, {self.x2a}, {self.x2b})"

    def __str__(self):
        return format_quad(self)


def format_quad(z: QuadRingElem) -> str:
    if z.x2b == 0:
        return str(z.to_int()) if z.x2a % 2 == 0 else f"{z.x2a}/2"
    D = z.D
    if (-D) % 4 == 1:
        # z = m + n w with w = (1 + sqrt(-D))/2
        m, n = (z.x2a - z.x2b) // 2, z.x2b
        gen = "w"
    else:
        m, n = z.x2a // 2, z.x2b // 2
        gen = "i" if D == 1 else f"sqrt(-{D})"
    tail = gen if n == 1 else f"-{gen}" if n == -1 else f"{n}*{gen}"
    if m == 0:
        return tail
    return f"{m}{'+' if n > 0 else ''}{tail}"


class QuadRingPoly:
    """Polynomial with coefficients in one ring O_K, constant term first."""

    __slots__ = ("D", "coeffs")

    def __init__(self, D: int, coeffs: Iterable[QuadRingElem | int]):
        lifted = []
        for c in coeffs:
            if isinstance(c, int):
                c = QuadRingElem(D, 2 * c, 0)
            elif c.D != D:
                raise ValueError("coefficients from different rings")
            lifted.append(c)
        while lifted and lifted[-1].is_zero():
            lifted.pop()
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "coeffs", tuple(lifted))

    def __setattr__(self, name, value):
        raise AttributeError("QuadRingPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def conj(self) -> "QuadRingPoly":
        return QuadRingPoly(self.D, (c.conj() for c in self.coeffs))

    def is_real(self) -> bool:
        return all(c.x2b == 0 for c in self.coeffs)

    def to_intpoly(self) -> IntPoly:
        return IntPoly(c.to_int() for c in self.coeffs)

    def __mul__(self, other: "QuadRingPoly") -> "QuadRingPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QuadRingPoly(self.D, ())
        zero = QuadRingElem(self.D, 0, 0)
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return QuadRingPoly(self.D, out)

    def __add__(self, other: "QuadRingPoly") -> "QuadRingPoly":
        zero = QuadRingElem(self.D, 0, 0)
        n = max(len(self.coeffs), len(other.coeffs))
        get = lambda c, k: c[k] if k < len(c) else zero
        return QuadRingPoly(self.D, (get(self.coeffs, k) + get(other.coeffs, k) for k in range(n)))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + complex(c)
        return acc

    def conjugate_product(self) -> IntPoly:
        """p times its coefficient-wise conjugate, as an integer polynomial."""
        prod = self * self.conj()
        out = []
        for c in prod.coeffs:
            if c.x2b != 0 or c.x2a % 2:
                raise NonIntegralResult(f"conjugate product has coefficient {c}")
            out.append(c.x2a // 2)
        return IntPoly(out)

    def __eq__(self, other):
        return isinstance(other, QuadRingPoly) and (self.D, self.coeffs) == (other.D, other.coeffs)

    def __hash__(self):
        return hash((self.D, self.coeffs))

    def __repr__(self):
        return f"QuadRingPoly({self.D}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def format_poly(p: IntPoly | QuadRingPoly, var: str = "x") -> str:
    """Canonical text such as ``x^3 - 4*x - 1`` (highest degree first)."""
    terms: list[tuple[str, str]] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        if isinstance(c, QuadRingElem):
            if c.is_zero():
                continue
            if c.is_rational():
                c = c.to_int() if c.x2a % 2 == 0 else None
                if c is None:
                    raise NonIntegralResult("half-integer rational coefficient")
            else:
                body = format_quad(p.coeffs[k])
                terms.append(("+", f"({body})" if not mono else f"({body})*{mono}"))
                continue
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|([A-Za-z]\w*)|(\*\*|[-+*/^()]))")


class _Parser:
    """Recursive descent parser for polynomial expressions in one variable.

    Understands integers, the variable, ``i``, ``w`` and ``sqrt(-D)``.
    Values are dicts {power: (re, im)} with Fraction parts, where im is the
    coefficient of sqrt(-D).
    """

    def __init__(self, text: str, var: str, D: int | None):
        self.tokens = self._lex(text)
        self.pos = 0
        self.var = var
        self.D = D

    @staticmethod
    def _lex(text: str) -> list[str]:
        out, pos = [], 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
            tok = next(g for g in m.groups() if g is not None)
            out.append("^" if tok == "**" else tok)
            pos = m.end()
        return out

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected!r}, found {tok!r}")
        self.pos += 1
        return tok

    def set_D(self, D: int):
        if self.D is not None and self.D != D:
            raise ValueError("expression mixes different quadratic rings")
        self.D = D

    def parse(self):
        val = self.expr()
        if self.peek() is not None:
            raise ValueError(f"unexpected token {self.peek()!r}")
        return val

    def expr(self):
        sign = 1
        if self.peek() in "+-" if self.peek() else False:
            sign = -1 if self.take() == "-" else 1
        val = self.term()
        if sign < 0:
            val = _pneg(val)
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            val = _padd(val, rhs if op == "+" else _pneg(rhs))
        return val

    def term(self):
        val = self.power()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                val = self._mul(val, self.power())
            elif tok == "/":
                self.take()
                den = self.power()
                if set(den) != {0} or den[0][1] != 0:
                    raise ValueError("can only divide by a rational constant")
                d = den[0][0]
                if d == 0:
                    raise DivisionByZero("division by zero in polynomial text")
                val = {k: (a / d, b / d) for k, (a, b) in val.items()}
            elif tok is not None and (tok == "(" or tok[0].isalpha() or tok[0].isdigit()):
                val = self._mul(val, self.power())  # implicit multiplication
            else:
                return val

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            e = int(self.take())
            out = {0: (Fraction(1), Fraction(0))}
            for _ in range(e):
                out = self._mul(out, base)
            return out
        return base

    def atom(self):
        tok = self.take()
        if tok == "(":
            val = self.expr()
            self.take(")")
            return val
        if tok == "-":
            return _pneg(self.power())
        if tok.isdigit():
            return {0: (Fraction(int(tok)), Fraction(0))}
        if tok == "sqrt":
            self.take("(")
            self.take("-")
            D = int(self.take())
            self.take(")")
            self.set_D(D)
            return {0: (Fraction(0), Fraction(1))}
        if tok == self.var:
            return {1: (Fraction(1), Fraction(0))}
        if tok == "i":
            self.set_D(1)
            return {0: (Fraction(0), Fraction(1))}
        if tok == "w":
            if self.D is None:
                raise ValueError("'w' needs a ring: pass D or use sqrt(-D) in the text")
            if (-self.D) % 4 == 1:
                return {0: (Fraction(1, 2), Fraction(1, 2))}
            return {0: (Fraction(0), Fraction(1))}
        raise ValueError(f"unknown symbol {tok!r}")

    def _mul(self, p, q):
        out: dict[int, tuple[Fraction, Fraction]] = {}
        D = self.D or 0
        for i, (a, b) in p.items():
            for j, (c, d) in q.items():
                re_, im_ = a * c - D * b * d, a * d + b * c
                r0, i0 = out.get(i + j, (Fraction(0), Fraction(0)))
                out[i + j] = (r0 + re_, i0 + im_)
        return out


def _padd(p, q):
    out = dict(p)
    for k, (a, b) in q.items():
        r0, i0 = out.get(k, (Fraction(0), Fraction(0)))
        out[k] = (r0 + a, i0 + b)
    return out


def _pneg(p):
    return {k: (-a, -b) for k, (a, b) in p.items()}


def parse_poly(text: str, var: str = "x", D: int | None = None) -> IntPoly | QuadRingPoly:
    """Parse text into an IntPoly, or a QuadRingPoly when sqrt(-D), i or w occur."""
    parser = _Parser(text, var, D)
    val = parser.parse()
    deg = max((k for k, (a, b) in val.items() if a or b), default=-1)
    if all(b == 0 for _, b in val.values()) and D is None:
        coeffs = []
        for k in range(deg + 1):
            a = val.get(k, (Fraction(0), Fraction(0)))[0]
            if a.denominator != 1:
                raise NonIntegralResult(f"coefficient {a} is not an integer")
            coeffs.append(int(a))
        return IntPoly(coeffs)
    ring_D = parser.D if parser.D is not None else D
    out = []
    for k in range(deg + 1):
        a, b = val.get(k, (Fraction(0), Fraction(0)))
        out.append(QuadRingElem.of(ring_D, a, b))
    return QuadRingPoly(ring_D, out)
