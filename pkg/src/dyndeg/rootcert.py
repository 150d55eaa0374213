"""Certified root location: real-root counts, disc counts and house enclosures.

Every answer returned here is decided by exact integer arithmetic. Floating
point is used in two places only, and only to *propose* rational points that
are then checked exactly: the starting bracket of a house enclosure, and
the sample points of sign-change certificates for trace polynomials.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
import numpy as np

from .errors import BoundaryRoot
from .exactpoly import (
    IntPoly,
    QuadRingPoly,
    exact_divide,
    gcd,
    pseudo_remainder,
    squarefree_decomposition,
    squarefree_part,
    trace_form,
)

X_MINUS_1 = IntPoly((-1, 1))
X_PLUS_1 = IntPoly((1, 1))


@dataclass(frozen=True)
class RootCertificate:
    subject: IntPoly | QuadRingPoly
    query: str
    answer: int | bool | None = None
    house_lo: Fraction | None = None
    house_hi: Fraction | None = None


def _to_intpoly(p) -> tuple[IntPoly, int]:
    """An integer polynomial with the same root moduli as p, and the factor by
    which its root counts exceed those of p."""
    if isinstance(p, IntPoly):
        return p, 1
    if isinstance(p, QuadRingPoly):
        if p.is_real():
            return p.to_intpoly(), 1
        # the conjugate polynomial has the conjugate roots, so every count doubles
        return p.conjugate_product(), 2
    coeffs = [Fraction(c) for c in p]
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return IntPoly(int(c * den) for c in coeffs), 1


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------


def _drop_content(p: IntPoly) -> IntPoly:
    c = p.content()
    return IntPoly(a // c for a in p.coeffs) if c > 1 else p


def signed_remainder_sequence(f0: IntPoly, f1: IntPoly) -> list[IntPoly]:
    """f0, f1, -rem(f0, f1), ... with every term rescaled by a positive factor."""
    seq = [_drop_content(f0), _drop_content(f1)]
    while seq[-1].degree > 0:
        a, b = seq[-2], seq[-1]
        r = pseudo_remainder(a, b)
        if r.is_zero():
            break
        if b.lc < 0 and (a.degree - b.degree + 1) % 2:
            r = -r
        seq.append(_drop_content(-r))
    return seq


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _sign_at(p: IntPoly, x) -> int:
    if x == "+inf":
        return _sign(p.lc)
    if x == "-inf":
        return _sign(p.lc) * (-1 if p.degree % 2 else 1)
    return p.eval_sign(x)


def _variations(seq: Sequence[IntPoly], x) -> int:
    count, last = 0, 0
    for p in seq:
        s = _sign_at(p, x)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def _normalize_interval(interval) -> tuple:
    if interval is None:
        return "-inf", "+inf"
    lo, hi = interval
    lo = "-inf" if lo is None else Fraction(lo)
    hi = "+inf" if hi is None else Fraction(hi)
    return lo, hi


def real_root_count(p: IntPoly, interval=None) -> int:
    """Number of distinct real roots in the open interval (None for all reals)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return 0
    lo, hi = _normalize_interval(interval)
    seq = signed_remainder_sequence(sf, sf.derivative())
    n = _variations(seq, lo) - _variations(seq, hi)
    if hi != "+inf" and sf.eval_sign(hi) == 0:
        n -= 1
    return n


def real_root_count_with_multiplicity(p: IntPoly, interval=None) -> int:
    return sum(m * real_root_count(f, interval) for f, m in squarefree_decomposition(p))


def is_totally_real(p: IntPoly) -> bool:
    return p.degree >= 1 and real_root_count_with_multiplicity(p) == p.degree


def is_totally_positive(p: IntPoly) -> bool:
    return p.degree >= 1 and real_root_count_with_multiplicity(p, (0, None)) == p.degree


def refine_real_root(p: IntPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect a sign-changing bracket of p down to the given width."""
    lo, hi = Fraction(lo), Fraction(hi)
    s_lo, s_hi = p.eval_sign(lo), p.eval_sign(hi)
    if s_lo == 0:
        return lo, lo
    if s_hi == 0:
        return hi, hi
    if s_lo == s_hi:
        raise ValueError("bracket does not change sign")
    while hi - lo >= width:
        mid = (lo + hi) / 2
        s = p.eval_sign(mid)
        if s == 0:
            return mid, mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def real_root_enclosure(p: IntPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of the single root of p in a sign-changing bracket.

    A coarse exact bisection is followed by a high-precision Newton polish
    whose result is accepted only after an exact sign check.
    """
    lo, hi = refine_real_root(p, lo, hi, min(Fraction(1, 10**6), width * 2))
    if hi - lo < width:
        return lo, hi
    digits = int(-math.log10(float(width))) + 15
    with mpmath.workdps(digits):
        coeffs = list(reversed(p.coeffs))
        f = lambda x: mpmath.polyval(coeffs, x)
        try:
            r = mpmath.findroot(f, (mpmath.mpf(lo.numerator) / lo.denominator + mpmath.mpf(hi.numerator) / hi.denominator) / 2)
            r = mpmath.re(r)
            m, e = mpmath.mpf(r).man_exp
            center = Fraction(int(m)) * Fraction(2) ** int(e)
        except (ZeroDivisionError, ValueError):
            center = None
    if center is not None and lo < center < hi:
        half = width / 4
        a, b = center - half, center + half
        sa, sb = p.eval_sign(a), p.eval_sign(b)
        if sa and sb and sa != sb and p.eval_sign(lo) == sa:
            return a, b
    return refine_real_root(p, lo, hi, width)


# ---------------------------------------------------------------------------
# Counting roots in a disc
# ---------------------------------------------------------------------------


def _schur_cohn_inside(coeffs: Sequence[int]) -> int | None:
    """Roots strictly inside the unit circle, or None when a step is singular.

    Uses the Schur transform T p = p(0) p - lc(p) p*, whose constant terms
    delta_k give the count as the number of negative partial products.
    """
    a = list(coeffs)
    inside, running = 0, 1
    while len(a) > 1:
        a0, an = a[0], a[-1]
        m = len(a) - 1
        new = [a0 * a[j] - an * a[m - j] for j in range(m)]
        delta = new[0]
        if delta == 0:
            return None
        running *= 1 if delta > 0 else -1
        if running < 0:
            inside += 1
        g = 0
        for c in new:
            g = math.gcd(g, c)
            if g == 1:
                break
        a = [c // g for c in new] if g > 1 else new
    return inside


def _cauchy_index_inside(q: IntPoly) -> int:
    """Roots inside the unit circle for q without roots on the circle.

    Maps the disc onto the left half plane and applies the Routh-Hurwitz
    count through a Cauchy index computed with a Sturm sequence.
    """
    n = q.degree
    h = [0] * (n + 1)
    one_plus = [1]
    powers_plus = [[1]]
    for _ in range(n):
        one_plus = [a + b for a, b in zip(one_plus + [0], [0] + one_plus)]
        powers_plus.append(one_plus)
    for k, qk in enumerate(q.coeffs):
        if not qk:
            continue
        # (1 + w)^k (1 - w)^(n - k)
        minus = powers_plus[n - k]
        minus = [c if j % 2 == 0 else -c for j, c in enumerate(minus)]
        plus = powers_plus[k]
        for i, pi in enumerate(plus):
            for j, mj in enumerate(minus):
                h[i + j] += qk * pi * mj
    hw = IntPoly(h)
    if hw.degree != n:
        raise ArithmeticError("root at -1 reached the half-plane count")
    if hw.lc < 0:
        hw = -hw
    desc = hw.high()  # a0, a1, ..., an
    f0 = [0] * (n + 1)
    f1 = [0] * n
    for j, a in enumerate(desc):
        sgn = -1 if (j // 2) % 2 else 1
        if j % 2 == 0:
            f0[n - j] = sgn * a
        else:
            f1[n - j] = sgn * a
    F0, F1 = IntPoly(f0), IntPoly(f1)
    if F1.is_zero():
        index = 0
    else:
        seq = signed_remainder_sequence(F0, F1)
        index = _variations(seq, "-inf") - _variations(seq, "+inf")
    right = (n - index) // 2
    return n - right


def _circle_multiplicity(g: IntPoly) -> int:
    """Roots of modulus one (with multiplicity) of a polynomial whose roots
    are all closed under z -> 1/z."""
    on = 0
    for lin in (X_MINUS_1, X_PLUS_1):
        while g.degree > 0 and g(lin.coeffs[0] * -1) == 0:
            g = exact_divide(g, lin)
            on += 1
    if g.degree <= 0:
        return on
    t = trace_form(g.primitive())
    return on + 2 * real_root_count_with_multiplicity(t, (-2, 2))


@dataclass(frozen=True)
class DiscCounts:
    inside: int
    on_circle: int
    outside: int


def _unit_disc_counts(q: IntPoly) -> DiscCounts:
    n = q.degree
    zeros = 0
    while q.coeffs and q.coeffs[0] == 0:
        q = IntPoly(q.coeffs[1:])
        zeros += 1
    if q.degree <= 0:
        return DiscCounts(zeros, 0, 0)
    fast = _schur_cohn_inside(q.coeffs)
    if fast is not None:
        return DiscCounts(zeros + fast, 0, n - zeros - fast)
    g = gcd(q, q.reverse())
    if g.degree > 0:
        on = _circle_multiplicity(g)
        pair_inside = (g.degree - on) // 2
        rest = _unit_disc_counts(exact_divide(q, g))
        inside = zeros + pair_inside + rest.inside
        on_total = on + rest.on_circle
        return DiscCounts(inside, on_total, n - inside - on_total)
    inside = _cauchy_index_inside(q)
    return DiscCounts(zeros + inside, 0, n - zeros - inside)


def disc_counts(p, radius) -> DiscCounts:
    """Exact counts of roots inside, on and outside the circle |z| = radius."""
    q, factor = _to_intpoly(p)
    if q.degree < 1:
        raise ValueError("disc counts need a nonconstant polynomial")
    r = Fraction(radius)
    if r <= 0:
        raise ValueError("radius must be positive")
    c = _unit_disc_counts(q.scale_roots(r.numerator, r.denominator))
    if factor == 1:
        return c
    return DiscCounts(c.inside // factor, c.on_circle // factor, c.outside // factor)


def count_roots_in_disc(p, radius) -> int:
    """Roots (with multiplicity) of modulus strictly below radius.

    Raises BoundaryRoot when some root has modulus exactly radius.
    """
    c = disc_counts(p, radius)
    if c.on_circle:
        raise BoundaryRoot(
            f"{c.on_circle} root(s) of modulus exactly {radius}", c.inside, c.on_circle
        )
    return c.inside


def all_roots_in_disc(p, radius) -> bool:
    q, _ = _to_intpoly(p)
    r = Fraction(radius)
    scaled = q.scale_roots(r.numerator, r.denominator)
    fast = _schur_cohn_inside(scaled.coeffs)
    if fast is not None:
        return fast == q.degree
    c = _unit_disc_counts(scaled)
    return c.inside == q.degree


def unit_circle_root_count(p: IntPoly) -> int:
    """Roots of modulus exactly one, with multiplicity."""
    q, factor = _to_intpoly(p)
    while q.coeffs and q.coeffs[0] == 0:
        q = IntPoly(q.coeffs[1:])
    if q.degree <= 0:
        return 0
    if q.is_reciprocal():
        cert = reciprocal_circle_counts(q)
        return cert.on_circle // factor
    g = gcd(q, q.reverse())
    return (_circle_multiplicity(g) if g.degree > 0 else 0) // factor


# ---------------------------------------------------------------------------
# House enclosures
# ---------------------------------------------------------------------------


def _float_house(q: IntPoly) -> float | None:
    try:
        roots = np.roots([float(c) for c in q.high()])
    except (OverflowError, np.linalg.LinAlgError):
        return None
    if len(roots) == 0 or not np.all(np.isfinite(roots)):
        return None
    return float(np.max(np.abs(roots)))


def house_enclosure(p, width=Fraction(1, 10**12)) -> tuple[Fraction, Fraction]:
    """(lo, hi) with every root of modulus < hi, some root of modulus >= lo,
    and hi - lo < width."""
    q, _ = _to_intpoly(p)
    if q.degree < 1:
        raise ValueError("house of a constant polynomial")
    width = Fraction(width)
    d = q.degree
    while q.coeffs[0] == 0 and q.degree > 0:
        q = IntPoly(q.coeffs[1:])
    if q.degree == 0:
        # every root is zero
        return Fraction(0), width / 2
    lo = hi = None
    est = _float_house(q)
    if est is not None and est > 0:
        for rel in (1e-10, 1e-6, 1e-3):
            a = Fraction(est * (1 - rel))
            b = Fraction(est * (1 + rel))
            if all_roots_in_disc(q, b) and not all_roots_in_disc(q, a):
                lo, hi = a, b
                break
    if lo is None:
        bound = 1 + max(Fraction(abs(c), abs(q.lc)) for c in q.coeffs[:-1])
        hi = Fraction(2) ** max(0, math.ceil(math.log2(bound)) + 1)
        lo = Fraction(0)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if all_roots_in_disc(q, mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def house_certificate(p, width=Fraction(1, 10**12)) -> RootCertificate:
    lo, hi = house_enclosure(p, width)
    return RootCertificate(p, f"house(width={width})", None, lo, hi)


# ---------------------------------------------------------------------------
# Reciprocal polynomials through their trace forms
# ---------------------------------------------------------------------------


def strip_unit_real_roots(p: IntPoly) -> tuple[IntPoly, int, int]:
    """Divide out every factor x - 1 and x + 1; return (rest, mult(1), mult(-1))."""
    a = b = 0
    while p.degree > 0 and p(1) == 0:
        p = exact_divide(p, X_MINUS_1)
        a += 1
    while p.degree > 0 and p(-1) == 0:
        p = exact_divide(p, X_PLUS_1)
        b += 1
    return p, a, b


def _trace_samples(sym: Sequence[int], thetas: np.ndarray) -> np.ndarray:
    """T(2cos(theta)) = c_0 + sum_k c_k 2cos(k theta), evaluated in floats."""
    c = np.array([float(v) for v in sym])
    k = np.arange(len(c))
    weights = np.where(k == 0, 1.0, 2.0) * c
    return np.cos(np.outer(thetas, k)) @ weights


def trace_sign_changes(s: IntPoly, t: IntPoly | None = None, needed: int | None = None,
                       max_refine: int = 6) -> list[Fraction]:
    """Rational points in (-2, 2), increasing, at which the trace form t of the
    self-reciprocal s has exactly verified alternating signs.

    The number of sign changes among the returned points is a certified lower
    bound on the number of roots of t in (-2, 2). Sample points come from a
    float scan of t(2cos(theta)), which is well conditioned because it only
    involves the small coefficients of s.
    """
    if t is None:
        t = trace_form(s)
    d = t.degree
    if needed is None:
        needed = d
    sym = s.coeffs[d:]
    scale = float(sum(abs(v) for v in sym)) or 1.0
    best: list[Fraction] = []
    grid = max(64, 8 * d)
    for _ in range(max_refine):
        thetas = np.linspace(0.0, math.pi, grid + 2)[1:-1]
        vals = _trace_samples(sym, thetas)
        # pick, in each run of constant float sign, the sample of largest |value|
        keep = np.abs(vals) > 1e-9 * scale
        th_k, v_k = thetas[keep], vals[keep]
        if len(v_k) == 0:
            grid *= 4
            continue
        starts = np.concatenate(([0], np.nonzero(np.sign(v_k[1:]) != np.sign(v_k[:-1]))[0] + 1))
        ends = np.append(starts[1:], len(v_k))
        reps = []
        for lo_i, hi_i in zip(starts, ends):
            j = lo_i + int(np.argmax(np.abs(v_k[lo_i:hi_i])))
            reps.append((float(th_k[j]), float(v_k[j])))
        points: list[Fraction] = []
        last_sign = 0
        for th, v in reversed(reps):  # increasing y = 2cos(theta)
            y = Fraction(round(2 * math.cos(th) * 2**40), 2**40)
            if not -2 < y < 2:
                continue
            sgn = t.eval_sign(y)
            if sgn == 0 or sgn == last_sign:
                continue
            points.append(y)
            last_sign = sgn
        if len(points) - 1 > len(best) - 1:
            best = points
        if len(best) - 1 >= needed:
            break
        grid *= 4
    return best


@dataclass(frozen=True)
class ReciprocalCounts:
    inside: int
    on_circle: int
    outside: int
    certified_by: str  # "sign-changes" or "sturm"


def reciprocal_circle_counts(p: IntPoly) -> ReciprocalCounts:
    """Exact inside/on/outside counts for a (anti-)reciprocal p with p(0) != 0."""
    if not p.is_reciprocal():
        raise ValueError("expected a reciprocal polynomial")
    h, a, b = strip_unit_real_roots(p)
    if h.degree <= 0:
        return ReciprocalCounts(0, a + b, 0, "sign-changes")
    if not h.is_self_reciprocal():
        h = -h
    t = trace_form(h)
    d = t.degree
    beyond = 0
    if t.eval_sign(2) != _sign(t.lc):
        beyond += 1  # odd number of roots above 2
    if t.eval_sign(-2) != _sign(t.lc) * (-1 if d % 2 else 1):
        beyond += 1
    pts = trace_sign_changes(h, t, needed=d - beyond)
    lower = max(0, len(pts) - 1)
    if lower + beyond == d:
        in_band, how = lower, "sign-changes"
    else:
        in_band, how = real_root_count_with_multiplicity(t, (-2, 2)), "sturm"
    off = d - in_band
    return ReciprocalCounts(off, a + b + 2 * in_band, off, how)


def roots_outside_unit_circle(p: IntPoly) -> int:
    while p.coeffs and p.coeffs[0] == 0:
        p = IntPoly(p.coeffs[1:])
    if p.degree <= 0:
        return 0
    if p.is_reciprocal():
        return reciprocal_circle_counts(p).outside
    return disc_counts(p, 1).outside
