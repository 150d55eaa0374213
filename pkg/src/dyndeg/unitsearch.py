"""Exhaustive enumeration of integer and quadratic-ring polynomials with
bounded roots.

Every engine has the same shape: a candidate generator that may use floats
to prune, followed by an exact predicate from :mod:`rootcert` on every
surviving candidate. The float stage only ever discards candidates that are
clearly outside the target region (with a safety margin), so the pruned
engines and the plain box scans (``brute=True``) must return the same hits.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator

import numpy as np

from . import rootcert
from .arith import divisors
from .errors import DegreeUnsupported, NonIntegralResult
from .exactpoly import (
    IntPoly,
    QuadRingElem,
    QuadRingPoly,
    divides,
    format_poly,
    from_trace_form,
    is_squarefree,
)

WIDTH = Fraction(1, 10**10)
N_QUARTIC = Fraction(32, 25)
N_CUBIC = Fraction(13, 10)
A5_BOUND = Fraction(13, 6)
FORM61_DMAX = 50
MARGIN = 1e-6


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchSpec:
    kind: str
    degree: int
    params: tuple[tuple[str, object], ...] = ()

    def get(self, key, default=None):
        return dict(self.params).get(key, default)


def poly_key(p: IntPoly | QuadRingPoly) -> tuple:
    """Lexicographic key on coefficients, highest degree first."""
    if isinstance(p, IntPoly):
        return p.high()
    return tuple((c.x2a, c.x2b) for c in reversed(p.coeffs))


def all_on_unit_circle(p) -> bool:
    return rootcert.unit_circle_root_count(p) == p.degree


def truncate4(p, lo: Fraction, hi: Fraction) -> str:
    """The house truncated to four decimals, decided exactly; "1" when every
    root lies on the unit circle."""
    if all_on_unit_circle(p):
        return "1"
    a, b = math.floor(lo * 10**4), math.floor(hi * 10**4)
    if a != b:
        r = Fraction(b, 10**4)
        a = b - 1 if rootcert.all_roots_in_disc(p, r) else b
    return f"{a // 10**4}.{a % 10**4:04d}"


@dataclass(frozen=True)
class Hit:
    poly: IntPoly | QuadRingPoly
    house: tuple[Fraction, Fraction]
    value: tuple[Fraction, Fraction] | None = None  # e.g. the largest real root
    extra: tuple[tuple[str, object], ...] = ()

    def get(self, key, default=None):
        return dict(self.extra).get(key, default)

    @property
    def key(self) -> tuple:
        return poly_key(self.poly)

    def house_str(self) -> str:
        return truncate4(self.poly, *self.house)

    def value_str(self) -> str:
        lo, hi = self.value
        a, b = math.floor(lo * 10**4), math.floor(hi * 10**4)
        if a != b:
            raise ArithmeticError("value enclosure straddles a 4-decimal boundary")
        return f"{a // 10**4}.{a % 10**4:04d}"

    @property
    def house_float(self) -> float:
        return float((self.house[0] + self.house[1]) / 2)


@dataclass(frozen=True)
class SearchResult:
    spec: SearchSpec
    hits: tuple[Hit, ...] = field(default_factory=tuple)

    def polys(self) -> list:
        return [h.poly for h in self.hits]

    def __len__(self):
        return len(self.hits)


def _house(p) -> tuple[Fraction, Fraction]:
    return rootcert.house_enclosure(p, WIDTH)


def _sort_by_house(hits: Iterable[Hit]) -> tuple[Hit, ...]:
    return tuple(sorted(hits, key=lambda h: (math.floor(h.house[0] * 10**8), h.key)))


# ---------------------------------------------------------------------------
# Irreducibility at small degree
# ---------------------------------------------------------------------------


def _has_factor_of_degree(f: IntPoly, k: int, H: Fraction) -> bool:
    """Whether f has a monic integer factor of degree k; H bounds every root."""
    c0 = f[0]
    if c0 == 0:
        return True
    Hf = float(H) + 1e-9
    consts = [s * d for d in divisors(abs(c0)) if d <= Hf**k + 1e-9 for s in (1, -1)]
    ranges = [range(-math.floor(comb(k, j) * Hf**j), math.floor(comb(k, j) * Hf**j) + 1) for j in range(1, k)]
    f1, fm1 = f(1), f(-1)
    for mid in itertools.product(*ranges):
        for c in consts:
            g = IntPoly.from_high((1,) + mid + (c,))
            g1, gm1 = g(1), g(-1)
            if (g1 == 0 and f1 != 0) or (g1 and f1 % g1) or (gm1 == 0 and fm1 != 0) or (gm1 and fm1 % gm1):
                continue
            if divides(g, f):
                return True
    return False


def is_irreducible(f: IntPoly) -> bool:
    """Irreducibility over Z for monic f, by exhausting factors of degree <= deg/2."""
    d = f.degree
    if d <= 1:
        return d == 1
    if not f.is_monic():
        raise ValueError("expected a monic polynomial")
    H = rootcert.house_enclosure(f, Fraction(1, 100))[1]
    return not any(_has_factor_of_degree(f, k, H) for k in range(1, d // 2 + 1))


# ---------------------------------------------------------------------------
# Real-rooted polynomials in an interval
# ---------------------------------------------------------------------------


def _interval_candidates(d: int, L: Fraction, U: Fraction, constants=None) -> list[tuple[int, ...]]:
    """Coefficient vectors (1, a_1, ..., a_d) that survive derivative interlacing.

    q_k = f^(d-k) / (d-k)! has degree k and equals F_k + a_k where F_k only
    involves a_1..a_{k-1}; its derivative is a multiple of q_{k-1}. If f has d
    simple roots in (L, U) then q_k alternates in sign at the roots of
    q_{k-1} and has the right signs at L and U, which bounds a_k.
    """
    Lf, Uf = float(L), float(U)
    a = [1] + [0] * d
    out: list[tuple[int, ...]] = []
    binom = [[comb(n, r) for r in range(d + 1)] for n in range(d + 1)]

    def rec(k: int) -> None:
        Fk = [binom[d - j][d - k] * a[j] for j in range(k)] + [0]
        lows: list[float] = []
        highs: list[float] = []
        if k >= 2:
            prev = [binom[d - j][d - k + 1] * a[j] for j in range(k)]
            crit = np.roots(prev)
            scale = 1.0 + float(np.max(np.abs(crit)))
            if np.max(np.abs(crit.imag)) > 1e-5 * scale:
                return
            crit = np.sort(crit.real)
            vals = np.polyval(Fk, crit)
            for j, v in enumerate(vals, start=1):
                (lows if (k - j) % 2 == 0 else highs).append(-float(v))
        lows.append(-float(np.polyval(Fk, Uf)))
        (lows if k % 2 == 0 else highs).append(-float(np.polyval(Fk, Lf)))
        lo, hi = max(lows), min(highs)
        tol = 1e-7 * (1.0 + max(abs(lo), abs(hi)))
        ilo, ihi = math.ceil(lo - tol), math.floor(hi + tol)
        if ilo > ihi:
            return
        if k == d:
            choices = range(ilo, ihi + 1) if constants is None else [c for c in constants if ilo <= c <= ihi]
            for c in choices:
                a[k] = c
                out.append(tuple(a))
            return
        for c in range(ilo, ihi + 1):
            a[k] = c
            rec(k + 1)

    rec(1)
    return out


def _box_candidates(d: int, M: float, constants=None) -> Iterator[np.ndarray]:
    """Chunks of the full coefficient box |a_k| <= C(d, k) M^k."""
    ranges = []
    for k in range(1, d + 1):
        b = math.floor(comb(d, k) * M**k + 1e-9)
        r = list(range(-b, b + 1))
        if k == d and constants is not None:
            r = [c for c in constants if -b <= c <= b]
        ranges.append(r)
    chunk: list[tuple[int, ...]] = []
    for combo in itertools.product(*ranges):
        chunk.append(combo)
        if len(chunk) >= 100_000:
            yield np.array(chunk, dtype=float)
            chunk = []
    if chunk:
        yield np.array(chunk, dtype=float)


def _batched_roots(coeffs: np.ndarray) -> np.ndarray:
    """Roots of monic polynomials x^d + c_1 x^(d-1) + ... given as rows (c_1..c_d)."""
    n, d = coeffs.shape
    M = np.zeros((n, d, d), dtype=coeffs.dtype)
    M[:, 0, :] = -coeffs
    for i in range(1, d):
        M[:, i, i - 1] = 1
    return np.linalg.eigvals(M)


def _interval_leaf(f: IntPoly, L: Fraction, U: Fraction, above: Fraction | None) -> bool:
    d = f.degree
    if rootcert.real_root_count(f, (L, U)) != d:
        return False
    if above is not None and rootcert.real_root_count(f, (above, U)) < 1:
        return False
    return is_irreducible(f)


def largest_real_root(f: IntPoly, L: Fraction, U: Fraction, width=WIDTH) -> tuple[Fraction, Fraction]:
    lo, hi = Fraction(L), Fraction(U)
    while True:
        mid = (lo + hi) / 2
        if rootcert.real_root_count(f, (mid, U)) >= 1 and f.eval_sign(mid) != 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < Fraction(1, 10**6) and rootcert.real_root_count(f, (lo, hi)) == 1 \
                and f.eval_sign(lo) * f.eval_sign(hi) < 0:
            return rootcert.real_root_enclosure(f, lo, hi, width)


def real_interval_search(d: int, L, U, constants=None, above=None, brute: bool = False) -> list[IntPoly]:
    """Monic irreducible f of degree d with all roots in (L, U), optional
    constant-term set and an optional root above ``above``."""
    if d < 1:
        return []
    if d > 8:
        raise DegreeUnsupported(f"degree {d} is beyond the interlacing engine")
    L, U = Fraction(L), Fraction(U)
    above = None if above is None else Fraction(above)
    hits = []
    if brute:
        M = max(abs(float(L)), abs(float(U)))
        for chunk in _box_candidates(d, M, constants):
            roots = _batched_roots(chunk)
            ok = np.all(np.abs(roots.imag) <= 1e-4, axis=1)
            ok &= np.all((roots.real > float(L) - 1e-4) & (roots.real < float(U) + 1e-4), axis=1)
            for row in chunk[ok]:
                f = IntPoly.from_high((1,) + tuple(int(round(c)) for c in row))
                if _interval_leaf(f, L, U, above):
                    hits.append(f)
    else:
        for coeffs in _interval_candidates(d, L, U, constants):
            f = IntPoly.from_high(coeffs)
            if _interval_leaf(f, L, U, above):
                hits.append(f)
    return sorted(set(hits), key=lambda p: p.high())


def _interval_hits(polys, L, U) -> tuple[Hit, ...]:
    hits = [Hit(f, _house(f), largest_real_root(f, L, U)) for f in polys]
    return tuple(sorted(hits, key=lambda h: (h.value[0], h.key)))


def enumerate_totally_real(degree: int, house_bound, require_one_above=None, brute: bool = False) -> SearchResult:
    B = Fraction(house_bound)
    spec = SearchSpec("totally_real", degree, (("bound", B), ("above", require_one_above)))
    polys = real_interval_search(degree, -B, B, None, require_one_above, brute)
    return SearchResult(spec, _interval_hits(polys, -B, B))


def enumerate_totally_positive_units(degree: int, upper, require_one_above=Fraction(4), brute: bool = False) -> SearchResult:
    U = Fraction(upper)
    spec = SearchSpec("totally_positive_unit", degree, (("upper", U), ("above", require_one_above)))
    consts = (1, -1)
    polys = real_interval_search(degree, 0, U, consts, require_one_above, brute)
    return SearchResult(spec, _interval_hits(polys, 0, U))


# ---------------------------------------------------------------------------
# Quartics whose roots lie in the ellipses E (plus) and E_1 (minus)
# ---------------------------------------------------------------------------


def octic_of(R: IntPoly, variant: str) -> IntPoly:
    """x^4 R(x + 1/x) (plus) or x^4 R(x - 1/x) (minus)."""
    if variant == "plus":
        return from_trace_form(R)
    if variant != "minus":
        raise ValueError("variant must be 'plus' or 'minus'")
    d = R.degree
    out = IntPoly(())
    base = IntPoly((-1, 0, 1))  # x^2 - 1
    for k, c in enumerate(R.coeffs):
        if c:
            out = out + (base**k).shift_degree(d - k) * c
    return out


def _canonical_pm(c: tuple[int, ...]) -> bool:
    """c = (c3, c2, c1, c0) is the lex-smaller of itself and its R(-X) twin."""
    twin = (-c[0], c[1], -c[2], c[3])
    return c <= twin


def _form61_in_ring(D: int, a: Fraction, b: Fraction) -> bool:
    if D % 4 == 1:
        return (2 * a).denominator == 1 and (2 * b).denominator == 1 and (int(2 * a) - int(2 * b)) % 2 == 0
    return a.denominator == 1 and b.denominator == 1


def form61_witness(R: IntPoly, dmax: int = FORM61_DMAX):
    """(D, a, b, a', b') with R = (X^2 + (a + b sqrt D)X + a' + b' sqrt D) times its
    conjugate, all in the ring of integers of Q(sqrt D), or None."""
    if R.degree != 4 or not R.is_monic():
        raise ValueError("expected a monic quartic")
    r0, r1, r2, r3 = R[0], R[1], R[2], R[3]
    a = Fraction(r3, 2)
    H = float(rootcert.house_enclosure(R, Fraction(1, 100))[1])
    for D in range(2, dmax + 1):
        if not is_squarefree(D):
            continue
        bmax2 = math.floor(4 * H / math.sqrt(D)) + 1  # bound on 2|b|
        for b2 in range(-bmax2, bmax2 + 1):
            b = Fraction(b2, 2)
            a1 = (r2 - a * a + b * b * D) / 2
            if b != 0:
                b1 = (2 * a * a1 - r1) / (2 * b * D)
                cands = [b1] if a1 * a1 - b1 * b1 * D == r0 else []
            else:
                if 2 * a * a1 != r1:
                    continue
                sq = (a1 * a1 - r0) / D
                if sq < 0:
                    continue
                num, den = math.isqrt(sq.numerator), math.isqrt(sq.denominator)
                if num * num != sq.numerator or den * den != sq.denominator:
                    continue
                cands = [Fraction(num, den)]
            for b1 in cands:
                if _form61_in_ring(D, a, b) and _form61_in_ring(D, a1, b1):
                    return (D, a, b, a1, b1)
    return None


def _newton_quartic_box(A: float) -> Iterator[tuple[int, int, int, int]]:
    """(c3, c2, c1, c0) allowed by |p_k| < 4 A^k for the power sums of the roots."""
    P = [4 * A**k for k in range(5)]
    eps = 1e-9
    for c3 in range(-math.floor(P[1] + eps), math.floor(P[1] + eps) + 1):
        e1 = -c3
        p1 = e1
        # p2 = e1 p1 - 2 e2, |p2| < P2
        lo2, hi2 = (e1 * p1 - P[2]) / 2, (e1 * p1 + P[2]) / 2
        for e2 in range(math.ceil(lo2 - eps), math.floor(hi2 + eps) + 1):
            p2 = e1 * p1 - 2 * e2
            # p3 = e1 p2 - e2 p1 + 3 e3
            base3 = e1 * p2 - e2 * p1
            for e3 in range(math.ceil((-P[3] - base3) / 3 - eps), math.floor((P[3] - base3) / 3 + eps) + 1):
                p3 = base3 + 3 * e3
                # p4 = e1 p3 - e2 p2 + e3 p1 - 4 e4
                base4 = e1 * p3 - e2 * p2 + e3 * p1
                for e4 in range(math.ceil((base4 - P[4]) / 4 - eps), math.floor((base4 + P[4]) / 4 + eps) + 1):
                    yield (c3, e2, -e3, e4)


def _plain_quartic_box(A: float) -> Iterator[tuple[int, int, int, int]]:
    bs = [math.floor(comb(4, k) * A**k + 1e-9) for k in range(1, 5)]
    return itertools.product(*(range(-b, b + 1) for b in bs))


def enumerate_quartic_in_E(N=N_QUARTIC, variant: str = "plus", brute: bool = False) -> SearchResult:
    """Irreducible monic quartics R, up to R(X) ~ R(-X), whose roots all lie in
    E (plus) or E_1 (minus), excluding those whose octic has every root on
    the unit circle. Membership is the disc test on x^4 R(x +- 1/x)."""
    if variant not in ("plus", "minus"):
        raise ValueError("variant must be 'plus' or 'minus'")
    N = Fraction(N)
    Nf = float(N)
    A = Nf + 1 / Nf
    spec = SearchSpec("quartic_E", 4, (("N", N), ("variant", variant)))
    if brute:
        cands = [c for c in _plain_quartic_box(A) if _canonical_pm(c)]
        survivors = cands
    else:
        cands = np.array([c for c in _newton_quartic_box(A) if _canonical_pm(c)], dtype=float)
        roots = _batched_roots(cands)
        ax_re, ax_im = (Nf + 1 / Nf, Nf - 1 / Nf) if variant == "plus" else (Nf - 1 / Nf, Nf + 1 / Nf)
        inside = (roots.real / ax_re) ** 2 + (roots.imag / ax_im) ** 2 < 1 + 1e-4
        survivors = [tuple(int(round(v)) for v in row) for row in cands[np.all(inside, axis=1)]]
    hits = []
    for c in survivors:
        R = IntPoly.from_high((1,) + tuple(c))
        octic = octic_of(R, variant)
        if not rootcert.all_roots_in_disc(octic, N):
            continue
        if all_on_unit_circle(octic):
            continue
        if not is_irreducible(R):
            continue
        w = form61_witness(R)
        hits.append(Hit(R, _house(octic), None, (("octic", octic), ("form61", w))))
    return SearchResult(spec, tuple(sorted(hits, key=lambda h: h.key)))


# ---------------------------------------------------------------------------
# Quadratic-ring quartics: the cases t = i, zeta_8, zeta_12
# ---------------------------------------------------------------------------


def lattice_points(D: int, radius, box: bool = False) -> list[QuadRingElem]:
    """Ring elements with |z| < radius, or inside the bounding rectangle."""
    r2 = Fraction(radius) ** 2
    half = (-D) % 4 == 1
    amax = math.isqrt(int(4 * r2)) + 1
    bmax = math.isqrt(int(4 * r2 / D)) + 1
    out = []
    for x2b in range(-bmax, bmax + 1):
        for x2a in range(-amax, amax + 1):
            if half:
                if (x2a - x2b) % 2:
                    continue
            elif x2a % 2 or x2b % 2:
                continue
            if box:
                if x2a * x2a >= 4 * r2 or D * x2b * x2b >= 4 * r2:
                    continue
            elif Fraction(x2a * x2a + D * x2b * x2b, 4) >= r2:
                continue
            out.append(QuadRingElem(D, x2a, x2b))
    return out


@dataclass(frozen=True)
class _RingCase:
    D: int
    alpha_plus_beta: tuple[int, int]  # doubled coordinates
    alpha_beta: int
    diff_sq: int  # (alpha - beta)^2, rational in every case used
    z_sign: int  # R(z) = z^2 + z_sign * sigma * z + pi


RING_CASES = {
    "i": _RingCase(1, (0, 4), -1, 0, 1),       # alpha = beta = i
    "zeta8": _RingCase(2, (0, 2), -1, 2, -1),  # zeta_8, zeta_8^3
    "zeta12": _RingCase(1, (0, 2), -1, 3, -1),  # zeta_12, zeta_12^5
}


def _ring_x_coefficients(case: _RingCase, sigma: QuadRingElem, pi: QuadRingElem) -> list[QuadRingElem]:
    """Ring solutions U of U^2 - (a+b) sigma U + ab sigma^2 + pi (a-b)^2 = 0."""
    D = case.D
    apb = QuadRingElem(D, *case.alpha_plus_beta)
    lin = apb * sigma
    const = sigma * sigma * case.alpha_beta + pi * case.diff_sq
    disc = lin * lin - const * 4
    w = disc.sqrt()
    if w is None:
        return []
    out = []
    for s in (w, -w):
        num = lin + s
        if num.x2a % 2 or num.x2b % 2:
            continue
        try:
            u = QuadRingElem(D, num.x2a // 2, num.x2b // 2)
        except NonIntegralResult:
            continue
        if u not in out:
            out.append(u)
    return sorted(out, key=lambda u: (u.x2a, u.x2b))


def ring_quartic(case_name: str, sigma: QuadRingElem, pi: QuadRingElem, u: QuadRingElem) -> QuadRingPoly:
    case = RING_CASES[case_name]
    apb = QuadRingElem(case.D, *case.alpha_plus_beta)
    return QuadRingPoly(case.D, [case.alpha_beta, u, apb + pi, sigma, 1])


def enumerate_quadratic_ring_cases(case: str, N=N_QUARTIC, brute: bool = False) -> SearchResult:
    """Quadratics R(z) = z^2 +- sigma z + pi over the ring, up to R(z) ~ R(-z),
    for which the induced quartic has every root of modulus < N."""
    if case not in RING_CASES:
        raise ValueError(f"case must be one of {sorted(RING_CASES)}")
    rc = RING_CASES[case]
    N = Fraction(N)
    A = N + 1 / N
    spec = SearchSpec("quadratic_ring", 4, (("case", case), ("N", N)))
    sigmas = lattice_points(rc.D, 2 * A, box=brute)
    pis = lattice_points(rc.D, A * A, box=brute)
    hits = []
    for sigma in sigmas:
        zc = sigma if rc.z_sign > 0 else -sigma
        if (zc.x2a, zc.x2b) > (-zc.x2a, -zc.x2b):
            continue
        for pi in pis:
            for u in _ring_x_coefficients(rc, sigma, pi):
                q = ring_quartic(case, sigma, pi, u)
                if not brute:
                    r = np.roots([complex(c) for c in reversed(q.coeffs)])
                    if np.max(np.abs(r)) >= float(N) + MARGIN:
                        continue
                if rootcert.all_roots_in_disc(q, N):
                    R = QuadRingPoly(rc.D, [pi, zc, 1])
                    hits.append(Hit(q, _house(q), None, (("R", R), ("sigma", sigma), ("pi", pi))))
                    break
    return SearchResult(spec, tuple(sorted(hits, key=lambda h: poly_key(h.get("R")))))


# ---------------------------------------------------------------------------
# Cubics x^3 + s x^2 + t x + u with roots of modulus < 1.3
# ---------------------------------------------------------------------------


def _conj_key(p: QuadRingPoly) -> bool:
    return poly_key(p) <= poly_key(p.conj())


def _cubic_hits(D: int, u: QuadRingElem, ss, ts, N: Fraction, require_nonreal: bool,
                identify_conj: bool, brute: bool) -> list[Hit]:
    hits = []
    Nf = float(N)
    for s in ss:
        for t in ts:
            if require_nonreal and s.x2b == 0 and t.x2b == 0:
                continue
            p = QuadRingPoly(D, [u, t, s, 1])
            if identify_conj and not _conj_key(p):
                continue
            if not brute:
                r = np.abs(np.roots([1, complex(s), complex(t), complex(u)]))
                if r.max() >= Nf + MARGIN or r.max() <= 1 - MARGIN:
                    continue
            if not rootcert.all_roots_in_disc(p, N):
                continue
            if rootcert.disc_counts(p, 1).outside < 1:
                continue
            hits.append(Hit(p, _house(p)))
    return hits


def cubic_ring_dmax(N) -> int:
    """Largest D whose ring has a nonreal element within the coefficient bounds."""
    N = Fraction(N)
    bound = 3 * N * N  # |t| < 3 N^2 is the loosest coefficient bound
    # smallest nonreal modulus is sqrt(D)/2 (half lattice) or sqrt(D)
    return math.floor(4 * bound * bound)


def enumerate_cubic_ring_cases(u: str = "1", D_set="Z", N=N_CUBIC, brute: bool = False) -> SearchResult:
    """Cubics with constant u whose roots all have modulus < N, one of them > 1.

    ``D_set="Z"``: integer coefficients. ``D_set="all"``: every imaginary
    quadratic ring, coefficients not both rational, p identified with its
    conjugate. ``u="zeta6"``: constant (1 + sqrt(-3))/2 over D = 3.
    """
    N = Fraction(N)
    spec = SearchSpec("cubic_ring", 3, (("u", u), ("D", str(D_set)), ("N", N)))
    rs, rt = 3 * N, 3 * N * N
    hits: list[Hit] = []
    if u == "zeta6":
        D = 3
        hits = _cubic_hits(D, QuadRingElem(D, 1, 1), lattice_points(D, rs, brute), lattice_points(D, rt, brute),
                           N, False, False, brute)
    elif u == "1" and D_set == "Z":
        ss = [QuadRingElem(1, 2 * k, 0) for k in range(-math.ceil(rs), math.ceil(rs) + 1) if abs(k) < rs]
        ts = [QuadRingElem(1, 2 * k, 0) for k in range(-math.ceil(rt), math.ceil(rt) + 1) if abs(k) < rt]
        hits = _cubic_hits(1, QuadRingElem(1, 2, 0), ss, ts, N, False, False, brute)
        hits = [Hit(h.poly.to_intpoly(), h.house) for h in hits]
    elif u == "1":
        Ds = range(1, cubic_ring_dmax(N) + 1) if D_set == "all" else D_set
        for D in Ds:
            if not is_squarefree(D):
                continue
            hits += _cubic_hits(D, QuadRingElem(D, 2, 0), lattice_points(D, rs, brute), lattice_points(D, rt, brute),
                                N, True, True, brute)
    else:
        raise ValueError(f"unknown unit selector {u!r}")
    return SearchResult(spec, _sort_by_house(hits))


# ---------------------------------------------------------------------------
# Quartic conjugate products (x^2 + s x + t)(x^2 + s' x + t')
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class A5Row:
    D: int
    pq: tuple[int, int]
    t_exp: int
    t: QuadRingElem
    s: QuadRingElem
    poly: IntPoly
    house: tuple[Fraction, Fraction]

    def house_str(self) -> str:
        return truncate4(self.poly, *self.house)


def unit_group(D: int) -> list[QuadRingElem]:
    """Units listed as powers of a generator: i, the primitive sixth root, or -1."""
    if D == 1:
        z = QuadRingElem(1, 0, 2)
    elif D == 3:
        z = QuadRingElem(3, 1, 1)
    else:
        z = QuadRingElem(D, -2, 0)
    out = [QuadRingElem(D, 2, 0)]
    while True:
        nxt = out[-1] * z
        if nxt == out[0]:
            return out
        out.append(nxt)


def _pq(s: QuadRingElem) -> tuple[int, int]:
    """Coordinates of s on the basis 1, w with w the standard ring generator."""
    if (-s.D) % 4 == 1:
        return (s.x2a - s.x2b) // 2, s.x2b
    return s.x2a // 2, s.x2b // 2


def _in_fundamental_sector(s: QuadRingElem, order: int) -> bool:
    """0 <= arg s < 2 pi / order, for s != 0."""
    a, b = s.x2a, s.x2b  # Re = a/2, Im = b sqrt(D)/2
    if s.is_zero():
        return False
    if order == 2:
        return b > 0 or (b == 0 and a > 0)
    if order == 4:
        return a > 0 and b >= 0
    if order == 6:
        return a > 0 and 0 <= b < a  # Im^2 < 3 Re^2 when D = 3
    raise ValueError(order)


def table_A5_fields(bound=A5_BOUND) -> list[int]:
    """Squarefree D whose ring has a nonreal element of modulus < bound, in
    table order."""
    b2 = Fraction(bound) ** 2
    Ds = [D for D in range(1, math.floor(4 * b2) + 2) if is_squarefree(D)
          and (Fraction(1 + D, 4) if (-D) % 4 == 1 else Fraction(D)) < b2]
    return sorted(Ds, key=lambda D: (D in (1, 3), D % 4 != 3, D))


def enumerate_table_A5(bound=A5_BOUND, brute: bool = False) -> SearchResult:
    """Conjugate products as a SearchResult sorted by house; the rows in
    printed order come from :func:`table_A5_rows`."""
    rows = table_A5_rows(bound, brute)
    hits = [Hit(r.poly, r.house, None, (("D", r.D), ("pq", r.pq), ("t_exp", r.t_exp), ("s", r.s), ("t", r.t)))
            for r in rows]
    return SearchResult(SearchSpec("conjugate_product", 4, (("bound", Fraction(bound)),)), _sort_by_house(hits))


def table_A5_rows(bound=A5_BOUND, brute: bool = False) -> list[A5Row]:
    rows = []
    for D in table_A5_fields(bound):
        units = unit_group(D)
        ss = [s for s in lattice_points(D, bound, box=brute) if _in_fundamental_sector(s, len(units))]
        if brute:
            ss = [s for s in ss if Fraction(s.norm()) < Fraction(bound) ** 2]
        ss.sort(key=lambda s: (-_pq(s)[1], _pq(s)[0]))
        for s in ss:
            for k, t in enumerate(units):
                if s.is_rational() and t.is_rational():
                    continue
                P = QuadRingPoly(D, [t, s, 1]).conjugate_product()
                rows.append(A5Row(D, _pq(s), k, t, s, P, _house(P)))
    return rows


def table_A5_min_house(rows: list[A5Row]) -> A5Row:
    """Smallest house among the rows whose roots are not all on the circle."""
    cands = [r for r in rows if not all_on_unit_circle(r.poly)]
    return min(cands, key=lambda r: r.house[0])


__all__ = [
    "SearchSpec", "SearchResult", "Hit", "A5Row", "poly_key", "truncate4", "is_irreducible",
    "real_interval_search", "enumerate_totally_real", "enumerate_totally_positive_units",
    "enumerate_quartic_in_E", "form61_witness", "octic_of", "enumerate_quadratic_ring_cases",
    "ring_quartic", "enumerate_cubic_ring_cases", "enumerate_table_A5", "table_A5_rows", "table_A5_fields",
    "table_A5_min_house", "lattice_points", "unit_group", "format_poly",
]
