"""Minimum first dynamical degrees: per-dimension branch manifests and the
prime-dimension dispatcher.

Each dimension g maps to a list of branch computations. A branch yields a
certified enclosure of the smallest value it can produce (``attained``) or a
certified lower bound for it (``lower_bound``). The reported minimum is
recomputed from the branch outputs; printed values never enter.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import rootcert, salemfam, unitsearch
from .arith import divisors, is_prime
from .closedform import LEHMER_SQ, PISOT_CUBE, ClosedForm, FourCosSq, TwoCos, septic_unit
from .cyclo import indices_with_totient, psi, totient
from .errors import DimensionOutOfRange, NotPrime
from .exactpoly import IntPoly, from_trace_form

WIDTH = Fraction(1, 10**12)
SEPTIC_UPPER = Fraction(101, 25)
PRIME_UPPER = Fraction(52, 25) ** 2
EXACT_CUTOFF = 7

Enclosure = tuple[Fraction, Fraction]


def sophie_germain(p: int) -> bool:
    return is_prime(p) and is_prime(2 * p + 1)


def _squared(enc: Enclosure) -> Enclosure:
    lo, hi = enc
    return (lo * lo, hi * hi)


def house_sq(p) -> Enclosure:
    return _squared(rootcert.house_enclosure(p, WIDTH))


def _M(N: int) -> int:
    """House of Psi_N is 2cos(pi/M)."""
    return N if N % 2 else N // 2


def _kronecker_candidates(degree_ok: Callable[[int], bool]) -> list[int]:
    """N >= 3 whose Psi_N has constant term +-1 and degree passing the filter."""
    out = []
    for r in range(2, 64):
        if not degree_ok(r):
            continue
        out += [N for N in indices_with_totient(2 * r) if N >= 3 and psi(N).constant_abs == 1]
    return sorted(out)


@dataclass(frozen=True)
class Type1Min:
    value: Enclosure | None  # None: no Kronecker candidate
    N: tuple[int, ...]
    witness: IntPoly | None
    closed_form: ClosedForm | None
    candidates: tuple[int, ...] = ()  # every admissible N, minimizing or not


@lru_cache(maxsize=None)
def type1_min(g: int) -> Type1Min:
    """Smallest squared house of Psi_N with phi(N)/2 dividing g and a unit constant."""
    if g < 2:
        raise ValueError("g must be at least 2")
    cands = _kronecker_candidates(lambda r: g % r == 0)
    if not cands:
        return Type1Min(None, (), None, None)
    best = min(_M(N) for N in cands)
    Ns = tuple(N for N in cands if _M(N) == best)
    w = psi(Ns[0]).psi
    return Type1Min(house_sq(w), Ns, w, FourCosSq(best), tuple(cands))


# ---------------------------------------------------------------------------
# Branches
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Branch:
    type_: str  # "Type 1", "Type 2/3", "Type 4"
    case: str
    kind: str  # "attained" or "lower_bound"
    value: Enclosure | None
    witness: IntPoly | None = None
    closed_form: ClosedForm | None = None
    source: str = ""

    @property
    def label(self) -> str:
        return f"{self.type_}: {self.case}"


def _b_type1(g: int, type_: str = "Type 1", case: str = "Kronecker units", kind: str = "attained") -> Branch:
    t = type1_min(g)
    return Branch(type_, case, kind, t.value, t.witness, t.closed_form, f"Psi_N, N in {list(t.N)}")


def _b_unit_b(g: int, attained: bool) -> Branch:
    """Type 2/3, p = x^2 + a x + b with some |b| > 1: lambda >= house(b)."""
    cands = _kronecker_candidates(lambda r: (g // 2) % r == 0)
    best = min(_M(N) for N in cands)
    N = next(N for N in cands if _M(N) == best)
    w = psi(N).psi
    P = IntPoly(_spread(w))
    return Branch("Type 2/3", "deg p = 2, |sigma(b)| > 1", "attained" if attained else "lower_bound",
                  house_sq(P), P, TwoCos(best), f"Psi_{N}(x^2)")


def _spread(w: IntPoly) -> list[int]:
    out = [0] * (2 * w.degree + 1)
    for k, c in enumerate(w.coeffs):
        out[2 * k] = c
    return out


_TOTALLY_REAL_BOUND = {2: Fraction(9, 4), 3: Fraction(9, 4), 4: Fraction(21, 10), 5: Fraction(21, 10)}


@lru_cache(maxsize=None)
def _min_above_two(e: int) -> IntPoly:
    """Minimal polynomial of a totally real integer of degree e with smallest
    house among those with a conjugate above 2."""
    if e == 1:
        return IntPoly((-3, 1))
    res = unitsearch.enumerate_totally_real(e, _TOTALLY_REAL_BOUND[e], 2)
    return min(res.hits, key=lambda h: h.house[0]).poly


def _b_unit_one(g: int, attained: bool, closed: ClosedForm | None) -> Branch:
    """Type 2/3 with b = 1: P = x^e A(x + 1/x) for A the minimal polynomial of a."""
    best = None
    for e in divisors(g // 2):
        W = from_trace_form(_min_above_two(e))
        enc = house_sq(W)
        if best is None or enc[0] < best[1][0]:
            best = (W, enc, e)
    W, enc, e = best
    return Branch("Type 2/3", "deg p = 2, b = 1", "attained" if attained else "lower_bound", enc, W, closed,
                  f"x^{e} A(x + 1/x), A from the degree-{e} totally real search")


def _b_unit_minus_one() -> Branch:
    w = IntPoly((-1, 1, 1))
    return Branch("Type 2/3", "deg p = 2, b = -1", "lower_bound", house_sq(w), w, FourCosSq(5), "a = 1")


def _b_type4_d1(g: int) -> list[Branch]:
    inside = _b_type1(g, "Type 4", "d = 1, alpha in K0", "lower_bound")

    def deg_a(N: int) -> int:
        return totient(N // 2 if N % 2 == 0 else N) // 2

    cands = [N for N in range(5, 8 * g * g + 64) if N != 6 and g % deg_a(N) == 0
             and totient(N) >= 4 and psi(N).constant_abs == 1]
    best = min(_M(N) for N in cands)
    N = next(N for N in cands if _M(N) == best)
    w = psi(N).psi
    outside = Branch("Type 4", "d = 1, alpha not in K0", "lower_bound", house_sq(w), w, FourCosSq(best),
                     f"sqrt(a) a root of Psi_{N}")
    return [inside, outside]


def _b_a5() -> list[Branch]:
    quad = IntPoly((-1, 1, 1))
    rows = unitsearch.table_A5_rows()
    best = unitsearch.table_A5_min_house(rows)
    return [
        Branch("Type 4", "d = 2, deg P = 2", "lower_bound", house_sq(quad), quad, FourCosSq(5), "x^2 + s x +- 1"),
        Branch("Type 4", "d = 2, deg P = 4", "lower_bound", _squared(rootcert.house_enclosure(best.poly, WIDTH)),
               best.poly, None, "conjugate products x^2 + s x + t"),
    ]


def _min_house_branch(case: str, res: unitsearch.SearchResult, kind: str, keep=lambda h: True,
                      closed: ClosedForm | None = None, fallback: Fraction | None = None) -> Branch:
    hits = [h for h in res.hits if keep(h) and not unitsearch.all_on_unit_circle(h.poly)]
    if not hits:
        return Branch("Type 4", case, "lower_bound", (fallback**2, fallback**2), None, None,
                      "every hit has house 1; search radius squared")
    h = min(hits, key=lambda h: h.house[0])
    P = h.get("octic") or h.poly
    return Branch("Type 4", case, kind, house_sq(P), P if isinstance(P, IntPoly) else None, closed,
                  unitsearch.format_poly(h.poly))


def _b_g8_type4_quartic_field() -> list[Branch]:
    N = unitsearch.N_QUARTIC
    gold = IntPoly((-1, 1, 1))
    out = [
        Branch("Type 4", "d = 2, [K:Q] = 4, deg p = 1", "lower_bound", type1_min(2).value, type1_min(2).witness,
               FourCosSq(5)),
        Branch("Type 4", "d = 2, [K:Q] = 4, |t| > 1", "lower_bound", rootcert.house_enclosure(gold, WIDTH),
               gold, TwoCos(5)),
    ]
    for case, variant in (("t = 1", "plus"), ("t = -1", "minus")):
        res = unitsearch.enumerate_quartic_in_E(N, variant)
        out.append(_min_house_branch(f"d = 2, [K:Q] = 4, {case}", res, "lower_bound",
                                     keep=lambda h: h.get("form61") is not None, closed=TwoCos(5), fallback=N))
    out.append(_min_house_branch("d = 2, [K:Q] = 4, t = i", unitsearch.enumerate_quadratic_ring_cases("i", N),
                                 "lower_bound", closed=TwoCos(5), fallback=N))
    for case in ("zeta8", "zeta12"):
        out.append(_min_house_branch(f"d = 2, [K:Q] = 4, t = {case}",
                                     unitsearch.enumerate_quadratic_ring_cases(case, N), "lower_bound", fallback=N))
    return out


def _b_g9_cubics() -> list[Branch]:
    return [
        _min_house_branch("d = 3, u = 1, rational coefficients", unitsearch.enumerate_cubic_ring_cases("1", "Z"),
                          "attained", closed=PISOT_CUBE),
        _min_house_branch("d = 3, u = 1, (b, b') != (0, 0)", unitsearch.enumerate_cubic_ring_cases("1", "all"),
                          "lower_bound", closed=PISOT_CUBE),
        _min_house_branch("d = 3, u = zeta_6", unitsearch.enumerate_cubic_ring_cases("zeta6", None), "lower_bound"),
    ]


def _b_prime_positive_units(p: int) -> Branch:
    lo = 4 + Fraction(1, 4 ** (2 * p + 3))
    return Branch("Type 4", "totally positive units of degree p", "lower_bound", (lo, lo), None, None,
                  "lower bound for every prime")


@lru_cache(maxsize=None)
def _positive_units(p: int) -> unitsearch.SearchResult:
    return unitsearch.enumerate_totally_positive_units(p, SEPTIC_UPPER)


def _b_septic() -> Branch:
    res = _positive_units(7)
    h = min(res.hits, key=lambda h: h.value[0])
    return Branch("Type 4", "totally positive units of degree 7", "attained", h.value, h.poly,
                  septic_unit(h.poly.high()), "degree-7 totally positive unit search")


def manifest(g: int) -> list[Branch]:
    """Branch computations for dimension g, 2 <= g <= 10."""
    if not 2 <= g <= 10:
        raise DimensionOutOfRange(f"dimension {g} is outside 2..10")
    if g in (2, 3, 5):
        return [_b_type1(g), _b_prime_positive_units(g)]
    if g == 7:
        return [_b_type1(g), _b_septic()]
    if g == 9:
        return [_b_type1(g), *_b_type4_d1(g), *_b_g9_cubics()]
    out = [_b_type1(g), _b_type1(g // 2, "Type 2/3", "deg p = 1", "lower_bound")]
    out.append(_b_unit_b(g, attained=g in (4, 6, 8)))
    out.append(_b_unit_one(g, attained=g == 10, closed={4: FourCosSq(5), 10: LEHMER_SQ}.get(g)))
    out.append(_b_unit_minus_one())
    out += _b_type4_d1(g)
    if g in (4, 8):
        out += _b_a5()
    if g == 8:
        out += _b_g8_type4_quartic_field()
    return out


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinDegReport:
    tag: str  # "g" or "p"
    n: int
    value: Enclosure
    closed_form: ClosedForm | None
    witness: IntPoly | None
    branch: str
    bounds_only: bool = False
    branches: tuple[Branch, ...] = field(default_factory=tuple)

    @property
    def width(self) -> Fraction:
        return self.value[1] - self.value[0]

    def value_float(self) -> float:
        return float((self.value[0] + self.value[1]) / 2)

    def truncated(self, digits: int = 4) -> str:
        a, b = (math.floor(v * 10**digits) for v in self.value)
        if a != b and not self.bounds_only:
            raise ArithmeticError("enclosure straddles a truncation boundary")
        return f"{a // 10**digits}.{a % 10**digits:0{digits}d}"

    def closed_form_ok(self) -> bool:
        return self.closed_form is None or self.closed_form.inside(*self.value)

    def as_dict(self) -> dict:
        return {
            self.tag: self.n,
            "value": [str(self.value[0]), str(self.value[1])],
            "value_float": self.value_float(),
            "truncated": self.truncated(),
            "closed_form": None if self.closed_form is None else str(self.closed_form),
            "witness": None if self.witness is None else unitsearch.format_poly(self.witness),
            "branch": self.branch,
            "bounds_only": self.bounds_only,
        }


def select(branches: list[Branch]) -> Branch:
    """Smallest branch; among branches whose enclosures overlap it, an attained one."""
    live = [b for b in branches if b.value is not None]
    live.sort(key=lambda b: b.value[0])
    first = live[0]
    tied = [b for b in live if b.value[0] <= first.value[1]]
    attained = [b for b in tied if b.kind == "attained"]
    if not attained:
        raise ArithmeticError(f"the minimum {first.label} is only a lower bound")
    return attained[0]


@lru_cache(maxsize=None)
def theoremB(g: int) -> MinDegReport:
    branches = manifest(g)
    b = select(branches)
    return MinDegReport("g", g, b.value, b.closed_form, b.witness, b.label, False, tuple(branches))


def theoremA(p: int, exact_cutoff: int = EXACT_CUTOFF) -> MinDegReport:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if sophie_germain(p):
        b = _b_type1(p)
        return MinDegReport("p", p, b.value, b.closed_form, b.witness, b.label, False, (b,))
    if p <= exact_cutoff:
        res = _positive_units(p)
        if res.hits:
            h = min(res.hits, key=lambda h: h.value[0])
            b = Branch("Type 4", f"totally positive units of degree {p}", "attained", h.value, h.poly,
                       septic_unit(h.poly.high()) if p == 7 else None)
            return MinDegReport("p", p, b.value, b.closed_form, b.witness, b.label, False, (b,))
    w = salemfam.prop59_witness(p)
    lo = 4 + Fraction(1, 4 ** (2 * p + 3))
    return MinDegReport("p", p, (lo, PRIME_UPPER), None, w.trace_poly,
                        f"bounds only; witness from {w.family}_{w.index}", True, ())


def lemma55_ok(enc: Enclosure) -> bool:
    """No integer square n^2 >= 4 lies in the (squared-house) enclosure."""
    lo, hi = enc
    n = max(2, math.isqrt(math.floor(lo)))
    while n * n <= hi:
        if n * n >= lo:
            return False
        n += 1
    return True


def verify_all(suite: str = "all", workers: int = 1, skip: tuple[str, ...] = ()):
    """Reproduction report over the verification suites (see ``dyndeg.verify``)."""
    from .verify import verify_all as run

    return run(suite, workers, skip)
