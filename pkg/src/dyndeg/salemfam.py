"""The P_n / Q_m polynomial families and their Salem factors.

P_n = (x^(n-2)(x^3 - x - 1) + (x^3 + x^2 - 1)) / (x - 1)
Q_m =  x^(m-3)(x^3 - x - 1) - (x^3 + x^2 - 1)

Each member splits as (product of a few cyclotomic polynomials) times a
Salem polynomial. This module computes that split, certifies it, and
derives the congruence laws and residue conditions that govern it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import rootcert
from .arith import is_prime
from .cyclo import cyclotomic, totient
from .errors import (
    IndexTooSmall,
    InadmissibleN,
    NotPrime,
    NotReciprocal,
    NotSalem,
    UnexpectedCyclotomicFactor,
    WitnessNotFound,
)
from .exactpoly import IntPoly, divides, exact_divide, is_trace_form_of, trace_constant, trace_form

FAMILIES = ("P", "Q")
MIN_INDEX = {"P": 3, "Q": 4}
# smallest index whose cyclotomic stripping is supported
STRIP_FROM = {"P": 10, "Q": 4}
# the only cyclotomic indices that can divide a member
FACTOR_INDICES = {"P": (2, 3, 5, 8, 12, 18, 30), "Q": (2, 8, 12, 18, 30)}
SAFETY_SWEEP = 105
PERIOD = 360
RESIDUE_MODULUS = 24
WITNESS_RADIUS = Fraction(52, 25)


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"family must be 'P' or 'Q', got {family!r}")


@dataclass(frozen=True)
class FamilyMember:
    family: str
    index: int
    poly: IntPoly

    @property
    def name(self) -> str:
        return f"{self.family}_{self.index}"


def _member_poly(family: str, index: int) -> IntPoly:
    # accumulate in a dict: at small indices the two halves share exponents
    k = index - 3 if family == "Q" else index - 2
    terms: dict[int, int] = {}

    def add(e: int, c: int) -> None:
        terms[e] = terms.get(e, 0) + c

    add(k + 3, 1)
    add(k + 1, -1)
    add(k, -1)
    sign = 1 if family == "P" else -1
    add(3, sign)
    add(2, sign)
    add(0, -sign)
    coeffs = [0] * (max(terms) + 1)
    for e, c in terms.items():
        coeffs[e] += c
    poly = IntPoly(coeffs)
    if family == "P":
        poly = exact_divide(poly, IntPoly((-1, 1)))
    return poly


def family_member(family: str, index: int) -> FamilyMember:
    _check_family(family)
    if index < MIN_INDEX[family]:
        raise IndexTooSmall(f"{family}_k needs k >= {MIN_INDEX[family]}, got {index}")
    return FamilyMember(family, index, _member_poly(family, index))


def _divisible_by_cyclotomic(p: IntPoly, N: int) -> bool:
    """Phi_N | p, decided on p reduced modulo x^N - 1."""
    if p.is_zero():
        return True
    folded = [0] * N
    for k, c in enumerate(p.coeffs):
        folded[k % N] += c
    return divides(cyclotomic(N), IntPoly(folded))


# ---------------------------------------------------------------------------
# Trace polynomials
# ---------------------------------------------------------------------------


def trace_polynomial(s: IntPoly) -> IntPoly:
    """T with s(x) = x^d T(x + 1/x); the identity is re-checked exactly."""
    if s.degree % 2 or not s.is_self_reciprocal():
        raise NotReciprocal(f"{s} is not self-reciprocal of even degree")
    t = trace_form(s)
    if not is_trace_form_of(t, s):
        raise ArithmeticError("trace polynomial failed to re-expand")
    return t


def _eval_at_i(p: IntPoly) -> tuple[int, int]:
    re = im = 0
    for k, c in enumerate(p.coeffs):
        r = k % 4
        if r == 0:
            re += c
        elif r == 1:
            im += c
        elif r == 2:
            re -= c
        else:
            im -= c
    return re, im


def abs_sq_at_i(p: IntPoly) -> int:
    re, im = _eval_at_i(p)
    return re * re + im * im


def trace_constant_is_unit(s: IntPoly) -> bool:
    """|s(i)| = 1, which for reciprocal s means T(0) = +-1."""
    if s.degree % 2 or not s.is_reciprocal():
        raise NotReciprocal(f"{s} is not reciprocal of even degree")
    return abs_sq_at_i(s) == 1


# ---------------------------------------------------------------------------
# Salem decomposition
# ---------------------------------------------------------------------------


def _salem_bracket(s: IntPoly) -> tuple[Fraction, Fraction]:
    lo, hi = Fraction(1), Fraction(2)
    if s.eval_sign(lo) == 0 or s.eval_sign(lo) == (1 if s.lc > 0 else -1):
        raise NotSalem(f"{s} has no sign change to the right of 1")
    while s.eval_sign(hi) != (1 if s.lc > 0 else -1):
        lo, hi = hi, hi * 2
    return lo, hi


def salem_root_enclosure(s: IntPoly, width=Fraction(1, 10**9)) -> tuple[Fraction, Fraction]:
    """Enclosure of the root of s in (1, oo); s must have exactly one there."""
    lo, hi = _salem_bracket(s)
    return rootcert.real_root_enclosure(s, lo, hi, Fraction(width))


@dataclass(frozen=True)
class SalemDecomposition:
    member: FamilyMember
    cyclo_factors: tuple[tuple[int, int], ...]
    salem_factor: IntPoly
    certificate: rootcert.ReciprocalCounts | None = field(default=None, compare=False)

    @cached_property
    def trace_poly(self) -> IntPoly:
        return trace_polynomial(self.salem_factor)

    @cached_property
    def trace_constant_unit(self) -> bool:
        return trace_constant_is_unit(self.salem_factor)

    @cached_property
    def salem_number(self) -> tuple[Fraction, Fraction]:
        return salem_root_enclosure(self.salem_factor)

    def salem_enclosure(self, width) -> tuple[Fraction, Fraction]:
        return salem_root_enclosure(self.salem_factor, width)

    @property
    def salem_degree(self) -> int:
        return self.salem_factor.degree

    def reconstruct(self) -> IntPoly:
        out = self.salem_factor
        for N, mult in self.cyclo_factors:
            out = out * cyclotomic(N) ** mult
        return out


def certify_salem(s: IntPoly) -> rootcert.ReciprocalCounts:
    if s.degree < 4 or not s.is_self_reciprocal():
        raise NotSalem(f"{s} is not a self-reciprocal polynomial of degree >= 4")
    counts = rootcert.reciprocal_circle_counts(s)
    if counts.outside != 1 or counts.on_circle < 2:
        raise NotSalem(f"{s}: {counts}")
    return counts


def strip_cyclotomic(member: FamilyMember, certify: bool = True) -> SalemDecomposition:
    fam, idx = member.family, member.index
    if idx < STRIP_FROM[fam]:
        raise IndexTooSmall(f"stripping {fam}_k needs k >= {STRIP_FROM[fam]}, got {idx}")
    rest = member.poly
    factors = []
    for N in FACTOR_INDICES[fam]:
        mult = 0
        while _divisible_by_cyclotomic(rest, N):
            rest = exact_divide(rest, cyclotomic(N))
            mult += 1
        if mult:
            factors.append((N, mult))
    for k in range(1, SAFETY_SWEEP + 1):
        if totient(k) <= rest.degree and _divisible_by_cyclotomic(rest, k):
            raise UnexpectedCyclotomicFactor(f"Phi_{k} divides the Salem factor of {member.name}")
    cert = certify_salem(rest) if certify else None
    return SalemDecomposition(member, tuple(factors), rest, cert)


def decompose(family: str, index: int, certify: bool = True) -> SalemDecomposition:
    return strip_cyclotomic(family_member(family, index), certify)


def salem_number_of(member: FamilyMember, width=Fraction(1, 10**9)) -> tuple[Fraction, Fraction]:
    return strip_cyclotomic(member).salem_enclosure(width)


def compare_salem(a: IntPoly, b: IntPoly, start=Fraction(1, 10**9), finest=Fraction(1, 10**80)) -> int:
    """Sign of (Salem root of a) - (Salem root of b), refining until the
    enclosures separate. Returns 0 only when a == b."""
    if a == b:
        return 0
    w = Fraction(start)
    while w >= finest:
        la, ha = salem_root_enclosure(a, w)
        lb, hb = salem_root_enclosure(b, w)
        if ha < lb:
            return -1
        if hb < la:
            return 1
        w /= 10**4
    raise ArithmeticError("Salem roots did not separate; the polynomials share a root")


# ---------------------------------------------------------------------------
# Congruence laws
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Congruence:
    family: str
    N: int
    modulus: int
    residues: frozenset[int]
    verified_upto: int = 0

    def holds(self, index: int) -> bool:
        return index % self.modulus in self.residues

    def __str__(self):
        rs = ", ".join(str(r) for r in sorted(self.residues))
        var = "n" if self.family == "P" else "m"
        return f"Phi_{self.N} | {self.family}_{var}  <=>  {var} = {rs} (mod {self.modulus})"


def divisibility_congruence(family: str, N: int, upto: int = 0) -> Congruence:
    """Residues of the index for which Phi_N divides the member.

    Derived on one period of length N (the member modulo Phi_N only depends
    on the index modulo N) and then checked by exact division on every index
    from the family minimum up to ``upto``.
    """
    _check_family(family)
    if N not in FACTOR_INDICES[family]:
        raise InadmissibleN(f"Phi_{N} is not an admissible factor for family {family}")
    lo = MIN_INDEX[family]
    start = lo + N  # keep clear of small-index coincidences
    residues = frozenset(
        k % N for k in range(start, start + N) if _divisible_by_cyclotomic(family_member(family, k).poly, N)
    )
    for k in range(lo, upto + 1):
        divisible = divides(cyclotomic(N), family_member(family, k).poly)
        if divisible != (k % N in residues):
            raise ArithmeticError(f"congruence for Phi_{N} fails at {family}_{k}")
    return Congruence(family, N, N, residues, upto)


# ---------------------------------------------------------------------------
# Unit trace constant: residues modulo 24
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ResidueReport:
    family: str
    residues: frozenset[int]
    case_table: tuple[int, ...]  # |member(i)|^2 by index mod 4
    factor_abs_sq: dict  # |Phi_N(i)|^2 for the admissible N
    checked_upto: int
    mismatches: tuple[int, ...]  # indices where the direct computation disagrees


def _member_at_i_sq(family: str, index: int) -> int:
    """|member(i)|^2 from the closed form, without expanding the member."""
    ipow = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    k = index - 2 if family == "P" else index - 3
    a, b = ipow[k % 4]
    # i^k * (i^3 - i - 1) = i^k * (-1 - 2i)
    re, im = -a + 2 * b, -2 * a - b
    # (i^3 + i^2 - 1) = -2 - i
    if family == "P":
        re, im = re - 2, im - 1
        # divide by i - 1: |i - 1|^2 = 2
        sq = re * re + im * im
        if sq % 2:
            raise ArithmeticError("P_n(i) is not a Gaussian integer")
        return sq // 2
    re, im = re + 2, im + 1
    return re * re + im * im


def residue_condition_T(family: str, check_upto: int = 500) -> ResidueReport:
    """Index residues mod 24 for which the trace polynomial has constant +-1."""
    _check_family(family)
    case_table = tuple(_member_at_i_sq(family, r + 8) for r in range(4))
    # _member_at_i_sq(family, r + 8) covers index r (mod 4); reorder to r = 0..3
    case_table = tuple(case_table[(r - 8) % 4] for r in range(4))
    fac = {N: abs_sq_at_i(cyclotomic(N)) for N in FACTOR_INDICES[family]}
    laws = {N: divisibility_congruence(family, N) for N in FACTOR_INDICES[family]}
    residues = set()
    for r in range(RESIDUE_MODULUS):
        num = case_table[r % 4]
        den = 1
        for N, law in laws.items():
            if fac[N] != 1:
                if RESIDUE_MODULUS % N:
                    raise ArithmeticError(f"Phi_{N}(i) matters but {N} does not divide 24")
                if law.holds(r):
                    den *= fac[N]
        if num == den:
            residues.add(r)
    residues = frozenset(residues)
    mismatches = []
    for k in range(STRIP_FROM[family], check_upto + 1):
        s = strip_cyclotomic(family_member(family, k), certify=False).salem_factor
        direct = abs(trace_constant(s)) == 1
        if direct != (k % RESIDUE_MODULUS in residues):
            mismatches.append(k)
    return ResidueReport(family, residues, case_table, fac, check_upto, tuple(mismatches))


_RESIDUE_CACHE: dict[str, frozenset[int]] = {}


def unit_residues(family: str) -> frozenset[int]:
    if family not in _RESIDUE_CACHE:
        _RESIDUE_CACHE[family] = residue_condition_T(family, check_upto=0).residues
    return _RESIDUE_CACHE[family]


def admissible(family: str, index: int) -> bool:
    """Index is strippable and its trace polynomial has a unit constant."""
    return index >= STRIP_FROM[family] and index % RESIDUE_MODULUS in unit_residues(family)


# ---------------------------------------------------------------------------
# Witnesses with all trace roots in (-2.08, 2.08)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Prop59Witness:
    p: int
    family: str
    index: int
    salem_factor: IntPoly
    trace_poly: IntPoly
    certified_by: str


def _trace_roots_in_window(s: IntPoly, t: IntPoly) -> str | None:
    """How all roots of t were certified inside (-52/25, 52/25), or None."""
    d = t.degree
    pts = rootcert.trace_sign_changes(s, t, needed=d - 1)
    sign_lc = 1 if t.lc > 0 else -1
    r = WITNESS_RADIUS
    if len(pts) - 1 >= d - 1 and t.eval_sign(2) != 0 and t.eval_sign(2) != t.eval_sign(r) \
            and t.eval_sign(r) == sign_lc:
        return "sign-changes"
    if rootcert.real_root_count(t, (-r, r)) == d and rootcert.is_totally_real(t):
        return "sturm"
    return None


def prop59_witness(p: int) -> Prop59Witness:
    """A degree-p trace polynomial with constant +-1 and all roots in (-2.08, 2.08).

    P indices are scanned before Q indices, each in increasing order, over
    the only window where a Salem factor of degree 2p can occur.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p <= 3:
        raise ValueError("witnesses are only defined for primes p > 3")
    windows = (("P", 29), ("Q", 23))  # largest total cyclotomic degree per family
    for family, slack in windows:
        for idx in range(max(STRIP_FROM[family], 2 * p), 2 * p + slack + 1):
            if not admissible(family, idx):
                continue
            dec = strip_cyclotomic(family_member(family, idx), certify=False)
            if dec.salem_degree != 2 * p:
                continue
            certify_salem(dec.salem_factor)
            t = dec.trace_poly
            if abs(t[0]) != 1:
                continue
            how = _trace_roots_in_window(dec.salem_factor, t)
            if how:
                return Prop59Witness(p, family, idx, dec.salem_factor, t, how)
    raise WitnessNotFound(f"no witness for p = {p}")


# ---------------------------------------------------------------------------
# Tables of Salem degrees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeRow:
    index: int
    factors: tuple[int, ...]
    salem_degree: int


def degree_rows(family: str, indices, certify: bool = True) -> list[DegreeRow]:
    rows = []
    for k in indices:
        dec = strip_cyclotomic(family_member(family, k), certify)
        fs = tuple(N for N, m in dec.cyclo_factors for _ in range(m))
        rows.append(DegreeRow(k, fs, dec.salem_degree))
    return rows


def table_A1(certify: bool = True) -> list[DegreeRow]:
    return degree_rows("P", range(10, 34), certify)


def table_A2(certify: bool = True) -> list[DegreeRow]:
    return degree_rows("Q", range(4, 32), certify)


def table_A3(certify: bool = True) -> list[DegreeRow]:
    return degree_rows("P", [n for n in range(10, 374) if admissible("P", n)], certify)


def table_A4(certify: bool = True) -> list[DegreeRow]:
    return degree_rows("Q", [m for m in range(4, 379) if admissible("Q", m)], certify)


def periodicity_mismatches(family: str, indices) -> list[int]:
    """Indices k where deg S_(k+360) != deg S_k + 360."""
    bad = []
    for k in indices:
        a = strip_cyclotomic(family_member(family, k), certify=False).salem_degree
        b = strip_cyclotomic(family_member(family, k + PERIOD), certify=False).salem_degree
        if b != a + PERIOD:
            bad.append(k)
    return bad


# ---------------------------------------------------------------------------
# Sampled uniqueness check on (0, pi/4)
# ---------------------------------------------------------------------------


def appendixB_check(t, samples: int = 100_000) -> int:
    """Sign changes of 2 sin x cos 2x / (1 + 2 sin x sin 2x) - tan(t x) on a
    uniform grid strictly inside (0, pi/4)."""
    t = float(t)
    if not 0 < t < 2:
        raise ValueError("t must lie in (0, 2)")
    x = np.linspace(0.0, math.pi / 4, samples + 2)[1:-1]
    f = 2 * np.sin(x) * np.cos(2 * x) / (1 + 2 * np.sin(x) * np.sin(2 * x)) - np.tan(t * x)
    s = np.sign(f)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))
