"""Symbolic tags for values that have a closed form.

A tag is only evaluated (to high precision) when it is compared against a
certified rational enclosure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

_DPS = 60


def _to_fraction(x: mpmath.mpf) -> Fraction:
    m, e = mpmath.mpf(x).man_exp
    return Fraction(int(m)) * (Fraction(2) ** int(e))


@dataclass(frozen=True)
class ClosedForm:
    def value(self) -> mpmath.mpf:
        raise NotImplementedError

    def inside(self, lo: Fraction, hi: Fraction) -> bool:
        """Whether the high-precision value lies in [lo, hi]."""
        with mpmath.workdps(_DPS):
            v = _to_fraction(self.value())
        return lo <= v <= hi


@dataclass(frozen=True)
class FourCosSq(ClosedForm):
    """4 cos^2(pi / N)."""

    N: int

    def value(self):
        with mpmath.workdps(_DPS):
            return 4 * mpmath.cos(mpmath.pi / self.N) ** 2

    def __str__(self):
        return f"4cos^2(pi/{self.N})"


@dataclass(frozen=True)
class TwoCos(ClosedForm):
    """2 cos(pi / N)."""

    N: int

    def value(self):
        with mpmath.workdps(_DPS):
            return 2 * mpmath.cos(mpmath.pi / self.N)

    def __str__(self):
        return f"2cos(pi/{self.N})"


@dataclass(frozen=True)
class RealRootPower(ClosedForm):
    """k-th power of the largest real root of an integer polynomial."""

    name: str
    coeffs_high: tuple[int, ...]
    power: int = 1

    def value(self):
        with mpmath.workdps(_DPS):
            roots = mpmath.polyroots(list(self.coeffs_high), maxsteps=200, extraprec=200)
            r = max(mpmath.re(z) for z in roots if abs(mpmath.im(z)) < mpmath.mpf(10) ** (-30))
            return r**self.power

    def __str__(self):
        return self.name


PISOT_CUBE = RealRootPower("smallest Pisot number (root of x^3 - x - 1)", (1, 0, -1, -1))
LEHMER_SQ = RealRootPower(
    "Lehmer number squared", (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1), power=2
)


def septic_unit(coeffs_high: tuple[int, ...]) -> RealRootPower:
    return RealRootPower("largest root of the minimal septic totally positive unit", coeffs_high)
