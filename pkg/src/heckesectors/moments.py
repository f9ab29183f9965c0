"""Leading constants of the moments sum_v Re(e^{i phi} a_v)^k Nv^{-s}.

Expanding ``Re(z)^k = 2^-k sum_n C(k,n) e^{i(k-2n)phi} z^(k-n) conj(z)^n`` turns
each moment into a combination of the series attached to
``pi^(k-n) x conj(pi)^n``, whose growth is ``P(n, r) * l(s)`` with ``P`` the
pole order at s=1.  The result is a cosine polynomial in ``phi`` with exact
rational coefficients.

For k = 6 and k = 8 the prime-power terms are dropped by positivity, so those
constants are upper bounds; for k = 3, 4 they are equalities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping

import numpy as np

from .poles import Hypotheses, PoleInterval, a_table, moment_pole_order

__all__ = [
    "FourierCosPoly",
    "MomentBounds",
    "moment_poly",
    "q6_upper",
    "q8_upper",
    "q8_table_value",
    "q8_uniform",
    "moment_bounds",
    "q8_with_resolved",
    "as_decimal",
]


@dataclass(frozen=True)
class FourierCosPoly:
    """``sum_h c_h cos(h phi)`` with exact rational ``c_h``."""

    coeffs: Mapping[int, Fraction]
    upper_bound: bool = False

    def __post_init__(self):
        clean = {int(h): Fraction(c) for h, c in self.coeffs.items() if c}
        if any(h < 0 for h in clean):
            raise ValueError("harmonics must be non-negative")
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __call__(self, phi):
        phi = np.asarray(phi, dtype=float)
        out = np.zeros_like(phi)
        for h, c in self.coeffs.items():
            out = out + float(c) * np.cos(h * phi)
        return out if out.ndim else float(out)

    def __getitem__(self, h: int) -> Fraction:
        return self.coeffs.get(h, Fraction(0))

    @property
    def constant(self) -> Fraction:
        return self[0]

    @property
    def is_constant(self) -> bool:
        return all(h == 0 for h in self.coeffs)

    def at_zero(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def abs_sum(self) -> Fraction:
        """Upper bound ``sum |c_h|`` on the maximum over phi."""
        return sum((abs(c) for c in self.coeffs.values()), Fraction(0))

    def minimum(self) -> Fraction:
        """Exact minimum, available when there is at most one non-constant harmonic."""
        harm = [h for h in self.coeffs if h]
        if len(harm) > 1:
            raise NotImplementedError("exact minimum only for single-harmonic polynomials")
        return self.constant - (abs(self[harm[0]]) if harm else 0)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for h, c in self.coeffs.items():
            parts.append(str(c) if h == 0 else f"{c}·cos({h}φ)")
        return " + ".join(parts)


def _certain_pole_order(k: int, n: int, h: Hypotheses) -> int:
    p = moment_pole_order(k, n, h)
    if not p.is_exact:
        raise AssertionError(f"pole order for k={k}, n={n}, r={h.r} is uncertain: {p}")
    return p.lo


def moment_poly(k: int, r: int) -> FourierCosPoly:
    """Leading coefficient of the k-th moment as a function of phi (k in {3, 4, 6})."""
    if k not in (3, 4, 6):
        raise ValueError(f"moment_poly is defined for k in (3, 4, 6), got {k}")
    h = Hypotheses(r)
    # coefficient of exp(i (k-2n) phi)
    expo = {n: Fraction(comb(k, n) * _certain_pole_order(k, n, h), 2**k) for n in range(k + 1)}
    cos_coeffs: dict[int, Fraction] = {}
    for n in range(k + 1):
        sine = expo[n] - expo[k - n]
        if sine:
            raise AssertionError(f"non-vanishing sine part at harmonic {k - 2 * n}")
        harmonic = abs(k - 2 * n)
        # e^{ih} + e^{-ih} = 2 cos(h), each side carries expo[n]; harmonic 0 appears once
        cos_coeffs[harmonic] = cos_coeffs.get(harmonic, Fraction(0)) + expo[n]
    return FourierCosPoly(cos_coeffs, upper_bound=(k == 6))


def q6_upper(r: int) -> Fraction:
    """phi-uniform bound for the sixth moment: 2^-6 sum_n C(6,n) P(n, r)."""
    h = Hypotheses(r)
    return Fraction(sum(comb(6, n) * _certain_pole_order(6, n, h) for n in range(7)), 2**6)


def q8_table_value(r: int) -> int:
    """``2^8 q8(r)`` as an integer."""
    return sum(comb(8, n) * a_table(n, r).hi for n in range(9))


def q8_upper(r: int) -> Fraction:
    return Fraction(q8_table_value(r), 2**8)


def q8_uniform(r_min: int = 6) -> Fraction:
    """``max q8(r)`` over all r >= r_min.

    Non-generic values only occur when r divides 4-n or 5(4-n) for some
    n in 0..8, i.e. r <= 20, so one generic representative above 20 suffices.
    """
    return max(q8_upper(r) for r in range(max(r_min, 2), max(r_min, 21) + 1))


@dataclass(frozen=True)
class MomentBounds:
    r: int
    q3: Fraction
    q4: FourierCosPoly
    q6: FourierCosPoly
    q6_upper: Fraction
    q8_upper: Fraction
    uncertain_a: tuple[int, ...] = field(default=())

    def q4_at(self, phi: float) -> float:
        return self.q4(phi)

    @property
    def q4_min(self) -> Fraction:
        return self.q4.minimum()

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "q3": self.q3,
            "q4": dict(self.q4.coeffs),
            "q6": dict(self.q6.coeffs),
            "q6_upper": self.q6_upper,
            "q8_upper": self.q8_upper,
        }


def moment_bounds(r: int) -> MomentBounds:
    q3 = moment_poly(3, r)
    if q3.coeffs:
        raise AssertionError("third moment must be bounded")
    q6 = moment_poly(6, r)
    up6 = q6_upper(r)
    if up6 != q6.abs_sum():
        raise AssertionError("q6 upper bound disagrees with its Fourier coefficients")
    uncertain = tuple(n for n in range(9) if not a_table(n, r).is_exact)
    return MomentBounds(
        r=r,
        q3=Fraction(0),
        q4=moment_poly(4, r),
        q6=q6,
        q6_upper=up6,
        q8_upper=q8_upper(r),
        uncertain_a=uncertain,
    )


def q8_with_resolved(r: int, resolved: Mapping[int, int]) -> Fraction:
    """q8 with some uncertain A(n, r) intervals replaced by a known pole order."""
    total = 0
    for n in range(9):
        p: PoleInterval = a_table(n, r)
        if n in resolved:
            v = resolved[n]
            if not p.lo <= v <= p.hi:
                raise ValueError(f"A({n},{r}) = {v} lies outside {p}")
        else:
            v = p.hi
        total += comb(8, n) * v
    return Fraction(total, 2**8)


def as_decimal(x: Fraction, digits: int = 12) -> str:
    return f"{float(x):.{digits}g}" if x else "0"

