"""Certified orders of poles at s=1 for products of incomplete L-functions.

The representation pi is a unitary cuspidal representation of GL(2), not
self-dual, not of solvable polyhedral type, with central character omega of
exact order r.  Under these hypotheses the only sources of poles at s=1 are

* ``L(s, omega^j)``, which has a simple pole iff omega^j is trivial;
* ``L(s, Sym^a pi x Sym^a pi (x) omega^j)``, which has a simple pole iff
  ``Sym^a pi (x) omega^(j+a)`` is isomorphic to ``Sym^a pi``.

For a <= 3 the only self-twist is the trivial one.  For a = 4 there is no
characterisation of self-twists, so comparing central characters only gives
the necessary condition ``r | 5(j+4)``; such cases are reported as the
interval [0, 1].
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .repring import SymDet, VirtualCharacter, char_of_symdet, factorization_difference

__all__ = [
    "Kind",
    "Hypotheses",
    "LFactor",
    "PoleInterval",
    "Factorization",
    "InconsistentPolesError",
    "GL1",
    "CuspTwist",
    "RankinSelberg",
    "pole_order_factor",
    "pole_order_product",
    "reconcile",
    "a_table",
    "a_table_label",
    "moment_pole_order",
    "k3_factorization",
    "k4_factorization",
    "k6_factorization_sym3",
    "k6_factorization_sym4",
    "k8_factorization",
    "EXPLICIT_FACTORIZATIONS",
]

MAX_SYM = 4


class InconsistentPolesError(ValueError):
    """Two valid factorizations of the same L-function disagree on the pole order."""


class Kind(enum.Enum):
    GL1 = "GL1"
    CUSP_TWIST = "CuspTwist"
    RANKIN_SELBERG = "RankinSelberg"


@dataclass(frozen=True)
class Hypotheses:
    r: int
    non_self_dual: bool = True
    not_solvable_polyhedral: bool = True

    def __post_init__(self):
        if int(self.r) != self.r or self.r < 2:
            raise ValueError(f"central character order must be an integer >= 2, got {self.r}")
        if not (self.non_self_dual and self.not_solvable_polyhedral):
            raise ValueError(
                "pole rules are only valid for non-self-dual pi not of solvable polyhedral type"
            )


@dataclass(frozen=True)
class PoleInterval:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 0 or self.hi < self.lo:
            raise ValueError(f"invalid pole interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, k: int) -> "PoleInterval":
        return cls(k, k)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def __add__(self, other: "PoleInterval") -> "PoleInterval":
        return PoleInterval(self.lo + other.lo, self.hi + other.hi)

    def scale(self, k: int) -> "PoleInterval":
        return PoleInterval(k * self.lo, k * self.hi)

    def intersect(self, other: "PoleInterval") -> "PoleInterval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise InconsistentPolesError(f"empty intersection of {self} and {other}")
        return PoleInterval(lo, hi)

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class LFactor:
    """One factor ``L(s, ...)^multiplicity`` of an incomplete L-function product.

    ``GL1``: ``L(s, omega^j)``.  ``CuspTwist``: ``L(s, Sym^a pi (x) omega^j)``.
    ``RankinSelberg``: ``L(s, Sym^a pi x Sym^b pi (x) omega^j)`` with a >= b.
    """

    kind: Kind
    sym_a: int = 0
    sym_b: int = 0
    omega_exp: int = 0
    multiplicity: int = 1

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if self.kind is Kind.GL1:
            if self.sym_a or self.sym_b:
                raise ValueError("GL1 factors carry no symmetric powers")
        elif self.kind is Kind.CUSP_TWIST:
            if not 1 <= self.sym_a <= MAX_SYM or self.sym_b:
                raise ValueError(f"CuspTwist needs sym_a in 1..{MAX_SYM}, got {self.sym_a}")
        elif self.kind is Kind.RANKIN_SELBERG:
            if self.sym_a > MAX_SYM:
                raise ValueError(f"no automorphy available for Sym^{self.sym_a}")
            if not self.sym_a >= self.sym_b >= 1:
                raise ValueError("RankinSelberg needs sym_a >= sym_b >= 1")

    def character(self) -> VirtualCharacter:
        j = self.omega_exp
        if self.kind is Kind.GL1:
            return VirtualCharacter.det(j)
        if self.kind is Kind.CUSP_TWIST:
            return char_of_symdet(SymDet(self.sym_a, j))
        return char_of_symdet(SymDet(self.sym_a, j)) * char_of_symdet(SymDet(self.sym_b, 0))

    def __str__(self):
        w = f"ω^{self.omega_exp}"
        if self.kind is Kind.GL1:
            body = w
        elif self.kind is Kind.CUSP_TWIST:
            body = f"Sym{self.sym_a}⊗{w}"
        else:
            body = f"Sym{self.sym_a}×Sym{self.sym_b}⊗{w}"
        return f"L({body})" + (f"^{self.multiplicity}" if self.multiplicity != 1 else "")


def GL1(j: int, mult: int = 1) -> LFactor:
    return LFactor(Kind.GL1, 0, 0, j, mult)


def CuspTwist(a: int, j: int, mult: int = 1) -> LFactor:
    return LFactor(Kind.CUSP_TWIST, a, 0, j, mult)


def RankinSelberg(a: int, b: int, j: int, mult: int = 1) -> LFactor:
    return LFactor(Kind.RANKIN_SELBERG, a, b, j, mult)


@dataclass(frozen=True)
class Factorization:
    factors: tuple[LFactor, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a factorization needs at least one factor")
        object.__setattr__(self, "factors", tuple(self.factors))

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def character(self) -> VirtualCharacter:
        out = VirtualCharacter()
        for f in self.factors:
            out = out + f.character() * f.multiplicity
        return out

    def __str__(self):
        return " · ".join(str(f) for f in self.factors)


def _divides(r: int, x: int) -> bool:
    return x % r == 0


def pole_order_factor(f: LFactor, h: Hypotheses) -> PoleInterval:
    """Pole order at s=1 of ``f`` (including its multiplicity)."""
    r = h.r
    j = f.omega_exp
    if f.sym_a > MAX_SYM:
        raise ValueError(f"no automorphy available for Sym^{f.sym_a}")
    if f.kind is Kind.GL1:
        unit = PoleInterval.exact(int(_divides(r, j)))
    elif f.kind is Kind.CUSP_TWIST:
        unit = PoleInterval.exact(0)
    elif f.sym_a != f.sym_b:
        unit = PoleInterval.exact(0)
    elif f.sym_a <= 3:
        unit = PoleInterval.exact(int(_divides(r, j + f.sym_a)))
    else:
        # Sym^4 x Sym^4: central characters of Sym^4 pi (x) omega^(j+4) and Sym^4 pi
        # agree iff omega^(5(j+4)) = 1; sufficiency is unknown.
        if _divides(r, j + 4):
            unit = PoleInterval(1, 1)
        elif _divides(r, 5 * (j + 4)):
            unit = PoleInterval(0, 1)
        else:
            unit = PoleInterval(0, 0)
    return unit.scale(f.multiplicity)


def pole_order_product(f: Iterable[LFactor], h: Hypotheses) -> PoleInterval:
    total = PoleInterval(0, 0)
    for factor in f:
        total = total + pole_order_factor(factor, h)
    return total


def reconcile(fs: Sequence[Factorization], m: int, n: int, h: Hypotheses) -> PoleInterval:
    """Intersect the pole intervals of several factorizations of ``pi^m x conj(pi)^n``."""
    if not fs:
        raise ValueError("need at least one factorization")
    out = None
    for f in fs:
        diff = factorization_difference(m, n, f)
        if diff:
            raise ValueError(f"factorization {f.label or f} does not match ({m},{n}): {diff}")
        p = pole_order_product(f, h)
        out = p if out is None else out.intersect(p)
    return out


# -- factorizations of L(s, pi^m x conj(pi)^n) for m + n = k --------------------


def k3_factorization(n: int) -> Factorization:
    """``L(Sym^3 pi (x) omega^-n) L(pi (x) omega^(1-n))^2``."""
    return Factorization((CuspTwist(3, -n), CuspTwist(1, 1 - n, 2)), label=f"k3[n={n}]")


def k4_factorization(n: int) -> Factorization:
    return Factorization(
        (CuspTwist(4, -n), CuspTwist(2, 1 - n, 3), GL1(2 - n, 2)), label=f"k4[n={n}]"
    )


def k6_factorization_sym3(n: int) -> Factorization:
    """The Sym^3 x Sym^3 form of the sixth tensor power."""
    return Factorization(
        (
            RankinSelberg(3, 3, -n),
            RankinSelberg(3, 1, 1 - n, 4),
            RankinSelberg(1, 1, 2 - n, 4),
        ),
        label=f"sym3xsym3[n={n}]",
    )


def k6_factorization_sym4(n: int) -> Factorization:
    """The Sym^4 x Sym^2 form of the sixth tensor power."""
    return Factorization(
        (
            RankinSelberg(4, 2, -n),
            CuspTwist(4, 1 - n),
            RankinSelberg(2, 2, 1 - n, 3),
            CuspTwist(2, 2 - n, 5),
            GL1(3 - n, 2),
        ),
        label=f"sym4xsym2[n={n}]",
    )


def k8_factorization(n: int) -> Factorization:
    return Factorization(
        (
            RankinSelberg(4, 4, -n),
            RankinSelberg(2, 2, 2 - n, 9),
            GL1(4 - n, 4),
            RankinSelberg(4, 2, 1 - n, 6),
            CuspTwist(4, 2 - n, 4),
            CuspTwist(2, 3 - n, 12),
        ),
        label=f"k8[n={n}]",
    )


# The factorizations written out explicitly for particular (m, n).
EXPLICIT_FACTORIZATIONS: dict[tuple[int, int], Factorization] = {
    (2, 1): Factorization((CuspTwist(3, -1), CuspTwist(1, 0, 2)), label="k3 (2,1)"),
    (4, 0): Factorization((CuspTwist(4, 0), CuspTwist(2, 1, 3), GL1(2, 2)), label="k4 (4,0)"),
    (3, 1): Factorization((CuspTwist(4, -1), CuspTwist(2, 0, 3), GL1(1, 2)), label="k4 (3,1)"),
}


def moment_pole_order(k: int, n: int, h: Hypotheses) -> PoleInterval:
    """Pole order at s=1 of ``L(s, pi^(k-n) x conj(pi)^n)`` for k in {3, 4, 6, 8}."""
    if not 0 <= n <= k:
        raise ValueError(f"need 0 <= n <= k, got n={n}, k={k}")
    m = k - n
    if k == 3:
        return reconcile([k3_factorization(n)], m, n, h)
    if k == 4:
        return reconcile([k4_factorization(n)], m, n, h)
    if k == 6:
        return reconcile([k6_factorization_sym3(n), k6_factorization_sym4(n)], m, n, h)
    if k == 8:
        return reconcile([k8_factorization(n)], m, n, h)
    raise ValueError(f"no factorization available for k={k}")


def a_table(n: int, r: int) -> PoleInterval:
    """Order of the pole of the eighth-moment series A(n, r)."""
    if not 0 <= n <= 8:
        raise ValueError(f"n must be in 0..8, got {n}")
    return pole_order_product(k8_factorization(n), Hypotheses(r))


def a_table_label(p: PoleInterval) -> str:
    """Three-valued display: the exact value, or ``≤hi`` for an uncertain interval."""
    if p.is_exact:
        return str(p.lo)
    if p.lo == 0:
        return f"≤{p.hi}"
    return f"{p.lo}..{p.hi}"
