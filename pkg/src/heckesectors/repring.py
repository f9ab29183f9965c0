"""Exact arithmetic in the virtual representation ring of GL(2).

A class function is stored as a Laurent polynomial in the two Satake
parameters ``alpha`` and ``beta``: a map ``(i, j) -> c`` meaning
``c * alpha**i * beta**j``.  Characters of GL(2) representations are symmetric
under ``alpha <-> beta``, and every symmetric Laurent polynomial is a unique
integer combination of the characters of ``Sym^a (x) det^b``.

Everything here is integer arithmetic; there is no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

__all__ = [
    "SymDet",
    "VirtualCharacter",
    "char_of_symdet",
    "tensor",
    "dual",
    "decompose_to_symdet",
    "character_of_decomposition",
    "tensor_power",
    "ballot_multiplicity",
    "verify_factorization",
    "factorization_difference",
    "format_symdet",
]

Monomial = tuple[int, int]


@dataclass(frozen=True, order=True)
class SymDet:
    """The irreducible ``Sym^a (x) det^b``."""

    a: int
    b: int = 0

    def __post_init__(self):
        if self.a < 0:
            raise ValueError(f"symmetric power degree must be >= 0, got {self.a}")

    @property
    def dim(self) -> int:
        return self.a + 1

    def __str__(self):
        return format_symdet(self)


def format_symdet(c: SymDet) -> str:
    """Render as e.g. ``Sym3⊗det^-1``, ``Sym2``, ``det^2`` or ``triv``."""
    if c.a == 0:
        return "triv" if c.b == 0 else f"det^{c.b}"
    if c.b == 0:
        return f"Sym{c.a}"
    return f"Sym{c.a}⊗det^{c.b}"


class VirtualCharacter:
    """Integer combination of monomials ``alpha**i * beta**j``, swap-symmetric.

    Zero coefficients are never stored, so two characters are equal iff their
    coefficient maps are equal.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Monomial, int] | None = None, *, check: bool = True):
        clean = {}
        for (i, j), c in (coeffs or {}).items():
            if c:
                clean[(int(i), int(j))] = int(c)
        if check:
            for (i, j), c in clean.items():
                if clean.get((j, i), 0) != c:
                    raise ValueError(
                        f"character is not symmetric under alpha<->beta: "
                        f"coefficient of {(i, j)} is {c}, of {(j, i)} is {clean.get((j, i), 0)}"
                    )
        self._coeffs = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def unsymmetric(cls, coeffs: Mapping[Monomial, int]) -> "VirtualCharacter":
        """Build without the symmetry check (used for oracles and error paths)."""
        return cls(coeffs, check=False)

    @classmethod
    def trivial(cls) -> "VirtualCharacter":
        return cls({(0, 0): 1})

    @classmethod
    def standard(cls) -> "VirtualCharacter":
        return cls({(1, 0): 1, (0, 1): 1})

    @classmethod
    def det(cls, b: int = 1) -> "VirtualCharacter":
        return cls({(b, b): 1})

    # -- accessors ----------------------------------------------------------
    @property
    def coeffs(self) -> dict[Monomial, int]:
        return dict(self._coeffs)

    def __getitem__(self, mono: Monomial) -> int:
        return self._coeffs.get(mono, 0)

    def __iter__(self):
        return iter(sorted(self._coeffs.items()))

    def __len__(self):
        return len(self._coeffs)

    def is_symmetric(self) -> bool:
        return all(self._coeffs.get((j, i), 0) == c for (i, j), c in self._coeffs.items())

    def dimension(self) -> int:
        """Value at ``alpha = beta = 1``."""
        return sum(self._coeffs.values())

    def evaluate(self, alpha, beta):
        """Numeric evaluation at given Satake parameters (any field)."""
        return sum(c * alpha**i * beta**j for (i, j), c in self._coeffs.items())

    # -- ring structure -----------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, 0) + c
        return VirtualCharacter(out, check=False)

    def __neg__(self):
        return VirtualCharacter({m: -c for m, c in self._coeffs.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return VirtualCharacter({m: other * c for m, c in self._coeffs.items()}, check=False)
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return VirtualCharacter(out, check=False)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "VirtualCharacter":
        if k < 0:
            raise ValueError("negative tensor powers are not defined; use dual()")
        out = VirtualCharacter.trivial()
        for _ in range(k):
            out = out * self
        return out

    def dual(self) -> "VirtualCharacter":
        return VirtualCharacter({(-i, -j): c for (i, j), c in self._coeffs.items()}, check=False)

    def __repr__(self):
        if not self._coeffs:
            return "VirtualCharacter(0)"
        terms = ", ".join(f"a^{i}b^{j}: {c}" for (i, j), c in self)
        return f"VirtualCharacter({{{terms}}})"


def char_of_symdet(c: SymDet | tuple[int, int]) -> VirtualCharacter:
    """Character of ``Sym^a (x) det^b``: sum over u+v=a of alpha^(u+b) beta^(v+b)."""
    if not isinstance(c, SymDet):
        c = SymDet(*c)
    a, b = c.a, c.b
    return VirtualCharacter({(u + b, a - u + b): 1 for u in range(a + 1)}, check=False)


def tensor(x: VirtualCharacter, y: VirtualCharacter) -> VirtualCharacter:
    return x * y


def dual(x: VirtualCharacter) -> VirtualCharacter:
    return x.dual()


def decompose_to_symdet(x: VirtualCharacter) -> dict[SymDet, int]:
    """Unique integer combination of ``Sym^a (x) det^b`` characters equal to ``x``.

    Peels off the monomial ``(i, j)``, ``i >= j``, with the largest ``i - j``
    (ties broken by larger ``i``) until nothing remains.
    """
    if not x.is_symmetric():
        raise ValueError("decompose_to_symdet requires a swap-symmetric character")
    rest = dict(x.coeffs)
    out: dict[SymDet, int] = {}
    while rest:
        i, j = max((m for m in rest if m[0] >= m[1]), key=lambda m: (m[0] - m[1], m[0]))
        c = rest[(i, j)]
        sd = SymDet(i - j, j)
        out[sd] = out.get(sd, 0) + c
        for m, v in char_of_symdet(sd).coeffs.items():
            nv = rest.get(m, 0) - c * v
            if nv:
                rest[m] = nv
            else:
                rest.pop(m, None)
    return {k: v for k, v in sorted(out.items(), key=lambda kv: (-kv[0].a, kv[0].b)) if v}


def character_of_decomposition(d: Mapping[SymDet, int]) -> VirtualCharacter:
    out = VirtualCharacter()
    for sd, mult in d.items():
        out = out + char_of_symdet(sd) * mult
    return out


def tensor_power(m: int, n: int) -> dict[SymDet, int]:
    """Decompose the character of ``pi^m (x) conj(pi)^n``.

    With ``conj(pi)`` realised as the Satake inverse this is
    ``(alpha + beta)^(m+n) * (alpha*beta)^(-n)``.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    if m + n == 0:
        return {SymDet(0, 0): 1}
    k = m + n
    x = VirtualCharacter.standard() ** k * VirtualCharacter.det(-n)
    return decompose_to_symdet(x)


def ballot_multiplicity(k: int, t: int) -> int:
    """Multiplicity of ``Sym^(k-2t)`` in ``std^(x)k``: C(k,t) - C(k,t-1)."""
    if t < 0 or 2 * t > k:
        return 0
    return comb(k, t) - (comb(k, t - 1) if t >= 1 else 0)


def _factorization_character(factors: Iterable) -> VirtualCharacter:
    out = VirtualCharacter()
    for f in factors:
        out = out + f.character() * f.multiplicity
    return out


def factorization_difference(m: int, n: int, factors: Iterable) -> dict[SymDet, int]:
    """``tensor_power(m, n)`` minus the factorization, in the Sym-det basis.

    ``factors`` is any iterable of objects with ``character()`` and
    ``multiplicity`` (see :class:`heckesectors.poles.LFactor`).
    """
    diff = character_of_decomposition(tensor_power(m, n)) - _factorization_character(factors)
    return decompose_to_symdet(diff)


def verify_factorization(m: int, n: int, factors: Iterable) -> bool:
    return not factorization_difference(m, n, factors)
