"""Density bounds, the moment-method boundary system, and sector angles.

Pipeline for a central character of order r:

1. ``moment_bounds(r)`` gives q4, q6, q8.
2. ``solve_boundary`` finds the worst-case split ``d = ls(B, 4)`` of the fourth
   moment between the half-planes and the resulting eigenvalue threshold: with
   upper densities of S and T capped at ``cap``, at least one of the two sets
   must carry density ``cap`` above the threshold.
3. ``min_Q_for_cap`` inverts the large-eigenvalue density lemma so that at
   most ``cap`` of the places have ``|a_v| > Q``.
4. The threshold and Q give the half-angle ``arccos(threshold / Q)``.

For r <= 5 the arguments of the eigenvalues lie on finitely many rays, and a
combinatorial argument over half-planes gives a narrower sector.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from .moments import moment_bounds, q8_uniform

logger = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_CAP",
    "LOW_ORDER_CAP",
    "R2_BRANCH_COS",
    "InfeasibleError",
    "ConstraintError",
    "BoundarySolution",
    "ScanReport",
    "Branch",
    "SectorResult",
    "RayArrangement",
    "SectorCheck",
    "ks_bound",
    "ks_bound_general",
    "min_Q_for_cap",
    "boundary_parts",
    "solve_boundary",
    "threshold_scan",
    "sector_half_angle",
    "theorem_pipeline",
    "argument_lines",
    "low_order_sector_check",
    "min_guaranteed_sector",
    "r2_branch_min_abs",
]

DEFAULT_CAP = 1 / 234
# r <= 5 only needs a positive density, so the cap can be taken small.
LOW_ORDER_CAP = 1e-6
# r = 2: phi with cos(4 phi) below this value are handled via the ray geometry.
R2_BRANCH_COS = -0.785
RESIDUAL_TOL = 1e-9
_ANGLE_EPS = 1e-12


class InfeasibleError(ValueError):
    """The boundary system has no admissible root."""


class ConstraintError(ValueError):
    """A root exists but violates 0 < alpha, beta <= 1."""


# -- large eigenvalue lemma -------------------------------------------------------


def _exactify(x):
    return Fraction(x) if isinstance(x, int) else x


def ks_bound(Q):
    """Upper density bound for ``{v : |a_v| > Q}``, Q >= 2.

    Exact for ``int``/``Fraction`` input, float otherwise.
    """
    Q = _exactify(Q)
    if Q < 2:
        raise ValueError(f"the density lemma needs Q >= 2, got {Q}")
    Q2 = Q * Q
    return 1 / (1 + (Q2 - 1) ** 2 + (Q2 * Q2 - 3 * Q2 + 1) ** 2)


def ks_bound_general(Q, a, b, c):
    """The same bound for arbitrary non-negative weights on 1, Ad(pi), Sym^4(pi)."""
    Q, a, b, c = (_exactify(v) for v in (Q, a, b, c))
    if Q < 2:
        raise ValueError(f"the density lemma needs Q >= 2, got {Q}")
    if min(a, b, c) < 0:
        raise ValueError("weights must be non-negative")
    Q2 = Q * Q
    denom = a + b * (Q2 - 1) + c * (Q2 * Q2 - 3 * Q2 + 1)
    if denom == 0:
        raise ZeroDivisionError("weights give a zero denominator")
    return (a * a + b * b + c * c) / denom**2


def min_Q_for_cap(cap: float, xtol: float = 1e-12) -> float:
    """Smallest Q >= 2 with ``ks_bound(Q) <= cap``."""
    top = float(ks_bound(2))
    if not 0 < cap <= top:
        raise ValueError(f"cap must lie in (0, {top}], got {cap}")
    if cap == top:
        return 2.0
    hi = 3.0
    while ks_bound(hi) > cap:
        hi *= 2
    return brentq(lambda q: ks_bound(q) - cap, 2.0, hi, xtol=xtol, rtol=4 * np.finfo(float).eps)


# -- boundary system ----------------------------------------------------------------


@dataclass(frozen=True)
class BoundarySolution:
    d: float
    alpha: float
    beta: float
    threshold: float
    cap: float
    residuals: tuple[float, float]
    q4: float = field(default=0.0, repr=False)
    q6: float = field(default=0.0, repr=False)
    q8: float = field(default=0.0, repr=False)

    @property
    def t_set_level(self) -> float:
        """Right-hand side of the cubic condition defining T."""
        x = self.q4 - self.d
        return self.alpha * self.d**1.25 * (self.q8 - x * x) ** -0.25

    @property
    def s_set_level(self) -> float:
        return (self.q4 - self.d) * self.beta


def boundary_parts(d, q4, q6, q8, cap):
    """Per-d quantities of the boundary system (vectorised over ``d``).

    Returns ``beta`` from the S-constraint, ``alpha_max`` from the
    T-constraint, ``alpha`` from the threshold coupling, and the thresholds
    ``t_s``, ``t_t`` reachable through S and T (nan where a constraint gives
    nothing).
    """
    d = np.asarray(d, dtype=float)
    x = q4 - d
    with np.errstate(invalid="ignore", divide="ignore"):
        gap = q8 - x * x
        beta = (1 - math.sqrt(q8 * cap) / x) / (1 - cap)
        alpha_max = 1 - math.sqrt(q6 * cap) * gap**0.25 / d**1.25
        s_level = x * beta
        t_s = np.where(s_level > 0, np.abs(s_level) ** 0.25, np.nan)
        alpha = np.abs(s_level) ** 0.75 * gap**0.25 / d**1.25
        t_level = alpha_max * d**1.25 * gap**-0.25
        t_t = np.where(t_level > 0, np.cbrt(t_level), np.nan)
    return {"beta": beta, "alpha_max": alpha_max, "alpha": alpha, "t_s": t_s, "t_t": t_t}


def _residuals(d, alpha, beta, q4, q6, q8, cap):
    x = q4 - d
    gap = q8 - x * x
    e1 = x * x * (1 - beta * (1 - cap)) ** 2 - q8 * cap
    e2 = d**2.5 / math.sqrt(gap) * (1 - alpha) ** 2 - q6 * cap
    e3 = (x * beta) ** 0.75 - alpha * d**1.25 * gap**-0.25
    return e1, e2, e3


def solve_boundary(q4, q6, q8, cap: float = DEFAULT_CAP, grid: int = 4000,
                   tol: float = RESIDUAL_TOL) -> BoundarySolution:
    """Solve the boundary system for ``d``, ``beta``, ``alpha`` and the threshold.

    ``beta(d)`` comes from the S-constraint, ``alpha(d)`` from equating the two
    thresholds, and the T-constraint is the residual in ``d``.  Roots are
    bracketed on a grid and refined with Brent's method; among admissible roots
    the one with the smallest threshold is returned.
    """
    q4, q6, q8, cap = float(q4), float(q6), float(q8), float(cap)
    if not 0 < cap < 1:
        raise ValueError(f"cap must lie in (0, 1), got {cap}")
    if q4 <= 0 or q8 <= 0 or q6 <= 0:
        raise ValueError("q4, q6, q8 must be positive")

    d_max = q4 - math.sqrt(q8 * cap)  # beta(d) > 0 exactly below this
    if d_max <= 0:
        raise InfeasibleError(f"q8*cap = {q8 * cap} leaves no room for the S-constraint")
    if q8 <= q4 * q4:
        raise InfeasibleError("need q8 > q4^2")

    def g(dd):
        p = boundary_parts(dd, q4, q6, q8, cap)
        return float(p["alpha"] - p["alpha_max"])

    ds = np.linspace(0, d_max, grid + 1)[1:-1]
    vals = boundary_parts(ds, q4, q6, q8, cap)
    gv = vals["alpha"] - vals["alpha_max"]
    roots = []
    for i in np.nonzero(np.sign(gv[:-1]) * np.sign(gv[1:]) < 0)[0]:
        roots.append(brentq(g, ds[i], ds[i + 1], xtol=1e-15, rtol=4 * np.finfo(float).eps))
    if not roots:
        raise InfeasibleError("no root of the boundary system in (0, q4)")

    admissible = []
    for root in roots:
        p = boundary_parts(root, q4, q6, q8, cap)
        alpha, beta = float(p["alpha"]), float(p["beta"])
        if 0 < alpha <= 1 and 0 < beta <= 1:
            admissible.append((float(p["t_s"]), root, alpha, beta))
    if not admissible:
        raise ConstraintError(f"roots {roots} violate 0 < alpha, beta <= 1")

    t, d, alpha, beta = min(admissible)
    e1, e2, e3 = _residuals(d, alpha, beta, q4, q6, q8, cap)
    if max(abs(e1), abs(e2), abs(e3)) > tol:
        logger.warning("boundary residuals above tolerance: %g %g %g", e1, e2, e3)
    return BoundarySolution(
        d=d, alpha=alpha, beta=beta, threshold=t, cap=cap, residuals=(e1, e2),
        q4=q4, q6=q6, q8=q8,
    )


@dataclass
class ScanReport:
    d: np.ndarray
    thresholds: np.ndarray
    argmin_d: float
    min_threshold: float
    s_only: bool
    solution_d: float | None
    resolution: float

    @property
    def matches_solution(self) -> bool:
        if self.solution_d is None:
            return False
        return abs(self.argmin_d - self.solution_d) <= 2 * self.resolution


def threshold_scan(q4, q6, q8, cap: float = DEFAULT_CAP, grid: int = 10_000) -> ScanReport:
    """Worst case over ``d`` of the best threshold either constraint delivers.

    For each ``d`` on a grid over (0, q4) the achievable threshold is
    ``max(t_S(d), t_T(d))``; the adversary picks the ``d`` minimising it.
    """
    q4, q6, q8, cap = float(q4), float(q6), float(q8), float(cap)
    ds = np.linspace(0, q4, grid + 1)[1:-1]
    p = boundary_parts(ds, q4, q6, q8, cap)
    t_s = np.nan_to_num(p["t_s"], nan=0.0)
    t_t = np.nan_to_num(p["t_t"], nan=0.0)
    best = np.maximum(t_s, t_t)
    i = int(np.argmin(best))
    s_only = not np.any(t_t > t_s)
    try:
        sol_d = solve_boundary(q4, q6, q8, cap).d
    except (InfeasibleError, ConstraintError):
        sol_d = None
    return ScanReport(
        d=ds, thresholds=best, argmin_d=float(ds[i]), min_threshold=float(best[i]),
        s_only=bool(s_only), solution_d=sol_d, resolution=float(ds[1] - ds[0]),
    )


# -- sectors -------------------------------------------------------------------------


def sector_half_angle(threshold: float, Q: float) -> float:
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    if threshold >= Q:
        raise ValueError(f"threshold {threshold} must be below Q = {Q}")
    return math.acos(threshold / Q)


def r2_branch_min_abs(threshold: float, branch_cos: float = R2_BRANCH_COS) -> float:
    """Lower bound on ``|a_v|`` when r = 2 and ``cos 4phi < branch_cos``.

    Such phi sit at angular distance at least ``arccos(branch_cos) / 4`` from
    every ray in {0, pi/2, pi, 3pi/2}, so an eigenvalue on a ray with
    ``Re(a e^{-i phi}) > threshold`` has ``|a| > threshold / cos(that distance)``.
    """
    return threshold / math.cos(math.acos(branch_cos) / 4)


@dataclass(frozen=True)
class Branch:
    label: str
    q4: float
    threshold: float
    min_abs: float


@dataclass(frozen=True)
class SectorResult:
    r: int
    threshold: float
    Q: float
    half_angle: float
    cap: float
    boundary: BoundarySolution
    branches: tuple[Branch, ...] = ()

    @property
    def full_angle(self) -> float:
        return 2 * self.half_angle


def _round_up(x: float, digits: int | None) -> float:
    if digits is None:
        return x
    scale = 10**digits
    return math.ceil(x * scale - 1e-9) / scale


def theorem_pipeline(
    r: int,
    cap: float | None = None,
    *,
    uniform_q8: bool = True,
    q_digits: int | None = 3,
    low_order_cap: float = LOW_ORDER_CAP,
    branch_cos: float = R2_BRANCH_COS,
) -> SectorResult:
    """Threshold, Q and half-angle for central character order r.

    For r >= 6 and ``uniform_q8`` the q8 used is the maximum over all r >= 6
    (so the result holds uniformly); otherwise the per-r table value.  For
    r <= 5 the default cap is ``low_order_cap``.  Q is rounded up to
    ``q_digits`` decimals, which keeps the density bound valid.
    """
    mb = moment_bounds(r)
    if cap is None:
        cap = DEFAULT_CAP if r >= 6 else low_order_cap
    q8 = q8_uniform(6) if (r >= 6 and uniform_q8) else mb.q8_upper
    q6 = mb.q6_upper
    branches: list[Branch] = []
    if mb.q4.is_constant:
        sol = solve_boundary(mb.q4.constant, q6, q8, cap)
    else:
        # r = 2: q4 = (3 + cos 4phi)/4; split phi by the sign of cos 4phi - branch_cos
        q4_hi = (3 + branch_cos) / 4
        q4_lo = float(mb.q4_min)
        sol = solve_boundary(q4_hi, q6, q8, cap)
        low = solve_boundary(q4_lo, q6, q8, cap)
        branches = [
            Branch(f"cos4φ ≥ {branch_cos}", q4_hi, sol.threshold, sol.threshold),
            Branch(f"cos4φ < {branch_cos}", q4_lo, low.threshold,
                   r2_branch_min_abs(low.threshold, branch_cos)),
        ]
        if low.threshold < sol.threshold:
            sol = low
    Q = _round_up(min_Q_for_cap(cap), q_digits)
    half = sector_half_angle(sol.threshold, Q)
    return SectorResult(r, sol.threshold, Q, half, cap, sol, tuple(branches))


# -- ray arrangements ---------------------------------------------------------------


@dataclass(frozen=True)
class RayArrangement:
    r: int
    rays: tuple[float, ...]

    @property
    def spacing(self) -> float:
        return math.pi / self.r

    def as_array(self) -> np.ndarray:
        return np.asarray(self.rays)


def argument_lines(r: int) -> RayArrangement:
    """Possible arguments of a_v when omega has order r: k pi / r, k = 0..2r-1."""
    if r < 2:
        raise ValueError("r must be >= 2")
    return RayArrangement(r, tuple(k * math.pi / r for k in range(2 * r)))


def _angdist(a, b):
    """Angular distance on the circle, in [0, pi]."""
    diff = np.mod(np.asarray(a) - np.asarray(b) + np.pi, 2 * np.pi) - np.pi
    return np.abs(diff)


def _halfplane_patterns(rays: np.ndarray, step: float) -> tuple[np.ndarray, np.ndarray]:
    """Candidate phi and the rays inside each open half-plane Re(z e^{-i phi}) > 0.

    The grid is augmented with phi = ray +- pi/2, where a ray sits on the boundary.
    """
    grid = np.arange(0, 2 * np.pi, step)
    critical = np.mod(np.concatenate([rays + np.pi / 2, rays - np.pi / 2]), 2 * np.pi)
    phis = np.concatenate([critical, grid])
    inside = _angdist(rays[None, :], phis[:, None]) < np.pi / 2 - _ANGLE_EPS
    return phis, inside


@dataclass(frozen=True)
class SectorCheck:
    ok: bool
    phi_witness: float | None
    threshold_used: float | None


def _low_order_threshold(r: int, phi: float, branch_cos: float, cap: float) -> float:
    res = theorem_pipeline(r, cap, branch_cos=branch_cos)
    if not res.branches:
        return res.threshold
    good, bad = res.branches
    return good.threshold if math.cos(4 * phi) >= branch_cos else bad.threshold


def low_order_sector_check(
    r: int,
    center: float,
    angle: float,
    step: float = 1e-3,
    *,
    cap: float = LOW_ORDER_CAP,
    branch_cos: float = R2_BRANCH_COS,
) -> SectorCheck:
    """Is there a phi whose half-plane meets the rays only inside the sector?

    The sector is the open arc of width ``angle`` around ``center``.
    """
    if not 2 <= r <= 5:
        raise ValueError("low-order analysis is for 2 <= r <= 5")
    if not 0 < angle <= 2 * math.pi:
        raise ValueError("sector angle must lie in (0, 2pi]")
    rays = argument_lines(r).as_array()
    phis, inside = _halfplane_patterns(rays, step)
    in_sector = _angdist(rays, center) < angle / 2 - _ANGLE_EPS
    ok_rows = ~np.any(inside & ~in_sector[None, :], axis=1)
    hits = np.nonzero(ok_rows)[0]
    if hits.size == 0:
        return SectorCheck(False, None, None)
    phi = float(phis[hits[0]])
    return SectorCheck(True, phi, _low_order_threshold(r, phi, branch_cos, cap))


def _all_centers_pass(rays, patterns, angle, center_step):
    centers = np.concatenate([
        np.arange(0, 2 * np.pi, center_step),
        np.mod(rays + angle / 2, 2 * np.pi),
        np.mod(rays - angle / 2, 2 * np.pi),
    ])
    in_sector = _angdist(rays[None, :], centers[:, None]) < angle / 2 - _ANGLE_EPS
    # bad[c, p]: pattern p has a ray outside sector c
    bad = np.any(patterns[None, :, :] & ~in_sector[:, None, :], axis=2)
    return bool(np.all(np.any(~bad, axis=1)))


def min_guaranteed_sector(r: int, step: float = 1e-3, tol: float = 1e-9) -> float:
    """Smallest sector angle for which every sector contains a positive density."""
    if r >= 6:
        return theorem_pipeline(r).full_angle
    rays = argument_lines(r).as_array()
    _, inside = _halfplane_patterns(rays, step)
    patterns = np.unique(inside, axis=0)
    lo, hi = 0.0, 2 * math.pi
    if not _all_centers_pass(rays, patterns, hi, step):
        raise AssertionError("even the full circle fails the ray check")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _all_centers_pass(rays, patterns, mid, step):
            hi = mid
        else:
            lo = mid
    return hi


def sensitivity_sweep(param: str, values: Sequence[float], base=(0.75, 25 / 16, 519 / 128),
                      cap: float = DEFAULT_CAP) -> np.ndarray:
    """Boundary threshold as one of q4, q6, q8 varies."""
    idx = {"q4": 0, "q6": 1, "q8": 2}[param]
    out = []
    for v in values:
        q = list(base)
        q[idx] = v
        out.append(solve_boundary(*q, cap).threshold)
    return np.asarray(out)
