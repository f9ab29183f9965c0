"""Hecke eigenvalue datasets: loading, truncated Dirichlet sums, sector counts.

Finite datasets cannot reach the limit s -> 1+, so everything here is a
heuristic diagnostic: sums are normalised by ``l(s) = log(1/(s-1))`` at a few
values of s and compared with the theoretical constants.
"""

from __future__ import annotations

import csv
import json
import logging
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .density import DEFAULT_CAP
from .moments import moment_bounds

logger = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_S",
    "DatasetParseError",
    "EigenvalueRecord",
    "EigenvalueDataset",
    "ramanujan_bound",
    "load_dataset",
    "save_dataset",
    "ell",
    "truncated_moment",
    "sector_density",
    "first_primes",
    "synth_dataset",
    "CompareReport",
    "compare_report",
]

DEFAULT_S = (1.1, 1.01, 1.001)
RAMANUJAN_EXPONENT = 7 / 64


class DatasetParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def ramanujan_bound(norm) -> float:
    """``2 Nv^(7/64)``: the known bound on |a_v| towards Ramanujan."""
    return 2 * np.asarray(norm, dtype=float) ** RAMANUJAN_EXPONENT


@dataclass(frozen=True)
class EigenvalueRecord:
    norm: int
    a: complex
    mu: float | None = None

    def __post_init__(self):
        if int(self.norm) != self.norm or self.norm < 2:
            raise ValueError(f"norm must be an integer >= 2, got {self.norm}")


@dataclass
class EigenvalueDataset:
    records: list[EigenvalueRecord]
    label: str = ""
    r: int | None = None
    note: str = "places in X (archimedean or ramified) are excluded"
    warnings: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.records = sorted(self.records, key=lambda rec: rec.norm)

    def __len__(self):
        return len(self.records)

    def __add__(self, other: "EigenvalueDataset") -> "EigenvalueDataset":
        return EigenvalueDataset(self.records + other.records, self.label, self.r, self.note)

    @property
    def norms(self) -> np.ndarray:
        return np.array([rec.norm for rec in self.records], dtype=float)

    @property
    def values(self) -> np.ndarray:
        return np.array([rec.a for rec in self.records], dtype=complex)

    @property
    def arguments(self) -> np.ndarray:
        """Arguments in [0, 2pi)."""
        return np.mod(np.angle(self.values), 2 * np.pi)

    def rotated(self, psi: float) -> "EigenvalueDataset":
        """Multiply every eigenvalue by ``e^{i psi}``."""
        z = complex(math.cos(psi), math.sin(psi))
        return EigenvalueDataset(
            [EigenvalueRecord(rec.norm, rec.a * z, rec.mu) for rec in self.records],
            self.label, self.r, self.note,
        )

    def check_ramanujan(self) -> list[str]:
        out = []
        for rec in self.records:
            bound = float(ramanujan_bound(rec.norm))
            if abs(rec.a) > bound:
                out.append(f"norm {rec.norm}: |a| = {abs(rec.a):.6g} exceeds {bound:.6g}")
        return out


def _parse_float(s, what, line):
    try:
        return float(s)
    except (TypeError, ValueError):
        raise DatasetParseError(f"cannot parse {what} = {s!r}", line) from None


def _parse_norm(s, line):
    try:
        v = int(str(s).strip())
    except ValueError:
        raise DatasetParseError(f"cannot parse norm = {s!r}", line) from None
    if v < 2:
        raise DatasetParseError(f"norm must be >= 2, got {v}", line)
    return v


def _record(row: dict, line: int) -> EigenvalueRecord:
    for key in ("norm", "re", "im"):
        if key not in row or row[key] in (None, ""):
            raise DatasetParseError(f"missing column {key!r}", line)
    mu = row.get("mu")
    mu = None if mu in (None, "") else _parse_float(mu, "mu", line)
    return EigenvalueRecord(
        _parse_norm(row["norm"], line),
        complex(_parse_float(row["re"], "re", line), _parse_float(row["im"], "im", line)),
        mu,
    )


def load_dataset(path, format: str | None = None, validate: bool = True) -> EigenvalueDataset:
    """Read a csv (columns norm, re, im, optional mu) or json dataset.

    The json form is either a list of records or
    ``{"meta": {...}, "records": [...]}``.
    """
    path = os.fspath(path)
    fmt = (format or os.path.splitext(path)[1].lstrip(".")).lower()
    meta: dict = {}
    records: list[EigenvalueRecord] = []
    if fmt == "csv":
        with open(path, newline="") as fh:
            text = fh.read()
        if text.strip():
            reader = csv.DictReader(text.splitlines())
            if reader.fieldnames is None or not {"norm", "re", "im"} <= set(reader.fieldnames):
                raise DatasetParseError(f"header must contain norm, re, im; got {reader.fieldnames}", 1)
            for row in reader:
                records.append(_record(row, reader.line_num))
    elif fmt == "json":
        with open(path) as fh:
            text = fh.read()
        if text.strip():
            try:
                data = json.loads(text)
            except json.JSONDecodeError as err:
                raise DatasetParseError(err.msg, err.lineno) from None
            if isinstance(data, dict):
                meta = data.get("meta", {}) or {}
                rows = data.get("records", [])
            else:
                rows = data
            for i, row in enumerate(rows):
                if not isinstance(row, dict):
                    raise DatasetParseError(f"record {i} is not an object", None)
                records.append(_record(row, i + 1))
    else:
        raise ValueError(f"unknown dataset format {fmt!r}")

    ds = EigenvalueDataset(
        records, label=meta.get("label", os.path.basename(path)), r=meta.get("r"),
        note=meta.get("note", EigenvalueDataset.__dataclass_fields__["note"].default),
    )
    if validate:
        ds.warnings = ds.check_ramanujan()
        for w in ds.warnings:
            logger.warning("%s", w)
    return ds


def save_dataset(ds: EigenvalueDataset, path, format: str | None = None) -> None:
    path = os.fspath(path)
    fmt = (format or os.path.splitext(path)[1].lstrip(".")).lower()
    if fmt == "csv":
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["norm", "re", "im", "mu"])
            for rec in ds.records:
                w.writerow([rec.norm, repr(rec.a.real), repr(rec.a.imag),
                            "" if rec.mu is None else repr(rec.mu)])
    elif fmt == "json":
        rows = []
        for rec in ds.records:
            row = {"norm": rec.norm, "re": rec.a.real, "im": rec.a.imag}
            if rec.mu is not None:
                row["mu"] = rec.mu
            rows.append(row)
        with open(path, "w") as fh:
            json.dump({"meta": {"label": ds.label, "r": ds.r, "note": ds.note},
                       "records": rows}, fh, indent=1)
    else:
        raise ValueError(f"unknown dataset format {fmt!r}")


def ell(s: float) -> float:
    """``log(1/(s-1))``."""
    if s <= 1:
        raise ValueError(f"need s > 1, got {s}")
    return math.log(1 / (s - 1))


@dataclass(frozen=True)
class MomentEstimate:
    raw: float
    normalized: float


def truncated_moment(ds: EigenvalueDataset, k: int, phi: float, s: float) -> MomentEstimate:
    """``sum Re(a e^{i phi})^k Nv^{-s}`` and the same divided by ``l(s)``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    norm = ell(s)
    if not len(ds):
        return MomentEstimate(0.0, 0.0)
    re = (ds.values * complex(math.cos(phi), math.sin(phi))).real
    raw = float(np.sum(re**k * ds.norms ** (-s)))
    # l(2) = 0: the raw sum is still meaningful, its normalisation is not
    return MomentEstimate(raw, raw / norm if norm else math.nan)


def sector_density(ds: EigenvalueDataset, center: float, half_angle: float,
                   min_abs: float, s: float) -> float:
    """Normalised mass of places with arg(a) in the open arc and |a| >= min_abs.

    ``half_angle = pi`` is the whole circle.  Zero eigenvalues have no argument
    and never count.
    """
    norm = ell(s)
    if not 0 < half_angle <= math.pi:
        raise ValueError("half_angle must lie in (0, pi]")
    if not len(ds):
        return 0.0
    a = ds.values
    nonzero = a != 0
    if half_angle >= math.pi:
        in_arc = nonzero
    else:
        dist = np.abs(np.mod(np.angle(a) - center + np.pi, 2 * np.pi) - np.pi)
        in_arc = nonzero & (dist < half_angle)
    mask = in_arc & (np.abs(a) >= min_abs)
    mass = float(np.sum(np.where(mask, ds.norms ** (-s), 0.0)))
    return mass / norm if norm else math.nan


def first_primes(count: int) -> np.ndarray:
    """The first ``count`` primes."""
    if count <= 0:
        return np.zeros(0, dtype=np.int64)
    n = max(15, int(count * (math.log(count) + math.log(math.log(count + 2)) + 2)))
    while True:
        sieve = np.ones(n + 1, dtype=bool)
        sieve[:2] = False
        for p in range(2, int(n**0.5) + 1):
            if sieve[p]:
                sieve[p * p :: p] = False
        primes = np.nonzero(sieve)[0]
        if primes.size >= count:
            return primes[:count]
        n *= 2


def synth_dataset(seed: int, model: str = "rays", count: int = 1000,
                  r: int | None = None) -> EigenvalueDataset:
    """Deterministic synthetic eigenvalues at the first ``count`` primes.

    ``rays``: arguments k pi / r with local angle mu = 2 pi (k mod r) / r;
    ``uniform-angle``: arguments uniform on the circle.  Magnitudes are uniform
    on [0, 2].
    """
    rng = np.random.default_rng(seed)
    primes = first_primes(count)
    mags = rng.uniform(0, 2, size=count)
    if model == "rays":
        if r is None or r < 2:
            raise ValueError("rays model needs r >= 2")
        ks = rng.integers(0, 2 * r, size=count)
        args = ks * math.pi / r
        mus = 2 * math.pi * np.mod(ks, r) / r
    elif model == "uniform-angle":
        args = rng.uniform(0, 2 * math.pi, size=count)
        mus = [None] * count
    else:
        raise ValueError(f"unknown model {model!r}")
    recs = [
        EigenvalueRecord(int(p), complex(m * math.cos(t), m * math.sin(t)),
                         None if mu is None else float(mu))
        for p, m, t, mu in zip(primes, mags, args, mus)
    ]
    return EigenvalueDataset(recs, label=f"synth:{model}:seed={seed}", r=r,
                             note="synthetic; no excluded places")


# -- comparison with the theoretical constants -----------------------------------------


@dataclass
class CompareReport:
    columns: tuple[str, ...]
    rows: list[dict]

    @property
    def flagged(self) -> list[dict]:
        return [row for row in self.rows if row["flag"]]

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_fmt(row[c]) for c in self.columns))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        rows = [{c: _jsonable(row[c]) for c in self.columns} for row in self.rows]
        return json.dumps({"columns": list(self.columns), "rows": rows}, indent=1, sort_keys=True)

    def to_table(self) -> str:
        cells = [list(self.columns)] + [[_fmt(row[c]) for c in self.columns] for row in self.rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(self.columns))]
        return "\n".join("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else ""
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, Fraction):
        return str(v)
    return str(v)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


def compare_report(ds: EigenvalueDataset, r: int, s_list: Sequence[float] = DEFAULT_S,
                   phi: float = 0.0, cap: float = DEFAULT_CAP, slack: float = 1.0,
                   sector: tuple[float, float] = (1.31352, 0.59566)) -> CompareReport:
    """Normalised moments and a sector density against the constants for order r.

    The slack column is ``slack / l(s)``, standing in for the unknown O(1)
    term; rows whose estimate exceeds an upper-bound constant by more than
    the slack are flagged.  The sector row compares the density of
    ``arg(a) in (phi - h, phi + h), |a| >= t`` (``sector = (h, t)``) with ``cap``.
    """
    mb = moment_bounds(r)
    targets = {
        3: (mb.q3, "eq"),
        4: (mb.q4.constant if mb.q4.is_constant else mb.q4(phi), "eq"),
        6: (mb.q6_upper, "le"),
        8: (mb.q8_upper, "le"),
    }
    rows = []
    for s in s_list:
        sl = slack / ell(s)
        for k in (3, 4, 6, 8):
            est = truncated_moment(ds, k, phi, s)
            target, rel = targets[k]
            flag = rel == "le" and est.normalized > float(target) + sl
            rows.append({"s": s, "quantity": f"k={k}", "estimate": est.normalized,
                         "target": target, "relation": rel, "slack": sl, "flag": flag})
        dens = sector_density(ds, phi, sector[0], sector[1], s)
        rows.append({"s": s, "quantity": "sector", "estimate": dens, "target": cap,
                     "relation": "ge", "slack": sl, "flag": False})
    return CompareReport(("s", "quantity", "estimate", "target", "relation", "slack", "flag"), rows)


def concat(datasets: Iterable[EigenvalueDataset]) -> EigenvalueDataset:
    recs: list[EigenvalueRecord] = []
    for ds in datasets:
        recs.extend(ds.records)
    return EigenvalueDataset(recs)
