"""Lattice-QCD irrep couplings: file I/O, SU(6) fits and spread diagnostics."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
import itertools
import math
import re
from pathlib import Path

import numpy as np

from .errors import DomainError, ParseError

KNOWN_IRREPS = ("27", "8S", "1", "10", "10bar", "8A")
SCHEMES = ("natural", "unnatural")
ERROR_CONVENTION = "asymmetric errors symmetrized as max(err_plus, err_minus)"

# SU(6) predictions C_R = a + k_R b
SU6_SLOPES = {
    "27": -1 / 27,
    "10": 7 / 27,
    "10bar": -1 / 27,
    "8A": 1 / 27,
    "8S": 1 / 3,
    "1": -1 / 3,
}
FIT_INPUTS = ("27", "10", "10bar", "8A")

_HEADER = re.compile(r"^\[(?P<id>[^\]]+)\]\s+scheme=(?P<scheme>\S+)\s+mpi=(?P<mpi>\S+)\s*$")


@dataclass(frozen=True)
class LatticeRecord:
    dataset: str
    scheme: str
    mpi: float
    values: dict[str, tuple[float, float, float]] = field(default_factory=dict)

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise DomainError(f"unknown scheme {self.scheme!r}")
        for irrep, (_, ep, em) in self.values.items():
            if irrep not in KNOWN_IRREPS:
                raise DomainError(f"unknown irrep {irrep!r}")
            if ep < 0 or em < 0:
                raise DomainError("uncertainties must be non-negative")

    def sigma(self, irrep: str) -> float:
        _, ep, em = self.values[irrep]
        return max(ep, em)

    def central(self, irrep: str) -> float:
        return self.values[irrep][0]


def parse(text: str) -> list[LatticeRecord]:
    records: list[LatticeRecord] = []
    current = None
    values: dict = {}

    def flush():
        if current is not None:
            if not values:
                raise ParseError(f"dataset {current[0]!r} has no values", current[3])
            records.append(LatticeRecord(current[0], current[1], current[2], dict(values)))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            m = _HEADER.match(line)
            if not m:
                raise ParseError("malformed header", lineno)
            flush()
            if m["scheme"] not in SCHEMES:
                raise ParseError(f"unknown scheme {m['scheme']!r}", lineno)
            try:
                mpi = float(m["mpi"])
            except ValueError:
                raise ParseError(f"bad mpi value {m['mpi']!r}", lineno) from None
            current = (m["id"], m["scheme"], mpi, lineno)
            values = {}
            continue
        if current is None:
            raise ParseError("value row before any dataset header", lineno)
        parts = line.split()
        if len(parts) != 4:
            raise ParseError("expected '<irrep> <central> <err_plus> <err_minus>'", lineno)
        irrep = parts[0]
        if irrep not in KNOWN_IRREPS:
            raise ParseError(f"unknown irrep {irrep!r}", lineno)
        try:
            central, ep, em = (float(x) for x in parts[1:])
        except ValueError:
            raise ParseError("non-numeric value", lineno) from None
        if ep < 0 or em < 0:
            raise ParseError("uncertainties must be non-negative", lineno)
        if irrep in values:
            raise ParseError(f"duplicate irrep {irrep!r}", lineno)
        values[irrep] = (central, ep, em)
    flush()
    return records


def load(path: str | Path | None = None) -> list[LatticeRecord]:
    """Read records from ``path``; ``None`` loads the bundled fixture."""
    if path is None:
        return parse(bundled_fixture_text())
    return parse(Path(path).read_text(encoding="utf-8"))


def bundled_fixture_text() -> str:
    return resources.files("baryon_entanglement").joinpath("data/table5.txt").read_text(encoding="utf-8")


def dumps(records: list[LatticeRecord]) -> str:
    blocks = []
    for r in records:
        mpi = repr(r.mpi)
        lines = [f"[{r.dataset}] scheme={r.scheme} mpi={mpi}"]
        lines += [f"{k} {v[0]!r} {v[1]!r} {v[2]!r}" for k, v in r.values.items()]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def save(records: list[LatticeRecord], path: str | Path) -> None:
    Path(path).write_text(dumps(records), encoding="utf-8")


@dataclass(frozen=True)
class SU6Fit:
    a: float
    b: float
    predicted: dict[str, float]
    z_scores: dict[str, float]
    chi2: float
    convention: str = ERROR_CONVENTION

    def as_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "predicted": self.predicted,
            "z_scores": self.z_scores,
            "chi2": self.chi2,
            "convention": self.convention,
        }


def su6_fit(record: LatticeRecord) -> SU6Fit:
    """Weighted least-squares fit of ``C_R = a + k_R b`` to the available channels."""
    used = [r for r in FIT_INPUTS if r in record.values]
    slopes = {SU6_SLOPES[r] for r in used}
    if len(used) < 2 or len(slopes) < 2:
        missing = [r for r in FIT_INPUTS if r not in record.values]
        raise DomainError(f"SU(6) fit underdetermined for {record.dataset}; missing {', '.join(missing)}")
    X = np.array([[1.0, SU6_SLOPES[r]] for r in used])
    y = np.array([record.central(r) for r in used])
    s = np.array([record.sigma(r) if record.sigma(r) > 0 else 1.0 for r in used])
    coef, *_ = np.linalg.lstsq(X / s[:, None], y / s, rcond=None)
    a, b = (float(x) for x in coef)
    fitted = X @ coef
    z = {r: float((yy - ff) / ss) for r, yy, ff, ss in zip(used, y, fitted, s)}
    predicted = {"8S": a + SU6_SLOPES["8S"] * b, "1": a + SU6_SLOPES["1"] * b}
    return SU6Fit(a, b, predicted, z, float(sum(v * v for v in z.values())))


def pair_z(record: LatticeRecord, r1: str, r2: str) -> float:
    """``|C_r1 - C_r2| / sqrt(sigma_r1^2 + sigma_r2^2)``."""
    diff = abs(record.central(r1) - record.central(r2))
    return diff / math.hypot(record.sigma(r1), record.sigma(r2))


def spread_report(record: LatticeRecord, threshold: float = 2.0) -> dict:
    """Pairwise z-scores, relative spread and an SU(16)-proximity flag (all z below threshold)."""
    irreps = [r for r in KNOWN_IRREPS if r in record.values]
    pairs = {f"{a}-{b}": pair_z(record, a, b) for a, b in itertools.combinations(irreps, 2)}
    centrals = [record.central(r) for r in irreps]
    mean = sum(centrals) / len(centrals) if centrals else 0.0
    if len(centrals) >= 2 and mean != 0:
        spread = max(abs(x - y) for x, y in itertools.combinations(centrals, 2)) / abs(mean)
    else:
        spread = 0.0
    return {
        "dataset": record.dataset,
        "scheme": record.scheme,
        "mpi": record.mpi,
        "max_relative_spread": spread,
        "pairwise_z": pairs,
        "max_z": max(pairs.values()) if pairs else 0.0,
        "su16_proximity": all(z < threshold for z in pairs.values()) if pairs else False,
        "threshold": threshold,
        "convention": ERROR_CONVENTION,
    }


def find(records: list[LatticeRecord], scheme: str, mpi: float) -> LatticeRecord:
    for r in records:
        if r.scheme == scheme and r.mpi == mpi:
            return r
    raise DomainError(f"no record with scheme={scheme} mpi={mpi}")
