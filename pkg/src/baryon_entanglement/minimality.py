"""Minimal-entanglement conditions per sector, their Wilson-coefficient images,
and deterministic parameter scans."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
import csv
from dataclasses import dataclass, field
import io
import itertools
import math
from typing import Iterable, Sequence

import numpy as np

from .eft_engine import SchemeContext, WilsonSet, irrep_couplings, phase_from_coupling
from .entanglement import DEFAULT_SEED, sector_entanglement_profile
from .errors import BranchUnavailableError
from .flavor_sectors import SectorLabel, parse_sector, su3_basis
from .smatrix import PhaseShiftSet, build, identity_swap_decomposition
from .su3_algebra import ANTISYMMETRIC_IRREPS, SYMMETRIC_IRREPS

DEFAULT_TOL = 1e-9


def angle_mod(x: float, period: float = math.pi) -> float:
    """Distance of ``x`` from the nearest multiple of ``period``."""
    r = math.fmod(x, period)
    r = abs(r)
    return min(r, period - r)


@dataclass(frozen=True)
class MinimalityVerdict:
    sector: SectorLabel
    gate: str  # "Identity" | "SWAP" | "none"
    residual_I: float
    residual_SWAP: float
    phase_conditions_met: dict[str, bool] = field(default_factory=dict)
    tol: float = DEFAULT_TOL

    @property
    def routes_agree(self) -> bool:
        """Phase clauses and operator residuals give the same classification."""
        return self.phase_conditions_met.get("equal") == (self.residual_I < self.tol) and self.phase_conditions_met.get(
            "swap"
        ) == (self.residual_SWAP < self.tol)

    def as_dict(self) -> dict:
        return {
            "Q": self.sector.Q,
            "S": self.sector.S,
            "gate": self.gate,
            "residual_I": self.residual_I,
            "residual_SWAP": self.residual_SWAP,
            "phase_conditions": self.phase_conditions_met,
        }


def _physical_irreps(label: SectorLabel) -> tuple[list[str], list[str]]:
    basis = su3_basis(label)
    sym = [r for r in basis.irreps if r in SYMMETRIC_IRREPS]
    # identical-flavor sectors have no antisymmetric flavor states
    anti = [r for r in basis.irreps if r in ANTISYMMETRIC_IRREPS]
    return sym, anti


def phase_conditions(label: SectorLabel, phases: PhaseShiftSet, tol: float = DEFAULT_TOL) -> dict[str, bool]:
    """Equality (mod pi) of all participating phases, and the pi/2-offset pattern."""
    sym, anti = _physical_irreps(label)
    values = [phases.get(r) for r in sym + anti]
    equal = all(angle_mod(v - values[0]) < tol for v in values)
    s_ok = all(angle_mod(phases.get(r) - phases.get(sym[0])) < tol for r in sym) if sym else True
    a_ok = all(angle_mod(phases.get(r) - phases.get(anti[0])) < tol for r in anti) if anti else True
    if sym and anti:
        offset = angle_mod(phases.get(sym[0]) - phases.get(anti[0]) - math.pi / 2) < tol
    else:
        offset = True
    return {"equal": equal, "swap": s_ok and a_ok and offset}


def check_sector(label, phases: PhaseShiftSet, tol: float = DEFAULT_TOL) -> MinimalityVerdict:
    """Classify the sector S-matrix as Identity, SWAP or neither.

    The gate comes from the operator residuals; the phase-condition clauses
    are evaluated independently and reported alongside.
    """
    label = parse_sector(label)
    res = identity_swap_decomposition(build(label, phases))
    conds = phase_conditions(label, phases, tol)
    if res["residual_I"] < tol:
        gate = "Identity"
    elif res["residual_SWAP"] < tol:
        gate = "SWAP"
    else:
        gate = "none"
    return MinimalityVerdict(label, gate, res["residual_I"], res["residual_SWAP"], conds, tol)


def phases_from_wilson(w: WilsonSet, ctx: SchemeContext, p: float) -> PhaseShiftSet:
    C = irrep_couplings(w)
    return PhaseShiftSet(**{"d" + r: phase_from_coupling(float(C.get(r)), ctx, p) for r in ("27", "8S", "1", "10", "10bar", "8A")})


# ----------------------------------------------------------------------------
# Wilson-coefficient conditions per sector class

SECTOR_CLASSES = {
    "row1": ((1, 0), (-2, -3), (1, -3)),
    "row2": ((-1, -1), (2, -1), (-1, -4)),
    "row3": ((1, -1), (0, -1), (-1, -2), (1, -2), (-1, -3), (0, -3)),
    "row4": ((0, -2),),
}


@dataclass(frozen=True)
class ConditionRow:
    row: str
    sectors: tuple
    equality: bool
    equality_distance: float
    unitarity: bool | None
    unitarity_distance: float | None

    def as_dict(self) -> dict:
        return {
            "row": self.row,
            "sectors": [f"{q},{s}" for q, s in self.sectors],
            "equality": self.equality,
            "equality_distance": self.equality_distance,
            "unitarity": self.unitarity,
            "unitarity_distance": self.unitarity_distance,
        }


def _distance(residuals: Sequence[float], norm: float) -> float:
    return math.sqrt(sum(r * r for r in residuals)) / max(norm, 1e-300)


def _best(*options: Sequence[float]) -> list[float]:
    return min(options, key=lambda r: sum(x * x for x in r))


def wilson_conditions(w: WilsonSet, ctx: SchemeContext, tol: float = DEFAULT_TOL, branch: str = "both") -> list[ConditionRow]:
    """Evaluate the minimal-entanglement constraints on ``c1..c6`` for each sector class.

    ``branch`` selects ``"equality"``, ``"unitarity"`` or ``"both"``.  The
    unitarity (pi/2) branch needs ``ctx.mu > 0``.  Distances are Euclidean
    residual norms divided by ``max(|w|, 2 pi / (M mu))``.
    """
    if branch not in ("equality", "unitarity", "both"):
        raise ValueError("branch must be equality, unitarity or both")
    if branch == "unitarity" and ctx.mu == 0:
        raise BranchUnavailableError("the pi/2 branch has no solution without a PDS scale (mu = 0)")
    c1, c2, c3, c4, c5, c6 = (float(x) for x in w.as_tuple())
    norm = float(np.linalg.norm(w.as_array())) or 1.0
    eq = {
        "row1": [c2 + c6],
        "row2": [c1 - c6],
        "row3": [c1 + c2, c1 + c3 / 2, c1 - c4 / 2, c1 - c6],
        "row4": [c1, c2, c3, c4, c6],
    }
    un = None
    if ctx.mu > 0 and branch != "equality":
        u = 2 * math.pi / (ctx.M * ctx.mu)
        un = {
            "row1": _best([c1 + c5 + u, c2 + c6 - u], [c1 + c5 + u, c2 + c6 + u]),
            "row2": _best([-c2 + c5 + u, c1 - c6 - u], [-c2 + c5 + u, c1 - c6 + u]),
            "row3": _best(
                [c1 + c2, c1 + c3 / 2, c1 - c4 / 2, c1 + c5 + u, c1 - c6 - u],
                [c1 + c2, c1 + c3 / 2, c1 - c4 / 2, c1 + c5 + u, c1 - c6 + u],
            ),
            "row4": _best([c1, c2, c3, c4, c5 + u, c6 - u], [c1, c2, c3, c4, c5 + u, c6 + u]),
        }
        unorm = max(norm, u)
    rows = []
    for key, sectors in SECTOR_CLASSES.items():
        d_eq = _distance(eq[key], norm) if branch != "unitarity" else math.nan
        if un is not None:
            d_un = _distance(un[key], unorm)
            rows.append(ConditionRow(key, sectors, branch != "unitarity" and d_eq < tol, d_eq, d_un < tol, d_un))
        else:
            rows.append(ConditionRow(key, sectors, d_eq < tol, d_eq, None, None))
    return rows


# ----------------------------------------------------------------------------
# scans

METRICS = ("residual_I", "residual_SWAP", "epower")


@dataclass(frozen=True)
class GridAxis:
    name: str  # phase name (d27, ...) or Wilson name (c1, ...)
    start: float
    stop: float
    num: int

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.num)


def parse_axis(text: str) -> GridAxis:
    """``name=start:stop:num``."""
    name, _, rng = text.partition("=")
    parts = rng.split(":")
    if not name or len(parts) != 3:
        raise ValueError(f"grid axis must look like name=start:stop:num, got {text!r}")
    return GridAxis(name.strip(), float(parts[0]), float(parts[1]), int(parts[2]))


def _evaluate_point(label, phases: PhaseShiftSet, metrics, samples, seed, tol):
    row = {}
    if "residual_I" in metrics or "residual_SWAP" in metrics:
        v = check_sector(label, phases, tol)
        row["residual_I"] = v.residual_I
        row["residual_SWAP"] = v.residual_SWAP
        row["gate"] = v.gate
    if "epower" in metrics:
        prof = sector_entanglement_profile(build(label, phases), samples=samples, seed=seed)
        row["epower"] = prof.average
        row["epower_max"] = prof.max
    return row


def scan(
    label,
    axes: Sequence[GridAxis],
    metrics: Sequence[str] = ("residual_I", "residual_SWAP"),
    base: PhaseShiftSet | WilsonSet | None = None,
    ctx: SchemeContext | None = None,
    p: float | None = None,
    samples: int = 20_000,
    seed: int | None = None,
    tol: float = DEFAULT_TOL,
    workers: int = 1,
) -> list[dict]:
    """Evaluate metrics on a 1D/2D grid of phase or Wilson-coefficient values.

    Axis names ``d27 .. d8A`` vary phases around ``base`` (a PhaseShiftSet);
    names ``c1 .. c6`` vary Wilson coefficients, converted to phases with
    ``ctx`` at momentum ``p``.  Rows come back in grid order whatever the
    worker count; ``seed`` defaults to ``entanglement.DEFAULT_SEED``.
    """
    label = parse_sector(label)
    for m in metrics:
        if m not in METRICS:
            raise ValueError(f"unknown metric {m!r}")
    if not 1 <= len(axes) <= 2:
        raise ValueError("scan supports one or two grid axes")
    seed = DEFAULT_SEED if seed is None else seed
    wilson_mode = all(a.name.startswith("c") for a in axes)
    if wilson_mode:
        if ctx is None or p is None:
            raise ValueError("Wilson-coefficient scans need a scheme context and momentum")
        base_w = base if isinstance(base, WilsonSet) else WilsonSet()
    else:
        base_p = base if isinstance(base, PhaseShiftSet) else PhaseShiftSet()
    points = list(itertools.product(*[a.values() for a in axes]))

    def run(point):
        coords = {a.name: float(x) for a, x in zip(axes, point)}
        if wilson_mode:
            w = WilsonSet(**{**base_w.__dict__, **coords})
            phases = phases_from_wilson(w, ctx, p)
        else:
            phases = PhaseShiftSet.from_mapping({**base_p.as_dict(), **{k.lstrip("d"): v for k, v in coords.items()}})
        return {**coords, **_evaluate_point(label, phases, metrics, samples, seed, tol)}

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, points))
    return [run(pt) for pt in points]


def rows_to_csv(rows: Iterable[dict]) -> str:
    rows = list(rows)
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in r.items()})
    return buf.getvalue()
