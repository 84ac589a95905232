"""Two-baryon flavor sectors of conserved charge and strangeness.

Builds, for every realized ``(Q, S)``, the ordered-pair physical basis, the
SU(3) irrep basis and the flavor projectors ``P_R`` in the physical basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import math
import threading
from typing import NamedTuple, Sequence

import numpy as np

from ._clebsch import CLEBSCH
from .errors import EmptySectorError, NotAnEigenstateError
from .octet import CONJUGATE, INDEX, NAMES, OCTET, baryon
from .su3_algebra import (
    ANTISYMMETRIC_IRREPS,
    IRREPS,
    SYMMETRIC_IRREPS,
    IrrepLabel,
    flavor_exchange,
    two_baryon_casimirs,
)

IRREP_ORDER = SYMMETRIC_IRREPS + ANTISYMMETRIC_IRREPS
Pair = tuple[str, str]


class SectorLabel(NamedTuple):
    Q: int
    S: int

    def __str__(self) -> str:
        return f"{self.Q},{self.S}"


def parse_sector(text: str | Sequence[int]) -> SectorLabel:
    if isinstance(text, str):
        parts = text.replace("(", "").replace(")", "").split(",")
        if len(parts) != 2:
            raise ValueError(f"sector must look like 'Q,S', got {text!r}")
        return SectorLabel(int(parts[0]), int(parts[1]))
    q, s = text
    return SectorLabel(int(q), int(s))


def _pair(pair: Sequence[str]) -> Pair:
    a, b = pair
    return baryon(a).name, baryon(b).name


def sector_of(pair: Sequence[str]) -> SectorLabel:
    """Total charge and strangeness of an ordered baryon pair."""
    a, b = (baryon(x) for x in pair)
    return SectorLabel(a.charge + b.charge, a.strangeness + b.strangeness)


def _scan_orientations() -> dict[frozenset, Pair]:
    # Preferred orientation of each unordered pair: first appearance in the Clebsch data.
    seen: dict[frozenset, Pair] = {}
    for name in IRREP_ORDER:
        for row in CLEBSCH[name]:
            for a, b, _ in row:
                seen.setdefault(frozenset((a, b)), (a, b))
    return seen


_ORIENT = _scan_orientations()


def _sector_sort_key(label: SectorLabel):
    return (-label.S, label.Q)


def realized_sectors() -> list[SectorLabel]:
    labels = {sector_of((a, b)) for a in NAMES for b in NAMES}
    return sorted(labels, key=_sector_sort_key)


def sector_members(label: SectorLabel | Sequence[int]) -> list[Pair]:
    """Unordered baryon pairs (one orientation each) with the given total (Q, S)."""
    label = parse_sector(label)
    members = []
    for key, pair in _ORIENT.items():
        if sector_of(pair) == label:
            members.append(pair)
    if not members:
        raise EmptySectorError(f"no two-baryon state has (Q,S) = ({label.Q},{label.S})")
    order = list(_ORIENT)
    members.sort(key=lambda p: order.index(frozenset(p)))
    return members


def sector_kind(label: SectorLabel | Sequence[int]) -> str:
    members = sector_members(label)
    if len(members) == 1:
        a, b = members[0]
        return "1-dim identical" if a == b else "1-dim distinct"
    return f"{len(members)}-dim"


def coefficient(text: str) -> float:
    """Value of a signed square-rational literal ``"±m/n"``."""
    frac = Fraction(text)
    return math.copysign(math.sqrt(abs(frac)), frac)


def pair_state(terms: Sequence[tuple[str, str, float]], parity: int) -> np.ndarray:
    """64-dim flavor vector of ``sum c |F1 F2>_{S/A}``; ``parity`` is +1 (S) or -1 (A)."""
    v = np.zeros(64)
    r2 = math.sqrt(2.0)
    for a, b, c in terms:
        i, j = INDEX[baryon(a).name], INDEX[baryon(b).name]
        if i == j:
            v[8 * i + j] += c
        else:
            v[8 * i + j] += c / r2
            v[8 * j + i] += parity * c / r2
    return v


@dataclass(frozen=True)
class SU3State:
    irrep: IrrepLabel
    terms: tuple[tuple[str, str, str], ...]
    vector: np.ndarray  # coefficients over SectorBasis.ordered_pairs

    def numeric_terms(self) -> list[tuple[str, str, float]]:
        return [(a, b, coefficient(c)) for a, b, c in self.terms]


@dataclass(frozen=True)
class Projector:
    irrep: IrrepLabel
    matrix: np.ndarray


@dataclass(frozen=True)
class SectorBasis:
    label: SectorLabel
    members: tuple[Pair, ...]
    ordered_pairs: tuple[Pair, ...]
    su3_states: tuple[SU3State, ...]
    O: np.ndarray
    P_S: np.ndarray
    P_A: np.ndarray
    _projectors: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.ordered_pairs)

    @property
    def irreps(self) -> list[str]:
        present = {s.irrep.name for s in self.su3_states}
        return [r for r in IRREP_ORDER if r in present]

    def embed(self) -> np.ndarray:
        """64 x d isometry from sector coordinates into the full flavor space."""
        E = np.zeros((64, self.dim))
        for k, (a, b) in enumerate(self.ordered_pairs):
            E[8 * INDEX[a] + INDEX[b], k] = 1.0
        return E

    def projector(self, irrep: str) -> np.ndarray:
        if irrep not in self._projectors:
            rows = np.array([s.irrep.name == irrep for s in self.su3_states], dtype=float)
            self._projectors[irrep] = self.O.T @ np.diag(rows) @ self.O
        return self._projectors[irrep]

    def symmetric_projector(self) -> np.ndarray:
        return sum((self.projector(r) for r in self.irreps if r in SYMMETRIC_IRREPS), np.zeros((self.dim, self.dim)))

    def antisymmetric_projector(self) -> np.ndarray:
        return sum((self.projector(r) for r in self.irreps if r in ANTISYMMETRIC_IRREPS), np.zeros((self.dim, self.dim)))

    def exchange(self) -> np.ndarray:
        """Flavor exchange restricted to the sector's ordered-pair basis."""
        pos = {p: k for k, p in enumerate(self.ordered_pairs)}
        X = np.zeros((self.dim, self.dim))
        for k, (a, b) in enumerate(self.ordered_pairs):
            X[pos[(b, a)], k] = 1.0
        return X


def _build_basis(label: SectorLabel) -> SectorBasis:
    members = sector_members(label)
    canonical = list(members)
    reversed_ = [(b, a) for a, b in members if a != b]
    ordered = tuple(canonical + reversed_)
    pos = {p: k for k, p in enumerate(ordered)}
    nonidentical = [p for p in members if p[0] != p[1]]

    states: list[SU3State] = []
    for name in IRREP_ORDER:
        irrep = IRREPS[name]
        for row in CLEBSCH[name]:
            if sector_of(row[0][:2]) != label:
                continue
            full = pair_state([(a, b, coefficient(c)) for a, b, c in row], irrep.exchange_parity)
            vec = np.array([full[8 * INDEX[a] + INDEX[b]] for a, b in ordered])
            states.append(SU3State(irrep, tuple(row), vec))

    O = np.array([s.vector for s in states])
    r2 = math.sqrt(2.0)
    sym = [s for s in states if s.irrep.exchange_parity == 1]
    anti = [s for s in states if s.irrep.exchange_parity == -1]
    # coefficient blocks over the canonical orientation, as in |F1F2>_{S/A}
    P_S = np.array([[s.vector[pos[p]] * (1.0 if p[0] == p[1] else r2) for p in canonical] for s in sym]).reshape(len(sym), len(canonical))
    P_A = np.array([[s.vector[pos[p]] * r2 for p in nonidentical] for s in anti]).reshape(len(anti), len(nonidentical))
    return SectorBasis(label, tuple(members), ordered, tuple(states), O, P_S, P_A)


_cache: dict[SectorLabel, SectorBasis] = {}
_cache_lock = threading.Lock()


def su3_basis(label: SectorLabel | Sequence[int]) -> SectorBasis:
    """SU(3) irrep basis and physical ordered-pair basis of one (Q, S) sector (cached)."""
    label = parse_sector(label)
    basis = _cache.get(label)
    if basis is not None:
        return basis
    with _cache_lock:
        basis = _cache.get(label)
        if basis is None:
            basis = _build_basis(label)
            _cache[label] = basis
    return basis


def projectors(label: SectorLabel | Sequence[int]) -> list[Projector]:
    """Flavor projectors of every irrep present in the sector, physical basis."""
    basis = su3_basis(label)
    return [Projector(IRREPS[r], basis.projector(r)) for r in basis.irreps]


def identify_irrep(state: np.ndarray, exchange_parity: int, tol: float = 1e-10) -> IrrepLabel:
    """Identify the irrep of a 64-dim two-baryon flavor state from its Casimir eigenvalues.

    Parameters
    ----------
    state : array_like
        Normalized vector over ordered pairs, index ``8*i + j``.
    exchange_parity : {+1, -1}
        Flavor-exchange eigenvalue, used to split 8S from 8A.
    tol : float
        Allowed eigen-residual and eigenvalue mismatch.

    Raises
    ------
    NotAnEigenstateError
        If the state is not a common eigenvector with a known signature.
    """
    v = np.asarray(state, dtype=complex)
    if v.shape != (64,):
        raise ValueError("state must be a 64-component flavor vector")
    if abs(np.vdot(v, v).real - 1) > 1e-10:
        raise ValueError("state must be normalized")
    if exchange_parity not in (1, -1):
        raise ValueError("exchange_parity must be +1 or -1")
    P = flavor_exchange()
    if np.linalg.norm(P @ v - exchange_parity * v) > tol:
        raise NotAnEigenstateError("state lacks the declared flavor-exchange symmetry")
    C1, C2 = two_baryon_casimirs()
    measured = []
    for C in (C1, C2):
        w = C @ v
        lam = np.vdot(v, w).real
        if np.linalg.norm(w - lam * v) > tol:
            raise NotAnEigenstateError("state is not a Casimir eigenvector")
        measured.append(lam)
    for irrep in IRREPS.values():
        c1, c2 = irrep.signature
        if irrep.exchange_parity == exchange_parity and abs(measured[0] - c1) < tol and abs(measured[1] - c2) < tol:
            return irrep
    raise NotAnEigenstateError(f"signature {tuple(round(x, 12) for x in measured)} matches no irrep of 8x8")


def conjugate_pair(pair: Sequence[str]) -> Pair:
    a, b = _pair(pair)
    return CONJUGATE[a], CONJUGATE[b]


def sector_summary(label: SectorLabel) -> dict:
    basis = su3_basis(label)
    return {
        "Q": label.Q,
        "S": label.S,
        "kind": sector_kind(label),
        "pairs": [baryon(a).symbol + baryon(b).symbol for a, b in basis.members],
        "irreps": basis.irreps,
    }


def all_baryons():
    return OCTET
